use std::collections::BTreeMap;

use serde::Serialize;

use super::{PairPartition, TriplePartition};
use crate::poly::SparsePoly;

/// Line/hyperplane incidence, rows indexed by lines and columns by hyperplanes.
#[derive(Clone, Debug, Serialize)]
pub struct Incidence {
    pub lines: Vec<PairPartition>,
    pub planes: Vec<TriplePartition>,
    pub matrix: Vec<Vec<bool>>,
    /// Whether the transversality criterion reproduced every entry.
    pub combinatorial_agrees: bool,
}

/// Incidence from restricting each hyperplane's form to each line.
pub fn build_incidence() -> Incidence {
    let lines = PairPartition::all();
    let planes = TriplePartition::all();
    let forms: Vec<SparsePoly> = planes.iter().map(|b| SparsePoly::linear(&b.hyperplane_coeffs())).collect();
    let matrix: Vec<Vec<bool>> = lines
        .iter()
        .map(|a| {
            let phi = a.line_param();
            forms.iter().map(|h| h.restrict(&phi).expect("6 variables").is_zero()).collect()
        })
        .collect();
    let combinatorial_agrees = lines
        .iter()
        .zip(&matrix)
        .all(|(a, row)| planes.iter().zip(row).all(|(b, &hit)| a.is_transversal_to(b) == hit));
    Incidence { lines, planes, matrix, combinatorial_agrees }
}

impl Incidence {
    pub fn incident(&self, line: usize, plane: usize) -> bool {
        self.matrix[line][plane]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.matrix.iter().map(|r| r.iter().filter(|&&b| b).count()).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.planes.len()).map(|j| self.matrix.iter().filter(|r| r[j]).count()).collect()
    }

    pub fn planes_through(&self, line: usize) -> Vec<usize> {
        (0..self.planes.len()).filter(|&j| self.matrix[line][j]).collect()
    }

    pub fn lines_in(&self, plane: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&i| self.matrix[i][plane]).collect()
    }

    /// Number of lines lying on every plane in `planes`.
    pub fn common_lines(&self, planes: &[usize]) -> usize {
        self.matrix.iter().filter(|r| planes.iter().all(|&j| r[j])).count()
    }

    pub fn line_index(&self, a: &PairPartition) -> usize {
        self.lines.iter().position(|x| x == a).expect("all partitions listed")
    }

    pub fn plane_index(&self, b: &TriplePartition) -> usize {
        self.planes.iter().position(|x| x == b).expect("all partitions listed")
    }
}

/// Common-line counts for the 45 unordered pairs of distinct hyperplanes.
pub fn pairwise_plane_intersections(inc: &Incidence) -> BTreeMap<(TriplePartition, TriplePartition), usize> {
    let m = inc.planes.len();
    let mut out = BTreeMap::new();
    for i in 0..m {
        for j in i + 1..m {
            out.insert((inc.planes[i], inc.planes[j]), inc.common_lines(&[i, j]));
        }
    }
    out
}
