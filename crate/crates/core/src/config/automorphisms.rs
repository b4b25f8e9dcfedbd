use serde::Serialize;

use super::{build_incidence, ConfigError, Incidence};
use crate::groups::{FiniteGroup, SignedPerm};
use crate::par;

/// A pair of permutations of lines and hyperplanes (as index images).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct ConfigAut {
    pub lines: Vec<usize>,
    pub planes: Vec<usize>,
}

impl ConfigAut {
    pub fn identity(inc: &Incidence) -> Self {
        Self { lines: (0..inc.lines.len()).collect(), planes: (0..inc.planes.len()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.lines.iter().enumerate().all(|(i, &j)| i == j)
            && self.planes.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            lines: other.lines.iter().map(|&j| self.lines[j]).collect(),
            planes: other.planes.iter().map(|&j| self.planes[j]).collect(),
        }
    }

    pub fn preserves(&self, inc: &Incidence) -> bool {
        (0..inc.lines.len()).all(|i| {
            (0..inc.planes.len()).all(|j| inc.incident(i, j) == inc.incident(self.lines[i], self.planes[j]))
        })
    }

    /// As a permutation of 25 points: lines first, then hyperplanes.
    pub fn to_signed_perm(&self) -> SignedPerm {
        let offset = self.lines.len();
        let images = self.lines.iter().copied().chain(self.planes.iter().map(|&j| j + offset)).collect();
        SignedPerm::from_images(images).expect("bijection")
    }
}

/// Automorphism group of the configuration as an explicit element list.
#[derive(Clone, Debug)]
pub struct ConfigAutGroup {
    pub elements: Vec<ConfigAut>,
    /// Hyperplane assignments visited by the search, for reporting.
    pub nodes_visited: usize,
}

impl ConfigAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &ConfigAut) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    pub fn to_finite_group(&self) -> FiniteGroup {
        let n = self.elements.first().map_or(0, |a| a.lines.len() + a.planes.len());
        let perms: Vec<SignedPerm> = self.elements.iter().map(ConfigAut::to_signed_perm).collect();
        FiniteGroup::from_element_set(n, &perms).expect("automorphisms form a group")
    }

    pub fn line_orbit(&self, line: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self.elements.iter().map(|a| a.lines[line]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }
}

struct Search<'a> {
    inc: &'a Incidence,
    pair: Vec<Vec<usize>>,
    triple: Vec<Vec<Vec<usize>>>,
    /// Sorted plane sets through each line, for recovering the line map.
    line_keys: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(inc: &'a Incidence) -> Self {
        let m = inc.planes.len();
        let pair = (0..m).map(|i| (0..m).map(|j| inc.common_lines(&[i, j])).collect()).collect();
        let triple = (0..m)
            .map(|i| (0..m).map(|j| (0..m).map(|k| inc.common_lines(&[i, j, k])).collect()).collect())
            .collect();
        let line_keys = (0..inc.lines.len()).map(|i| inc.planes_through(i)).collect();
        Self { inc, pair, triple, line_keys }
    }

    fn consistent(&self, images: &[usize], k: usize, c: usize) -> bool {
        (0..k).all(|j| {
            self.pair[k][j] == self.pair[c][images[j]]
                && (0..j).all(|i| self.triple[k][j][i] == self.triple[c][images[j]][images[i]])
        })
    }

    fn extend(&self, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<ConfigAut>, nodes: &mut usize) {
        *nodes += 1;
        let k = images.len();
        if k == used.len() {
            if let Some(a) = self.line_map(images) {
                out.push(a);
            }
            return;
        }
        for c in 0..used.len() {
            if !used[c] && self.consistent(images, k, c) {
                used[c] = true;
                images.push(c);
                self.extend(images, used, out, nodes);
                images.pop();
                used[c] = false;
            }
        }
    }

    fn line_map(&self, planes: &[usize]) -> Option<ConfigAut> {
        let lines = self
            .line_keys
            .iter()
            .map(|key| {
                let mut image: Vec<usize> = key.iter().map(|&j| planes[j]).collect();
                image.sort_unstable();
                self.line_keys.iter().position(|k| *k == image)
            })
            .collect::<Option<Vec<usize>>>()?;
        let aut = ConfigAut { lines, planes: planes.to_vec() };
        aut.preserves(self.inc).then_some(aut)
    }
}

/// All incidence-preserving bijections, by backtracking over hyperplane
/// images with pair and triple common-line pruning.
pub fn configuration_automorphisms(inc: &Incidence) -> ConfigAutGroup {
    let search = Search::new(inc);
    let m = inc.planes.len();
    let branches = par::map_range(m, |first| {
        let mut images = vec![first];
        let mut used = vec![false; m];
        used[first] = true;
        let mut out = Vec::new();
        let mut nodes = 0;
        search.extend(&mut images, &mut used, &mut out, &mut nodes);
        (out, nodes)
    });
    let nodes_visited = branches.iter().map(|b| b.1).sum::<usize>() + 1;
    let mut elements: Vec<ConfigAut> = branches.into_iter().flat_map(|b| b.0).collect();
    elements.sort();
    ConfigAutGroup { elements, nodes_visited }
}

/// The automorphism induced by relabeling letters with an element of S₆.
pub fn induced_from_s6(inc: &Incidence, sigma: &SignedPerm) -> Result<ConfigAut, ConfigError> {
    if sigma.n() != 6 || !sigma.is_unsigned() {
        return Err(ConfigError::NotAPermutationOfSix(sigma.to_string()));
    }
    let map = sigma.images();
    Ok(ConfigAut {
        lines: inc.lines.iter().map(|a| inc.line_index(&a.relabel(&map))).collect(),
        planes: inc.planes.iter().map(|b| inc.plane_index(&b.relabel(&map))).collect(),
    })
}

/// Convenience: the standard incidence and its automorphism group.
pub fn standard_automorphisms() -> (Incidence, ConfigAutGroup) {
    let inc = build_incidence();
    let g = configuration_automorphisms(&inc);
    (inc, g)
}
