use std::collections::BTreeSet;

use serde::Serialize;

use super::{GeometryError, IgusaModel};
use crate::algebra::{int, PrimeField};
use crate::par;
use crate::poly::{FpPoly, SparsePoly};

#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub prime: u64,
    /// `p⁴ + p³ + p² + p + 1`, the points of `{s₁ = 0} ≅ P⁴`.
    pub points_checked: usize,
    pub singular_count: usize,
    pub line_union_count: usize,
    pub verdict: bool,
    /// Singular points as `(x₁:…:x₅)` residues, first nonzero coordinate 1.
    #[serde(skip)]
    pub singular: BTreeSet<Vec<u64>>,
}

fn normalize(mut v: Vec<u64>, f: &PrimeField) -> Option<Vec<u64>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.elem(lead as i64).inv().expect("nonzero").residue();
    for x in &mut v {
        *x = f.mul_raw(*x, inv);
    }
    Some(v)
}

/// `F` in the chart `x₆ = −(x₁ + … + x₅)`.
fn chart_quartic(m: &IgusaModel) -> SparsePoly {
    let x6 = SparsePoly::linear(&[int(-1), int(-1), int(-1), int(-1), int(-1), int(0)]);
    m.f.substitute(5, &x6).expect("6 variables").remap(5, &[0, 1, 2, 3, 4, 0])
}

/// Points of `P⁴(F_p)` with first nonzero coordinate 1, in a fixed order.
fn decode(mut index: usize, p: u64) -> Vec<u64> {
    let p = p as usize;
    for lead in 0..5 {
        let block = p.pow(4 - lead as u32);
        if index < block {
            let mut v = vec![0u64; 5];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1).rev() {
                *slot = (index % p) as u64;
                index /= p;
            }
            return v;
        }
        index -= block;
    }
    unreachable!("index beyond the point count")
}

/// The union of the 15 lines' points over `F_p`, projected to `x₁..x₅`.
pub fn line_points_mod_p(m: &IgusaModel, p: u64) -> Result<BTreeSet<Vec<u64>>, GeometryError> {
    let f = PrimeField::new(p).map_err(|_| GeometryError::BadPrime(p))?;
    let mut out = BTreeSet::new();
    for (_, phi) in &m.lines {
        let cols: Vec<Vec<u64>> = (0..2)
            .map(|c| {
                phi.matrix()
                    .column(c)
                    .iter()
                    .take(5)
                    .map(|x| f.reduce(x).expect("integral").residue())
                    .collect()
            })
            .collect();
        let params = std::iter::once((0, 1)).chain((0..p).map(|u| (1, u)));
        for (t, u) in params {
            let v: Vec<u64> = (0..5).map(|i| f.add_raw(f.mul_raw(t, cols[0][i]), f.mul_raw(u, cols[1][i]))).collect();
            if let Some(v) = normalize(v, &f) {
                out.insert(v);
            }
        }
    }
    Ok(out)
}

/// Exhaustive search for singular points of the Igusa quartic over `F_p`.
pub fn fp_singular_scan(m: &IgusaModel, p: u64) -> Result<ScanResult, GeometryError> {
    let field = PrimeField::new(p).map_err(|_| GeometryError::BadPrime(p))?;
    let g = chart_quartic(m);
    let polys: Vec<FpPoly> = std::iter::once(g.clone())
        .chain(g.gradient())
        .map(|q| FpPoly::reduce(&q, field))
        .collect::<Result<_, _>>()?;
    let total = (0..5).map(|k| (p as usize).pow(k)).sum::<usize>();
    let hits = par::map_range(total, |i| {
        let v = decode(i, p);
        polys.iter().all(|q| q.eval(&v) == 0).then_some(v)
    });
    let singular: BTreeSet<Vec<u64>> = hits.into_iter().flatten().collect();
    let union = line_points_mod_p(m, p)?;
    Ok(ScanResult {
        prime: p,
        points_checked: total,
        singular_count: singular.len(),
        line_union_count: union.len(),
        verdict: singular == union,
        singular,
    })
}

/// Residues of an integer vector, for membership queries.
pub fn reduce_point(v: &[i64], p: u64) -> Option<Vec<u64>> {
    let f = PrimeField::new(p).ok()?;
    normalize(v.iter().take(5).map(|&x| f.elem(x).residue()).collect(), &f)
}
