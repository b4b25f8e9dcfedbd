use serde::Serialize;

use super::RigidityError;
use crate::algebra::{int, Rational};
use crate::par;
use crate::poly::SparsePoly;

/// The invariant lattice of the three-point blow-up with basis `(H̃, Ẽ)`.
#[derive(Clone, Debug, Serialize)]
pub struct SarkisovLattice {
    /// `[H̃³, H̃²Ẽ, H̃Ẽ², Ẽ³]`.
    pub cubes: [i64; 4],
    /// `−K` in the basis `(H̃, Ẽ)`.
    pub anticanonical: [i64; 2],
}

impl Default for SarkisovLattice {
    fn default() -> Self {
        Self { cubes: [2, 0, 0, 6], anticanonical: [2, -1] }
    }
}

impl SarkisovLattice {
    fn value(&self, idx: [usize; 3]) -> i64 {
        self.cubes[idx.iter().sum::<usize>()]
    }

    /// Symmetric trilinear form on classes with polynomial coefficients.
    pub fn trilinear(&self, x: &[SparsePoly; 2], y: &[SparsePoly; 2], z: &[SparsePoly; 2]) -> SparsePoly {
        let mut acc = SparsePoly::zero(x[0].nvars());
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let v = self.value([i, j, k]);
                    if v != 0 {
                        acc = &acc + &(&(&x[i] * &y[j]) * &z[k]).scale(&int(v));
                    }
                }
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        let idx = |i: usize| [(i >> 2) & 1, (i >> 1) & 1, i & 1];
        (0..8).all(|p| {
            let [i, j, k] = idx(p);
            [[i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]]
                .iter()
                .all(|q| self.value(*q) == self.value([i, j, k]))
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SarkisovReport {
    pub bound: i64,
    pub c_expr: String,
    pub d_expr: String,
    pub determinant_expr: String,
    pub trilinear_expr: String,
    /// (i)–(iii) reproduce `c = 2a−2`, `d = 1+2b`, `a+2b`, `2a²−3b²`.
    pub derivation_ok: bool,
    /// Grid solutions with either sign of the determinant, any sign of `a`.
    pub grid_solutions: Vec<(i64, i64)>,
    /// After the `a > 0` effectiveness filter.
    pub solutions: Vec<(i64, i64)>,
    /// Integer roots of `b(5b ∓ 8) = 0`, mapped back to `(a, b)`, `a > 0`.
    pub reduction_solutions: Vec<(i64, i64)>,
    pub agree: bool,
}

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn var(i: usize) -> SparsePoly {
    SparsePoly::var(4, i)
}

fn constant(c: i64) -> SparsePoly {
    SparsePoly::constant(4, int(c))
}

/// Solves `eq = 0` for variable `v`, assuming `eq` is linear in `v` with a
/// constant coefficient.
fn solve_for(eq: &SparsePoly, v: usize) -> Option<SparsePoly> {
    let k = eq.partial(v);
    if k.total_degree().unwrap_or(0) > 0 || k.is_zero() {
        return None;
    }
    let coeff = k.coeff(&[0, 0, 0, 0]);
    let rest = eq.substitute(v, &SparsePoly::zero(4)).ok()?;
    Some(rest.scale(&(-Rational::from_integer(1.into()) / coeff)))
}

pub fn sarkisov_arithmetic(bound: i64) -> Result<SarkisovReport, RigidityError> {
    if bound < 10 {
        return Err(RigidityError::BoundTooSmall(bound));
    }
    let lat = SarkisovLattice::default();
    let (a, b, c, d) = (var(0), var(1), var(2), var(3));
    let h_new = [a.clone(), b.clone()];
    let e_new = [c.clone(), d.clone()];
    let minus_k = lat.anticanonical.map(constant);

    // (i) 2Ĥ′ − Ê′ = −K coefficientwise
    let eq_h = &(&h_new[0].scale(&int(2)) - &e_new[0]) - &minus_k[0];
    let eq_e = &(&h_new[1].scale(&int(2)) - &e_new[1]) - &minus_k[1];
    let c_sol = solve_for(&eq_h, 2).expect("linear in c");
    let d_sol = solve_for(&eq_e, 3).expect("linear in d");

    // (ii) det [[a, b], [c, d]]
    let det = &(&a * &d_sol) - &(&b * &c_sol);

    // (iii) Ĥ′²·(−K)/2
    let tri = lat.trilinear(&h_new, &h_new, &minus_k).scale(&Rational::new(1.into(), 2.into()));

    let expect_c = &a.scale(&int(2)) - &constant(2);
    let expect_d = &constant(1) + &b.scale(&int(2));
    let expect_det = &a + &b.scale(&int(2));
    let expect_tri = &(&a * &a).scale(&int(2)) - &(&b * &b).scale(&int(3));
    let derivation_ok = lat.is_symmetric()
        && c_sol == expect_c
        && d_sol == expect_d
        && det == expect_det
        && tri == expect_tri;

    // (iv) exhaustive grid, parallel over a
    let width = (2 * bound + 1) as usize;
    let rows = par::map_range(width, |i| {
        let a = i as i64 - bound;
        (-bound..=bound)
            .filter(|&b| 2 * a * a - 3 * b * b == 2 && (a + 2 * b).abs() == 1)
            .map(|b| (a, b))
            .collect::<Vec<_>>()
    });
    let grid_solutions: Vec<(i64, i64)> = rows.into_iter().flatten().collect();
    // (v) effectiveness
    let solutions: Vec<(i64, i64)> = grid_solutions.iter().copied().filter(|&(a, _)| a > 0).collect();

    // a = s − 2b turns 2a² − 3b² = 2 into 5b² − 8sb = 0
    let mut reduction_solutions = Vec::new();
    for s in [1i64, -1] {
        let a_sub = &constant(s) - &b.scale(&int(2));
        let reduced = (&expect_tri - &constant(2)).substitute(0, &a_sub).expect("4 variables");
        let expect = &(&b * &b).scale(&int(5)) - &b.scale(&int(8 * s));
        assert_eq!(reduced, expect, "reduction b(5b - 8s) = 0");
        // roots b = 0 and b = 8s/5; only the first is integral
        for (num, den) in [(0i64, 1i64), (8 * s, 5)] {
            if num % den == 0 {
                let b0 = num / den;
                let a0 = s - 2 * b0;
                if a0 > 0 && b0.abs() <= bound {
                    reduction_solutions.push((a0, b0));
                }
            }
        }
    }
    reduction_solutions.sort();
    let agree = reduction_solutions == solutions;
    Ok(SarkisovReport {
        bound,
        c_expr: c_sol.display_with(&NAMES),
        d_expr: d_sol.display_with(&NAMES),
        determinant_expr: det.display_with(&NAMES),
        trilinear_expr: tri.display_with(&NAMES),
        derivation_ok,
        grid_solutions,
        solutions,
        reduction_solutions,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trilinear_values() {
        let lat = SarkisovLattice::default();
        assert!(lat.is_symmetric());
        let h = [constant(1), constant(0)];
        let k = lat.anticanonical.map(constant);
        let v = lat.trilinear(&h, &h, &k).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(v, constant(2));
        let zero = [constant(0), constant(0)];
        assert!(lat.trilinear(&zero, &zero, &k).is_zero());
    }

    #[test]
    fn arithmetic() {
        let r = sarkisov_arithmetic(200).unwrap();
        assert!(r.derivation_ok, "{r:?}");
        assert_eq!(r.grid_solutions, vec![(-1, 0), (1, 0)]);
        assert_eq!(r.solutions, vec![(1, 0)]);
        assert!(r.agree);
        assert_eq!(r.c_expr, "2*a - 2");
        assert!(sarkisov_arithmetic(9).is_err());
    }
}
