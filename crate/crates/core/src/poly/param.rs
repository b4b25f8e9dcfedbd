use super::{PolyError, SparsePoly};
use crate::algebra::{MatrixQ, Rational};

/// Injective linear map `y ↦ M·y` from `source_vars` coordinates into
/// `target_vars` coordinates; used for line parametrizations and hyperplane
/// charts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearParam {
    matrix: MatrixQ,
}

impl LinearParam {
    pub fn new(matrix: MatrixQ) -> Result<Self, PolyError> {
        let rank = matrix.rank();
        if rank < matrix.cols() {
            return Err(PolyError::NotInjective { rank, source_vars: matrix.cols() });
        }
        Ok(Self { matrix })
    }

    /// Parametrization whose columns are the given spanning vectors.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Result<Self, PolyError> {
        Self::new(MatrixQ::from_columns(columns)?)
    }

    pub fn target_vars(&self) -> usize {
        self.matrix.rows()
    }

    pub fn source_vars(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &MatrixQ {
        &self.matrix
    }

    pub fn apply(&self, y: &[Rational]) -> Result<Vec<Rational>, PolyError> {
        Ok(self.matrix.mul_vec(y)?)
    }

    /// Coordinates `y` with `M·y = x`, if `x` lies in the image.
    pub fn preimage(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        self.matrix.solve(x)
    }
}

impl SparsePoly {
    /// `f ∘ φ`, expanded exactly in the source variables of `φ`.
    pub fn restrict(&self, phi: &LinearParam) -> Result<SparsePoly, PolyError> {
        if phi.target_vars() != self.nvars() {
            return Err(PolyError::Dimension { expected: self.nvars(), got: phi.target_vars() });
        }
        Ok(self.substitute_linear(phi.matrix()))
    }

    /// Substitutes `xᵢ = Σⱼ M[i][j] yⱼ` for an arbitrary (not necessarily
    /// injective) matrix with `nvars` rows.
    pub fn substitute_linear(&self, m: &MatrixQ) -> SparsePoly {
        assert_eq!(m.rows(), self.nvars(), "substitution matrix has wrong row count");
        let src = m.cols();
        let images: Vec<SparsePoly> = (0..m.rows()).map(|i| SparsePoly::linear(m.row(i))).collect();
        let max_exp: Vec<u32> = (0..self.nvars())
            .map(|i| self.terms().keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .zip(&max_exp)
            .map(|(l, &k)| {
                let mut ps = vec![SparsePoly::constant(src, Rational::from_integer(1.into()))];
                for _ in 0..k {
                    let next = ps.last().expect("nonempty") * l;
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = SparsePoly::zero(src);
        for (e, c) in self.terms() {
            let mut term = SparsePoly::constant(src, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    /// The line `(t, t, u, u, -t-u, -t-u)`.
    fn line() -> LinearParam {
        let t: Vec<Rational> = [1, 1, 0, 0, -1, -1].iter().map(|&x| int(x)).collect();
        let u: Vec<Rational> = [0, 0, 1, 1, -1, -1].iter().map(|&x| int(x)).collect();
        LinearParam::from_columns(&[t, u]).unwrap()
    }

    fn igusa() -> SparsePoly {
        let s2 = SparsePoly::power_sum(6, 2);
        &SparsePoly::power_sum(6, 4).scale(&int(4)) - &(&s2 * &s2)
    }

    #[test]
    fn restrict_examples() {
        assert!(SparsePoly::power_sum(6, 1).restrict(&line()).unwrap().is_zero());
        assert!(igusa().restrict(&line()).unwrap().is_zero());
        assert_eq!(SparsePoly::var(6, 0).restrict(&line()).unwrap(), SparsePoly::var(2, 0));
        assert!(SparsePoly::var(3, 0).restrict(&line()).is_err());
    }

    #[test]
    fn rejects_non_injective() {
        let v: Vec<Rational> = vec![int(1), int(2)];
        assert!(matches!(
            LinearParam::from_columns(&[v.clone(), v]),
            Err(PolyError::NotInjective { rank: 1, source_vars: 2 })
        ));
    }

    fn small_poly(nvars: usize) -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, nvars), -3i64..4),
            0..5,
        )
        .prop_map(move |ts| {
            SparsePoly::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, int(c)))).unwrap()
        })
    }

    fn small_param() -> impl Strategy<Value = MatrixQ> {
        proptest::collection::vec((-2i64..3, 1i64..3), 6)
            .prop_map(|v| MatrixQ::new(3, 2, v.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn restriction_is_multiplicative(f in small_poly(3), g in small_poly(3), m in small_param()) {
            let fg = (&f * &g).substitute_linear(&m);
            prop_assert_eq!(fg, &f.substitute_linear(&m) * &g.substitute_linear(&m));
        }

        #[test]
        fn chain_rule(f in small_poly(3), m in small_param()) {
            let composed = f.substitute_linear(&m);
            let grads: Vec<SparsePoly> = f.gradient().iter().map(|g| g.substitute_linear(&m)).collect();
            for j in 0..m.cols() {
                let mut rhs = SparsePoly::zero(m.cols());
                for (i, gi) in grads.iter().enumerate() {
                    rhs = &rhs + &gi.scale(m.get(i, j));
                }
                prop_assert_eq!(composed.partial(j), rhs);
            }
        }
    }
}
