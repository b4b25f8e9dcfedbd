use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{AlgebraError, Field, Matrix, QOmega, Rational};

/// A linear form `Σ cᵢ xᵢ` given by its coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearForm<K> {
    coeffs: Vec<K>,
}

impl<K: Field> LinearForm<K> {
    pub fn new(coeffs: Vec<K>) -> Self {
        Self { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![K::zero(); n])
    }

    /// The coordinate form `x_{i+1}` (0-based index `i`).
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut c = vec![K::zero(); n];
        c[i] = K::one();
        Self::new(c)
    }

    /// `x₁ + … + xₙ`.
    pub fn sum_form(n: usize) -> Self {
        Self::new(vec![K::one(); n])
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, point: &[K]) -> K {
        self.coeffs
            .iter()
            .zip(point)
            .fold(K::zero(), |acc, (c, x)| acc + c.clone() * x.clone())
    }

    pub fn scale(&self, s: &K) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-K::one()))
    }

    pub fn as_row_matrix(&self) -> Matrix<K> {
        Matrix::new(1, self.nvars(), self.coeffs.clone()).expect("row shape")
    }
}

impl LinearForm<Rational> {
    /// Parses forms such as `x1+2x2`, `-1/2x3`, `3*x4 - x6` in `nvars`
    /// variables. Whitespace is ignored; repeated variables add up.
    pub fn parse(input: &str, nvars: usize) -> Result<Self, AlgebraError> {
        let err = |reason: &str| AlgebraError::Parse { input: input.to_string(), reason: reason.to_string() };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut coeffs = vec![Rational::zero(); nvars];
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = Rational::from_integer(1.into());
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(err("expected + or - between terms"));
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let coeff = if start == pos {
                Rational::from_integer(1.into())
            } else {
                s[start..pos].parse::<Rational>().map_err(|_| err("bad coefficient"))?
            };
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(err("expected a variable x1..xn"));
            }
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let index: usize = s[start..pos].parse().map_err(|_| err("missing variable index"))?;
            if index == 0 || index > nvars {
                return Err(err(&format!("variable index must be in 1..={nvars}")));
            }
            coeffs[index - 1] += sign * coeff;
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_qomega(&self) -> LinearForm<QOmega> {
        LinearForm::new(self.coeffs.iter().cloned().map(QOmega::from).collect())
    }
}

/// Solves `f = c·g + d·m` with `c != 0`. Returns `None` when no such pair exists
/// (including the degenerate `m = 0`).
pub fn proportional_mod<K: Field>(
    f: &LinearForm<K>,
    g: &LinearForm<K>,
    m: &LinearForm<K>,
) -> Option<(K, K)> {
    let n = f.nvars();
    if g.nvars() != n || m.nvars() != n || m.is_zero() {
        return None;
    }
    let gm = Matrix::from_columns(&[g.coeffs.clone(), m.coeffs.clone()]).ok()?;
    if gm.rank() == 2 {
        let (c, d) = match gm.solve(&f.coeffs)?.as_slice() {
            [c, d] => (c.clone(), d.clone()),
            _ => return None,
        };
        let recombined = g.scale(&c).add(&m.scale(&d));
        (!c.is_zero() && recombined == *f).then_some((c, d))
    } else {
        // g = k·m, so f must be a multiple e·m; then c = 1, d = e - k works.
        let mcol = Matrix::from_columns(&[m.coeffs.clone()]).ok()?;
        let k = mcol.solve(&g.coeffs)?.pop()?;
        let e = mcol.solve(&f.coeffs)?.pop()?;
        let (c, d) = (K::one(), e - k);
        (g.scale(&c).add(&m.scale(&d)) == *f).then_some((c, d))
    }
}

impl<K: Field> fmt::Display for LinearForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let needs_parens = s.contains(['+', 'w']) || (s.starts_with('-') && s[1..].contains('-'));
            let term = if c.is_one() {
                format!("x{}", i + 1)
            } else if (-c.clone()).is_one() {
                format!("-x{}", i + 1)
            } else if needs_parens {
                format!("({s})x{}", i + 1)
            } else {
                format!("{s}x{}", i + 1)
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl<K: Field> Serialize for LinearForm<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, MatrixQ};
    use proptest::prelude::*;

    fn form(c: &[i64]) -> LinearForm<Rational> {
        LinearForm::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn parse_forms() {
        assert_eq!(LinearForm::parse("x1+2x2", 6).unwrap(), form(&[1, 2, 0, 0, 0, 0]));
        assert_eq!(LinearForm::parse(" x1 - x2 ", 6).unwrap(), form(&[1, -1, 0, 0, 0, 0]));
        assert_eq!(LinearForm::parse("3*x4-x6+x4", 6).unwrap(), form(&[0, 0, 0, 4, 0, -1]));
        let half = LinearForm::parse("-1/2x3", 6).unwrap();
        assert_eq!(half.coeffs()[2], rat(-1, 2));
        for bad in ["", "x7", "x0", "2", "x1x2", "1/0x1", "y1", "x1+"] {
            assert!(LinearForm::parse(bad, 6).is_err(), "{bad}");
        }
    }

    #[test]
    fn examples() {
        let x1 = LinearForm::<Rational>::coordinate(6, 0);
        let x2 = LinearForm::<Rational>::coordinate(6, 1);
        let s1 = LinearForm::<Rational>::sum_form(6);
        assert_eq!(proportional_mod(&x1, &x1, &s1), Some((int(1), int(0))));
        assert_eq!(
            proportional_mod(&s1.sub(&x1), &x1, &s1),
            Some((int(-1), int(1)))
        );
        assert_eq!(proportional_mod(&x2, &x1, &s1), None);
    }

    #[test]
    fn degenerate_cases() {
        let s1 = LinearForm::<Rational>::sum_form(3);
        let zero = LinearForm::<Rational>::zero(3);
        assert_eq!(proportional_mod(&s1, &s1, &zero), None);
        // g proportional to m
        let two_s1 = s1.scale(&int(2));
        let (c, d) = proportional_mod(&s1, &two_s1, &s1).unwrap();
        assert!(!c.is_zero());
        assert_eq!(two_s1.scale(&c).add(&s1.scale(&d)), s1);
        // f = 0 with independent g, m would need c = 0
        assert_eq!(proportional_mod(&zero, &form(&[1, 0, 0]), &s1), None);
    }

    #[test]
    fn display() {
        assert_eq!(form(&[1, 2, 0, -1, 0, 0]).to_string(), "x1+2x2-x4");
        let f = LinearForm::new(vec![rat(1, 2), rat(-3, 2)]);
        assert_eq!(f.to_string(), "1/2x1-3/2x2");
        let w = LinearForm::new(vec![QOmega::from(int(1)), QOmega::omega()]);
        assert_eq!(w.to_string(), "x1+(1w)x2");
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(c in prop::collection::vec((-5i64..=5, 1i64..=4), 6)) {
            let f = LinearForm::new(c.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>());
            prop_assume!(!f.is_zero());
            prop_assert_eq!(LinearForm::parse(&f.to_string(), 6).unwrap(), f);
        }

        #[test]
        fn matches_rank_oracle(
            f in proptest::collection::vec(-2i64..3, 4),
            g in proptest::collection::vec(-2i64..3, 4),
            m in proptest::collection::vec(-2i64..3, 4),
        ) {
            let (f, g, m) = (form(&f), form(&g), form(&m));
            prop_assume!(!m.is_zero());
            let rk = |rows: &[&LinearForm<Rational>]| {
                MatrixQ::from_rows(rows.iter().map(|r| r.coeffs().to_vec()).collect(), 4)
                    .unwrap()
                    .rank()
            };
            let in_span = rk(&[&g, &m, &f]) == rk(&[&g, &m]);
            let c_can_be_nonzero = rk(&[&g, &m]) == 1 || rk(&[&m, &f]) == 2;
            let expected = in_span && c_can_be_nonzero;
            let got = proportional_mod(&f, &g, &m);
            prop_assert_eq!(got.is_some(), expected);
            if let Some((c, d)) = got {
                prop_assert!(!c.is_zero());
                prop_assert_eq!(g.scale(&c).add(&m.scale(&d)), f);
            }
        }
    }
}
