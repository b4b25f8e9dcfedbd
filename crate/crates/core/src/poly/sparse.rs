use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::PolyError;
use crate::algebra::{int, Rational};

/// Multivariate polynomial stored as a map from exponent vectors to nonzero
/// rational coefficients. Exponent vectors are ordered lexicographically, so
/// the last entry is the lex-leading term (highest power of `x₁` first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// One serialized term: `{exponents: [...], coeff: "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::Dimension { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Linear polynomial `Σ cᵢ xᵢ`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Power sum `Σ xᵢ^k`.
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        let mut p = Self::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            p.add_term(e, Rational::one());
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Ok(Some(d))` for a nonzero form of degree `d`, `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>, PolyError> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let Some(d) = degs.next() else {
            return Ok(None);
        };
        if degs.all(|x| x == d) {
            Ok(Some(d))
        } else {
            Err(PolyError::NotHomogeneous)
        }
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            p.add_term(d, c * int(e[i] as i64));
        }
        p
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Replaces variable `var` by `value` (a polynomial in the same variables).
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self, PolyError> {
        if value.nvars != self.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: value.nvars });
        }
        let mut powers: Vec<Self> = vec![Self::constant(self.nvars, Rational::one())];
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().expect("nonempty") * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[var] = 0;
            out = &out + &(&Self::monomial(rest, c.clone()) * &powers[k]);
        }
        Ok(out)
    }

    /// Re-embeds the polynomial in `new_nvars` variables, sending variable `i` to
    /// `mapping[i]`.
    pub fn remap(&self, new_nvars: usize, mapping: &[usize]) -> Self {
        let mut p = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; new_nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[mapping[i]] += k;
            }
            p.add_term(ne, c.clone());
        }
        p
    }

    /// `Some(c)` with `self = c · other`, `c != 0`, if the two are proportional.
    pub fn proportionality(&self, other: &Self) -> Option<Rational> {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() {
            return None;
        }
        if self.is_zero() {
            return None;
        }
        let (e, c) = other.leading_term()?;
        let ratio = self.coeff(e) / c;
        (!ratio.is_zero() && *self == other.scale(&ratio)).then_some(ratio)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(e, c)| TermRecord { exponents: e.clone(), coeff: c.to_string() })
            .collect()
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let n = names.get(i).map_or_else(|| format!("x{}", i + 1), |s| s.to_string());
                    if k == 1 { n } else { format!("{n}^{k}") }
                })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{mag}*{}", mono.join("*")),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, o: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, o: &SparsePoly) -> SparsePoly {
        self + &(-o)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, o: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut p = SparsePoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}
