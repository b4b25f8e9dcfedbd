use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::Rational;

/// A projective point with coprime integer coordinates, first nonzero positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<BigInt>,
}

impl ProjPoint {
    /// `None` for the zero vector.
    pub fn from_rationals(v: &[Rational]) -> Option<Self> {
        let lcm = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let mut coords: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
        let g = coords.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return None;
        }
        let lead_negative = coords.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        for c in &mut coords {
            *c /= &g;
            if lead_negative {
                *c = -&*c;
            }
        }
        Some(Self { coords })
    }

    pub fn from_ints(v: &[i64]) -> Option<Self> {
        let r: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Self::from_rationals(&r)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coords.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
