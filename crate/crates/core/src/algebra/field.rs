use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_abs(q: &Rational) -> Rational {
    q.abs()
}

/// The exact fields used throughout the crate (`Q` and `Q(ω)`).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: Rational) -> Self;

    /// Complex conjugation (identity on `Q`).
    fn conj(&self) -> Self;

    /// Rescales a row by a nonzero constant so its entries become integral
    /// where that notion exists. Keeps fraction-free elimination on integers.
    fn clear_denominators(_row: &mut [Self]) {}
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn clear_denominators(row: &mut [Self]) {
        let lcm = row
            .iter()
            .filter(|x| !x.is_zero())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        if lcm.is_one() {
            return;
        }
        let scale = Rational::from_integer(lcm);
        for x in row.iter_mut() {
            *x = &*x * &scale;
        }
    }
}
