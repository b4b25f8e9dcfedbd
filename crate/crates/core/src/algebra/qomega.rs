use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Rational};

/// An element `a + b·ω` of the Eisenstein field `Q(ω)`, where `ω` is a fixed
/// primitive cube root of unity (`ω² = -1 - ω`).
///
/// All characters in this crate take values here: rational characters and the
/// linear characters of order dividing 6.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QOmega {
    pub a: Rational,
    pub b: Rational,
}

impl QOmega {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn omega() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `ζ₆^k` where `ζ₆ = 1 + ω = -ω²` is a primitive sixth root of unity.
    pub fn root_of_unity6(k: u32) -> Self {
        let zeta = Self::new(Rational::one(), Rational::one());
        let mut acc = Self::one();
        for _ in 0..(k % 6) {
            acc = acc * zeta.clone();
        }
        acc
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Field norm `a² - ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }
}

impl From<Rational> for QOmega {
    fn from(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }
}

impl serde::Serialize for QOmega {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}w", self.b)
        } else {
            write!(f, "{}{:+}w", self.a, Signed(&self.b))
        }
    }
}

struct Signed<'a>(&'a Rational);

impl fmt::Display for Signed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 >= &Rational::zero() {
            write!(f, "+{}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Add for QOmega {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QOmega {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for QOmega {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bω)(c + dω) = (ac - bd) + (ad + bc - bd)ω
        let bd = &self.b * &o.b;
        Self::new(
            &self.a * &o.a - &bd,
            &self.a * &o.b + &self.b * &o.a - bd,
        )
    }
}

impl Div for QOmega {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(w)");
        let p = self * o.conj();
        Self::new(p.a / &n, p.b / n)
    }
}

impl Neg for QOmega {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Zero for QOmega {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QOmega {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl Field for QOmega {
    fn from_rational(q: Rational) -> Self {
        q.into()
    }

    fn conj(&self) -> Self {
        // conj(ω) = ω² = -1 - ω
        Self::new(&self.a - &self.b, -self.b.clone())
    }
}
