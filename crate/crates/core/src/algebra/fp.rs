use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{AlgebraError, Rational};

/// A prime field `F_p` with `p >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p < 5 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> FpElement {
        FpElement {
            residue: v.rem_euclid(self.p as i64) as u64,
            modulus: self.p,
        }
    }

    /// Reduces a rational whose denominator is prime to `p`.
    pub fn reduce(&self, q: &Rational) -> Result<FpElement, AlgebraError> {
        let p = BigInt::from(self.p);
        let n = q.numer().mod_floor(&p).to_u64().unwrap_or(0);
        let d = q.denom().mod_floor(&p).to_u64().unwrap_or(0);
        if d == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = FpElement { residue: n, modulus: self.p };
        let d = FpElement { residue: d, modulus: self.p };
        Ok(n * d.inv()?)
    }

    pub fn elements(&self) -> impl Iterator<Item = FpElement> + '_ {
        (0..self.p).map(move |r| FpElement { residue: r, modulus: self.p })
    }

    #[inline]
    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn add_raw(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
}

/// Residue class modulo a prime `p >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElement {
    residue: u64,
    modulus: u64,
}

impl FpElement {
    pub fn new(v: i64, p: u64) -> Result<Self, AlgebraError> {
        Ok(PrimeField::new(p)?.elem(v))
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.residue;
        let mut acc = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            e >>= 1;
        }
        Self { residue: acc, modulus: self.modulus }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(self.modulus - 2))
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for FpElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.check(&o);
        Self { residue: (self.residue + o.residue) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for FpElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.check(&o);
        Self {
            residue: (self.residue + self.modulus - o.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for FpElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.check(&o);
        Self { residue: self.residue * o.residue % self.modulus, modulus: self.modulus }
    }
}

impl Neg for FpElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { residue: (self.modulus - self.residue) % self.modulus, modulus: self.modulus }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl From<FpElement> for Rational {
    fn from(x: FpElement) -> Self {
        Rational::from_integer(BigInt::from(x.residue))
    }
}
