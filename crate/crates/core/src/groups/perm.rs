use std::fmt;

use serde::Serialize;

use super::GroupError;
use crate::algebra::{Field, LinearForm};

/// A signed permutation of `n` coordinates together with a sign on the
/// weight-2 coordinate of the double cover.
///
/// As a linear map it sends `eᵢ` to `signs[i] · e_{images[i]}`, so on points
/// `(g·x)_{π(i)} = sᵢ xᵢ`. `aux` is the action on the double-cover
/// coordinate `y ↦ aux · y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<u8>,
    signs: Vec<i8>,
    aux: i8,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u8).collect(), signs: vec![1; n], aux: 1 }
    }

    /// The Galois involution `y ↦ -y` of the double cover.
    pub fn galois(n: usize) -> Self {
        Self::identity(n).with_aux(-1)
    }

    /// Builds from 0-based images, signs and the auxiliary sign.
    pub fn new(images: Vec<usize>, signs: Vec<i8>, aux: i8) -> Result<Self, GroupError> {
        let n = images.len();
        if n > u8::MAX as usize || signs.len() != n {
            return Err(GroupError::Dimension(format!(
                "{} images but {} signs",
                n,
                signs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        if signs.iter().chain(std::iter::once(&aux)).any(|&s| s != 1 && s != -1) {
            return Err(GroupError::NotAPermutation("signs must be ±1".into()));
        }
        Ok(Self { images: images.into_iter().map(|i| i as u8).collect(), signs, aux })
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        Self::new(images, vec![1; n], 1)
    }

    /// Unsigned permutation from 1-based disjoint cycles, e.g. `&[&[1, 2], &[3, 4, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || touched[a - 1] {
                    return Err(GroupError::NotAPermutation(format!("{cycles:?}")));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn with_aux(mut self, aux: i8) -> Self {
        self.aux = if aux < 0 { -1 } else { 1 };
        self
    }

    pub fn with_signs(mut self, signs: Vec<i8>) -> Result<Self, GroupError> {
        if signs.len() != self.n() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(GroupError::Dimension("bad sign vector".into()));
        }
        self.signs = signs;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn aux(&self) -> i8 {
        self.aux
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        let images = other.images.iter().map(|&j| self.images[j as usize]).collect();
        let signs = other
            .images
            .iter()
            .zip(&other.signs)
            .map(|(&j, &s)| self.signs[j as usize] * s)
            .collect();
        Self { images, signs, aux: self.aux * other.aux }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut images = vec![0u8; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            let j = self.images[i] as usize;
            images[j] = i as u8;
            signs[j] = self.signs[i];
        }
        Self { images, signs, aux: self.aux }
    }

    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.compose(self).compose(&x.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    /// All coordinate signs are +1 (the auxiliary sign may be either).
    pub fn has_unit_signs(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// Plain permutation: unit coordinate signs and trivial auxiliary sign.
    pub fn is_unsigned(&self) -> bool {
        self.has_unit_signs() && self.aux == 1
    }

    /// Forgets signs and the auxiliary sign.
    pub fn permutation_part(&self) -> Self {
        Self { images: self.images.clone(), signs: vec![1; self.n()], aux: 1 }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i == j as usize).count()
    }

    /// Sign of the underlying permutation.
    pub fn parity(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 { 1 } else { -1 }
    }

    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut x = self.clone();
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }

    /// Nontrivial cycles, 0-based, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.image(j);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// `ℓ ∘ g`: the coefficient of `xᵢ` becomes `s_i · a_{π(i)}`.
    pub fn act_on_form<K: Field>(&self, form: &LinearForm<K>) -> LinearForm<K> {
        let a = form.coeffs();
        LinearForm::new(
            (0..self.n())
                .map(|i| {
                    let c = a[self.image(i)].clone();
                    if self.signs[i] < 0 { -c } else { c }
                })
                .collect(),
        )
    }

    /// `g · x`, with `(g·x)_{π(i)} = sᵢ xᵢ`.
    pub fn act_on_point<K: Field>(&self, x: &[K]) -> Vec<K> {
        let mut out = vec![K::zero(); self.n()];
        for i in 0..self.n() {
            let v = x[i].clone();
            out[self.image(i)] = if self.signs[i] < 0 { -v } else { v };
        }
        out
    }
}

impl fmt::Display for SignedPerm {
    /// Cycle notation, sign string and auxiliary sign: `(1 2)(3 4) | ++--++ | aux:-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            write!(f, "()")?;
        }
        for c in cycles {
            let c: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", c.join(" "))?;
        }
        let signs: String = self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
        write!(f, " | {} | aux:{}", signs, if self.aux > 0 { '+' } else { '-' })
    }
}

impl Serialize for SignedPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
