use super::{PolyError, SparsePoly};
use crate::algebra::PrimeField;

/// A polynomial reduced modulo a prime, evaluated with raw `u64` arithmetic.
#[derive(Clone, Debug)]
pub struct FpPoly {
    field: PrimeField,
    nvars: usize,
    terms: Vec<(Vec<u32>, u64)>,
}

impl FpPoly {
    pub fn reduce(f: &SparsePoly, field: PrimeField) -> Result<Self, PolyError> {
        let mut terms = Vec::with_capacity(f.len());
        for (e, c) in f.terms() {
            let r = field.reduce(c)?.residue();
            if r != 0 {
                terms.push((e.clone(), r));
            }
        }
        Ok(Self { field, nvars: f.nvars(), terms })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Value at a point given by residues in `[0, p)`.
    pub fn eval(&self, point: &[u64]) -> u64 {
        debug_assert_eq!(point.len(), self.nvars);
        let f = &self.field;
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (&x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = f.mul_raw(t, x);
                }
                if t == 0 {
                    break;
                }
            }
            acc = f.add_raw(acc, t);
        }
        acc
    }
}
