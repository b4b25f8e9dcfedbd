use serde::Serialize;

use super::RigidityError;
use crate::algebra::{int, Matrix, MatrixQ};
use crate::groups::{FiniteGroup, SignedPerm};

/// Generators of a subgroup of `C₂⁵ ⋊ S₅` acting on `Z⁵`.
#[derive(Clone, Debug, Serialize)]
pub struct D5Action {
    pub label: String,
    pub generators: Vec<SignedPerm>,
}

impl D5Action {
    pub fn matrices(&self) -> Vec<MatrixQ> {
        self.generators.iter().map(signed_perm_matrix).collect()
    }
}

/// `M` with `M·eᵢ = sᵢ e_{π(i)}`.
fn signed_perm_matrix(g: &SignedPerm) -> MatrixQ {
    let n = g.n();
    let mut rows = Matrix::zeros(n, n).to_rows();
    for i in 0..n {
        rows[g.image(i)][i] = int(g.signs()[i] as i64);
    }
    Matrix::from_rows(rows, n).expect("square")
}

/// Model: `(σ, ε) ↦ ε·P_σ`, with `σ ∈ S₅` fixing letter 6 and `ε` the
/// Galois component.
pub fn d5_model(g: &FiniteGroup, label: &str) -> Result<D5Action, RigidityError> {
    let generators = g
        .generators()
        .iter()
        .map(|x| {
            if x.n() != 6 || !x.has_unit_signs() || x.image(5) != 5 {
                return Err(RigidityError::OutsideAmbient(x.to_string()));
            }
            let images: Vec<usize> = (0..5).map(|i| x.image(i)).collect();
            let perm = SignedPerm::from_images(images).expect("fixes letter 6");
            Ok(perm.with_signs(vec![x.aux(); 5]).expect("5 signs"))
        })
        .collect::<Result<_, _>>()?;
    Ok(D5Action { label: label.to_string(), generators })
}

/// Dimension of the common fixed space of the generators.
pub fn invariant_rank(a: &D5Action) -> usize {
    let n = a.generators.first().map_or(5, SignedPerm::n);
    let id = Matrix::identity(n);
    let mut stacked: Option<MatrixQ> = None;
    for m in a.matrices() {
        let d = m.sub(&id).expect("same shape");
        stacked = Some(match stacked {
            None => d,
            Some(s) => s.vstack(&d).expect("same width"),
        });
    }
    match stacked {
        None => n,
        Some(s) => s.kernel_basis().len(),
    }
}

/// The five groups named in the rigidity classification, on 6 letters with
/// letter 6 fixed: A₅, standard S₅, twisted S₅, A₅×C₂, S₅×C₂.
pub fn named_subgroups() -> Vec<(&'static str, FiniteGroup)> {
    let t = SignedPerm::from_cycles(6, &[&[1, 2]]).expect("valid");
    let c5 = SignedPerm::from_cycles(6, &[&[1, 2, 3, 4, 5]]).expect("valid");
    let c3 = SignedPerm::from_cycles(6, &[&[1, 2, 3]]).expect("valid");
    let gal = SignedPerm::galois(6);
    let make = |gens: &[SignedPerm]| FiniteGroup::closure(6, gens).expect("degree 6");
    vec![
        ("A5", make(&[c3.clone(), c5.clone()])),
        ("S5", make(&[t.clone(), c5.clone()])),
        ("twisted S5", make(&[t.clone().with_aux(-1), c5.clone()])),
        ("A5xC2", make(&[c3, c5.clone(), gal.clone()])),
        ("S5xC2", make(&[t, c5, gal])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_images() {
        let named = named_subgroups();
        let s5 = &named[1].1;
        let a = d5_model(s5, "S5").unwrap();
        assert!(a.generators.iter().all(SignedPerm::is_unsigned));
        let gal = FiniteGroup::closure(6, &[SignedPerm::galois(6)]).unwrap();
        let m = d5_model(&gal, "Galois").unwrap().matrices();
        let minus_id = MatrixQ::zeros(5, 5).sub(&Matrix::identity(5)).unwrap();
        assert_eq!(m[0], minus_id);
        let tw = FiniteGroup::closure(6, &[SignedPerm::from_cycles(6, &[&[1, 2]]).unwrap().with_aux(-1)]).unwrap();
        let g = &d5_model(&tw, "t").unwrap().generators[0];
        assert_eq!(g.signs(), &[-1; 5]);
        assert_eq!(g.image(0), 1);
        let outside = FiniteGroup::closure(6, &[SignedPerm::from_cycles(6, &[&[5, 6]]).unwrap()]).unwrap();
        assert!(d5_model(&outside, "bad").is_err());
    }

    #[test]
    fn ranks_of_named_groups() {
        let ranks: Vec<usize> = named_subgroups()
            .iter()
            .map(|(l, g)| invariant_rank(&d5_model(g, l).unwrap()))
            .collect();
        assert_eq!(ranks, vec![1, 1, 0, 0, 0]);
        let trivial = FiniteGroup::trivial(6);
        assert_eq!(invariant_rank(&d5_model(&trivial, "1").unwrap()), 5);
    }
}
