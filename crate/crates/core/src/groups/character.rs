use std::collections::VecDeque;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{scaling_character, FiniteGroup, GroupError, SignedPerm};
use crate::algebra::{int, Field, LinearForm, QOmega, Rational};

/// Class function on a finite group, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterVector {
    pub values: Vec<QOmega>,
    pub class_sizes: Vec<usize>,
    pub representatives: Vec<SignedPerm>,
}

impl CharacterVector {
    /// Evaluates `f` on one representative per class of `g`.
    pub fn from_fn(g: &FiniteGroup, f: impl Fn(&SignedPerm) -> QOmega) -> Self {
        let classes = g.conjugacy_classes();
        let representatives: Vec<SignedPerm> =
            classes.classes.iter().map(|c| g.elements()[c[0]].clone()).collect();
        Self {
            values: representatives.iter().map(&f).collect(),
            class_sizes: classes.sizes(),
            representatives,
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |_| QOmega::one())
    }

    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn degree(&self) -> QOmega {
        self.values[0].clone()
    }

    /// `(1/|G|) Σ χ(g) · conj(ψ(g))`.
    pub fn inner(&self, other: &Self) -> QOmega {
        assert_eq!(self.class_sizes, other.class_sizes, "characters of different groups");
        let mut acc = QOmega::zero();
        for ((a, b), &k) in self.values.iter().zip(&other.values).zip(&self.class_sizes) {
            acc = acc + QOmega::from(int(k as i64)) * a.clone() * b.conj();
        }
        acc / QOmega::from(int(self.group_order() as i64))
    }

    pub fn norm(&self) -> QOmega {
        self.inner(self)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() - b.clone()).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect(),
            ..self.clone()
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }
}

/// `χ_W(g) = fix(g) − 1`, the character of the 5-dimensional permutation
/// quotient. The auxiliary sign is ignored; coordinate signs are rejected.
pub fn simplicial_character(g: &FiniteGroup) -> Result<CharacterVector, GroupError> {
    if let Some(bad) = g.elements().iter().find(|x| !x.has_unit_signs()) {
        return Err(GroupError::SignedElement(bad.to_string()));
    }
    Ok(CharacterVector::from_fn(g, |x| QOmega::from(int(x.fixed_points() as i64 - 1))))
}

/// All degree-one characters, trivial first.
///
/// Values are sixth roots of unity; abelianizations whose exponent does not
/// divide 6 are rejected.
pub fn linear_characters(g: &FiniteGroup) -> Result<Vec<CharacterVector>, GroupError> {
    let k = g.commutator_subgroup();
    let (coset_of, reps, orders) = g.quotient_orders(&k);
    let exponent = orders.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
    if 6 % exponent != 0 {
        return Err(GroupError::UnsupportedAbelianization(exponent));
    }
    let q = reps.len();
    let gens: Vec<usize> = g
        .generators()
        .iter()
        .map(|x| coset_of[g.index_of(x).expect("generator in group")])
        .collect();
    // Cayley table of G/K restricted to right multiplication by generators
    let step: Vec<Vec<usize>> = (0..q)
        .map(|c| {
            g.generators()
                .iter()
                .map(|x| coset_of[g.index_of(&g.elements()[reps[c]].compose(x)).expect("closed")])
                .collect()
        })
        .collect();
    let identity_coset = coset_of[g.index_of(&SignedPerm::identity(g.degree())).expect("identity")];

    // exponent of ζ₆ assigned to each generator, constrained by its order
    let choices: Vec<Vec<u32>> = gens
        .iter()
        .map(|&c| {
            let o = orders[c] as u32;
            (0..o).map(|j| j * (6 / o)).collect()
        })
        .collect();
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut assignment = vec![0u32; gens.len()];
    enumerate_assignments(&choices, 0, &mut assignment, &mut |a| {
        if let Some(values) = extend_on_quotient(a, &step, identity_coset, q) {
            if !found.contains(&values) {
                found.push(values);
            }
        }
    });
    found.sort();
    let chars = found
        .iter()
        .map(|vals| {
            let by_element: Vec<u32> = coset_of.iter().map(|&c| vals[c]).collect();
            CharacterVector::from_fn(g, |x| {
                QOmega::root_of_unity6(by_element[g.index_of(x).expect("in group")])
            })
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(chars.len(), q);
    Ok(chars)
}

fn enumerate_assignments(
    choices: &[Vec<u32>],
    pos: usize,
    current: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if pos == choices.len() {
        visit(current);
        return;
    }
    for &c in &choices[pos] {
        current[pos] = c;
        enumerate_assignments(choices, pos + 1, current, visit);
    }
}

/// Extends generator values to a map on cosets; `None` if inconsistent.
fn extend_on_quotient(
    gen_values: &[u32],
    step: &[Vec<usize>],
    identity: usize,
    q: usize,
) -> Option<Vec<u32>> {
    let mut values = vec![u32::MAX; q];
    values[identity] = 0;
    let mut queue = VecDeque::from([identity]);
    while let Some(c) = queue.pop_front() {
        for (j, &next) in step[c].iter().enumerate() {
            let v = (values[c] + gen_values[j]) % 6;
            if values[next] == u32::MAX {
                values[next] = v;
                queue.push_back(next);
            } else if values[next] != v {
                return None;
            }
        }
    }
    Some(values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Irreducible4,
    OnePlusThree,
    Excluded,
}

/// How the linear part of `χ_V` was measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinearMethod {
    /// Inner products against every degree-one character.
    Stripping,
    /// `dim V^[G,G]`, used when linear characters leave ℚ(ω).
    FixedSpace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompSignature {
    pub verdict: Verdict,
    pub witness: Option<String>,
    /// `⟨χ_V, χ_V⟩`.
    #[serde(serialize_with = "crate::report::ser_display")]
    pub norm: Rational,
    /// Linear constituents of `V` counted with multiplicity.
    pub linear_constituents: usize,
    pub method: LinearMethod,
    pub character: CharacterVector,
}

/// Classifies the 4-dimensional representation `V = ker ℓ ⊂ W`.
pub fn decomposition_signature(
    g: &FiniteGroup,
    form: &LinearForm<QOmega>,
) -> Result<DecompSignature, GroupError> {
    let chi_w = simplicial_character(g)?;
    let lambda = scaling_character(g, form)?;
    let chi_v = chi_w.sub(&lambda);
    let norm = chi_v.norm().as_rational().cloned().expect("norm of a character is rational");

    let (linear_constituents, multiplicities, method) = match linear_characters(g) {
        Ok(chars) => {
            let mult: Vec<(usize, Rational)> = chars
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let m = chi_v.inner(c);
                    (i, m.as_rational().cloned().expect("multiplicity is rational"))
                })
                .filter(|(_, m)| !m.is_zero())
                .collect();
            let total: Rational = mult.iter().map(|(_, m)| m.clone()).sum();
            (to_count(&total), Some((chars, mult)), LinearMethod::Stripping)
        }
        Err(GroupError::UnsupportedAbelianization(_)) => {
            let k = g.commutator_subgroup();
            let sum: i64 = k.elements().iter().map(|h| h.fixed_points() as i64 - 2).sum();
            let dim = Rational::new(sum.into(), (k.order() as i64).into());
            (to_count(&dim), None, LinearMethod::FixedSpace)
        }
        Err(e) => return Err(e),
    };

    let verdict = if norm.is_one() && linear_constituents == 0 {
        Verdict::Irreducible4
    } else if norm == int(2) && linear_constituents == 1 {
        Verdict::OnePlusThree
    } else {
        Verdict::Excluded
    };
    let witness = (verdict == Verdict::Excluded).then(|| {
        let mut parts = vec![format!("norm {norm}"), format!("{linear_constituents} linear constituent(s)")];
        if let Some((chars, mult)) = &multiplicities {
            for (i, m) in mult {
                parts.push(format!("{} with multiplicity {m}", describe_linear(&chars[*i])));
            }
        }
        if linear_constituents >= 2 {
            parts.push("two linear constituents span a 2-dimensional subrepresentation".into());
        } else if linear_constituents == 0 {
            parts.push("with no linear part the 4-dimensional V splits as two 2-dimensional summands".into());
        } else {
            parts.push("the 3-dimensional residual is reducible".into());
        }
        parts.join("; ")
    });
    Ok(DecompSignature { verdict, witness, norm, linear_constituents, method, character: chi_v })
}

fn to_count(r: &Rational) -> usize {
    assert!(r.is_integer() && *r >= Rational::zero(), "multiplicity {r} is not a natural number");
    r.to_integer().try_into().expect("small multiplicity")
}

fn describe_linear(c: &CharacterVector) -> String {
    if c.is_trivial() {
        "trivial character".into()
    } else {
        let vals: Vec<String> = c.values.iter().map(|v| v.to_string()).collect();
        format!("linear character [{}]", vals.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::groups::{hyperplane_stabilizer, symmetric_group};
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> SignedPerm {
        SignedPerm::from_cycles(n, cycles).unwrap()
    }

    fn form(coeffs: &[i64]) -> LinearForm<QOmega> {
        LinearForm::new(coeffs.iter().map(|&c| QOmega::from(int(c))).collect())
    }

    #[test]
    fn simplicial_values() {
        let s6 = symmetric_group(6);
        let chi = simplicial_character(&s6).unwrap();
        let at = |g: &SignedPerm| {
            let k = s6.conjugacy_classes().class_of[s6.index_of(g).unwrap()];
            chi.values[k].clone()
        };
        assert_eq!(at(&SignedPerm::identity(6)), QOmega::from(int(5)));
        assert_eq!(at(&cyc(6, &[&[1, 2, 3, 4, 5, 6]])), QOmega::from(int(-1)));
        assert_eq!(at(&cyc(6, &[&[1, 2]])), QOmega::from(int(3)));
        assert_eq!(chi.norm(), QOmega::one());

        let signed = FiniteGroup::closure(6, &[SignedPerm::identity(6).with_signs(vec![-1, 1, 1, 1, 1, 1]).unwrap()])
            .unwrap();
        assert!(matches!(simplicial_character(&signed), Err(GroupError::SignedElement(_))));
    }

    #[test]
    fn linear_character_counts() {
        assert_eq!(linear_characters(&symmetric_group(5)).unwrap().len(), 2);
        let a5 = FiniteGroup::closure(5, &[cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(linear_characters(&a5).unwrap().len(), 1);
        let s3s3 = FiniteGroup::closure(
            6,
            &[cyc(6, &[&[1, 2]]), cyc(6, &[&[1, 2, 3]]), cyc(6, &[&[4, 5]]), cyc(6, &[&[4, 5, 6]])],
        )
        .unwrap();
        let chars = linear_characters(&s3s3).unwrap();
        assert_eq!(chars.len(), 4);
        assert!(chars[0].is_trivial());
        let c3 = FiniteGroup::closure(3, &[cyc(3, &[&[1, 2, 3]])]).unwrap();
        let chars = linear_characters(&c3).unwrap();
        assert_eq!(chars.len(), 3);
        // orthonormality
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let expect = if i == j { QOmega::one() } else { QOmega::zero() };
                assert_eq!(a.inner(b), expect);
            }
        }
        let c4 = FiniteGroup::closure(4, &[cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(linear_characters(&c4), Err(GroupError::UnsupportedAbelianization(4)));
    }

    #[test]
    fn signature_examples() {
        let x6 = form(&[0, 0, 0, 0, 0, 1]);
        let s5 = hyperplane_stabilizer(&x6).unwrap();
        let sig = decomposition_signature(&s5, &x6).unwrap();
        assert_eq!(sig.verdict, Verdict::Irreducible4);
        assert_eq!(sig.norm, int(1));

        let l = form(&[1, 2, 0, 0, 0, 0]);
        let s4 = hyperplane_stabilizer(&l).unwrap();
        let sig = decomposition_signature(&s4, &l).unwrap();
        assert_eq!(sig.verdict, Verdict::OnePlusThree);
        assert_eq!(sig.linear_constituents, 1);

        // the 36-element subgroup preserving both triples setwise
        let l = form(&[1, 1, 1, 0, 0, 0]);
        let s3s3 = FiniteGroup::closure(
            6,
            &[cyc(6, &[&[1, 2]]), cyc(6, &[&[1, 2, 3]]), cyc(6, &[&[4, 5]]), cyc(6, &[&[4, 5, 6]])],
        )
        .unwrap();
        let sig = decomposition_signature(&s3s3, &l).unwrap();
        assert_eq!(sig.verdict, Verdict::Excluded);
        assert_eq!(sig.norm, int(2));
        assert_eq!(sig.linear_constituents, 0);
        assert!(sig.witness.unwrap().contains("2-dimensional"));
    }

    #[test]
    fn fixed_space_fallback_agrees_with_stripping() {
        // C₄ acting on x₁..x₄ and fixing x₅ x₆; the form x₅ is invariant
        let c4 = FiniteGroup::closure(6, &[cyc(6, &[&[1, 2, 3, 4]])]).unwrap();
        let sig = decomposition_signature(&c4, &form(&[0, 0, 0, 0, 1, 0])).unwrap();
        assert_eq!(sig.method, LinearMethod::FixedSpace);
        // W = regular + trivial, so V is the regular representation
        assert_eq!(sig.linear_constituents, 4);
        assert_eq!(sig.norm, int(4));
        assert_eq!(sig.verdict, Verdict::Excluded);
    }

    #[test]
    fn inner_products_are_rational_multiplicities() {
        let g = symmetric_group(4);
        let chars = linear_characters(&g).unwrap();
        let sign = &chars[1];
        assert_eq!(sign.norm(), QOmega::one());
        assert_eq!(sign.degree(), QOmega::one());
        assert_eq!(CharacterVector::trivial(&g).inner(sign), QOmega::from(rat(0, 1)));
    }

    fn arb_perm() -> impl Strategy<Value = SignedPerm> {
        Just((0..6).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| SignedPerm::from_images(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn signature_is_conjugation_invariant(
            coeffs in prop::collection::vec(-2i64..=2, 6),
            x in arb_perm(),
        ) {
            let l = form(&coeffs);
            let g = match hyperplane_stabilizer(&l) {
                Ok(g) => g,
                Err(_) => return Ok(()),
            };
            let a = decomposition_signature(&g, &l).unwrap();
            // (xGx⁻¹, ℓ∘x⁻¹)
            let moved = x.inverse().act_on_form(&l);
            let b = decomposition_signature(&g.conjugate_by(&x), &moved).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.norm, b.norm);
            prop_assert_eq!(a.linear_constituents, b.linear_constituents);
        }

        #[test]
        fn character_norms_are_positive_integers(coeffs in prop::collection::vec(-2i64..=2, 6)) {
            let l = form(&coeffs);
            if let Ok(g) = hyperplane_stabilizer(&l) {
                let chi = simplicial_character(&g).unwrap();
                let n = chi.norm();
                let n = n.as_rational().unwrap();
                prop_assert!(n.is_integer() && *n >= int(1));
                let sig = decomposition_signature(&g, &l).unwrap();
                prop_assert!(sig.norm >= int(1));
                prop_assert_eq!(sig.norm == int(1), sig.verdict == Verdict::Irreducible4);
            }
        }
    }
}
