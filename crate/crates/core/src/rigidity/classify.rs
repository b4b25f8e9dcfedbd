use serde::Serialize;

use super::{d5_model, invariant_rank, named_subgroups, RigidityError};
use crate::algebra::{int, LinearForm, QOmega};
use crate::groups::{
    decomposition_signature, hyperplane_stabilizer, is_subconjugate, subgroups_up_to_conjugacy,
    FiniteGroup, Fingerprint, SignedPerm, Verdict,
};
use crate::par;

fn x6() -> LinearForm<QOmega> {
    LinearForm::new((0..6).map(|i| QOmega::from(int(i64::from(i == 5)))).collect())
}

/// `Stab(x₆) × ⟨Galois⟩`, order 240.
pub fn aut_x6() -> Result<FiniteGroup, RigidityError> {
    let stab = hyperplane_stabilizer(&x6())?;
    let mut gens = stab.generators().to_vec();
    gens.push(SignedPerm::galois(6));
    Ok(FiniteGroup::closure(6, &gens)?)
}

/// `⟨(1 2), (1 2 3 4), Galois⟩`, order 48.
pub fn s4_times_c2() -> FiniteGroup {
    let gens = [
        SignedPerm::from_cycles(6, &[&[1, 2]]).expect("valid"),
        SignedPerm::from_cycles(6, &[&[1, 2, 3, 4]]).expect("valid"),
        SignedPerm::galois(6),
    ];
    FiniteGroup::closure(6, &gens).expect("degree 6")
}

/// `⟨(1 2 3 4 5), (2 3 5 4), Galois⟩`, order 40.
pub fn c5c4_times_c2() -> FiniteGroup {
    let gens = [
        SignedPerm::from_cycles(6, &[&[1, 2, 3, 4, 5]]).expect("valid"),
        SignedPerm::from_cycles(6, &[&[2, 3, 5, 4]]).expect("valid"),
        SignedPerm::galois(6),
    ];
    FiniteGroup::closure(6, &gens).expect("degree 6")
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityVerdict {
    pub label: String,
    pub order: usize,
    pub fingerprint: Fingerprint,
    pub generators: Vec<SignedPerm>,
    pub d5_invariant_rank: usize,
    pub in_s4xc2: bool,
    pub in_c5c4xc2: bool,
    pub excluded_by_signature: bool,
    pub signature: Verdict,
    pub admissible: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub ambient_order: usize,
    pub class_count: usize,
    pub verdicts: Vec<AdmissibilityVerdict>,
    pub admissible_labels: Vec<String>,
    /// Empty iff the admissible set is exactly S5xC2, twisted S5, A5xC2.
    pub discrepancies: Vec<String>,
}

/// Name of a subgroup of `Aut(X)` from its fingerprint, telling the two
/// copies of S₅ apart by how they act on the double-cover coordinate.
pub fn group_label(g: &FiniteGroup) -> String {
    let fp = g.fingerprint();
    for (name, reference) in named_subgroups() {
        if reference.fingerprint() == fp {
            if name == "S5" || name == "twisted S5" {
                if g.elements().iter().all(|x| x.aux() == 1) {
                    return "S5".into();
                }
                if g.elements().iter().all(|x| x.aux() == x.parity()) {
                    return "twisted S5".into();
                }
                continue;
            }
            return name.into();
        }
    }
    for (name, reference) in [("S4xC2", s4_times_c2()), ("(C5:C4)xC2", c5c4_times_c2())] {
        if reference.fingerprint() == fp {
            return name.into();
        }
    }
    format!("order {} ab{:?}", fp.order, fp.abelian_invariants)
}

/// Runs every exclusion test on every conjugacy class of subgroups of `Aut(X)`.
pub fn classify_admissible() -> Result<Classification, RigidityError> {
    let ambient = aut_x6()?;
    let s4c2 = s4_times_c2();
    let f40 = c5c4_times_c2();
    let classes = subgroups_up_to_conjugacy(&ambient)?;
    let form = x6();
    let verdicts: Vec<Result<AdmissibilityVerdict, RigidityError>> = par::map(&classes, |g| {
        let rank = invariant_rank(&d5_model(g, "")?);
        let in_s4xc2 = is_subconjugate(g, &s4c2, &ambient);
        let in_c5c4xc2 = is_subconjugate(g, &f40, &ambient);
        let signature = decomposition_signature(g, &form)?.verdict;
        let excluded_by_signature = signature == Verdict::Excluded;
        let mut reasons = Vec::new();
        if rank > 0 {
            reasons.push(format!("invariant lattice vector (rank {rank})"));
        }
        if in_s4xc2 {
            reasons.push("subconjugate to S4xC2".to_string());
        }
        if in_c5c4xc2 {
            reasons.push("subconjugate to (C5:C4)xC2".to_string());
        }
        if excluded_by_signature {
            reasons.push("decomposition signature excluded".to_string());
        }
        Ok(AdmissibilityVerdict {
            label: group_label(g),
            order: g.order(),
            fingerprint: g.fingerprint(),
            generators: g.generators().to_vec(),
            d5_invariant_rank: rank,
            in_s4xc2,
            in_c5c4xc2,
            excluded_by_signature,
            signature,
            admissible: reasons.is_empty(),
            reason: (!reasons.is_empty()).then(|| reasons.join("; ")),
        })
    });
    let mut verdicts = verdicts.into_iter().collect::<Result<Vec<_>, _>>()?;
    verdicts.sort_by(|a, b| (a.order, &a.fingerprint, &a.generators).cmp(&(b.order, &b.fingerprint, &b.generators)));
    let mut admissible_labels: Vec<String> =
        verdicts.iter().filter(|v| v.admissible).map(|v| v.label.clone()).collect();
    admissible_labels.sort();
    let expected = ["A5xC2", "S5xC2", "twisted S5"];
    let mut discrepancies = Vec::new();
    for l in &admissible_labels {
        if !expected.contains(&l.as_str()) {
            discrepancies.push(format!("unexpected admissible class {l}"));
        }
    }
    for e in expected {
        let hits = admissible_labels.iter().filter(|l| *l == e).count();
        if hits != 1 {
            discrepancies.push(format!("{e} admissible {hits} times, expected once"));
        }
    }
    Ok(Classification {
        ambient_order: ambient.order(),
        class_count: classes.len(),
        verdicts,
        admissible_labels,
        discrepancies,
    })
}
