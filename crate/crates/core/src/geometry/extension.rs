use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::{hyperplane_section, GeometryError, IgusaModel, SectionModel};
use crate::algebra::{proportional_mod, LinearForm, Matrix, MatrixQ, Rational};
use crate::config::{build_incidence, configuration_automorphisms, induced_from_s6, ConfigAut, PairPartition};
use crate::groups::{symmetric_group, FiniteGroup, SignedPerm};
use crate::par;

fn all_quadruples_span(points: &[Vec<Rational>]) -> bool {
    let k = points.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let cols = [&points[a], &points[b], &points[c], &points[d]].map(|p| p.clone());
                    if Matrix::from_columns(&cols).expect("4 x 4").rank() < 4 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lexicographically first 5 nodes with every 4 of them spanning `P³`.
fn general_frame(points: &[Vec<Rational>]) -> Option<[usize; 5]> {
    let n = points.len();
    let mut idx = [0, 1, 2, 3, 4];
    loop {
        let chosen: Vec<Vec<Rational>> = idx.iter().map(|&i| points[i].clone()).collect();
        if all_quadruples_span(&chosen) {
            return Some(idx);
        }
        // next 5-combination
        let mut i = 5;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - 5 + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..5 {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `[λ₁p₁ … λ₄p₄]` with `Σλᵢpᵢ = p₅`; `None` unless all `λᵢ ≠ 0`.
fn frame_matrix(p: &[Vec<Rational>]) -> Option<MatrixQ> {
    let base = Matrix::from_columns(&p[..4]).ok()?;
    let lambda = base.solve(&p[4])?;
    if lambda.iter().any(Zero::is_zero) {
        return None;
    }
    let cols: Vec<Vec<Rational>> =
        p[..4].iter().zip(&lambda).map(|(v, l)| v.iter().map(|x| x * l).collect()).collect();
    Matrix::from_columns(&cols).ok()
}

fn proportional(u: &[Rational], v: &[Rational]) -> bool {
    !u.iter().all(Zero::is_zero)
        && Matrix::from_columns(&[u.to_vec(), v.to_vec()]).expect("2 columns").rank() == 1
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionResult {
    pub count: usize,
    pub frame: Vec<PairPartition>,
    /// Automorphisms whose 5-point projectivity maps all 15 nodes correctly.
    pub node_compatible: usize,
    /// Every node-compatible projectivity also maps the quartic to a multiple of itself.
    pub quartic_preserved: bool,
    /// The S₆ elements inducing the extending automorphisms, sorted.
    pub extending: Vec<SignedPerm>,
}

/// Counts configuration automorphisms that are induced by a projectivity of
/// `P³` preserving the section and its nodes.
pub fn projectivity_extension_count(
    m: &IgusaModel,
    form: &LinearForm<Rational>,
) -> Result<ExtensionResult, GeometryError> {
    let s = hyperplane_section(m, form)?;
    let inc = build_incidence();
    let auts = configuration_automorphisms(&inc);
    let points: Vec<Vec<Rational>> = inc
        .lines
        .iter()
        .map(|a| s.node(a).expect("one node per line").chart_point.to_rationals())
        .collect();
    let frame = general_frame(&points).ok_or(GeometryError::NoGeneralFrame)?;
    let src: Vec<Vec<Rational>> = frame.iter().map(|&i| points[i].clone()).collect();
    let src_inv = frame_matrix(&src).and_then(|a| a.inverse()).ok_or(GeometryError::NoGeneralFrame)?;

    let outcomes: Vec<(bool, bool)> = par::map(&auts.elements, |g| {
        let dst: Vec<Vec<Rational>> = frame.iter().map(|&i| points[g.lines[i]].clone()).collect();
        let Some(a_dst) = frame_matrix(&dst) else { return (false, false) };
        let mmat = a_dst.mul(&src_inv).expect("4 x 4");
        let nodes_ok = (0..points.len())
            .all(|i| proportional(&mmat.mul_vec(&points[i]).expect("4"), &points[g.lines[i]]));
        if !nodes_ok {
            return (false, false);
        }
        let moved = s.surface.substitute_linear(&mmat);
        (true, moved.proportionality(&s.surface).is_some())
    });
    let node_compatible = outcomes.iter().filter(|o| o.0).count();
    let count = outcomes.iter().filter(|o| o.0 && o.1).count();

    let by_aut: HashMap<ConfigAut, SignedPerm> = symmetric_group(6)
        .elements()
        .iter()
        .map(|x| (induced_from_s6(&inc, x).expect("unsigned"), x.clone()))
        .collect();
    let mut extending: Vec<SignedPerm> = auts
        .elements
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| o.0 && o.1)
        .map(|(g, _)| by_aut[g].clone())
        .collect();
    extending.sort();
    Ok(ExtensionResult {
        count,
        frame: frame.iter().map(|&i| inc.lines[i]).collect(),
        node_compatible,
        quartic_preserved: count == node_compatible,
        extending,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeOrbits {
    pub orbits: Vec<Vec<PairPartition>>,
    pub has_fixed_node: bool,
    /// For each orbit of size 5: whether every 4 of its nodes span `P³`.
    pub general_position: Vec<bool>,
}

/// Orbits of a hyperplane-stabilizing subgroup of S₆ on the section's nodes.
pub fn node_orbits(s: &SectionModel, g: &FiniteGroup) -> Result<NodeOrbits, GeometryError> {
    let s1 = LinearForm::sum_form(s.form.nvars());
    for x in g.generators() {
        if !x.has_unit_signs() || proportional_mod(&x.act_on_form(&s.form), &s.form, &s1).is_none() {
            return Err(GeometryError::NotStabilized(x.to_string()));
        }
    }
    let labels: Vec<PairPartition> = s.nodes.iter().map(|n| n.label).collect();
    let mut orbit_of: Vec<Option<usize>> = vec![None; labels.len()];
    let mut orbits: Vec<Vec<PairPartition>> = Vec::new();
    for start in 0..labels.len() {
        if orbit_of[start].is_some() {
            continue;
        }
        let k = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = Some(k);
        let mut i = 0;
        while i < members.len() {
            let a = labels[members[i]];
            for x in g.generators() {
                let b = a.relabel(&x.images());
                let j = labels.iter().position(|l| *l == b).expect("labels closed under S6");
                if orbit_of[j].is_none() {
                    orbit_of[j] = Some(k);
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        orbits.push(members.iter().map(|&j| labels[j]).collect());
    }
    let general_position = orbits
        .iter()
        .filter(|o| o.len() == 5)
        .map(|o| {
            let pts: Vec<Vec<Rational>> =
                o.iter().map(|a| s.node(a).expect("node").chart_point.to_rationals()).collect();
            all_quadruples_span(&pts)
        })
        .collect();
    Ok(NodeOrbits { has_fixed_node: orbits.iter().any(|o| o.len() == 1), orbits, general_position })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::geometry::build_igusa;
    use crate::groups::hyperplane_stabilizer;

    fn form(c: &[i64]) -> LinearForm<Rational> {
        LinearForm::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn extension_matches_stabilizer_x6() {
        let m = build_igusa();
        let l = form(&[0, 0, 0, 0, 0, 1]);
        let r = projectivity_extension_count(&m, &l).unwrap();
        assert_eq!(r.count, 120);
        assert!(r.quartic_preserved);
        let stab = hyperplane_stabilizer(&l.to_qomega()).unwrap();
        assert_eq!(r.extending, stab.element_set());
        assert!(r.extending.contains(&SignedPerm::identity(6)));
    }

    #[test]
    fn c5_orbits_on_x6_section() {
        let m = build_igusa();
        let s = hyperplane_section(&m, &form(&[0, 0, 0, 0, 0, 1])).unwrap();
        let c5 = FiniteGroup::closure(6, &[SignedPerm::from_cycles(6, &[&[1, 2, 3, 4, 5]]).unwrap()]).unwrap();
        let o = node_orbits(&s, &c5).unwrap();
        assert_eq!(o.orbits.iter().map(Vec::len).collect::<Vec<_>>(), vec![5, 5, 5]);
        assert_eq!(o.general_position, vec![true; 3]);
        assert!(!o.has_fixed_node);

        let s5 = hyperplane_stabilizer(&form(&[0, 0, 0, 0, 0, 1]).to_qomega()).unwrap();
        let o = node_orbits(&s, &s5).unwrap();
        assert_eq!(o.orbits.len(), 1);
        assert!(!o.has_fixed_node);

        let bad = FiniteGroup::closure(6, &[SignedPerm::from_cycles(6, &[&[5, 6]]).unwrap()]).unwrap();
        assert!(node_orbits(&s, &bad).is_err());
    }
}
