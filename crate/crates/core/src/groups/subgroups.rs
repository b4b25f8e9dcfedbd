use std::collections::{BTreeMap, HashSet};

use super::{FiniteGroup, GroupError};
use crate::par;

pub const MAX_ENUMERATION_ORDER: usize = 1000;

type Bits = Vec<u64>;

/// Multiplication and conjugation tables over element indices.
struct Tables {
    order: usize,
    mul: Vec<Vec<u16>>,
    /// `conj[x][i]` is the index of `x·eᵢ·x⁻¹`.
    conj: Vec<Vec<u16>>,
}

impl Tables {
    fn new(g: &FiniteGroup) -> Self {
        let els = g.elements();
        let idx = |x: &super::SignedPerm| g.index_of(x).expect("closed") as u16;
        let mul: Vec<Vec<u16>> = par::map(els, |a| els.iter().map(|b| idx(&a.compose(b))).collect());
        let conj: Vec<Vec<u16>> = par::map(els, |x| els.iter().map(|e| idx(&e.conjugate_by(x))).collect());
        Self { order: els.len(), mul, conj }
    }

    fn words(&self) -> usize {
        self.order.div_ceil(64)
    }

    fn closure(&self, seed: &Bits, extra: usize) -> Bits {
        let mut bits = seed.clone();
        let mut members: Vec<usize> = members_of(seed);
        if !get(&bits, extra) {
            set(&mut bits, extra);
            members.push(extra);
        }
        let gens: Vec<usize> = members.clone();
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in &gens {
                let c = self.mul[a][g] as usize;
                if !get(&bits, c) {
                    set(&mut bits, c);
                    members.push(c);
                }
            }
            i += 1;
        }
        bits
    }

    fn conjugate(&self, bits: &Bits, x: usize) -> Bits {
        let mut out = vec![0u64; self.words()];
        for i in members_of(bits) {
            set(&mut out, self.conj[x][i] as usize);
        }
        out
    }

    /// Smallest conjugate under the lexicographic order on word vectors.
    fn canonical(&self, bits: &Bits) -> Bits {
        (0..self.order).map(|x| self.conjugate(bits, x)).min().expect("nonempty group")
    }
}

fn get(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn members_of(bits: &Bits) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            let t = x.trailing_zeros() as usize;
            out.push(w * 64 + t);
            x &= x - 1;
        }
    }
    out
}

/// One representative per conjugacy class of subgroups, sorted by order and
/// then by canonical key.
///
/// Layered search: every subgroup is `⟨H, g⟩` for a maximal subgroup `H`,
/// so extending class representatives by one element at a time is
/// exhaustive.
pub fn subgroups_up_to_conjugacy(g: &FiniteGroup) -> Result<Vec<FiniteGroup>, GroupError> {
    if g.order() > MAX_ENUMERATION_ORDER {
        return Err(GroupError::OrderBound { order: g.order(), bound: MAX_ENUMERATION_ORDER });
    }
    let t = Tables::new(g);
    let identity = g
        .index_of(&super::SignedPerm::identity(g.degree()))
        .expect("identity");
    let mut trivial = vec![0u64; t.words()];
    set(&mut trivial, identity);

    let mut classes: BTreeMap<Bits, Bits> = BTreeMap::new();
    classes.insert(trivial.clone(), trivial.clone());
    let mut seen_exact: HashSet<Bits> = HashSet::from([trivial.clone()]);
    let mut layer = vec![trivial];

    while !layer.is_empty() {
        // ⟨H, g⟩ for one g per right coset Hg
        let candidates: Vec<Vec<Bits>> = par::map(&layer, |h| {
            let mut covered = h.clone();
            let mut out = Vec::new();
            let hs = members_of(h);
            for x in 0..t.order {
                if get(&covered, x) {
                    continue;
                }
                for &y in &hs {
                    set(&mut covered, t.mul[y][x] as usize);
                }
                out.push(t.closure(h, x));
            }
            out
        });
        let mut fresh: Vec<Bits> = Vec::new();
        for c in candidates.into_iter().flatten() {
            if seen_exact.insert(c.clone()) {
                fresh.push(c);
            }
        }
        let keyed = par::map(&fresh, |c| t.canonical(c));
        let mut next = Vec::new();
        for key in keyed {
            if !classes.contains_key(&key) {
                classes.insert(key.clone(), key.clone());
                // conjugates of a known class reach the same key; remember them as seen
                next.push(key);
            }
        }
        for k in &next {
            seen_exact.insert(k.clone());
        }
        layer = next;
    }

    let mut reps: Vec<(usize, Bits)> =
        classes.into_keys().map(|k| (members_of(&k).len(), k)).collect();
    reps.sort();
    reps.into_iter()
        .map(|(_, bits)| {
            let els: Vec<_> = members_of(&bits).into_iter().map(|i| g.elements()[i].clone()).collect();
            FiniteGroup::from_element_set(g.degree(), &els)
        })
        .collect()
}

/// Whether some `ambient`-conjugate of `h` lies inside `k`.
pub fn is_subconjugate(h: &FiniteGroup, k: &FiniteGroup, ambient: &FiniteGroup) -> bool {
    if k.order() % h.order() != 0 {
        return false;
    }
    let hits = par::filter(ambient.elements(), |x| {
        h.generators().iter().all(|e| k.contains(&e.conjugate_by(x)))
    });
    !hits.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{symmetric_group, SignedPerm};

    fn cyc(n: usize, cycles: &[&[usize]]) -> SignedPerm {
        SignedPerm::from_cycles(n, cycles).unwrap()
    }

    fn orders(list: &[FiniteGroup]) -> Vec<usize> {
        list.iter().map(FiniteGroup::order).collect()
    }

    #[test]
    fn small_groups() {
        assert_eq!(orders(&subgroups_up_to_conjugacy(&symmetric_group(3)).unwrap()), vec![1, 2, 3, 6]);
        let c4 = FiniteGroup::closure(4, &[cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(orders(&subgroups_up_to_conjugacy(&c4).unwrap()), vec![1, 2, 4]);
        // S₄ has 11 classes of subgroups
        assert_eq!(subgroups_up_to_conjugacy(&symmetric_group(4)).unwrap().len(), 11);
    }

    #[test]
    fn s5_has_19_classes() {
        let s5 = symmetric_group(5);
        let subs = subgroups_up_to_conjugacy(&s5).unwrap();
        assert_eq!(subs.len(), 19);
        assert_eq!(orders(&subs).iter().filter(|&&o| o == 60).count(), 1);
        for s in &subs {
            assert!(s.is_closed() && s.is_subgroup_of(&s5));
        }
    }

    #[test]
    fn order_bound() {
        let s7 = symmetric_group(7);
        assert_eq!(
            subgroups_up_to_conjugacy(&s7).unwrap_err(),
            GroupError::OrderBound { order: 5040, bound: 1000 }
        );
    }

    #[test]
    fn subconjugacy() {
        let s5 = symmetric_group(5);
        let s4 = FiniteGroup::closure(5, &[cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4]])]).unwrap();
        let c2 = FiniteGroup::closure(5, &[cyc(5, &[&[4, 5]])]).unwrap();
        let c2_double = FiniteGroup::closure(5, &[cyc(5, &[&[1, 2], &[3, 4]])]).unwrap();
        let c3 = FiniteGroup::closure(5, &[cyc(5, &[&[3, 4, 5]])]).unwrap();
        assert!(is_subconjugate(&c2, &s4, &s5));
        assert!(is_subconjugate(&c3, &s4, &s5));
        assert!(!is_subconjugate(&s5, &s4, &s5));
        // a double transposition is not conjugate to a transposition
        let c2_single = FiniteGroup::closure(5, &[cyc(5, &[&[1, 2]])]).unwrap();
        assert!(!is_subconjugate(&c2_double, &c2_single, &s5));
    }
}
