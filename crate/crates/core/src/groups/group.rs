use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use super::{GroupError, SignedPerm};

/// A finite group of signed permutations, stored as its full element list.
///
/// Elements are in breadth-first closure order, which is deterministic for a
/// given generator list.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    elements: Vec<SignedPerm>,
    generators: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    classes: OnceLock<ConjugacyClasses>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.element_set() == other.element_set()
    }
}

impl Eq for FiniteGroup {}

/// Isomorphism invariants used to certify group labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// Elementary divisors of the abelianization, ascending.
    pub abelian_invariants: Vec<u64>,
    pub class_count: usize,
    pub order_histogram: BTreeMap<u64, usize>,
}

/// Conjugacy classes as lists of element indices.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl FiniteGroup {
    /// Subgroup generated by `gens` on `n` points.
    pub fn closure(n: usize, gens: &[SignedPerm]) -> Result<Self, GroupError> {
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(GroupError::Dimension(format!("generator {g} is not on {n} points")));
        }
        let id = SignedPerm::identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = elements[i].compose(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let mut generators: Vec<SignedPerm> = Vec::new();
        for g in gens {
            if !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        Ok(Self { n, elements, generators, index, classes: OnceLock::new() })
    }

    /// Group with the given element set, with a short generating set chosen
    /// greedily in sorted order. Fails if the set is not closed.
    pub fn from_element_set(n: usize, elements: &[SignedPerm]) -> Result<Self, GroupError> {
        let mut sorted = elements.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut gens: Vec<SignedPerm> = Vec::new();
        let mut current = Self::trivial(n);
        for g in &sorted {
            if g.n() != n {
                return Err(GroupError::Dimension(format!("element {g} is not on {n} points")));
            }
            if !current.contains(g) {
                gens.push(g.clone());
                current = Self::closure(n, &gens)?;
                if current.order() > sorted.len() {
                    return Err(GroupError::NotAPermutation(
                        "element set is not closed under composition".into(),
                    ));
                }
            }
        }
        if current.order() != sorted.len() {
            return Err(GroupError::NotAPermutation("element set is not closed under composition".into()));
        }
        Ok(current)
    }

    pub fn trivial(n: usize) -> Self {
        Self::closure(n, &[]).expect("identity only")
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    pub fn contains(&self, g: &SignedPerm) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &SignedPerm) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Sorted element list, independent of generator choice.
    pub fn element_set(&self) -> Vec<SignedPerm> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn conjugate_by(&self, x: &SignedPerm) -> Self {
        let gens: Vec<SignedPerm> = self.generators.iter().map(|g| g.conjugate_by(x)).collect();
        Self::closure(self.n, &gens).expect("same degree")
    }

    /// Image under forgetting all signs.
    pub fn permutation_image(&self) -> Self {
        let gens: Vec<SignedPerm> = self.generators.iter().map(SignedPerm::permutation_part).collect();
        Self::closure(self.n, &gens).expect("same degree")
    }

    /// Verifies closure under composition and inverses.
    pub fn is_closed(&self) -> bool {
        let id = SignedPerm::identity(self.n);
        self.contains(&id)
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.generators.iter().all(|g| self.contains(&a.compose(g)))
            })
            && self
                .elements
                .iter()
                .all(|a| self.elements.iter().all(|b| self.contains(&a.compose(b))))
    }

    /// Conjugacy classes sorted by (size, smallest element), cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let g = &self.elements[i];
            let mut members: Vec<usize> = self
                .elements
                .iter()
                .map(|x| self.index[&g.conjugate_by(x)])
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            members.sort_by(|a, b| self.elements[*a].cmp(&self.elements[*b]));
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        // sort by (size, smallest element)
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| {
            classes[a]
                .len()
                .cmp(&classes[b].len())
                .then_with(|| self.elements[classes[a][0]].cmp(&self.elements[classes[b][0]]))
        });
        let classes: Vec<Vec<usize>> = order.iter().map(|&k| classes[k].clone()).collect();
        for (k, c) in classes.iter().enumerate() {
            for &m in c {
                class_of[m] = k;
            }
        }
        ConjugacyClasses { classes, class_of }
    }

    /// `[G, G]`: normal closure of the commutators of generators.
    pub fn commutator_subgroup(&self) -> Self {
        let mut gens: Vec<SignedPerm> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut k = Self::closure(self.n, &gens).expect("same degree");
        loop {
            let extra: Vec<SignedPerm> = self
                .generators
                .iter()
                .flat_map(|g| k.generators.iter().map(move |h| h.conjugate_by(g)))
                .filter(|c| !k.contains(c))
                .collect();
            if extra.is_empty() {
                return k;
            }
            gens.extend(extra);
            k = Self::closure(self.n, &gens).expect("same degree");
        }
    }

    /// Coset index of every element modulo a normal subgroup, with the coset
    /// representatives in first-seen order.
    pub(crate) fn cosets(&self, normal: &Self) -> (Vec<usize>, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for i in 0..self.order() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(i);
            for k in normal.elements() {
                coset_of[self.index[&self.elements[i].compose(k)]] = c;
            }
        }
        (coset_of, reps)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut order_histogram = BTreeMap::new();
        for g in &self.elements {
            *order_histogram.entry(g.order()).or_insert(0) += 1;
        }
        Fingerprint {
            order: self.order(),
            abelian_invariants: self.abelian_invariants(),
            class_count: self.conjugacy_classes().len(),
            order_histogram,
        }
    }

    /// Order of each coset `gK` in `G/K`.
    pub(crate) fn quotient_orders(&self, normal: &Self) -> (Vec<usize>, Vec<usize>, Vec<u64>) {
        let (coset_of, reps) = self.cosets(normal);
        let orders = reps
            .iter()
            .map(|&r| {
                let g = &self.elements[r];
                let mut x = g.clone();
                let mut k = 1;
                while !normal.contains(&x) {
                    x = x.compose(g);
                    k += 1;
                }
                k
            })
            .collect();
        (coset_of, reps, orders)
    }

    /// Elementary divisors of `G/[G,G]`, e.g. `[2, 2]` for `C₂ × C₂`.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let k = self.commutator_subgroup();
        let (_, _, orders) = self.quotient_orders(&k);
        let size = orders.len() as u64;
        let mut out = Vec::new();
        for p in prime_factors(size) {
            // n_j = #{x : x^(p^j) = 1} = p^(Σ min(e_i, j))
            let mut f_prev = 0u32;
            let mut ranks = Vec::new();
            let mut j = 1;
            loop {
                let pj = p.pow(j);
                let count = orders.iter().filter(|&&o| pj % o == 0).count() as u64;
                let f = count.ilog(p);
                if f == f_prev {
                    break;
                }
                ranks.push(f - f_prev);
                f_prev = f;
                j += 1;
            }
            // ranks[j-1] = number of cyclic p-factors of order >= p^j
            for (idx, &r) in ranks.iter().enumerate() {
                let next = ranks.get(idx + 1).copied().unwrap_or(0);
                for _ in 0..(r - next) {
                    out.push(p.pow(idx as u32 + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The symmetric group on `n` points, generated by `(1 2)` and `(1 2 … n)`.
pub fn symmetric_group(n: usize) -> FiniteGroup {
    if n < 2 {
        return FiniteGroup::trivial(n);
    }
    let cycle: Vec<usize> = (1..=n).collect();
    let gens = [
        SignedPerm::from_cycles(n, &[&[1, 2]]).expect("valid"),
        SignedPerm::from_cycles(n, &[&cycle]).expect("valid"),
    ];
    FiniteGroup::closure(n, &gens).expect("same degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> SignedPerm {
        SignedPerm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(FiniteGroup::closure(6, &[cyc(6, &[&[1, 2]])]).unwrap().order(), 2);
        assert_eq!(symmetric_group(6).order(), 720);
        // twisted S₅: odd permutations flip the double-cover sign
        let twisted = FiniteGroup::closure(
            6,
            &[cyc(6, &[&[1, 2]]).with_aux(-1), cyc(6, &[&[1, 2, 3, 4, 5]])],
        )
        .unwrap();
        assert_eq!(twisted.order(), 120);
        assert!(twisted.elements().iter().all(|g| g.aux() == g.parity()));
        assert!(FiniteGroup::closure(5, &[cyc(6, &[&[1, 2]])]).is_err());
    }

    #[test]
    fn closure_is_idempotent_and_closed() {
        let g = FiniteGroup::closure(5, &[cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[3, 4, 5]])]).unwrap();
        assert!(g.is_closed());
        let again = FiniteGroup::closure(5, g.elements()).unwrap();
        assert_eq!(again.element_set(), g.element_set());
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn conjugacy_class_examples() {
        let s3 = symmetric_group(3);
        assert_eq!(s3.conjugacy_classes().sizes(), vec![1, 2, 3]);
        let c2 = FiniteGroup::closure(2, &[cyc(2, &[&[1, 2]])]).unwrap();
        assert_eq!(c2.conjugacy_classes().len(), 2);
        let s6 = symmetric_group(6);
        let s6 = s6.conjugacy_classes();
        assert_eq!(s6.len(), 11);
        assert_eq!(s6.sizes().iter().sum::<usize>(), 720);
    }

    /// Partition count of n, the number of cycle types.
    fn partitions(n: usize) -> usize {
        let mut p = vec![0usize; n + 1];
        p[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                p[m] += p[m - k];
            }
        }
        p[n]
    }

    #[test]
    fn symmetric_class_counts_match_partitions() {
        for n in 2..=6 {
            assert_eq!(symmetric_group(n).conjugacy_classes().len(), partitions(n));
        }
    }

    #[test]
    fn fingerprints() {
        let c2 = FiniteGroup::closure(2, &[cyc(2, &[&[1, 2]])]).unwrap();
        let fp = c2.fingerprint();
        assert_eq!(fp.order, 2);
        assert_eq!(fp.abelian_invariants, vec![2]);
        assert_eq!(fp.class_count, 2);
        assert_eq!(fp.order_histogram, BTreeMap::from([(1, 1), (2, 1)]));

        let s5xc2 = FiniteGroup::closure(
            6,
            &[cyc(6, &[&[1, 2]]), cyc(6, &[&[1, 2, 3, 4, 5]]), SignedPerm::galois(6)],
        )
        .unwrap();
        let fp = s5xc2.fingerprint();
        assert_eq!((fp.order, fp.abelian_invariants.clone(), fp.class_count), (240, vec![2, 2], 14));

        let c6 = FiniteGroup::closure(6, &[cyc(6, &[&[1, 2, 3], &[4, 5]])]).unwrap();
        assert_eq!(c6.abelian_invariants(), vec![2, 3]);
        let c4 = FiniteGroup::closure(4, &[cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(c4.abelian_invariants(), vec![4]);
        assert_eq!(symmetric_group(5).commutator_subgroup().order(), 60);
        assert!(symmetric_group(1).abelian_invariants().is_empty());
    }

    #[test]
    fn from_element_set_recovers_group() {
        let s4 = symmetric_group(4);
        let g = FiniteGroup::from_element_set(4, s4.elements()).unwrap();
        assert_eq!(g, s4);
        assert!(g.generators().len() <= 4);
        let bad = [SignedPerm::identity(3), SignedPerm::from_cycles(3, &[&[1, 2, 3]]).unwrap()];
        assert!(FiniteGroup::from_element_set(3, &bad).is_err());
    }
}
