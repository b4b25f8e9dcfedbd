use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ConfigError;
use crate::algebra::{int, Rational};
use crate::poly::LinearParam;

/// Three disjoint pairs covering `{1..6}`, stored 1-based and sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PairPartition {
    pairs: [[u8; 2]; 3],
}

/// Two disjoint triples covering `{1..6}`; the first triple contains 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TriplePartition {
    triples: [[u8; 3]; 2],
}

fn is_cover(mut letters: Vec<u8>) -> bool {
    letters.sort_unstable();
    letters == [1, 2, 3, 4, 5, 6]
}

impl PairPartition {
    pub fn new(pairs: [[u8; 2]; 3]) -> Result<Self, ConfigError> {
        if !is_cover(pairs.concat()) {
            return Err(ConfigError::Parse(format!("{pairs:?}")));
        }
        let mut pairs = pairs.map(|mut p| {
            p.sort_unstable();
            p
        });
        pairs.sort_unstable();
        Ok(Self { pairs })
    }

    /// All 15, in lexicographic order.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for b in 2..=6u8 {
            let rest: Vec<u8> = (2..=6).filter(|&x| x != b).collect();
            for &d in &rest[1..] {
                let last: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != d).collect();
                out.push(Self::new([[1, b], [rest[0], d], [last[0], last[1]]]).expect("valid"));
            }
        }
        out.sort();
        out
    }

    pub fn pairs(&self) -> [[u8; 2]; 3] {
        self.pairs
    }

    /// `x_a = x_b = t`, `x_c = x_d = u`, `x_e = x_f = −t−u`.
    pub fn line_param(&self) -> LinearParam {
        let mut t = vec![Rational::from(int(0)); 6];
        let mut u = t.clone();
        let [[a, b], [c, d], [e, f]] = self.pairs.map(|p| p.map(|x| x as usize - 1));
        t[a] = int(1);
        t[b] = int(1);
        u[c] = int(1);
        u[d] = int(1);
        t[e] = int(-1);
        t[f] = int(-1);
        u[e] = int(-1);
        u[f] = int(-1);
        LinearParam::from_columns(&[t, u]).expect("rank 2")
    }

    /// Relabels letters by `map` (0-based images of 0-based letters).
    pub fn relabel(&self, map: &[usize]) -> Self {
        Self::new(self.pairs.map(|p| p.map(|x| map[x as usize - 1] as u8 + 1))).expect("bijection")
    }

    /// Each pair of `self` meets each triple of `beta` exactly once.
    pub fn is_transversal_to(&self, beta: &TriplePartition) -> bool {
        self.pairs.iter().all(|p| beta.triples.iter().all(|t| p.iter().filter(|x| t.contains(x)).count() == 1))
    }
}

impl TriplePartition {
    pub fn new(triples: [[u8; 3]; 2]) -> Result<Self, ConfigError> {
        if !is_cover(triples.concat()) {
            return Err(ConfigError::Parse(format!("{triples:?}")));
        }
        let mut triples = triples.map(|mut t| {
            t.sort_unstable();
            t
        });
        triples.sort_unstable();
        Ok(Self { triples })
    }

    /// All 10, in lexicographic order.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for b in 2..=6u8 {
            for c in b + 1..=6 {
                let rest: Vec<u8> = (2..=6).filter(|&x| x != b && x != c).collect();
                out.push(Self::new([[1, b, c], [rest[0], rest[1], rest[2]]]).expect("valid"));
            }
        }
        out
    }

    pub fn triples(&self) -> [[u8; 3]; 2] {
        self.triples
    }

    /// Coefficients of `x_a + x_b + x_c` for the triple containing 1.
    pub fn hyperplane_coeffs(&self) -> Vec<Rational> {
        let mut c = vec![int(0); 6];
        for &x in &self.triples[0] {
            c[x as usize - 1] = int(1);
        }
        c
    }

    pub fn relabel(&self, map: &[usize]) -> Self {
        Self::new(self.triples.map(|t| t.map(|x| map[x as usize - 1] as u8 + 1))).expect("bijection")
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|p| format!("{}{}", p[0], p[1])).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Display for TriplePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.triples;
        write!(f, "{}{}{}|{}{}{}", a[0], a[1], a[2], b[0], b[1], b[2])
    }
}

fn parse_blocks<const K: usize>(s: &str) -> Result<Vec<[u8; K]>, ConfigError> {
    let err = || ConfigError::Parse(s.to_string());
    s.split('|')
        .map(|block| {
            let digits: Vec<u8> = block
                .trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(err))
                .collect::<Result<_, _>>()?;
            digits.try_into().map_err(|_| err())
        })
        .collect()
}

impl FromStr for PairPartition {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = parse_blocks::<2>(s)?;
        let pairs: [[u8; 2]; 3] = blocks.try_into().map_err(|_| ConfigError::Parse(s.into()))?;
        Self::new(pairs).map_err(|_| ConfigError::Parse(s.into()))
    }
}

impl FromStr for TriplePartition {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = parse_blocks::<3>(s)?;
        let triples: [[u8; 3]; 2] = blocks.try_into().map_err(|_| ConfigError::Parse(s.into()))?;
        Self::new(triples).map_err(|_| ConfigError::Parse(s.into()))
    }
}

impl Serialize for PairPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for TriplePartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent count: all set partitions of {1..6} by block shape.
    fn brute_partitions(block: usize) -> usize {
        let mut seen = HashSet::new();
        for perm in permutations(6) {
            let mut blocks: Vec<Vec<usize>> = perm.chunks(block).map(|c| {
                let mut c = c.to_vec();
                c.sort();
                c
            }).collect();
            blocks.sort();
            seen.insert(blocks);
        }
        seen.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn counts() {
        assert_eq!(PairPartition::all().len(), 15);
        assert_eq!(TriplePartition::all().len(), 10);
        assert_eq!(brute_partitions(2), 15);
        assert_eq!(brute_partitions(3), 10);
        let set: HashSet<_> = PairPartition::all().into_iter().collect();
        assert_eq!(set.len(), 15);
    }

    #[test]
    fn parse_and_display() {
        let a: PairPartition = "56|21|34".parse().unwrap();
        assert_eq!(a.to_string(), "12|34|56");
        let b: TriplePartition = "456|132".parse().unwrap();
        assert_eq!(b.to_string(), "123|456");
        assert!("12|34".parse::<PairPartition>().is_err());
        assert!("12|33|56".parse::<PairPartition>().is_err());
        assert!("1234|56".parse::<TriplePartition>().is_err());
        assert_eq!(PairPartition::all()[0].to_string(), "12|34|56");
        assert_eq!(serde_json::to_string(&b).unwrap(), "\"123|456\"");
    }

    #[test]
    fn relabel_by_transposition() {
        let swap = [1, 0, 2, 3, 4, 5];
        let a: PairPartition = "12|34|56".parse().unwrap();
        assert_eq!(a.relabel(&swap), a);
        let b: PairPartition = "13|24|56".parse().unwrap();
        assert_eq!(b.relabel(&swap).to_string(), "14|23|56");
    }

    #[test]
    fn line_param_shape() {
        let a: PairPartition = "12|34|56".parse().unwrap();
        let x = a.line_param().apply(&[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1), int(2), int(2), int(-3), int(-3)]);
    }
}
