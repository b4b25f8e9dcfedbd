use std::fmt;


use super::{AlgebraError, Field, Rational};

/// Dense row-major matrix over an exact field. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

pub type MatrixQ = Matrix<Rational>;

impl<K: Field> Matrix<K> {
    pub fn new(rows: usize, cols: usize, entries: Vec<K>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::Shape {
                rows,
                cols,
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from rows; `cols` is only consulted when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<K>>, cols: usize) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(cols, Vec::len);
        let nrows = rows.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Dimension("ragged rows".into()));
        }
        Self::new(nrows, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(columns: &[Vec<K>]) -> Result<Self, AlgebraError> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(AlgebraError::Dimension("ragged columns".into()));
        }
        let mut entries = Vec::with_capacity(rows * columns.len());
        for r in 0..rows {
            for c in columns {
                entries.push(c[r].clone());
            }
        }
        Self::new(rows, columns.len(), entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = K::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<K> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[K] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = K::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * other.get(k, c).clone();
                }
                entries.push(acc);
            }
        }
        Self::new(self.rows, other.cols, entries)
    }

    pub fn mul_vec(&self, v: &[K]) -> Result<Vec<K>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(K::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(AlgebraError::Dimension("shape mismatch in subtraction".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(AlgebraError::Dimension("column mismatch in vstack".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self::new(self.rows + other.rows, cols, entries)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the echelon rows and
    /// the pivot column of each nonzero row.
    fn echelon(&self) -> (Vec<Vec<K>>, Vec<usize>) {
        let mut m = self.to_rows();
        for row in m.iter_mut() {
            K::clear_denominators(row);
        }
        let mut pivots = Vec::new();
        let mut prev = K::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let (top, bottom) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom.iter_mut() {
                let lead = row[c].clone();
                for j in c + 1..self.cols {
                    let v = pivot_row[c].clone() * row[j].clone() - lead.clone() * pivot_row[j].clone();
                    row[j] = v / prev.clone();
                }
                row[c] = K::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(pivots.len());
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the right null space, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let (m, pivots) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero(); self.cols];
                v[f] = K::one();
                back_substitute(&m, &pivots, &mut v);
                v
            })
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Vec::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            aug.extend(self.row(r).iter().cloned());
            aug.push(b[r].clone());
        }
        let aug = Matrix { rows: self.rows, cols: self.cols + 1, entries: aug };
        let (m, pivots) = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut v = vec![K::zero(); self.cols + 1];
        v[self.cols] = -K::one();
        back_substitute(&m, &pivots, &mut v);
        v.truncate(self.cols);
        Some(v)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![K::zero(); n];
            e[i] = K::one();
            cols.push(self.solve(&e)?);
        }
        if self.rank() != n {
            return None;
        }
        Matrix::from_columns(&cols).ok()
    }
}

/// Fills the pivot coordinates of `v` so that every echelon row annihilates it.
fn back_substitute<K: Field>(m: &[Vec<K>], pivots: &[usize], v: &mut [K]) {
    for (k, &p) in pivots.iter().enumerate().rev() {
        let row = &m[k];
        let mut acc = K::zero();
        for j in p + 1..row.len() {
            if !row[j].is_zero() && !v[j].is_zero() {
                acc = acc + row[j].clone() * v[j].clone();
            }
        }
        v[p] = -acc / row[p].clone();
    }
}

impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, QOmega};
    use proptest::prelude::*;
    use num_traits::Zero;

    fn mq(rows: &[&[i64]]) -> MatrixQ {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), cols)
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatrixQ::identity(3).rank(), 3);
        assert_eq!(MatrixQ::zeros(2, 2).rank(), 0);
        assert_eq!(mq(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(MatrixQ::identity(4).kernel_basis().is_empty());
        let k = mq(&[&[1, 1, 1, 1, 1]]).kernel_basis();
        assert_eq!(k.len(), 4);
        for v in &k {
            assert_eq!(v.iter().fold(int(0), |a, b| a + b), int(0));
        }
        assert_eq!(MatrixQ::zeros(2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn shape_is_checked() {
        assert!(MatrixQ::new(2, 2, vec![int(1)]).is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_rows(
            vec![vec![int(2), int(1)], vec![rat(1, 2), int(3)]],
            2,
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), MatrixQ::identity(2));
        let x = m.solve(&[int(1), int(0)]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![int(1), int(0)]);
        assert!(mq(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(mq(&[&[1, 2], &[2, 4]]).solve(&[int(1), int(0)]).is_none());
    }

    #[test]
    fn works_over_eisenstein_field() {
        let w = QOmega::omega();
        let one = QOmega::from(int(1));
        // rows (1, ω) and (ω², 1) are proportional: ω²·(1, ω) = (ω², 1)
        let m = Matrix::from_rows(
            vec![vec![one.clone(), w.clone()], vec![w.clone() * w.clone(), one]],
            2,
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(|x| x.is_zero()));
    }

    fn small_matrix() -> impl Strategy<Value = MatrixQ> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..4, 1i64..3), r * c).prop_map(move |v| {
                MatrixQ::new(r, c, v.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            }
            // kernel vectors are independent
            if !k.is_empty() {
                let km = MatrixQ::from_rows(k.clone(), m.cols()).unwrap();
                prop_assert_eq!(km.rank(), k.len());
            }
        }

        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
