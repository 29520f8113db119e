use alloc::vec;
use alloc::vec::Vec;

use super::modp::Fp;

/// Dense matrix over the prime field `F_p`, row-major, entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    field: Fp,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        ModMatrix { rows, cols, field: Fp::new(p), data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry.
    pub fn from_rows(rows: &[Vec<i64>], p: u64) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols, p);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = m.field.from_i64(v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u64 {
        self.field.p()
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.p());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field.p());
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).unwrap();
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, self.data[r * cols + j]);
                    self.data[i * cols + j] = f.sub(self.data[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Rank over `F_p`. The input is left untouched.
pub fn rank_mod_p(m: &ModMatrix) -> usize {
    let mut e = Echelon::new(m.cols, m.prime());
    for i in 0..m.rows {
        e.insert(m.row(i).to_vec());
        if e.rank() == m.cols {
            break;
        }
    }
    e.rank()
}

/// Basis of the right nullspace `{v : m v = 0}`; its size is `cols - rank`.
pub fn nullspace_mod_p(m: &ModMatrix) -> Vec<Vec<u64>> {
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let f = r.field;
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; m.cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, free));
        }
        basis.push(v);
    }
    basis
}

/// Incrementally maintained row-echelon basis of a subspace of `F_p^n`.
///
/// Rows are stored with a unit pivot; an incoming vector is reduced by the
/// stored rows in insertion order.
#[derive(Debug, Clone)]
pub struct Echelon {
    len: usize,
    field: Fp,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(len: usize, p: u64) -> Self {
        Echelon { len, field: Fp::new(p), rows: Vec::new(), pivots: Vec::new(), pivot_of: vec![None; len] }
    }

    pub fn prime(&self) -> u64 {
        self.field.p()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of[col].is_some()
    }

    /// Reduces `v` in place against the stored rows.
    pub fn reduce(&self, v: &mut [u64]) {
        let f = self.field;
        let p = f.p();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = v[c];
            if x == 0 {
                continue;
            }
            let m = p - x;
            for (vj, &rj) in v.iter_mut().zip(row.iter()) {
                if rj != 0 {
                    *vj = (*vj + m * rj) % p;
                }
            }
        }
    }

    /// Inserts `v`; returns `true` when it was independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.len);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[c]).unwrap();
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.pivot_of[c] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    /// Inserts a sparse vector given as `(index, value)` pairs (values already reduced).
    pub fn insert_sparse(&mut self, entries: &[(usize, u64)]) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = vec![0; self.len];
        for &(i, x) in entries {
            v[i] = self.field.add(v[i], x);
        }
        self.insert(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 101;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_mod_p(&ModMatrix::zeros(0, 0, P)), 0);
        assert_eq!(rank_mod_p(&ModMatrix::identity(3, P)), 3);
        let m = ModMatrix::from_rows(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8]], P);
        assert_eq!(rank_mod_p(&m), 1);
        assert_eq!(m.get(1, 3), 8);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace_mod_p(&ModMatrix::identity(2, P)).is_empty());
        assert_eq!(nullspace_mod_p(&ModMatrix::zeros(2, 3, P)).len(), 3);
        let m = ModMatrix::from_rows(&[vec![1, 1, 0]], 7);
        let ns = nullspace_mod_p(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn echelon_rejects_dependent_vectors() {
        let mut e = Echelon::new(3, P);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(!e.insert(vec![2, 4, 6]));
        assert!(e.insert(vec![0, 1, 1]));
        assert!(e.insert_sparse(&[(2, 5)]));
        assert!(e.is_full());
        assert!(!e.insert(vec![1, 0, 0]));
    }
}
