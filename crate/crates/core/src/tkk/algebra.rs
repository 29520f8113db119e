use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::kernel::{QMatrix, Q};
use crate::{Error, Result};

pub type SparseVec = Vec<(usize, Q)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Jordan,
    Lie,
}

/// A finite-dimensional algebra given by structure constants
/// `e_i e_j = Σ_k c_ij^k e_k`, with a parity per basis vector and optional
/// `ℕ`-grading and `sl₂`-weights.
#[derive(Clone, Debug)]
pub struct AlgebraFD {
    kind: Kind,
    labels: Vec<String>,
    parity: Vec<u8>,
    degree: Option<Vec<u32>>,
    weight: Option<Vec<i32>>,
    table: Vec<SparseVec>,
}

pub(crate) fn koszul(odd: bool) -> Q {
    if odd { -Q::one() } else { Q::one() }
}

pub(crate) fn add_into(acc: &mut BTreeMap<usize, Q>, k: usize, c: Q) {
    let e = acc.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&k);
    }
}

impl AlgebraFD {
    /// Builds and validates: super-commutativity for Jordan kind,
    /// super-antisymmetry and super-Jacobi for Lie kind, and additivity of
    /// the grading.
    pub fn new(
        kind: Kind,
        labels: Vec<String>,
        parity: Vec<u8>,
        degree: Option<Vec<u32>>,
        products: &[(usize, usize, usize, Q)],
    ) -> Result<Self> {
        let alg = Self::unchecked(kind, labels, parity, degree, products)?;
        alg.check()?;
        Ok(alg)
    }

    pub(crate) fn unchecked(
        kind: Kind,
        labels: Vec<String>,
        parity: Vec<u8>,
        degree: Option<Vec<u32>>,
        products: &[(usize, usize, usize, Q)],
    ) -> Result<Self> {
        let n = labels.len();
        if parity.len() != n || degree.as_ref().is_some_and(|d| d.len() != n) {
            return Err(Error::input("labels, parities and degrees differ in length"));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::input("parity must be 0 or 1"));
        }
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); n * n];
        for (i, j, k, c) in products {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::input(format!("index out of range in product ({i}, {j}) -> {k}")));
            }
            if let Some(d) = &degree {
                if !c.is_zero() && d[*i] + d[*j] != d[*k] {
                    return Err(Error::input(format!("product ({i}, {j}) -> {k} breaks the grading")));
                }
            }
            if parity[*i] ^ parity[*j] != parity[*k] && !c.is_zero() {
                return Err(Error::input(format!("product ({i}, {j}) -> {k} breaks the parity")));
            }
            add_into(&mut acc[i * n + j], *k, c.clone());
        }
        let table = acc.into_iter().map(|m| m.into_iter().collect()).collect();
        Ok(AlgebraFD { kind, labels, parity, degree, weight: None, table })
    }

    /// Attaches `sl₂`-weights, checked to be additive.
    pub fn with_weights(mut self, weight: Vec<i32>) -> Result<Self> {
        let n = self.dim();
        if weight.len() != n {
            return Err(Error::input("one weight per basis vector"));
        }
        for i in 0..n {
            for j in 0..n {
                for (k, _) in self.product(i, j) {
                    if weight[i] + weight[j] != weight[*k] {
                        return Err(Error::input(format!("product ({i}, {j}) -> {k} breaks the weights")));
                    }
                }
            }
        }
        self.weight = Some(weight);
        Ok(self)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degree.as_deref()
    }

    pub fn weights(&self) -> Option<&[i32]> {
        self.weight.as_deref()
    }

    pub fn is_super(&self) -> bool {
        self.parity.contains(&1)
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim() + j]
    }

    /// All nonzero structure constants `(i, j, k, c)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> + '_ {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.product(i, j) {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub(crate) fn mul_sparse(&self, a: &[(usize, Q)], b: &[(usize, Q)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in self.product(*i, *j) {
                    add_into(&mut acc, *k, &xy * c);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Parity of a vector, or `None` when it mixes parities.
    pub fn parity_of(&self, v: &[Q]) -> Option<u8> {
        let mut ps = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| self.parity[i]);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    /// The left multiplication operator, acting on column vectors.
    pub fn left_mult(&self, a: &[Q]) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    let v = m.get(*k, j) + x * c;
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    fn max_degree(&self) -> Option<u32> {
        self.degree.as_ref().map(|d| d.iter().copied().max().unwrap_or(0))
    }

    /// Re-runs the checks made by [`AlgebraFD::new`].
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let s = koszul(self.parity[i] & self.parity[j] == 1);
                let expected: SparseVec = match self.kind {
                    Kind::Jordan => self.product(j, i).iter().map(|(k, c)| (*k, c * &s)).collect(),
                    Kind::Lie => self.product(j, i).iter().map(|(k, c)| (*k, -(c * &s))).collect(),
                };
                if expected != self.product(i, j) {
                    let what = if self.kind == Kind::Jordan { "super-commutative" } else { "super-antisymmetric" };
                    return Err(Error::input(format!("product of {} and {} is not {what}", self.labels[i], self.labels[j])));
                }
            }
        }
        if self.kind == Kind::Lie {
            if let Some((x, y, z)) = self.jacobi_failure() {
                return Err(Error::input(format!(
                    "Jacobi fails on ({}, {}, {})",
                    self.labels[x], self.labels[y], self.labels[z]
                )));
            }
        }
        Ok(())
    }

    /// A basis triple violating `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]`.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let top = self.max_degree();
        let deg = |i: usize| self.degree.as_ref().map_or(0, |d| d[i]);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if top.is_some_and(|t| deg(x) + deg(y) + deg(z) > t) {
                        continue;
                    }
                    let ex = [(x, Q::one())];
                    let ey = [(y, Q::one())];
                    let ez = [(z, Q::one())];
                    let lhs = self.mul_sparse(&ex, self.product(y, z));
                    let t1 = self.mul_sparse(self.product(x, y), &ez);
                    let t2 = self.mul_sparse(&ey, self.product(x, z));
                    let mut acc: BTreeMap<usize, Q> = lhs.into_iter().collect();
                    for (k, c) in t1 {
                        add_into(&mut acc, k, -c);
                    }
                    let s = koszul(self.parity[x] & self.parity[y] == 1);
                    for (k, c) in t2 {
                        add_into(&mut acc, k, -(c * &s));
                    }
                    if !acc.is_empty() {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}
