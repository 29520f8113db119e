#![allow(clippy::needless_range_loop)]

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::algebra::{add_into, koszul, AlgebraFD, Kind, SparseVec};
use crate::kernel::{QEchelon, QMatrix, Q};
use crate::{Error, Result};

/// A spanning set of (super)derivations and the dimension of its span.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub dim: usize,
    pub matrices: Vec<QMatrix>,
    pub rank: usize,
}

fn require_jordan(j: &AlgebraFD) -> Result<()> {
    if j.kind() != Kind::Jordan {
        return Err(Error::input("expected a Jordan algebra"));
    }
    Ok(())
}

/// `D_{e_i,e_j}(e_k) = e_i(e_j e_k) - (-1)^{|i||j|} e_j(e_i e_k)`.
pub(crate) fn d_basis(j: &AlgebraFD, a: usize, b: usize, c: usize) -> SparseVec {
    let ea = [(a, Q::one())];
    let eb = [(b, Q::one())];
    let mut acc: BTreeMap<usize, Q> = j.mul_sparse(&ea, j.product(b, c)).into_iter().collect();
    let s = koszul(j.parity(a) & j.parity(b) == 1);
    for (k, v) in j.mul_sparse(&eb, j.product(a, c)) {
        add_into(&mut acc, k, -(v * &s));
    }
    acc.into_iter().collect()
}

/// `D_{a,b} = [L_a, L_b]` (super-commutator) for homogeneous `a`, `b`.
pub fn d_operator(j: &AlgebraFD, a: &[Q], b: &[Q]) -> Result<QMatrix> {
    let pa = j.parity_of(a).ok_or_else(|| Error::input("inhomogeneous argument"))?;
    let pb = j.parity_of(b).ok_or_else(|| Error::input("inhomogeneous argument"))?;
    let la = j.left_mult(a);
    let lb = j.left_mult(b);
    let ab = la.mul(&lb);
    let ba = lb.mul(&la);
    let s = koszul(pa & pb == 1);
    let n = j.dim();
    let mut out = QMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, ab.get(r, c) - &s * ba.get(r, c));
        }
    }
    Ok(out)
}

/// Whether `m` of parity `p` satisfies `D(xy) = D(x)y + (-1)^{p|x|} x D(y)`.
pub fn is_derivation(j: &AlgebraFD, m: &QMatrix, p: u8) -> bool {
    let n = j.dim();
    let col = |c: usize| -> SparseVec { (0..n).filter(|&r| !m.get(r, c).is_zero()).map(|r| (r, m.get(r, c).clone())).collect() };
    let cols: Vec<SparseVec> = (0..n).map(col).collect();
    for x in 0..n {
        for y in 0..n {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, c) in j.product(x, y) {
                for (r, v) in &cols[*k] {
                    add_into(&mut acc, *r, c * v);
                }
            }
            for (k, v) in j.mul_sparse(&cols[x], &[(y, Q::one())]) {
                add_into(&mut acc, k, -v);
            }
            let s = koszul(p & j.parity(x) == 1);
            for (k, v) in j.mul_sparse(&[(x, Q::one())], &cols[y]) {
                add_into(&mut acc, k, -(v * &s));
            }
            if !acc.is_empty() {
                return false;
            }
        }
    }
    true
}

fn flatten(m: &QMatrix) -> Vec<Q> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// The span of the `D_{e_i,e_j}`; each generator is checked to be a
/// derivation, which for a commutative algebra is the Jordan identity.
pub fn inner_derivations(j: &AlgebraFD) -> Result<DerivationSpace> {
    require_jordan(j)?;
    let n = j.dim();
    let mut matrices = Vec::new();
    let mut ech = QEchelon::new(n * n);
    for a in 0..n {
        for b in a..n {
            let mut m = QMatrix::zeros(n, n);
            for c in 0..n {
                for (r, v) in d_basis(j, a, b, c) {
                    m.set(r, c, v);
                }
            }
            if m.is_zero() {
                continue;
            }
            let p = j.parity(a) ^ j.parity(b);
            if !is_derivation(j, &m, p) {
                return Err(Error::input(format!(
                    "D({}, {}) is not a derivation: the Jordan identity fails",
                    j.labels()[a],
                    j.labels()[b]
                )));
            }
            ech.insert(flatten(&m));
            matrices.push(m);
        }
    }
    Ok(DerivationSpace { dim: n, rank: ech.rank(), matrices })
}

/// `Λ²J / (ab∧c + bc∧a + ca∧b)` with a basis of representatives `e_i ∧ e_j`.
///
/// In the super case `Λ²` is symmetric on odd × odd, so `e_i ∧ e_i` survives
/// for odd `e_i`, and the relation carries Koszul signs.
#[derive(Clone, Debug)]
pub struct BSpace {
    pairs: Vec<(usize, usize)>,
    pair_index: BTreeMap<(usize, usize), usize>,
    block_of: Vec<usize>,
    blocks: Vec<(Vec<usize>, QEchelon)>,
    basis: Vec<usize>,
    basis_index: BTreeMap<usize, usize>,
    parity: Vec<u8>,
    degree: Option<Vec<u32>>,
}

impl BSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Representatives `(i, j)` of the basis, meaning `e_i ∧ e_j`.
    pub fn basis(&self) -> Vec<(usize, usize)> {
        self.basis.iter().map(|&p| self.pairs[p]).collect()
    }

    pub fn parity(&self, t: usize) -> u8 {
        self.parity[t]
    }

    pub fn degree(&self, t: usize) -> Option<u32> {
        self.degree.as_ref().map(|d| d[t])
    }

    /// Dimensions by degree, when the algebra is graded.
    pub fn graded_dims(&self) -> Option<BTreeMap<u32, usize>> {
        let d = self.degree.as_ref()?;
        let mut out = BTreeMap::new();
        for &x in d {
            *out.entry(x).or_insert(0) += 1;
        }
        Some(out)
    }

    /// `e_i ∧ e_j` in `Λ²` coordinates.
    fn wedge_basis(&self, i: usize, j: usize, parity: &[u8]) -> Option<(usize, Q)> {
        use core::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => Some((self.pair_index[&(i, j)], Q::one())),
            Greater => {
                let s = -koszul(parity[i] & parity[j] == 1);
                Some((self.pair_index[&(j, i)], s))
            }
            Equal => self.pair_index.get(&(i, i)).map(|&k| (k, Q::one())),
        }
    }

    /// Coordinates in `B` of `Σ a_i b_j e_i ∧ e_j`, for sparse `a`, `b`.
    pub fn wedge(&self, j: &AlgebraFD, a: &[(usize, Q)], b: &[(usize, Q)]) -> SparseVec {
        let mut lambda: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, x) in a {
            for (k, y) in b {
                if let Some((p, s)) = self.wedge_basis(*i, *k, j.parities()) {
                    add_into(&mut lambda, p, x * y * s);
                }
            }
        }
        self.reduce(lambda)
    }

    fn reduce(&self, lambda: BTreeMap<usize, Q>) -> SparseVec {
        let mut by_block: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
        for (p, c) in lambda {
            by_block.entry(self.block_of[p]).or_default().push((p, c));
        }
        let mut out = Vec::new();
        for (b, entries) in by_block {
            let (members, ech) = &self.blocks[b];
            let mut v = vec![Q::zero(); members.len()];
            for (p, c) in entries {
                let pos = members.binary_search(&p).unwrap();
                v[pos] = c;
            }
            ech.reduce(&mut v);
            for (pos, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((self.basis_index[&members[pos]], c));
                }
            }
        }
        out.sort_by_key(|x| x.0);
        out
    }

    /// The spanning relations, as `Λ²` vectors of basis pairs.
    fn relation_rows(&self) -> Vec<Vec<((usize, usize), Q)>> {
        let mut out = Vec::new();
        for (members, ech) in &self.blocks {
            for row in ech.rows() {
                out.push(
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(pos, c)| (self.pairs[members[pos]], c.clone()))
                        .collect(),
                );
            }
        }
        out
    }
}

/// Builds `B(J)`, splitting by total degree when `J` is graded.
pub fn b_space(j: &AlgebraFD) -> Result<BSpace> {
    require_jordan(j)?;
    let n = j.dim();
    let par = j.parities();
    let deg = |i: usize| j.degrees().map_or(0, |d| d[i]);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a..n {
            if a < b || par[a] == 1 {
                pairs.push((a, b));
            }
        }
    }
    let pair_index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut keys: BTreeMap<(u32, u8), usize> = BTreeMap::new();
    let mut block_of = Vec::with_capacity(pairs.len());
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let key = (deg(a) + deg(b), par[a] ^ par[b]);
        let next = keys.len();
        let blk = *keys.entry(key).or_insert(next);
        if blk == members.len() {
            members.push(Vec::new());
        }
        members[blk].push(k);
        block_of.push(blk);
    }
    let mut b = BSpace {
        pairs,
        pair_index,
        block_of,
        blocks: members.into_iter().map(|m| {
            let len = m.len();
            (m, QEchelon::new(len))
        }).collect(),
        basis: Vec::new(),
        basis_index: BTreeMap::new(),
        parity: Vec::new(),
        degree: None,
    };
    let all_orders = j.is_super();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !all_orders && !(x <= y && y <= z) {
                    continue;
                }
                // (-1)^{|x||z|} xy∧z + (-1)^{|y||x|} yz∧x + (-1)^{|z||y|} zx∧y
                let mut rel: BTreeMap<usize, Q> = BTreeMap::new();
                for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let s = koszul(par[u] & par[w] == 1);
                    for (k, c) in j.product(u, v) {
                        if let Some((p, t)) = b.wedge_basis(*k, w, par) {
                            add_into(&mut rel, p, c * t * &s);
                        }
                    }
                }
                let Some((&first, _)) = rel.iter().next() else { continue };
                let blk = b.block_of[first];
                let (members, ech) = &mut b.blocks[blk];
                let mut v = vec![Q::zero(); members.len()];
                for (p, c) in rel {
                    v[members.binary_search(&p).unwrap()] = c;
                }
                ech.insert(v);
            }
        }
    }
    for (members, ech) in &b.blocks {
        let pivots: Vec<usize> = ech.pivots().to_vec();
        for (pos, &p) in members.iter().enumerate() {
            if !pivots.contains(&pos) {
                b.basis.push(p);
            }
        }
    }
    b.basis.sort();
    b.basis_index = b.basis.iter().enumerate().map(|(t, &p)| (p, t)).collect();
    b.parity = b.basis.iter().map(|&p| par[b.pairs[p].0] ^ par[b.pairs[p].1]).collect();
    if j.degrees().is_some() {
        b.degree = Some(b.basis.iter().map(|&p| deg(b.pairs[p].0) + deg(b.pairs[p].1)).collect());
    }
    Ok(b)
}

/// Comparison of `B(J)` with `Inner(J)` through `a∧b ↦ D_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BInnerReport {
    pub dim_b: usize,
    pub dim_inner: usize,
    pub image_rank: usize,
}

/// Checks that every relation maps to zero and that the image is all of
/// `Inner(J)`.
pub fn b_inner_map(j: &AlgebraFD, b: &BSpace) -> Result<BInnerReport> {
    let inner = inner_derivations(j)?;
    let n = j.dim();
    let d_of = |terms: &[((usize, usize), Q)]| -> Vec<Q> {
        let mut flat = vec![Q::zero(); n * n];
        for ((x, y), c) in terms {
            for col in 0..n {
                for (r, v) in d_basis(j, *x, *y, col) {
                    flat[r * n + col] += c * v;
                }
            }
        }
        flat
    };
    for rel in b.relation_rows() {
        if d_of(&rel).iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("a relation of B(J) acts nontrivially".into()));
        }
    }
    let mut ech = QEchelon::new(n * n);
    for pair in b.basis() {
        ech.insert(d_of(&[(pair, Q::one())]));
    }
    let report = BInnerReport { dim_b: b.dim(), dim_inner: inner.rank, image_rank: ech.rank() };
    if report.image_rank != report.dim_inner {
        return Err(Error::Internal("B(J) does not map onto Inner(J)".into()));
    }
    Ok(report)
}
