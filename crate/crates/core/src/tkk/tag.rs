#![allow(clippy::needless_range_loop)]

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::algebra::{add_into, koszul, AlgebraFD, Kind, SparseVec};
use super::jordan::{b_space, d_basis, BSpace};
use crate::kernel::{q, Q};
use crate::{Error, Result};

const SL2: [&str; 3] = ["e", "h", "f"];
const SL2_WEIGHT: [i32; 3] = [2, 0, -2];

/// `[x, y]` in `sl₂` for basis indices `e, h, f`.
fn sl2_bracket(x: usize, y: usize) -> Option<(usize, Q)> {
    match (x, y) {
        (0, 1) => Some((0, q(-2))),
        (1, 0) => Some((0, q(2))),
        (0, 2) => Some((1, q(1))),
        (2, 0) => Some((1, q(-1))),
        (1, 2) => Some((2, q(-2))),
        (2, 1) => Some((2, q(2))),
        _ => None,
    }
}

/// Half the Killing form `tr(ad x ad y)`.
fn half_trace(x: usize, y: usize) -> Q {
    match (x, y) {
        (0, 2) | (2, 0) => q(2),
        (1, 1) => q(4),
        _ => Q::zero(),
    }
}

/// `TAG(J) = sl₂ ⊗ J ⊕ B(J)` together with the pieces used to build it.
#[derive(Clone, Debug)]
pub struct Tag {
    pub algebra: AlgebraFD,
    pub jordan_dim: usize,
    pub b: BSpace,
}

impl Tag {
    /// Basis index of `x ⊗ e_a`, with `x` in `e, h, f` order.
    pub fn sl2_index(&self, x: usize, a: usize) -> usize {
        x * self.jordan_dim + a
    }

    /// Basis index of the `t`-th basis vector of `B(J)`.
    pub fn b_index(&self, t: usize) -> usize {
        3 * self.jordan_dim + t
    }
}

/// The Lie (super)algebra with brackets
/// `[x⊗a, y⊗b] = [x,y]⊗ab + ½K(x,y) a∧b` with `K` the Killing form, `[a∧b, x⊗c] = x⊗D_{a,b}(c)` and
/// `[a∧b, c∧d] = D_{a,b}(c)∧d + (-1)^{|ab||c|} c∧D_{a,b}(d)`;
/// super-Jacobi is verified on all basis triples.
pub fn tag(j: &AlgebraFD) -> Result<Tag> {
    if j.kind() != Kind::Jordan {
        return Err(Error::input("expected a Jordan algebra"));
    }
    let n = j.dim();
    let b = b_space(j)?;
    let reps = b.basis();
    let m = 3 * n + b.dim();
    let mut labels = Vec::with_capacity(m);
    let mut parity = Vec::with_capacity(m);
    let mut weight = Vec::with_capacity(m);
    let mut degree: Option<Vec<u32>> = j.degrees().map(|_| Vec::with_capacity(m));
    for (x, name) in SL2.iter().enumerate() {
        for a in 0..n {
            labels.push(format!("{name}*{}", j.labels()[a]));
            parity.push(j.parity(a));
            weight.push(SL2_WEIGHT[x]);
            if let (Some(d), Some(jd)) = (degree.as_mut(), j.degrees()) {
                d.push(jd[a]);
            }
        }
    }
    for (t, &(a, c)) in reps.iter().enumerate() {
        labels.push(format!("{}^{}", j.labels()[a], j.labels()[c]));
        parity.push(b.parity(t));
        weight.push(0);
        if let Some(d) = degree.as_mut() {
            d.push(b.degree(t).unwrap());
        }
    }
    let mut products: Vec<(usize, usize, usize, Q)> = Vec::new();
    let emit = |out: &mut Vec<(usize, usize, usize, Q)>, i: usize, k: usize, v: SparseVec, offset: usize| {
        for (t, c) in v {
            out.push((i, k, offset + t, c));
        }
    };
    // D_{a,b}(e_c) for every representative and every c
    let d_cache: Vec<Vec<SparseVec>> = reps.iter().map(|&(a, c)| (0..n).map(|x| d_basis(j, a, c, x)).collect()).collect();
    for x in 0..3 {
        for a in 0..n {
            let i = x * n + a;
            for y in 0..3 {
                for c in 0..n {
                    let k = y * n + c;
                    if let Some((z, s)) = sl2_bracket(x, y) {
                        let v = j.product(a, c).iter().map(|(t, v)| (*t, v * &s)).collect();
                        emit(&mut products, i, k, v, z * n);
                    }
                    let h = half_trace(x, y);
                    if !h.is_zero() {
                        let v = b.wedge(j, &[(a, h)], &[(c, Q::one())]);
                        emit(&mut products, i, k, v, 3 * n);
                    }
                }
            }
            // [x⊗a, β] = -(-1)^{|a||β|} [β, x⊗a]
            for t in 0..b.dim() {
                let s = -koszul(j.parity(a) & b.parity(t) == 1);
                let v = d_cache[t][a].iter().map(|(u, c)| (*u, c * &s)).collect();
                emit(&mut products, i, 3 * n + t, v, x * n);
            }
        }
    }
    for t in 0..b.dim() {
        let i = 3 * n + t;
        for x in 0..3 {
            for c in 0..n {
                emit(&mut products, i, x * n + c, d_cache[t][c].clone(), x * n);
            }
        }
        for (u, &(c, d)) in reps.iter().enumerate() {
            let dc = &d_cache[t][c];
            let dd = &d_cache[t][d];
            let mut acc: BTreeMap<usize, Q> = b.wedge(j, dc, &[(d, Q::one())]).into_iter().collect();
            let s = koszul(b.parity(t) & j.parity(c) == 1);
            for (k, v) in b.wedge(j, &[(c, s)], dd) {
                add_into(&mut acc, k, v);
            }
            emit(&mut products, i, 3 * n + u, acc.into_iter().collect(), 3 * n);
        }
    }
    let algebra = AlgebraFD::unchecked(Kind::Lie, labels, parity, degree, &products)?.with_weights(weight)?;
    algebra.check().map_err(|e| Error::Internal(format!("TAG bracket: {e}")))?;
    Ok(Tag { algebra, jordan_dim: n, b })
}
