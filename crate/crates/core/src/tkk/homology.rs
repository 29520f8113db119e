use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::algebra::{koszul, AlgebraFD, Kind};
use crate::kernel::{rank_mod_p, Fp, ModMatrix, Q, DEFAULT_PRIMES};
use crate::{Error, Result};

/// Largest number of chains in one homological degree.
pub const CHAIN_CAP: usize = 400_000;

type Mono = Vec<u16>;
type Key = (u32, i32);

/// Dimensions of `H_k(L)` for `k ≤ kmax`, also split by grading degree and
/// `sl₂`-weight when `L` carries them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub dims: Vec<u64>,
    pub chain_dims: Vec<u64>,
    pub blocks: Vec<BTreeMap<Key, u64>>,
    pub weighted: bool,
}

impl Homology {
    /// `Σ (-1)^k dim H_k` against `Σ (-1)^k dim C_k`, when every chain
    /// group beyond `kmax` vanishes.
    pub fn euler_check(&self) -> Option<bool> {
        if self.chain_dims.last().is_some_and(|&c| c != 0) {
            return None;
        }
        let alt = |v: &[u64]| v.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum::<i64>();
        Some(alt(&self.dims) == alt(&self.chain_dims))
    }
}

struct Complex<'a> {
    l: &'a AlgebraFD,
    // 1 for directions that anticommute in the chains (even elements of L)
    q: Vec<u8>,
}

impl Complex<'_> {
    fn key(&self, m: &[u16]) -> Key {
        let deg = self.l.degrees().map_or(0, |d| m.iter().map(|&i| d[i as usize]).sum());
        let wt = self.l.weights().map_or(0, |w| m.iter().map(|&i| w[i as usize]).sum());
        (deg, wt)
    }

    fn chains(&self, k: usize) -> Result<BTreeMap<Key, Vec<Mono>>> {
        let n = self.l.dim();
        let mut out: BTreeMap<Key, Vec<Mono>> = BTreeMap::new();
        let mut cur: Mono = Vec::with_capacity(k);
        let mut count = 0usize;
        self.extend(&mut cur, 0, k, n, &mut out, &mut count)?;
        Ok(out)
    }

    fn extend(&self, cur: &mut Mono, from: usize, k: usize, n: usize, out: &mut BTreeMap<Key, Vec<Mono>>, count: &mut usize) -> Result<()> {
        if cur.len() == k {
            *count += 1;
            if *count > CHAIN_CAP {
                return Err(Error::Infeasible(format!("more than {CHAIN_CAP} chains in degree {k}")));
            }
            out.entry(self.key(cur)).or_default().push(cur.clone());
            return Ok(());
        }
        for i in from..n {
            cur.push(i as u16);
            let next = if self.q[i] == 1 { i + 1 } else { i };
            self.extend(cur, next, k, n, out, count)?;
            cur.pop();
        }
        Ok(())
    }

    /// `t · r` in canonical order, with its sign; `None` when it vanishes.
    fn insert(&self, t: u16, r: &[u16]) -> Option<(Mono, bool)> {
        let pos = r.partition_point(|&x| x < t);
        if self.q[t as usize] == 1 && r.get(pos) == Some(&t) {
            return None;
        }
        let passed: u8 = r[..pos].iter().map(|&x| self.q[x as usize]).sum::<u8>() & 1;
        let mut m = Vec::with_capacity(r.len() + 1);
        m.extend_from_slice(&r[..pos]);
        m.push(t);
        m.extend_from_slice(&r[pos..]);
        Some((m, self.q[t as usize] & passed == 1))
    }

    /// `d(x_1 ⋯ x_k) = Σ_{i<j} ± (-1)^{|x_i|} [x_i, x_j] ⋯`.
    fn d(&self, m: &[u16]) -> BTreeMap<Mono, Q> {
        let mut out: BTreeMap<Mono, Q> = BTreeMap::new();
        let q = |x: u16| self.q[x as usize];
        for i in 0..m.len() {
            let before_i: u8 = m[..i].iter().map(|&x| q(x)).sum::<u8>() & 1;
            for j in i + 1..m.len() {
                let (xi, xj) = (m[i], m[j]);
                let before_j: u8 = (m[..j].iter().map(|&x| q(x)).sum::<u8>() - q(xi)) & 1;
                let odd = (q(xi) & before_i) ^ (q(xj) & before_j) ^ self.l.parity(xi as usize);
                let rest: Mono = m.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x).collect();
                for (t, c) in self.l.product(xi as usize, xj as usize) {
                    if let Some((mono, flip)) = self.insert(*t as u16, &rest) {
                        let e = out.entry(mono).or_insert_with(Q::zero);
                        *e += c * koszul((odd == 1) ^ flip);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn rank_of(columns: &[BTreeMap<usize, Q>], rows: usize) -> Result<usize> {
    if columns.is_empty() || rows == 0 {
        return Ok(0);
    }
    let mut ranks = Vec::new();
    for &p in &DEFAULT_PRIMES[..2] {
        let f = Fp::new(p);
        let mut m = ModMatrix::zeros(columns.len(), rows, p);
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                let x = f.from_rational(v).ok_or_else(|| Error::input(format!("prime {p} divides a denominator")))?;
                m.set(c, *r, x);
            }
        }
        ranks.push((p, rank_mod_p(&m)));
    }
    let best = ranks.iter().map(|r| r.1).max().unwrap();
    if let Some(&(prime, rank)) = ranks.iter().find(|r| r.1 != best) {
        return Err(Error::UnluckyPrime { prime, rank, expected: best });
    }
    Ok(best)
}

/// Chevalley–Eilenberg homology with trivial coefficients.
///
/// Chains are the parity-aware exterior powers: exterior on even directions,
/// symmetric on odd ones. `d ∘ d = 0` is checked exactly on every chain up
/// to degree `kmax + 1`, and ranks come from two primes.
pub fn ce_homology(l: &AlgebraFD, kmax: usize) -> Result<Homology> {
    if l.kind() != Kind::Lie {
        return Err(Error::input("expected a Lie algebra"));
    }
    if l.dim() > u16::MAX as usize {
        return Err(Error::Infeasible("dimension too large".into()));
    }
    let cx = Complex { l, q: l.parities().iter().map(|&p| 1 - p).collect() };
    let chains: Vec<BTreeMap<Key, Vec<Mono>>> = (0..=kmax + 1).map(|k| cx.chains(k)).collect::<Result<_>>()?;
    // ranks[k][key] = rank of d_k : C_k -> C_{k-1} on that block
    let mut ranks: Vec<BTreeMap<Key, usize>> = Vec::with_capacity(kmax + 2);
    for k in 0..=kmax + 1 {
        let mut rk = BTreeMap::new();
        if k >= 2 {
            for (key, monos) in &chains[k] {
                let targets = chains[k - 1].get(key).map(Vec::as_slice).unwrap_or(&[]);
                let index: BTreeMap<&[u16], usize> = targets.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
                let mut cols = Vec::with_capacity(monos.len());
                for m in monos {
                    let dm = cx.d(m);
                    let mut col = BTreeMap::new();
                    for (t, c) in &dm {
                        let r = *index.get(t.as_slice()).ok_or_else(|| Error::Internal("d leaves its block".into()))?;
                        col.insert(r, c.clone());
                    }
                    if k >= 3 {
                        let mut dd: BTreeMap<Mono, Q> = BTreeMap::new();
                        for (t, c) in &dm {
                            for (u, e) in cx.d(t) {
                                let x = dd.entry(u).or_insert_with(Q::zero);
                                *x += c * e;
                            }
                        }
                        if dd.values().any(|x| !x.is_zero()) {
                            return Err(Error::input("d∘d ≠ 0: the bracket is not a Lie bracket"));
                        }
                    }
                    cols.push(col);
                }
                rk.insert(*key, rank_of(&cols, targets.len())?);
            }
        }
        ranks.push(rk);
    }
    let mut dims = Vec::with_capacity(kmax + 1);
    let mut blocks = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let mut per = BTreeMap::new();
        let mut total = 0;
        for (key, monos) in &chains[k] {
            let out = ranks[k].get(key).copied().unwrap_or(0);
            let inc = ranks[k + 1].get(key).copied().unwrap_or(0);
            let h = (monos.len() - out - inc) as u64;
            if h > 0 {
                per.insert(*key, h);
            }
            total += h;
        }
        dims.push(total);
        blocks.push(per);
    }
    let chain_dims = chains.iter().map(|c| c.values().map(|v| v.len() as u64).sum()).collect();
    Ok(Homology { dims, chain_dims, blocks, weighted: l.weights().is_some() })
}

/// Highest weights of each `H_k` with multiplicities, read off from
/// weight-space dimensions within each grading degree.
pub fn sl2_decompose(h: &Homology) -> Result<Vec<BTreeMap<u32, u64>>> {
    if !h.weighted {
        return Err(Error::input("no sl2 weights on this Lie algebra"));
    }
    let mut out = Vec::with_capacity(h.blocks.len());
    for (k, blocks) in h.blocks.iter().enumerate() {
        let mut by_degree: BTreeMap<u32, BTreeMap<i32, u64>> = BTreeMap::new();
        for (&(deg, wt), &d) in blocks {
            by_degree.entry(deg).or_default().insert(wt, d);
        }
        let mut hw: BTreeMap<u32, u64> = BTreeMap::new();
        for weights in by_degree.values() {
            let get = |w: i32| weights.get(&w).copied().unwrap_or(0);
            for (&w, &d) in weights {
                if get(-w) != d {
                    return Err(Error::Internal(format!("H_{k}: weight strings are not symmetric")));
                }
                if w < 0 {
                    continue;
                }
                let above = get(w + 2);
                if above > d {
                    return Err(Error::Internal(format!("H_{k}: weight strings are inconsistent")));
                }
                if d > above {
                    *hw.entry(w as u32).or_insert(0) += d - above;
                }
            }
        }
        out.push(hw);
    }
    Ok(out)
}
