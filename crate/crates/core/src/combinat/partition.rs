use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer partition: weakly decreasing positive parts.
///
/// Ordering is reverse lexicographic, so `(n)` sorts first and `(1^n)` last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts; zeros are dropped.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Hook length of cell `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row] - col - 1;
        let leg = self.0[row + 1..].iter().filter(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn dim(&self) -> u64 {
        let n = self.size();
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let hooks: BigInt = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .map(|(r, c)| BigInt::from(self.hook(r, c)))
            .product();
        u64::try_from(fact / hooks).expect("dimension exceeds u64")
    }

    /// Multiplicities `m_i` of each part size `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation with this cycle type.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// Union of parts (the cycle type of a disjoint product).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Every part multiplied by `m`.
    pub fn scaled(&self, m: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p * m).collect())
    }

    /// Dominance order `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Compact notation such as `3,2^2,1`.
    pub fn to_compact(&self) -> String {
        if self.0.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            if !out.is_empty() {
                out.push(',');
            }
            if run > 1 {
                out.push_str(&format!("{p}^{run}"));
            } else {
                out.push_str(&format!("{p}"));
            }
            i += run;
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_compact())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,2,1`, `3,2^2,1` and surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s == "0" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let (base, rep) = match tok.split_once('^') {
                Some((b, r)) => (b, r),
                None => (tok, "1"),
            };
            let b: usize = base.parse().map_err(|_| Error::input(format!("bad part `{tok}`")))?;
            let r: usize = rep.parse().map_err(|_| Error::input(format!("bad part `{tok}`")))?;
            parts.extend(core::iter::repeat_n(b, r));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with every part at most `max_part`, reverse lexicographic.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, max_part, &mut cur, &mut out);
    out
}

/// Module over the symmetric group given by irreducible multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SnModule {
    pub n: usize,
    pub mult: BTreeMap<Partition, u64>,
}

impl SnModule {
    pub fn new(n: usize) -> Self {
        SnModule { n, mult: BTreeMap::new() }
    }

    pub fn from_pairs(n: usize, pairs: &[(&str, u64)]) -> Result<Self> {
        let mut m = Self::new(n);
        for &(p, k) in pairs {
            let lam: Partition = p.parse()?;
            if lam.size() != n {
                return Err(Error::input(format!("{lam} is not a partition of {n}")));
            }
            m.set(lam, k);
        }
        Ok(m)
    }

    pub fn set(&mut self, lam: Partition, k: u64) {
        if k == 0 {
            self.mult.remove(&lam);
        } else {
            self.mult.insert(lam, k);
        }
    }

    pub fn get(&self, lam: &Partition) -> u64 {
        self.mult.get(lam).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.mult.iter().map(|(l, &k)| k * l.dim()).sum()
    }
}

/// Module with signed multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualSnModule {
    pub n: usize,
    pub mult: BTreeMap<Partition, BigInt>,
}

impl VirtualSnModule {
    pub fn new(n: usize) -> Self {
        VirtualSnModule { n, mult: BTreeMap::new() }
    }

    pub fn set(&mut self, lam: Partition, k: BigInt) {
        if k.is_zero() {
            self.mult.remove(&lam);
        } else {
            self.mult.insert(lam, k);
        }
    }

    pub fn get(&self, lam: &Partition) -> BigInt {
        self.mult.get(lam).cloned().unwrap_or_default()
    }

    pub fn dim(&self) -> BigInt {
        self.mult.iter().map(|(l, k)| k * BigInt::from(l.dim())).sum()
    }

    /// Partitions with negative multiplicity.
    pub fn negatives(&self) -> Vec<Partition> {
        self.mult.iter().filter(|(_, k)| k.is_negative()).map(|(l, _)| l.clone()).collect()
    }

    /// `None` when some multiplicity is negative.
    pub fn to_effective(&self) -> Option<SnModule> {
        let mut m = SnModule::new(self.n);
        for (l, k) in &self.mult {
            m.set(l.clone(), u64::try_from(k.clone()).ok()?);
        }
        Some(m)
    }
}
