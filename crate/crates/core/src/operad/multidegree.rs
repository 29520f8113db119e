use alloc::format;
use alloc::vec::Vec;

use super::{normal_types, GeneratingSet, JordanOperad};
use crate::combinat::{partitions, KostkaCache, Partition};
use crate::kernel::DEFAULT_PRIMES;
use crate::{Error, Result};

/// Largest Hentzel block width (`f_n · d_λ`) attempted by [`multidegree_dim`].
pub const MULTIDEGREE_WIDTH_CAP: u64 = 40_000;

/// The irreducibles contributing to multidegree `δ`, with their Kostka
/// numbers `K_{λ,δ}`.
pub fn multidegree_support(delta: &[usize]) -> Vec<(Partition, u64)> {
    let n: usize = delta.iter().sum();
    let content = Partition::from_composition(delta);
    let mut kostka = KostkaCache::new();
    partitions(n)
        .into_iter()
        .filter(|lam| lam.dominates(&content))
        .filter_map(|lam| {
            let k = kostka.get(&lam, delta).ok()?;
            (k > 0).then_some((lam, k))
        })
        .collect()
}

/// Dimension of the multidegree-`δ` component of the free Jordan algebra.
///
/// By Schur–Weyl duality this is `Σ_λ K_{λ,δ} · mult_λ Jord(n)`, and only
/// `λ` dominating the content of `δ` contribute, so the multiplicities come
/// from Hentzel blocks with small `d_λ`.
pub fn multidegree_dim(delta: &[usize]) -> Result<u64> {
    let n: usize = delta.iter().sum();
    if n == 0 {
        return Err(Error::input("empty multidegree"));
    }
    let support = multidegree_support(delta);
    let f_n = normal_types(n).len() as u64;
    let widest = support.iter().map(|(lam, _)| f_n * lam.dim()).max().unwrap_or(0);
    if widest > MULTIDEGREE_WIDTH_CAP {
        return Err(Error::Infeasible(format!(
            "multidegree {delta:?}: widest block has {widest} columns (cap {MULTIDEGREE_WIDTH_CAP}), \
             about {} dense row operations",
            widest.saturating_mul(widest)
        )));
    }
    let op = JordanOperad::new(n, GeneratingSet::Shapes, &DEFAULT_PRIMES[..2])?;
    let mut total = 0;
    for (lam, k) in &support {
        total += k * op.block(lam)?.multiplicity;
    }
    Ok(total)
}
