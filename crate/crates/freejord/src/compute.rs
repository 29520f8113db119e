//! Cached and parallel wrappers around the core computations.

use anyhow::Result;
use freejord_core::combinat::{partitions, Partition, SnModule};
use freejord_core::operad::{GeneratingSet, JordanOperad};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cache::Cache;

/// One Hentzel block, as reported and cached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub n: usize,
    pub lambda: String,
    pub f_n: usize,
    pub j_n: usize,
    pub d_lambda: usize,
    pub rank: usize,
    pub multiplicity: u64,
}

fn set_name(set: GeneratingSet) -> &'static str {
    match set {
        GeneratingSet::Substitutions => "substitutions",
        GeneratingSet::Shapes => "shapes",
    }
}

/// Multiplicities of the given irreducibles in `Jord(n)`, one rayon task
/// per partition; blocks found in the cache skip the straightening step.
pub fn operad_blocks(
    n: usize,
    lambdas: &[Partition],
    set: GeneratingSet,
    primes: &[u64],
    cache: &Cache,
) -> Result<Vec<BlockReport>> {
    let key = |lam: &Partition| json!({"n": n, "lambda": lam.to_string(), "primes": primes, "set": set_name(set)});
    let cached: Vec<Option<BlockReport>> = lambdas.iter().map(|l| cache.get("operad-block", &key(l))).collect();
    if cached.iter().all(Option::is_some) {
        return Ok(cached.into_iter().map(Option::unwrap).collect());
    }
    let op = JordanOperad::new(n, set, primes)?;
    let results: Vec<Result<BlockReport>> = lambdas
        .par_iter()
        .zip(cached.into_par_iter())
        .map(|(lam, hit)| {
            if let Some(r) = hit {
                return Ok(r);
            }
            let b = op.block(lam)?;
            let r = BlockReport {
                n,
                lambda: lam.to_string(),
                f_n: b.f_n,
                j_n: b.j_n,
                d_lambda: b.d_lambda,
                rank: b.rank,
                multiplicity: b.multiplicity,
            };
            cache.put("operad-block", &key(lam), &r);
            Ok(r)
        })
        .collect();
    results.into_iter().collect()
}

/// The whole module `Jord(n)` from per-partition blocks.
pub fn operad_module(n: usize, set: GeneratingSet, primes: &[u64], cache: &Cache) -> Result<SnModule> {
    let lams = partitions(n);
    let blocks = operad_blocks(n, &lams, set, primes, cache)?;
    let mut m = SnModule::new(n);
    for (lam, b) in lams.into_iter().zip(blocks) {
        m.set(lam, b.multiplicity);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use freejord_core::kernel::DEFAULT_PRIMES;
    use freejord_core::reference::multilinear_module;

    #[test]
    fn cached_module_matches() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let m = operad_module(5, GeneratingSet::Substitutions, &DEFAULT_PRIMES[..2], &cache).unwrap();
        assert_eq!(m, multilinear_module(5).unwrap());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), partitions(5).len());
        let again = operad_module(5, GeneratingSet::Substitutions, &DEFAULT_PRIMES[..2], &cache).unwrap();
        assert_eq!(again, m);
    }
}
