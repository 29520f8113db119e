use alloc::format;
use alloc::vec::Vec;

use super::modmat::rank_mod_p;
use super::qmat::{bareiss_rank, QMatrix};
use crate::{Error, Result};

/// How a rank was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertLevel {
    /// All primes agreed. Each modular rank is a lower bound on the rational
    /// rank, so agreement is strong evidence of equality.
    ModularAgreement,
    /// Confirmed by fraction-free elimination over the integers.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifiedRank {
    pub rank: usize,
    pub level: CertLevel,
}

/// Rank of a rational matrix from its reductions modulo several primes.
///
/// With `exact` set the common modular rank is also confirmed by Bareiss
/// elimination.
pub fn certified_rank(m: &QMatrix, primes: &[u64], exact: bool) -> Result<CertifiedRank> {
    if primes.len() < 2 {
        return Err(Error::input("certified_rank needs at least two primes"));
    }
    let mut ranks = Vec::with_capacity(primes.len());
    for &p in primes {
        let mm = m
            .to_mod(p)
            .ok_or_else(|| Error::input(format!("prime {p} divides a denominator")))?;
        ranks.push((p, rank_mod_p(&mm)));
    }
    let best = ranks.iter().map(|&(_, r)| r).max().unwrap();
    if let Some(&(prime, rank)) = ranks.iter().find(|&&(_, r)| r != best) {
        return Err(Error::UnluckyPrime { prime, rank, expected: best });
    }
    if exact {
        let r = bareiss_rank(&m.integer_rows());
        if r != best {
            return Err(Error::Internal(format!("modular rank {best} but exact rank {r}")));
        }
        return Ok(CertifiedRank { rank: r, level: CertLevel::Exact });
    }
    Ok(CertifiedRank { rank: best, level: CertLevel::ModularAgreement })
}
