use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::Partition;
use crate::{Error, Result};

/// Memo table for Kostka numbers, keyed by (shape, content).
#[derive(Default, Debug, Clone)]
pub struct KostkaCache {
    memo: HashMap<(Partition, Vec<usize>), u64>,
}

impl KostkaCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of semistandard tableaux of shape `lam` and content `mu`.
    pub fn get(&mut self, lam: &Partition, mu: &[usize]) -> Result<u64> {
        if lam.size() != mu.iter().sum::<usize>() {
            return Err(Error::input(format!("|{lam}| differs from the content size")));
        }
        Ok(self.count(lam, mu))
    }

    // Largest entry occupies a horizontal strip of size mu.last().
    fn count(&mut self, lam: &Partition, mu: &[usize]) -> u64 {
        let Some((&last, rest)) = mu.split_last() else {
            return u64::from(lam.is_empty());
        };
        if last == 0 {
            return self.count(lam, rest);
        }
        let key = (lam.clone(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut inner = Vec::with_capacity(lam.len());
        let mut strips = Vec::new();
        horizontal_strips(lam.parts(), 0, last, &mut inner, &mut strips);
        for nu in strips {
            total += self.count(&Partition::from_composition(&nu), rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Kostka number `K_{λ,μ}` for a composition `μ`.
pub fn kostka(lam: &Partition, mu: &[usize]) -> Result<u64> {
    KostkaCache::new().get(lam, mu)
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of exactly `size` cells.
fn horizontal_strips(lam: &[usize], row: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if row == lam.len() {
        if size == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let lo = lam.get(row + 1).copied().unwrap_or(0);
    let hi = lam[row];
    for nu in lo..=hi {
        let removed = hi - nu;
        if removed > size {
            continue;
        }
        cur.push(nu);
        horizontal_strips(lam, row + 1, size - removed, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        for lam in partitions(6) {
            assert_eq!(kostka(&lam, lam.parts()).unwrap(), 1);
        }
        assert_eq!(kostka(&p("2,1"), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p("3"), &[2, 1]).unwrap(), 1);
        assert_eq!(kostka(&p("2,1"), &[2, 1]).unwrap(), 1);
        assert!(kostka(&p("2,1"), &[2]).is_err());
    }

    #[test]
    fn content_of_ones_gives_standard_tableaux() {
        for lam in partitions(7) {
            assert_eq!(kostka(&lam, &[1; 7]).unwrap(), lam.dim());
        }
    }

    #[test]
    fn vanishes_unless_dominated() {
        let mut c = KostkaCache::new();
        for lam in partitions(6) {
            for mu in partitions(6) {
                let k = c.get(&lam, mu.parts()).unwrap();
                assert_eq!(k > 0, lam.dominates(&mu), "{lam} {mu}");
            }
        }
    }
}
