use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{partitions, Partition};
use crate::{Error, Result};

type Memo = HashMap<(Partition, Partition), i64>;

/// Irreducible character value `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn character(lam: &Partition, mu: &Partition) -> Result<i64> {
    if lam.size() != mu.size() {
        return Err(Error::input(format!("|{lam}| != |{mu}|")));
    }
    Ok(mn(lam, mu, &mut Memo::new()))
}

fn beta_set(lam: &Partition) -> Vec<usize> {
    let l = lam.len();
    lam.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let parts: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i)).collect();
    Partition::from_composition(&parts)
}

/// Removes the largest part of `mu` as a rim hook in every possible way.
fn mn(lam: &Partition, mu: &Partition, memo: &mut Memo) -> i64 {
    if mu.is_empty() {
        return i64::from(lam.is_empty());
    }
    let key = (lam.clone(), mu.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu.part(0);
    let rest = Partition::from_composition(&mu.parts()[1..]);
    let beta = beta_set(lam);
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        let sub = from_beta(nb);
        let v = mn(&sub, &rest, memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// Full character table of `S_n`, rows and columns in reverse lexicographic order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let parts = partitions(n);
        let mut memo = Memo::new();
        let values = parts.iter().map(|l| parts.iter().map(|m| mn(l, m, &mut memo)).collect()).collect();
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable { n, parts, index, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`; panics if either is not a partition of `n`.
    pub fn value(&self, lam: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lam]][self.index[mu]]
    }

    pub fn value_at(&self, lam_idx: usize, mu_idx: usize) -> i64 {
        self.values[lam_idx][mu_idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{all_permutations, cycle_type};
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&p("1,1"), &p("2")).unwrap(), -1);
        assert_eq!(character(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert_eq!(character(&p("2,1"), &p("3")).unwrap(), -1);
        assert!(character(&p("2,1"), &p("2")).is_err());
        for lam in partitions(7) {
            let ones = Partition::new(alloc::vec![1; 7]).unwrap();
            assert_eq!(character(&lam, &ones).unwrap() as u64, lam.dim());
        }
    }

    #[test]
    fn column_orthogonality_against_class_sizes() {
        for n in 1..=8 {
            let t = CharacterTable::new(n);
            // class sizes counted by brute force over S_n
            let mut class: HashMap<Partition, u64> = HashMap::new();
            for s in all_permutations(n) {
                *class.entry(cycle_type(&s)).or_insert(0) += 1;
            }
            let fact: u64 = (1..=n as u64).product();
            for mu in t.partitions() {
                let sum: i64 = t.partitions().iter().map(|l| t.value(l, mu).pow(2)).sum();
                assert_eq!(sum as u64, fact / class[mu]);
                assert_eq!(BigInt::from(sum), mu.z());
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=8 {
            let t = CharacterTable::new(n);
            let fact: i64 = (1..=n as i64).product();
            for a in t.partitions() {
                for b in t.partitions() {
                    let s: i64 = t
                        .partitions()
                        .iter()
                        .map(|mu| {
                            let cls = fact / i64::try_from(mu.z()).unwrap();
                            cls * t.value(a, mu) * t.value(b, mu)
                        })
                        .sum();
                    assert_eq!(s, if a == b { fact } else { 0 });
                }
            }
        }
    }
}
