use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{consequences, labelled_trees, CommTree, GeneratingSet};
use crate::combinat::{all_permutations, cycle_type, partitions, CharacterTable, Partition, Perm, SnModule};
use crate::kernel::{Echelon, Fp, Q, DEFAULT_PRIMES};
use crate::{Error, Result};

/// Largest degree for the full-space computation.
pub const NAIVE_BOUND: usize = 6;

/// The quotient of the `(2n-3)!!`-dimensional multilinear commutative space
/// by the span of every relabelling of every identity of degree `n`.
pub struct NaiveQuotient {
    n: usize,
    trees: Vec<CommTree>,
    index: HashMap<CommTree, usize>,
    ideal: Echelon,
}

impl NaiveQuotient {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_prime(n, DEFAULT_PRIMES[0])
    }

    pub fn with_prime(n: usize, p: u64) -> Result<Self> {
        if n == 0 || n > NAIVE_BOUND {
            return Err(Error::Infeasible(format!("full multilinear space only for 1 ≤ n ≤ {NAIVE_BOUND}")));
        }
        let trees = labelled_trees(n);
        let index: HashMap<CommTree, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let fp = Fp::new(p);
        let mut ideal = Echelon::new(trees.len(), p);
        let gens = consequences(n, GeneratingSet::Shapes);
        let expanded: Vec<Vec<(i64, CommTree)>> = gens.iter().map(|g| g.expand()).collect();
        for sigma in all_permutations(n) {
            let f: Vec<u8> = sigma.iter().map(|&x| x as u8).collect();
            for terms in &expanded {
                let row: Vec<(usize, u64)> =
                    terms.iter().map(|(s, t)| (index[&t.relabel(&f)], fp.from_i64(*s))).collect();
                ideal.insert_sparse(&row);
            }
        }
        Ok(NaiveQuotient { n, trees, index, ideal })
    }

    pub fn ambient(&self) -> usize {
        self.trees.len()
    }

    pub fn dim(&self) -> usize {
        self.trees.len() - self.ideal.rank()
    }

    /// Whether a combination of multilinear trees lies in the span of the identities.
    pub fn in_ideal(&self, terms: &[(CommTree, Q)]) -> bool {
        let fp = Fp::new(self.ideal.prime());
        let mut v = alloc::vec![0u64; self.trees.len()];
        for (t, c) in terms {
            let k = self.index[t];
            v[k] = fp.add(v[k], fp.from_rational(c).expect("denominator prime to p"));
        }
        self.ideal.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    /// Trace of `σ` on the quotient, as an integer.
    pub fn trace(&self, sigma: &Perm) -> i64 {
        let f: Vec<u8> = sigma.iter().map(|&x| x as u8).collect();
        let fp = Fp::new(self.ideal.prime());
        let mut total = 0u64;
        let mut v = alloc::vec![0u64; self.trees.len()];
        for (k, t) in self.trees.iter().enumerate() {
            if self.ideal.is_pivot(k) {
                continue;
            }
            v.iter_mut().for_each(|x| *x = 0);
            v[self.index[&t.relabel(&f)]] = 1;
            self.ideal.reduce(&mut v);
            total = fp.add(total, v[k]);
        }
        fp.lift(total)
    }

    /// The quotient as an `S_n`-module, from its character.
    pub fn module(&self) -> SnModule {
        let n = self.n;
        let table = CharacterTable::new(n);
        let mut traces: HashMap<Partition, i64> = HashMap::new();
        for sigma in all_permutations(n) {
            let ct = cycle_type(&sigma);
            if !traces.contains_key(&ct) {
                traces.insert(ct, self.trace(&sigma));
            }
        }
        let fact: i64 = (1..=n as i64).product();
        let mut m = SnModule::new(n);
        for lam in partitions(n) {
            let mut s: i64 = 0;
            for mu in table.partitions() {
                let class = fact / i64::try_from(mu.z()).unwrap();
                s += class * table.value(&lam, mu) * traces[mu];
            }
            assert_eq!(s % fact, 0);
            m.set(lam, (s / fact) as u64);
        }
        m
    }
}

/// `dim Jord(n)` from the full multilinear space.
pub fn naive_dim(n: usize) -> Result<u64> {
    Ok(NaiveQuotient::new(n)?.dim() as u64)
}
