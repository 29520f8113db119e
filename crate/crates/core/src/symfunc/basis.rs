use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_traits::{One, Zero};

use crate::combinat::{partitions, partitions_bounded, Partition};
use crate::kernel::Q;

/// Power-sum monomials `p_μ` with parts `≤ d`, degree by degree up to `order`.
///
/// In `d` variables `p_k` for `k > d` is a polynomial in `p_1, …, p_d`
/// (Newton identities); `newton[k]` holds it.
#[derive(Debug)]
pub struct PowerSumBasis {
    d: usize,
    order: usize,
    parts: Vec<Vec<Partition>>,
    index: Vec<HashMap<Partition, usize>>,
    // union[i][j] for i <= j, flattened p(i) x p(j)
    union: Vec<Vec<Vec<usize>>>,
    newton: Vec<Vec<Q>>,
}

impl PowerSumBasis {
    pub fn new(d: usize, order: usize) -> Self {
        let parts: Vec<Vec<Partition>> = (0..=order).map(|n| partitions_bounded(n, d)).collect();
        let index: Vec<HashMap<Partition, usize>> =
            parts.iter().map(|ps| ps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()).collect();
        let mut union = vec![Vec::new(); order + 1];
        for i in 0..=order {
            for j in i..=order - i {
                let mut t = Vec::with_capacity(parts[i].len() * parts[j].len());
                for a in &parts[i] {
                    for b in &parts[j] {
                        t.push(index[i + j][&a.union(b)]);
                    }
                }
                union[i].push(t);
            }
        }
        let mut basis = PowerSumBasis { d, order, parts, index, union, newton: Vec::new() };
        basis.build_newton();
        basis
    }

    fn build_newton(&mut self) {
        let mut newton: Vec<Vec<Q>> = vec![self.unit(0, &Partition::empty())];
        for k in 1..=self.order {
            if k <= self.d {
                newton.push(self.unit(k, &Partition::new(vec![k]).unwrap()));
                continue;
            }
            // p_k = Σ_{i=1}^{d} (-1)^{i-1} e_i p_{k-i}
            let mut acc = self.zero(k);
            for i in 1..=self.d {
                let mut e = self.zero(i);
                for mu in partitions(i) {
                    let sign = if (i - mu.len()) % 2 == 0 { Q::one() } else { -Q::one() };
                    e[self.index[i][&mu]] += sign / Q::from_integer(mu.z());
                }
                let term = self.mul(i, &e, k - i, &newton[k - i]);
                for (a, t) in acc.iter_mut().zip(term) {
                    if i % 2 == 1 {
                        *a += t;
                    } else {
                        *a -= t;
                    }
                }
            }
            newton.push(acc);
        }
        self.newton = newton;
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn partitions(&self, n: usize) -> &[Partition] {
        &self.parts[n]
    }

    pub fn len(&self, n: usize) -> usize {
        self.parts[n].len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p.size())?.get(p).copied()
    }

    pub fn zero(&self, n: usize) -> Vec<Q> {
        vec![Q::zero(); self.parts[n].len()]
    }

    fn unit(&self, n: usize, p: &Partition) -> Vec<Q> {
        let mut v = self.zero(n);
        v[self.index[n][p]] = Q::one();
        v
    }

    /// Product of homogeneous pieces of degrees `i` and `j`.
    pub fn mul(&self, i: usize, a: &[Q], j: usize, b: &[Q]) -> Vec<Q> {
        let mut out = self.zero(i + j);
        self.mul_into(i, a, j, b, &mut out);
        out
    }

    pub fn mul_into(&self, i: usize, a: &[Q], j: usize, b: &[Q], out: &mut [Q]) {
        let (i, a, j, b) = if i <= j { (i, a, j, b) } else { (j, b, i, a) };
        let table = &self.union[i][j - i];
        let w = b.len();
        for (x, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (y, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    out[table[x * w + y]] += ca * cb;
                }
            }
        }
    }

    /// `p_{k_1} p_{k_2} ⋯` for arbitrary part sizes, reduced to this basis.
    pub fn power_sum(&self, ks: &[usize]) -> Vec<Q> {
        let n: usize = ks.iter().sum();
        if ks.iter().all(|&k| k <= self.d) {
            return self.unit(n, &Partition::from_composition(ks));
        }
        let mut deg = 0;
        let mut acc = vec![Q::one()];
        for &k in ks {
            acc = self.mul(deg, &acc, k, &self.newton[k]);
            deg += k;
        }
        acc
    }

    /// Evaluation at `x_1 = … = x_d = 1`.
    pub fn eval_ones(&self, n: usize, v: &[Q]) -> Q {
        self.eval_power_sums(n, v, self.d)
    }

    /// Evaluation at `p_k = e` for every `k`.
    pub fn eval_power_sums(&self, n: usize, v: &[Q], e: usize) -> Q {
        let d = Q::from_integer(e.into());
        let mut pows = vec![Q::one()];
        for _ in 0..n {
            let next = pows.last().unwrap() * &d;
            pows.push(next);
        }
        self.parts[n].iter().zip(v).map(|(p, c)| c * &pows[p.len()]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{q, qf};

    #[test]
    fn newton_in_one_and_two_variables() {
        // one variable: p_k = p_1^k
        let b = PowerSumBasis::new(1, 5);
        assert_eq!(b.power_sum(&[4]), vec![q(1)]);
        // two variables: p_3 = (3 p_2 p_1 - p_1^3) / 2
        let b = PowerSumBasis::new(2, 6);
        let v = b.power_sum(&[3]);
        let i21 = b.index_of(&"2,1".parse().unwrap()).unwrap();
        let i111 = b.index_of(&"1^3".parse().unwrap()).unwrap();
        assert_eq!(v[i21], qf(3, 2));
        assert_eq!(v[i111], qf(-1, 2));
        assert_eq!(b.eval_ones(3, &v), q(2));
        assert_eq!(b.eval_ones(6, &b.power_sum(&[6])), q(2));
    }
}
