use alloc::vec;
use alloc::vec::Vec;

use super::CommTree;
use crate::combinat::Perm;

/// A factor of a normal monomial: a generator or a product of two.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Factor {
    Leaf(u8),
    Pair(u8, u8),
}

impl Factor {
    pub fn pair(a: u8, b: u8) -> Self {
        if a <= b {
            Factor::Pair(a, b)
        } else {
            Factor::Pair(b, a)
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Factor::Leaf(_) => 1,
            Factor::Pair(..) => 2,
        }
    }

    fn relabel(self, f: &[u8]) -> Self {
        match self {
            Factor::Leaf(a) => Factor::Leaf(f[a as usize]),
            Factor::Pair(a, b) => Factor::pair(f[a as usize], f[b as usize]),
        }
    }

    fn push_labels(self, out: &mut Vec<u8>) {
        match self {
            Factor::Leaf(a) => out.push(a),
            Factor::Pair(a, b) => {
                out.push(a);
                out.push(b);
            }
        }
    }

    fn tree(self) -> CommTree {
        match self {
            Factor::Leaf(a) => CommTree::Leaf(a),
            Factor::Pair(a, b) => CommTree::node(CommTree::Leaf(a), CommTree::Leaf(b)),
        }
    }
}

/// `(…((h f_1) f_2)…) f_k` with head `h` a pair (or a lone generator in
/// degree one) and every `f_i` of degree 1 or 2.
///
/// Canonical form: pairs sorted, and when `f_1` is a pair the two bottom
/// pairs are sorted as well.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NormalMonomial {
    factors: Vec<Factor>,
}

impl NormalMonomial {
    pub fn new(mut factors: Vec<Factor>) -> Self {
        if factors.len() >= 2 && factors[1].degree() == 2 && factors[1] < factors[0] {
            factors.swap(0, 1);
        }
        NormalMonomial { factors }
    }

    pub fn generator(a: u8) -> Self {
        NormalMonomial { factors: vec![Factor::Leaf(a)] }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.degree()).sum()
    }

    /// Multiplies on the right by a factor of degree ≤ 2.
    pub fn times(&self, f: Factor) -> Self {
        match (self.factors.as_slice(), f) {
            ([Factor::Leaf(a)], Factor::Leaf(b)) => NormalMonomial::new(vec![Factor::pair(*a, b)]),
            ([Factor::Leaf(a)], p) => NormalMonomial::new(vec![p, Factor::Leaf(*a)]),
            _ => {
                let mut factors = self.factors.clone();
                factors.push(f);
                NormalMonomial::new(factors)
            }
        }
    }

    pub fn relabel(&self, f: &[u8]) -> Self {
        NormalMonomial::new(self.factors.iter().map(|x| x.relabel(f)).collect())
    }

    /// Factor degrees after the head: the association type.
    pub fn shape(&self) -> Vec<u8> {
        self.factors.iter().skip(1).map(|f| f.degree() as u8).collect()
    }

    /// Labels by position: `σ(pos)`.
    pub fn labels(&self) -> Perm {
        let mut out = Vec::with_capacity(self.degree());
        for f in &self.factors {
            f.push_labels(&mut out);
        }
        out.into_iter().map(usize::from).collect()
    }

    pub fn to_tree(&self) -> CommTree {
        let mut it = self.factors.iter();
        let mut t = it.next().expect("non-empty monomial").tree();
        for f in it {
            t = CommTree::node(t, f.tree());
        }
        t
    }
}

/// An association type: degree and factor degrees after the head.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NormalType {
    pub degree: usize,
    pub tail: Vec<u8>,
}

impl NormalType {
    /// The monomial of this type with labels `σ(pos)`.
    pub fn monomial(&self, sigma: &[usize]) -> NormalMonomial {
        if self.degree == 1 {
            return NormalMonomial::generator(sigma[0] as u8);
        }
        let mut factors = vec![Factor::pair(sigma[0] as u8, sigma[1] as u8)];
        let mut pos = 2;
        for &k in &self.tail {
            if k == 1 {
                factors.push(Factor::Leaf(sigma[pos] as u8));
            } else {
                factors.push(Factor::pair(sigma[pos] as u8, sigma[pos + 1] as u8));
            }
            pos += k as usize;
        }
        NormalMonomial::new(factors)
    }

    /// Position permutations generating the symmetries of the type.
    pub fn automorphism_generators(&self) -> Vec<Perm> {
        let n = self.degree;
        let mut gens = Vec::new();
        if n == 1 {
            return gens;
        }
        let swap = |i: usize, j: usize| {
            let mut p: Perm = (0..n).collect();
            p.swap(i, j);
            p
        };
        gens.push(swap(0, 1));
        let mut pos = 2;
        for &k in &self.tail {
            if k == 2 {
                gens.push(swap(pos, pos + 1));
            }
            pos += k as usize;
        }
        if self.tail.first() == Some(&2) {
            let mut p: Perm = (0..n).collect();
            p.swap(0, 2);
            p.swap(1, 3);
            gens.push(p);
        }
        gens
    }
}

/// The `f_n` association types `(…((x x) y_1) …) y_k`, `deg y_i ∈ {1, 2}`.
pub fn normal_types(n: usize) -> Vec<NormalType> {
    if n == 1 {
        return vec![NormalType { degree: 1, tail: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    compositions_12(n - 2, &mut cur, &mut out);
    out.into_iter().map(|tail| NormalType { degree: n, tail }).collect()
}

fn compositions_12(rest: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for k in [1u8, 2] {
        if k as usize <= rest {
            cur.push(k);
            compositions_12(rest - k as usize, cur, out);
            cur.pop();
        }
    }
}
