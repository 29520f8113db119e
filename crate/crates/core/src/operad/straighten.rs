use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{CommTree, Factor, NormalMonomial, Scalars};

/// A linear combination of normal monomials.
pub type Comb<E> = HashMap<NormalMonomial, E>;

type Memo<K, E> = HashMap<K, Vec<(NormalMonomial, E)>>;

/// Rewrites commutative monomials into normal monomials modulo the Jordan
/// identity, using
/// `L_{(ac)b} = -L_a L_b L_c - L_c L_b L_a + L_{ac} L_b + L_{ab} L_c + L_{bc} L_a`.
///
/// Every choice depends only on shapes; when two candidates have the same
/// shape both are used with weight 1/2, which keeps the map equivariant.
pub struct Straightener<S: Scalars> {
    s: S,
    nf_memo: Memo<CommTree, S::E>,
    l_memo: Memo<(CommTree, NormalMonomial), S::E>,
}

fn add_into<S: Scalars>(s: &S, acc: &mut Comb<S::E>, m: NormalMonomial, c: &S::E) {
    if s.is_zero(c) {
        return;
    }
    match acc.get_mut(&m) {
        Some(v) => {
            *v = s.add(v, c);
            if s.is_zero(v) {
                acc.remove(&m);
            }
        }
        None => {
            acc.insert(m, c.clone());
        }
    }
}

fn single<S: Scalars>(s: &S, m: NormalMonomial) -> Comb<S::E> {
    let mut c = Comb::new();
    c.insert(m, s.int(1));
    c
}

fn factor_of(t: &CommTree) -> Factor {
    match t {
        CommTree::Leaf(a) => Factor::Leaf(*a),
        CommTree::Node(a, b, _) => match (&**a, &**b) {
            (CommTree::Leaf(x), CommTree::Leaf(y)) => Factor::pair(*x, *y),
            _ => unreachable!("factor of degree > 2"),
        },
    }
}

/// Shape-level key used for every choice the rewriting makes.
fn rank_key(t: &CommTree) -> (u8, CommTree) {
    (t.degree(), t.shape())
}

impl<S: Scalars> Straightener<S> {
    pub fn new(s: S) -> Self {
        Straightener { s, nf_memo: HashMap::new(), l_memo: HashMap::new() }
    }

    pub fn scalars(&self) -> &S {
        &self.s
    }

    /// Normal form of a tree, sorted by monomial.
    pub fn straighten(&mut self, t: &CommTree) -> Vec<(NormalMonomial, S::E)> {
        let mut v: Vec<_> = self.nf(t).into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn nf(&mut self, t: &CommTree) -> Comb<S::E> {
        match t {
            CommTree::Leaf(a) => return single(&self.s, NormalMonomial::generator(*a)),
            _ if t.degree() == 2 => return single(&self.s, NormalMonomial::new(vec![factor_of(t)])),
            _ => {}
        }
        let (t0, sigma) = t.standardize();
        if !self.nf_memo.contains_key(&t0) {
            let raw: Vec<_> = self.nf_raw(&t0).into_iter().collect();
            self.nf_memo.insert(t0.clone(), raw);
        }
        let mut out = Comb::new();
        for (m, c) in &self.nf_memo[&t0] {
            add_into(&self.s, &mut out, m.relabel(&sigma), c);
        }
        out
    }

    fn nf_raw(&mut self, t: &CommTree) -> Comb<S::E> {
        let (u, v) = t.children().expect("degree ≥ 3");
        let (ku, kv) = (rank_key(u), rank_key(v));
        if ku == kv {
            let half = self.s.half();
            let first = self.nf(u);
            let mut out = self.apply_comb(v, &first);
            let second = self.nf(v);
            for (m, c) in self.apply_comb(u, &second) {
                add_into(&self.s, &mut out, m, &c);
            }
            for c in out.values_mut() {
                *c = self.s.mul(c, &half);
            }
            return out;
        }
        let (base, op) = if ku > kv { (u, v) } else { (v, u) };
        let nb = self.nf(base);
        self.apply_comb(op, &nb)
    }

    /// `L_y` applied to a combination.
    pub fn apply_comb(&mut self, y: &CommTree, comb: &Comb<S::E>) -> Comb<S::E> {
        let mut out = Comb::new();
        for (w, c) in comb {
            let r = self.apply_l(y, w);
            for (m, k) in r {
                let k = self.s.mul(&k, c);
                add_into(&self.s, &mut out, m, &k);
            }
        }
        out
    }

    fn apply_l(&mut self, y: &CommTree, w: &NormalMonomial) -> Vec<(NormalMonomial, S::E)> {
        if y.degree() <= 2 {
            return vec![(w.times(factor_of(y)), self.s.int(1))];
        }
        debug_assert!(w.degree() >= y.degree() as usize);
        // relabel w's labels then y's leaves as 0, 1, 2, … for the memo
        let order: Vec<u8> = w.labels().into_iter().map(|x| x as u8).chain(y.leaves()).collect();
        let top = *order.iter().max().unwrap() as usize + 1;
        let mut fwd = vec![0u8; top];
        for (i, &x) in order.iter().enumerate() {
            fwd[x as usize] = i as u8;
        }
        let key = (y.relabel(&fwd), w.relabel(&fwd));
        if !self.l_memo.contains_key(&key) {
            let raw: Vec<_> = self.apply_l_raw(&key.0, &key.1).into_iter().collect();
            self.l_memo.insert(key.clone(), raw);
        }
        self.l_memo[&key].iter().map(|(m, c)| (m.relabel(&order), c.clone())).collect()
    }

    fn apply_l_raw(&mut self, y: &CommTree, w: &NormalMonomial) -> Comb<S::E> {
        let (p, q) = y.children().unwrap();
        let mut splits: Vec<(&CommTree, &CommTree)> = Vec::new();
        match (p.degree() >= 2, q.degree() >= 2) {
            (true, true) => {
                let (kp, kq) = (rank_key(p), rank_key(q));
                if kp == kq {
                    splits.push((p, q));
                    splits.push((q, p));
                } else if kp > kq {
                    splits.push((p, q));
                } else {
                    splits.push((q, p));
                }
            }
            (true, false) => splits.push((p, q)),
            (false, true) => splits.push((q, p)),
            (false, false) => unreachable!("degree ≥ 3"),
        }
        let weight = if splits.len() == 2 { self.s.half() } else { self.s.int(1) };
        let start = single(&self.s, w.clone());
        let mut out = Comb::new();
        for (x, b) in splits {
            let (a, c) = x.children().unwrap();
            let ab = CommTree::node(a.clone(), b.clone());
            let bc = CommTree::node(b.clone(), c.clone());
            let chains: [(i64, Vec<&CommTree>); 5] = [
                (-1, vec![c, b, a]),
                (-1, vec![a, b, c]),
                (1, vec![b, x]),
                (1, vec![c, &ab]),
                (1, vec![a, &bc]),
            ];
            for (sign, ops) in chains {
                let mut cur = start.clone();
                for op in ops {
                    cur = self.apply_comb(op, &cur);
                }
                let k = self.s.mul(&self.s.int(sign), &weight);
                for (m, v) in cur {
                    let v = self.s.mul(&v, &k);
                    add_into(&self.s, &mut out, m, &v);
                }
            }
        }
        out
    }

    /// Number of memoised entries (shapes, operator applications).
    pub fn memo_sizes(&self) -> (usize, usize) {
        (self.nf_memo.len(), self.l_memo.len())
    }
}
