use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::CommTree;

/// A tree with exactly one node carrying the linearised Jordan identity
/// `J(a,b,c,d) = ((ab)c)d + ((bd)c)a + ((ad)c)b - (ab)(cd) - (ac)(bd) - (ad)(bc)`,
/// which is symmetric in `a, b, d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MarkedTree {
    Leaf(u8),
    Node(Box<MarkedTree>, Box<MarkedTree>),
    /// Arguments `[a, b, d]` and `c`.
    Jordan(Box<[MarkedTree; 3]>, Box<MarkedTree>),
}

/// Which generating set of identities to use in each degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum GeneratingSet {
    /// Every argument substitution `x_i -> x_i x_{n}` and the product with
    /// `x_{n}`, applied to each element of the previous degree (`j_n = n j_{n-1}`).
    #[default]
    Substitutions,
    /// The same set reduced to one representative per relabelling orbit.
    Shapes,
}

impl MarkedTree {
    pub fn base() -> Self {
        use MarkedTree::Leaf;
        MarkedTree::Jordan(Box::new([Leaf(0), Leaf(1), Leaf(3)]), Box::new(Leaf(2)))
    }

    pub fn degree(&self) -> usize {
        match self {
            MarkedTree::Leaf(_) => 1,
            MarkedTree::Node(a, b) => a.degree() + b.degree(),
            MarkedTree::Jordan(abd, c) => abd.iter().map(MarkedTree::degree).sum::<usize>() + c.degree(),
        }
    }

    /// Replaces leaf `x` by the product `x · new`.
    pub fn substitute(&self, x: u8, new: u8) -> Self {
        match self {
            MarkedTree::Leaf(a) if *a == x => {
                MarkedTree::Node(Box::new(MarkedTree::Leaf(x)), Box::new(MarkedTree::Leaf(new)))
            }
            MarkedTree::Leaf(a) => MarkedTree::Leaf(*a),
            MarkedTree::Node(a, b) => MarkedTree::Node(Box::new(a.substitute(x, new)), Box::new(b.substitute(x, new))),
            MarkedTree::Jordan(abd, c) => MarkedTree::Jordan(
                Box::new([abd[0].substitute(x, new), abd[1].substitute(x, new), abd[2].substitute(x, new)]),
                Box::new(c.substitute(x, new)),
            ),
        }
    }

    /// Expansion into commutative trees with ±1 coefficients.
    pub fn expand(&self) -> Vec<(i64, CommTree)> {
        match self {
            MarkedTree::Leaf(a) => vec![(1, CommTree::Leaf(*a))],
            MarkedTree::Node(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out = Vec::with_capacity(ea.len() * eb.len());
                for (s, x) in &ea {
                    for (t, y) in &eb {
                        out.push((s * t, CommTree::node(x.clone(), y.clone())));
                    }
                }
                out
            }
            MarkedTree::Jordan(abd, c) => {
                let plain = |t: &MarkedTree| {
                    let e = t.expand();
                    assert_eq!(e.len(), 1, "one marked node per tree");
                    e[0].1.clone()
                };
                let (a, b, d, c) = (plain(&abd[0]), plain(&abd[1]), plain(&abd[2]), plain(c));
                let m = |x: &CommTree, y: &CommTree| CommTree::node(x.clone(), y.clone());
                vec![
                    (1, m(&m(&m(&a, &b), &c), &d)),
                    (1, m(&m(&m(&b, &d), &c), &a)),
                    (1, m(&m(&m(&a, &d), &c), &b)),
                    (-1, m(&m(&a, &b), &m(&c, &d))),
                    (-1, m(&m(&a, &c), &m(&b, &d))),
                    (-1, m(&m(&a, &d), &m(&b, &c))),
                ]
            }
        }
    }

    /// Labels erased, children in canonical order.
    pub fn shape(&self) -> Self {
        match self {
            MarkedTree::Leaf(_) => MarkedTree::Leaf(0),
            MarkedTree::Node(a, b) => {
                let (a, b) = (a.shape(), b.shape());
                let key = |t: &MarkedTree| (t.degree(), t.clone());
                if key(&a) >= key(&b) {
                    MarkedTree::Node(Box::new(a), Box::new(b))
                } else {
                    MarkedTree::Node(Box::new(b), Box::new(a))
                }
            }
            MarkedTree::Jordan(abd, c) => {
                let mut args = [abd[0].shape(), abd[1].shape(), abd[2].shape()];
                args.sort_by(|x, y| (y.degree(), y).cmp(&(x.degree(), x)));
                MarkedTree::Jordan(Box::new(args), Box::new(c.shape()))
            }
        }
    }

    /// Labels leaves `0, 1, …` in traversal order.
    pub fn label_in_order(&self, next: &mut u8) -> Self {
        match self {
            MarkedTree::Leaf(_) => {
                *next += 1;
                MarkedTree::Leaf(*next - 1)
            }
            MarkedTree::Node(a, b) => {
                let a = a.label_in_order(next);
                MarkedTree::Node(Box::new(a), Box::new(b.label_in_order(next)))
            }
            MarkedTree::Jordan(abd, c) => {
                let a = abd[0].label_in_order(next);
                let b = abd[1].label_in_order(next);
                let d = abd[2].label_in_order(next);
                MarkedTree::Jordan(Box::new([a, b, d]), Box::new(c.label_in_order(next)))
            }
        }
    }
}

/// The generating set of multilinear identities of degree `n`.
pub fn consequences(n: usize, set: GeneratingSet) -> Vec<MarkedTree> {
    if n < 4 {
        return Vec::new();
    }
    let mut cur = vec![MarkedTree::base()];
    for m in 5..=n {
        let new = (m - 1) as u8;
        let mut next = Vec::with_capacity(cur.len() * m);
        for g in &cur {
            for x in 0..new {
                next.push(g.substitute(x, new));
            }
            next.push(MarkedTree::Node(Box::new(g.clone()), Box::new(MarkedTree::Leaf(new))));
        }
        if set == GeneratingSet::Shapes {
            let mut seen = HashSet::new();
            next.retain(|g| seen.insert(g.shape()));
            next = next
                .into_iter()
                .map(|g| {
                    let mut k = 0;
                    g.shape().label_in_order(&mut k)
                })
                .collect();
        }
        cur = next;
    }
    cur
}
