use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A binary commutative tree with labelled leaves.
///
/// Children are kept in canonical order: the left child is never smaller
/// than the right one under [`CommTree::cmp`] (degree first, then structure).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CommTree {
    Leaf(u8),
    Node(Box<CommTree>, Box<CommTree>, u8),
}

impl Ord for CommTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (CommTree::Leaf(a), CommTree::Leaf(b)) => a.cmp(b),
            (CommTree::Node(a, b, _), CommTree::Node(c, d, _)) => a.cmp(c).then_with(|| b.cmp(d)),
            // equal degrees force equal variants
            _ => unreachable!(),
        })
    }
}

impl PartialOrd for CommTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CommTree {
    pub fn leaf(label: u8) -> Self {
        CommTree::Leaf(label)
    }

    /// The product `a·b` in canonical form.
    pub fn node(a: CommTree, b: CommTree) -> Self {
        let deg = a.degree() + b.degree();
        if a >= b {
            CommTree::Node(Box::new(a), Box::new(b), deg)
        } else {
            CommTree::Node(Box::new(b), Box::new(a), deg)
        }
    }

    pub fn degree(&self) -> u8 {
        match self {
            CommTree::Leaf(_) => 1,
            CommTree::Node(_, _, d) => *d,
        }
    }

    pub fn children(&self) -> Option<(&CommTree, &CommTree)> {
        match self {
            CommTree::Leaf(_) => None,
            CommTree::Node(a, b, _) => Some((a, b)),
        }
    }

    /// Leaf labels, left to right.
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            CommTree::Leaf(a) => out.push(*a),
            CommTree::Node(a, b, _) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Replaces every label `x` by `f[x]`.
    pub fn relabel(&self, f: &[u8]) -> CommTree {
        match self {
            CommTree::Leaf(a) => CommTree::Leaf(f[*a as usize]),
            CommTree::Node(a, b, _) => CommTree::node(a.relabel(f), b.relabel(f)),
        }
    }

    /// The unlabelled shape (all labels zero).
    pub fn shape(&self) -> CommTree {
        match self {
            CommTree::Leaf(_) => CommTree::Leaf(0),
            CommTree::Node(a, b, _) => CommTree::node(a.shape(), b.shape()),
        }
    }

    /// `(t0, σ)` with `t0` the shape labelled `0, 1, …` left to right and
    /// `self = σ·t0`.
    pub fn standardize(&self) -> (CommTree, Vec<u8>) {
        let ordered = self.shape_ordered();
        let sigma = ordered.leaves();
        let mut next = 0;
        (ordered.label_in_order(&mut next), sigma)
    }

    // children ordered by shape only, labels kept
    fn shape_ordered(&self) -> CommTree {
        match self {
            CommTree::Leaf(a) => CommTree::Leaf(*a),
            CommTree::Node(a, b, d) => {
                let (a, b) = (a.shape_ordered(), b.shape_ordered());
                if a.shape() >= b.shape() {
                    CommTree::Node(Box::new(a), Box::new(b), *d)
                } else {
                    CommTree::Node(Box::new(b), Box::new(a), *d)
                }
            }
        }
    }

    fn label_in_order(&self, next: &mut u8) -> CommTree {
        match self {
            CommTree::Leaf(_) => {
                *next += 1;
                CommTree::Leaf(*next - 1)
            }
            CommTree::Node(a, b, _) => {
                let a = a.label_in_order(next);
                let b = b.label_in_order(next);
                CommTree::node(a, b)
            }
        }
    }

    /// True if every label `0..degree` occurs once.
    pub fn is_multilinear(&self) -> bool {
        let mut l = self.leaves();
        l.sort_unstable();
        l.iter().enumerate().all(|(i, &x)| x as usize == i)
    }
}

/// All commutative association types of degree `n`, unlabelled.
pub fn comm_types(n: usize) -> Vec<CommTree> {
    let mut by_degree: Vec<Vec<CommTree>> = vec![Vec::new(), vec![CommTree::Leaf(0)]];
    for m in 2..=n {
        let mut out = Vec::new();
        for k in m.div_ceil(2)..m {
            for a in &by_degree[k] {
                for b in &by_degree[m - k] {
                    if k == m - k && b > a {
                        continue;
                    }
                    out.push(CommTree::node(a.clone(), b.clone()));
                }
            }
        }
        out.sort();
        by_degree.push(out);
    }
    by_degree.swap_remove(n)
}

/// All multilinear labelled commutative trees on `0..n`; there are `(2n-3)!!`.
pub fn labelled_trees(n: usize) -> Vec<CommTree> {
    if n == 1 {
        return vec![CommTree::Leaf(0)];
    }
    // graft leaf n-1 onto every edge (including above the root)
    let mut out = Vec::new();
    for t in labelled_trees(n - 1) {
        graft(&t, (n - 1) as u8, &mut out);
    }
    out
}

fn graft(t: &CommTree, x: u8, out: &mut Vec<CommTree>) {
    out.push(CommTree::node(t.clone(), CommTree::Leaf(x)));
    if let CommTree::Node(a, b, _) = t {
        let mut sub = Vec::new();
        graft(a, x, &mut sub);
        out.extend(sub.drain(..).map(|a2| CommTree::node(a2, (**b).clone())));
        graft(b, x, &mut sub);
        out.extend(sub.drain(..).map(|b2| CommTree::node((**a).clone(), b2)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hashbrown::HashSet;

    #[test]
    fn wedderburn_etherington() {
        let counts: Vec<usize> = (1..=10).map(|n| comm_types(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 46, 98]);
    }

    #[test]
    fn labelled_counts_and_distinctness() {
        for (n, c) in [(1, 1), (2, 1), (3, 3), (4, 15), (5, 105), (6, 945)] {
            let ts = labelled_trees(n);
            assert_eq!(ts.len(), c);
            let set: HashSet<_> = ts.iter().cloned().collect();
            assert_eq!(set.len(), c);
            assert!(ts.iter().all(CommTree::is_multilinear));
        }
    }

    #[test]
    fn standardize_round_trip() {
        for t in labelled_trees(6) {
            let (t0, sigma) = t.standardize();
            assert_eq!(t0.relabel(&sigma), t);
            assert_eq!(t0.shape(), t.shape());
        }
    }
}
