use alloc::vec;
use alloc::vec::Vec;

use super::Partition;

/// Permutation of `0..n` in one-line notation: `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

/// `(a ∘ b)(i) = a[b[i]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn cycle_type(a: &[usize]) -> Partition {
    let mut seen = vec![false; a.len()];
    let mut lens = Vec::new();
    for s in 0..a.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = a[i];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_composition(&lens)
}

/// `+1` or `-1`.
pub fn sign(a: &[usize]) -> i64 {
    let ct = cycle_type(a);
    let even = ct.parts().iter().filter(|&&l| l % 2 == 0).count();
    if even % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Perm = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(0).len(), 1);
        let a = vec![1, 2, 0];
        assert_eq!(compose(&a, &inverse(&a)), vec![0, 1, 2]);
        assert_eq!(sign(&a), 1);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(cycle_type(&[1, 0, 3, 2, 4]).parts(), &[2, 2, 1]);
    }
}
