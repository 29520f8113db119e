//! The free special Jordan algebra on two generators inside the free
//! associative algebra: reversible elements, spanning ranks, and the
//! dimension formula for `B(Jord(x₁, x₂))`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::kernel::{Echelon, Fp, Q, DEFAULT_PRIMES};
use crate::{Error, Result};

/// A word over `{1, 2}`; bit `i` (from the right end) set means letter 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn new(letters: &[u8]) -> Result<Self> {
        if letters.len() > 63 {
            return Err(Error::input("words longer than 63 letters"));
        }
        let mut bits = 0;
        for &l in letters {
            bits = match l {
                1 => bits << 1,
                2 => (bits << 1) | 1,
                _ => return Err(Error::input(format!("letter {l} outside {{1, 2}}"))),
            };
        }
        Ok(Word { len: letters.len() as u8, bits })
    }

    fn from_bits(len: usize, bits: u64) -> Self {
        Word { len: len as u8, bits }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letters(&self) -> Vec<u8> {
        (0..self.len).rev().map(|i| if self.bits >> i & 1 == 1 { 2 } else { 1 }).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word { len: self.len + other.len, bits: (self.bits << other.len) | other.bits }
    }

    /// Number of letters equal to 1.
    pub fn ones(&self) -> usize {
        self.len as usize - self.bits.count_ones() as usize
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters().iter().map(|&l| if l == 1 { '1' } else { '2' }).collect();
        f.write_str(&s)
    }
}

/// The reversed word.
pub fn reversal(w: &Word) -> Word {
    let n = w.len as u32;
    let bits = if n == 0 { 0 } else { w.bits.reverse_bits() >> (64 - n) };
    Word { len: w.len, bits }
}

/// A homogeneous element of the free associative algebra on two letters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssocElement {
    terms: BTreeMap<Word, Q>,
}

impl AssocElement {
    pub fn word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::from_integer(1.into()));
        AssocElement { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: Word, c: Q) {
        let e = self.terms.entry(w).or_default();
        *e += c;
        if *e == Q::default() {
            self.terms.remove(&w);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = AssocElement::default();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `a ∘ b = (ab + ba) / 2`.
    pub fn jordan(&self, other: &Self) -> Self {
        let mut out = self.mul(other);
        for (w, c) in other.mul(self).terms {
            out.add_term(w, c);
        }
        let half = Q::new(1.into(), 2.into());
        for c in out.terms.values_mut() {
            *c *= &half;
        }
        out
    }

    pub fn reversed(&self) -> Self {
        AssocElement { terms: self.terms.iter().map(|(w, c)| (reversal(w), c.clone())).collect() }
    }

    pub fn is_reversible(&self) -> bool {
        self.reversed() == *self
    }
}

/// `dim` of the reversal-fixed subspace in degree `n`: `(2^n + 2^⌈n/2⌉) / 2`.
pub fn reversible_dim(n: usize) -> u64 {
    assert!(n < 63);
    ((1u64 << n) + (1u64 << n.div_ceil(2))) / 2
}

/// The basis `w + rev(w)` (or `w` for palindromes) of the reversal-fixed subspace.
pub fn reversible_basis(n: usize) -> Result<Vec<AssocElement>> {
    if n > 20 {
        return Err(Error::Infeasible(format!("explicit basis in degree {n}")));
    }
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        let w = Word::from_bits(n, bits);
        let r = reversal(&w);
        if r < w {
            continue;
        }
        let mut e = AssocElement::word(w);
        if r != w {
            e.add_term(r, Q::from_integer(1.into()));
        }
        out.push(e);
    }
    Ok(out)
}

/// Largest degree accepted by [`jordan_span_dim`].
pub const JORDAN_SPAN_BOUND: usize = 16;

/// Dimension of the span of all Jordan monomials of degree `n` in two
/// letters, computed in the free associative algebra.
///
/// Left-normed products with factors of degree 1 or 2 span, so the span in
/// degree `m` is `Σ_f L_f(span_{m - deg f})`. Jordan elements are reversal
/// invariant, so coordinates are reversal orbits, split by the number of 1s.
pub fn jordan_span_dim(n: usize) -> Result<u64> {
    if n == 0 || n > JORDAN_SPAN_BOUND {
        return Err(Error::Infeasible(format!("degree {n} outside 1..={JORDAN_SPAN_BOUND}")));
    }
    let ranks: Vec<usize> = DEFAULT_PRIMES[..2].iter().map(|&p| span_rank(n, p)).collect();
    // each modular rank is a lower bound on the rational rank
    Ok(*ranks.iter().max().unwrap() as u64)
}

type Block = Vec<Vec<(u64, u64)>>;

fn span_rank(n: usize, p: u64) -> usize {
    let fp = Fp::new(p);
    let half = fp.inv(2).unwrap();
    let w = |len: usize, bits: u64| Word::from_bits(len, bits);
    // factors of degree 1 and 2 as word combinations
    let f1: Vec<Vec<(Word, u64)>> = vec![vec![(w(1, 0), 1)], vec![(w(1, 1), 1)]];
    let f2: Vec<Vec<(Word, u64)>> = vec![
        vec![(w(2, 0), 1)],
        vec![(w(2, 0b01), half), (w(2, 0b10), half)],
        vec![(w(2, 0b11), 1)],
    ];
    // bases[m][a]: sparse vectors (word bits, coefficient) spanning degree m with a ones
    let mut bases: Vec<Vec<Block>> = vec![Vec::new()];
    bases.push(vec![vec![vec![(1, 1)]], vec![vec![(0, 1)]]]);
    let heads: Block = f2.iter().map(|f| f.iter().map(|(w, c)| (w.bits, *c)).collect()).collect();
    let mut deg2 = vec![Vec::new(); 3];
    for h in heads {
        let ones = 2 - (h[0].0.count_ones() as usize);
        deg2[ones].push(h);
    }
    bases.push(deg2);
    let mut last_rank = 0;
    for m in 3..=n {
        let mut blocks = Vec::with_capacity(m + 1);
        let mut total = 0;
        for a in 0..=m {
            let (orbits, index) = orbit_index(m, a);
            let mut ech = Echelon::new(orbits, p);
            let push = |v: HashMap<u64, u64>, ech: &mut Echelon, kept: &mut Block| {
                if ech.is_full() {
                    return;
                }
                let mut row = vec![0u64; orbits];
                for (bits, c) in &v {
                    let r = reversal(&w(m, *bits)).bits;
                    if r >= *bits {
                        row[index[bits]] = *c;
                    }
                }
                if ech.insert(row) {
                    kept.push(v.into_iter().filter(|(_, c)| *c != 0).collect());
                }
            };
            let mut kept: Block = Vec::new();
            for (k, fs) in [(1usize, &f1), (2, &f2)] {
                for f in fs.iter() {
                    let f_ones = k - f[0].0.bits.count_ones() as usize;
                    if f_ones > a || a - f_ones > m - k {
                        continue;
                    }
                    for v in &bases[m - k][a - f_ones] {
                        let mut out: HashMap<u64, u64> = HashMap::new();
                        for (fw, fc) in f {
                            for &(vb, vc) in v {
                                let c = fp.mul(fp.mul(*fc, vc), half);
                                let left = (fw.bits << (m - k)) | vb;
                                let right = (vb << k) | fw.bits;
                                for b in [left, right] {
                                    let e = out.entry(b).or_insert(0);
                                    *e = fp.add(*e, c);
                                }
                            }
                        }
                        push(out, &mut ech, &mut kept);
                    }
                }
            }
            total += ech.rank();
            blocks.push(kept);
        }
        bases.push(blocks);
        last_rank = total;
    }
    if n <= 2 {
        return bases[n].iter().map(Vec::len).sum();
    }
    last_rank
}

/// Reversal orbits of words of length `m` with `a` ones, indexed by their
/// smaller representative.
fn orbit_index(m: usize, a: usize) -> (usize, HashMap<u64, usize>) {
    let mut index = HashMap::new();
    for bits in 0..1u64 << m {
        if m - bits.count_ones() as usize != a {
            continue;
        }
        let r = reversal(&Word::from_bits(m, bits)).bits;
        if r >= bits {
            let k = index.len();
            index.insert(bits, k);
        }
    }
    (index.len(), index)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Two-colour necklaces of length `n` (rotations).
pub fn necklace_count(n: usize) -> u64 {
    assert!((1..63).contains(&n));
    let n64 = n as u64;
    (0..n64).map(|r| 1u64 << gcd(r, n64)).sum::<u64>() / n64
}

/// Two-colour bracelets of length `n` (rotations and reflections).
pub fn bracelet_count(n: usize) -> u64 {
    let neck = necklace_count(n);
    let reflections = if n % 2 == 1 {
        (n as u64) << n.div_ceil(2)
    } else {
        (n as u64 / 2) * ((1u64 << (n / 2 + 1)) + (1u64 << (n / 2)))
    };
    (neck * n as u64 + reflections) / (2 * n as u64)
}

/// `dim B(Jord(x₁, x₂))_n = 2^n - dim Jord(x₁, x₂)_n - necklaces + bracelets`.
pub fn b_dim_two_gen(n: usize) -> u64 {
    (1u64 << n) + bracelet_count(n) - reversible_dim(n) - necklace_count(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reversal_examples() {
        let w = Word::new(&[1, 2, 1]).unwrap();
        assert_eq!(reversal(&w), w);
        let w = Word::new(&[1, 1, 2]).unwrap();
        assert_eq!(reversal(&w).letters(), vec![2, 1, 1]);
        assert_eq!(w.to_string(), "112");
        for n in 0..=10 {
            for bits in 0..1u64 << n {
                let w = Word::from_bits(n, bits);
                assert_eq!(reversal(&reversal(&w)), w);
            }
        }
        assert!(Word::new(&[3]).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(necklace_count(1), 2);
        assert_eq!(bracelet_count(1), 2);
        assert_eq!(necklace_count(6), 14);
        assert_eq!(bracelet_count(6), 13);
        assert_eq!(b_dim_two_gen(6), 27);
        assert_eq!(b_dim_two_gen(1), 0);
        assert_eq!(b_dim_two_gen(10), 466);
    }

    #[test]
    fn jordan_products_are_reversible() {
        let x = AssocElement::word(Word::new(&[1]).unwrap());
        let y = AssocElement::word(Word::new(&[2]).unwrap());
        let e = x.jordan(&y).jordan(&x).jordan(&x.jordan(&y));
        assert!(e.is_reversible());
        assert!(!x.mul(&y).is_reversible());
    }

    #[test]
    fn small_span_dimensions() {
        assert_eq!(jordan_span_dim(1).unwrap(), 2);
        assert_eq!(jordan_span_dim(2).unwrap(), 3);
        assert_eq!(jordan_span_dim(5).unwrap(), 20);
        assert!(jordan_span_dim(0).is_err());
    }
}
