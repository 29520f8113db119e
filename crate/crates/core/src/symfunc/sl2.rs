use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A virtual `sl2`-character as a Laurent polynomial in `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sl2Character {
    coeffs: BTreeMap<i32, BigInt>,
}

impl Sl2Character {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `[L(m)]`: weights `m, m-2, …, -m`.
    pub fn irreducible(m: u32) -> Self {
        let m = m as i32;
        let mut c = Self::zero();
        for e in (-m..=m).step_by(2) {
            c.add_term(e, BigInt::from(1));
        }
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (e, k) in terms {
            c.add_term(e, BigInt::from(k));
        }
        c
    }

    pub fn add_term(&mut self, exp: i32, k: BigInt) {
        let slot = self.coeffs.entry(exp).or_default();
        *slot += k;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, k)| (*e, k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, k)| self.coeff(-e) == *k)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = Self::zero();
        for (e, k) in &self.coeffs {
            for (f, l) in &other.coeffs {
                c.add_term(e + f, k * l);
            }
        }
        c
    }

    /// `q -> q^m`.
    pub fn adams(&self, m: u32) -> Self {
        let coeffs = self.coeffs.iter().map(|(e, k)| (e * m as i32, k.clone())).collect();
        Sl2Character { coeffs }
    }

    /// Multiplicity of `[L(m)]`.
    pub fn isotype(&self, m: u32) -> BigInt {
        self.coeff(m as i32) - self.coeff(m as i32 + 2)
    }

    /// Highest weight to multiplicity, for symmetric characters.
    pub fn decompose(&self) -> BTreeMap<u32, BigInt> {
        let top = self.coeffs.keys().next_back().copied().unwrap_or(0).max(0) as u32;
        (0..=top).map(|m| (m, self.isotype(m))).filter(|(_, k)| !k.is_zero()).collect()
    }

    pub fn dim(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_negative(&self) -> bool {
        self.coeffs.values().any(|k| k.is_negative())
    }
}
