//! Truncated series in `z` whose coefficients are Laurent polynomials in `t`,
//! and the residue-based dimension predictor built on them.
//!
//! For `p` generators the predicted dimensions `a_1, a_2, ...` are the unique
//! integers for which every `z`-coefficient of
//!
//! ```text
//! (1 - p z - t + p z t^-1) * prod_n (1 - z^n (t + t^-1) + z^2n)^(a_n)
//! ```
//!
//! has vanishing coefficient of `t^-1`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Laurent polynomial in `t` with integer coefficients. No zero coefficient is stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of `t^-1`.
    pub fn residue(&self) -> BigInt {
        self.coeff(-1)
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }
}

/// Coefficient of `t^-1`.
pub fn residue(f: &LaurentPoly) -> BigInt {
    f.residue()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign() == Sign::Minus;
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "t^{e}")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `z` up to degree `order` (inclusive) with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedLaurentSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedLaurentSeries { coeffs: vec![LaurentPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: Vec<LaurentPoly>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Product in `Q[t, 1/t][z] / (z^(N+1))` with `N` the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        out.debug_check_bounds();
        out
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != LaurentPoly::one() {
            return Err(Error::input("only series with constant term 1 are inverted"));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = LaurentPoly::one();
        for k in 1..=order {
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !inv.coeffs[k - j].is_zero() {
                    acc = &acc - &(&self.coeffs[j] * &inv.coeffs[k - j]);
                }
            }
            inv.coeffs[k] = acc;
        }
        Ok(inv)
    }

    /// `self^e` by binary powering; negative exponents need constant term 1.
    pub fn pow(&self, e: &BigInt) -> Result<Self> {
        let order = self.order();
        let (base, mag) = if e.is_negative() { (self.inverse()?, -e) } else { (self.clone(), e.clone()) };
        let mut result = Self::one(order);
        let bits = mag.bits();
        for i in (0..bits).rev() {
            result = result.mul(&result);
            if mag.bit(i) {
                result = result.mul(&base);
            }
        }
        Ok(result)
    }

    /// Every coefficient evaluated at `t = 1`.
    pub fn at_t_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(LaurentPoly::at_one).collect()
    }

    fn debug_check_bounds(&self) {
        #[cfg(debug_assertions)]
        for (k, c) in self.coeffs.iter().enumerate() {
            if let (Some(lo), Some(hi)) = (c.min_exp(), c.max_exp()) {
                debug_assert!(lo >= -(k as i32) - 1 && hi <= k as i32 + 1, "t-exponent out of range");
            }
        }
    }
}

/// Generator count and dimensions `a_1..a_N` (index 0 holds `a_1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimSequence {
    pub generators: u32,
    pub dims: Vec<BigInt>,
}

impl DimSequence {
    pub fn new(generators: u32, dims: Vec<BigInt>) -> Self {
        DimSequence { generators, dims }
    }

    pub fn from_u64(generators: u32, dims: &[u64]) -> Self {
        DimSequence { generators, dims: dims.iter().map(|&d| BigInt::from(d)).collect() }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `a_n` for `n >= 1`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.dims[n - 1]
    }

    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.dims.iter().map(ToPrimitive::to_u64).collect()
    }
}

/// `1 - p z - t + p z t^-1`.
fn prefactor(p: u32, order: usize) -> TruncatedLaurentSeries {
    let p = BigInt::from(p);
    TruncatedLaurentSeries::from_coeffs(
        order,
        vec![
            LaurentPoly::from_terms([(0, BigInt::one()), (1, -BigInt::one())]),
            LaurentPoly::from_terms([(0, -p.clone()), (-1, p)]),
        ],
    )
}

/// `(1 - z^n (t + t^-1) + z^2n)^a` truncated at `order`.
///
/// When `2n > order` only the linear term survives and the closed form
/// `1 - a z^n (t + t^-1)` is used.
pub fn degree_factor(n: usize, a: &BigInt, order: usize) -> Result<TruncatedLaurentSeries> {
    assert!(n >= 1);
    let mut s = TruncatedLaurentSeries::one(order);
    if n > order || a.is_zero() {
        return Ok(s);
    }
    if 2 * n > order {
        s.coeffs[n] = LaurentPoly::from_terms([(1, -a), (-1, -a)]);
        return Ok(s);
    }
    s.coeffs[n] = LaurentPoly::from_terms([(1, -1), (-1, -1)]);
    s.coeffs[2 * n] = LaurentPoly::one();
    s.pow(a)
}

/// The prefactor times the product of all degree factors up to `order`.
pub fn conjecture_series(p: u32, dims: &DimSequence, order: usize) -> Result<TruncatedLaurentSeries> {
    if dims.len() < order {
        return Err(Error::input("dimension sequence shorter than the truncation order"));
    }
    let mut s = prefactor(p, order);
    for n in 1..=order {
        s = s.mul(&degree_factor(n, dims.get(n), order)?);
    }
    Ok(s)
}

/// Degree-by-degree solve for the unique sequence with vanishing residues.
///
/// The `z^n` residue depends on `a_n` through `-a_n` only, so `a_n` equals the
/// residue computed with `a_n = 0`.
pub fn predict_dims(p: u32, order: usize) -> Result<DimSequence> {
    if p == 0 || order == 0 {
        return Err(Error::input("need p >= 1 and N >= 1"));
    }
    let pre = prefactor(p, order);
    let mut product = TruncatedLaurentSeries::one(order);
    let mut dims = Vec::with_capacity(order);
    for n in 1..=order {
        let coeff = &(pre.coeff(0) * product.coeff(n)) + &(pre.coeff(1) * product.coeff(n - 1));
        let a = coeff.residue();
        product = product.mul(&degree_factor(n, &a, order)?);
        dims.push(a);
    }
    Ok(DimSequence::new(p, dims))
}

/// Per-degree residues of the conjecture series for a given sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueReport {
    pub generators: u32,
    /// `residues[k]` is the residue of the `z^(k+1)` coefficient.
    pub residues: Vec<BigInt>,
    pub first_nonzero: Option<usize>,
}

pub fn check_sequence(p: u32, dims: &DimSequence) -> Result<ResidueReport> {
    let order = dims.len();
    let s = conjecture_series(p, dims, order)?;
    let residues: Vec<BigInt> = (1..=order).map(|k| s.coeff(k).residue()).collect();
    let first_nonzero = residues.iter().position(|r| !r.is_zero()).map(|i| i + 1);
    Ok(ResidueReport { generators: p, residues, first_nonzero })
}
