use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{PowerSumBasis, Sl2Character};
use crate::combinat::{CharacterTable, Partition};
use crate::kernel::Q;
use crate::{Error, Result};

/// One degree: `q`-exponent to power-sum coordinates.
pub type Homog = BTreeMap<i32, Vec<Q>>;

/// A truncated graded element of `Λ_d ⊗ R(sl2)`, degrees `0..=order`.
#[derive(Clone, Debug)]
pub struct GradedVirtualCharacter {
    basis: Arc<PowerSumBasis>,
    order: usize,
    parts: Vec<Homog>,
}

impl PartialEq for GradedVirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.basis.d() == other.basis.d() && self.order == other.order && self.parts == other.parts
    }
}

fn add_to(h: &mut Homog, exp: i32, v: &[Q], scale: &Q) {
    let n = v.len();
    let slot = h.entry(exp).or_insert_with(|| Vec::from_iter((0..n).map(|_| Q::zero())));
    for (s, x) in slot.iter_mut().zip(v) {
        if !x.is_zero() {
            *s += x * scale;
        }
    }
    if slot.iter().all(Zero::is_zero) {
        h.remove(&exp);
    }
}

impl GradedVirtualCharacter {
    pub fn zero(d: usize, order: usize) -> Self {
        Self::zero_on(Arc::new(PowerSumBasis::new(d, order)), order)
    }

    pub fn zero_on(basis: Arc<PowerSumBasis>, order: usize) -> Self {
        assert!(order <= basis.order());
        GradedVirtualCharacter { basis, order, parts: (0..=order).map(|_| Homog::new()).collect() }
    }

    pub fn one_on(basis: Arc<PowerSumBasis>, order: usize) -> Self {
        let mut x = Self::zero_on(basis, order);
        x.parts[0].insert(0, alloc::vec![Q::one()]);
        x
    }

    /// `ch V = p_1` in degree one.
    pub fn defining(d: usize, order: usize) -> Self {
        let mut x = Self::zero(d, order);
        x.add_power_sum(&[1], &Q::one(), &Sl2Character::irreducible(0));
        x
    }

    pub fn basis(&self) -> &Arc<PowerSumBasis> {
        &self.basis
    }

    pub fn d(&self) -> usize {
        self.basis.d()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self, n: usize) -> &Homog {
        &self.parts[n]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(BTreeMap::is_empty)
    }

    /// Adds `v ⊗ c` in degree `n` (`v` in this basis).
    pub fn add_class(&mut self, n: usize, v: &[Q], c: &Sl2Character) {
        if n > self.order {
            return;
        }
        for (e, k) in c.terms() {
            add_to(&mut self.parts[n], e, v, &Q::from_integer(k.clone()));
        }
    }

    /// Adds `coeff · p_{k_1} p_{k_2} ⋯ ⊗ c`.
    pub fn add_power_sum(&mut self, ks: &[usize], coeff: &Q, c: &Sl2Character) {
        let n: usize = ks.iter().sum();
        if n > self.order {
            return;
        }
        let v: Vec<Q> = self.basis.power_sum(ks).into_iter().map(|x| x * coeff).collect();
        self.add_class(n, &v, c);
    }

    /// Adds `coeff · s_λ ⊗ c`.
    pub fn add_schur(&mut self, lam: &Partition, coeff: &Q, c: &Sl2Character) {
        let n = lam.size();
        if n > self.order {
            return;
        }
        let table = CharacterTable::new(n);
        let mut v = self.basis.zero(n);
        for mu in table.partitions() {
            let k = Q::from_integer(table.value(lam, mu).into()) / Q::from_integer(mu.z()) * coeff;
            for (s, x) in v.iter_mut().zip(self.basis.power_sum(mu.parts())) {
                *s += x * &k;
            }
        }
        self.add_class(n, &v, c);
    }

    fn common(&self, other: &Self) -> Result<(Arc<PowerSumBasis>, usize)> {
        if self.d() != other.d() {
            return Err(Error::input(format!("variable counts differ: {} and {}", self.d(), other.d())));
        }
        let basis = if self.basis.order() >= other.basis.order() { &self.basis } else { &other.basis };
        Ok((basis.clone(), self.order.min(other.order)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Q::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-Q::one())
    }

    fn combine(&self, other: &Self, sign: &Q) -> Result<Self> {
        let (basis, order) = self.common(other)?;
        let mut out = Self::zero_on(basis, order);
        for n in 0..=order {
            out.parts[n] = self.parts[n].clone();
            for (e, v) in &other.parts[n] {
                add_to(&mut out.parts[n], *e, v, sign);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut out = Self::zero_on(self.basis.clone(), self.order);
        for n in 0..=self.order {
            for (e, v) in &self.parts[n] {
                add_to(&mut out.parts[n], *e, v, k);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (basis, order) = self.common(other)?;
        let mut out = Self::zero_on(basis.clone(), order);
        for t in 0..=order {
            let mut acc = Homog::new();
            for i in 0..=t {
                let (a, b) = (&self.parts[i], &other.parts[t - i]);
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                for (e, va) in a {
                    for (f, vb) in b {
                        let slot = acc.entry(e + f).or_insert_with(|| basis.zero(t));
                        basis.mul_into(i, va, t - i, vb, slot);
                    }
                }
            }
            acc.retain(|_, v| !v.iter().all(Zero::is_zero));
            out.parts[t] = acc;
        }
        Ok(out)
    }

    /// `ψ^m`: `p_k -> p_{km}`, `q -> q^m`.
    pub fn adams(&self, m: usize) -> Self {
        assert!(m >= 1);
        let mut out = Self::zero_on(self.basis.clone(), self.order);
        for n in 0..=self.order / m {
            for (e, v) in &self.parts[n] {
                let mut w = self.basis.zero(n * m);
                for (mu, c) in self.basis.partitions(n).iter().zip(v) {
                    if c.is_zero() {
                        continue;
                    }
                    let ks: Vec<usize> = mu.parts().iter().map(|k| k * m).collect();
                    for (s, x) in w.iter_mut().zip(self.basis.power_sum(&ks)) {
                        if !x.is_zero() {
                            *s += x * c;
                        }
                    }
                }
                add_to(&mut out.parts[n * m], e * m as i32, &w, &Q::one());
            }
        }
        out
    }

    /// `λ(X) = exp(-Σ_m ψ^m(X)/m)`; `X` must have no degree-zero part.
    pub fn lambda_op(&self) -> Result<Self> {
        if !self.parts[0].is_empty() {
            return Err(Error::input("λ needs an element of the augmentation ideal"));
        }
        let order = self.order;
        // h[k] = k·G_k with G = -Σ_m ψ^m(X)/m
        let mut h: Vec<Homog> = (0..=order).map(|_| Homog::new()).collect();
        for m in 1..=order {
            let psi = self.adams(m);
            for (k, part) in psi.parts.iter().enumerate().skip(1) {
                let w = -Q::from_integer((k / m).into());
                for (e, v) in part {
                    add_to(&mut h[k], *e, v, &w);
                }
            }
        }
        let hx = GradedVirtualCharacter { basis: self.basis.clone(), order, parts: h };
        let mut out = Self::one_on(self.basis.clone(), order);
        // n F_n = Σ_k h_k F_{n-k}
        for n in 1..=order {
            let mut acc = Homog::new();
            for k in 1..=n {
                let (a, b) = (&hx.parts[k], &out.parts[n - k]);
                for (e, va) in a {
                    for (f, vb) in b {
                        let slot = acc.entry(e + f).or_insert_with(|| self.basis.zero(n));
                        self.basis.mul_into(k, va, n - k, vb, slot);
                    }
                }
            }
            let inv = Q::new(1.into(), n.into());
            let mut part = Homog::new();
            for (e, v) in acc {
                add_to(&mut part, e, &v, &inv);
            }
            out.parts[n] = part;
        }
        Ok(out)
    }

    /// Multiplicity of `[L(m)]` in every degree, as a `q`-trivial element.
    pub fn isotype(&self, m: u32) -> Self {
        let mut out = Self::zero_on(self.basis.clone(), self.order);
        for n in 0..=self.order {
            out.parts[n] = isotype_of(&self.parts[n], m);
        }
        out
    }

    /// Keeps only degrees `≤ order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        GradedVirtualCharacter { basis: self.basis.clone(), order, parts: self.parts[..=order].to_vec() }
    }

    /// The element concentrated in degree `n`.
    pub fn homogeneous_part(&self, n: usize) -> Self {
        let mut out = Self::zero_on(self.basis.clone(), self.order);
        out.parts[n] = self.parts[n].clone();
        out
    }

    pub fn is_q_trivial(&self) -> bool {
        self.parts.iter().all(|h| h.keys().all(|&e| e == 0))
    }

    /// Power-sum coordinates of the `q^0` component in degree `n`.
    pub fn coords(&self, n: usize) -> Vec<Q> {
        self.parts[n].get(&0).cloned().unwrap_or_else(|| self.basis.zero(n))
    }
}

/// `coeff(q^m) - coeff(q^{m+2})`.
pub fn isotype_of(h: &Homog, m: u32) -> Homog {
    let mut out = Homog::new();
    if let Some(v) = h.get(&(m as i32)) {
        add_to(&mut out, 0, v, &Q::one());
    }
    if let Some(v) = h.get(&(m as i32 + 2)) {
        add_to(&mut out, 0, v, &-Q::one());
    }
    out
}
