//! The character ring of `GL_d × sl2`: power sums, Adams operations, the
//! λ-operation, and the degree-by-degree solve for the predicted classes
//! `a` and `b`.

mod basis;
mod graded;
mod sl2;

pub use basis::PowerSumBasis;
pub use graded::{isotype_of, GradedVirtualCharacter, Homog};
pub use sl2::Sl2Character;

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{CharacterTable, Partition, VirtualSnModule};
use crate::kernel::Q;
use crate::series::DimSequence;
use crate::{Error, Result};

/// The pair `(a, b)` solving `[λ(a[L2] + b[L0]) : L0] = 1` and
/// `[λ(a[L2] + b[L0]) : L2] = -[V]` up to degree `order`.
#[derive(Clone, Debug)]
pub struct KmPrediction {
    pub a: GradedVirtualCharacter,
    pub b: GradedVirtualCharacter,
}

/// Degree-by-degree solve: in degree `n` the new classes enter only through
/// the linear term `-(a_n[L2] + b_n[L0])`.
pub fn km_prediction(d: usize, order: usize) -> Result<KmPrediction> {
    if d == 0 {
        return Err(Error::input("need at least one variable"));
    }
    let basis = Arc::new(PowerSumBasis::new(d, order));
    let l0 = Sl2Character::irreducible(0);
    let l2 = Sl2Character::irreducible(2);
    let mut a = GradedVirtualCharacter::zero_on(basis.clone(), order);
    let mut b = GradedVirtualCharacter::zero_on(basis.clone(), order);
    let mut acc = GradedVirtualCharacter::one_on(basis.clone(), order);
    for n in 1..=order {
        let rest = acc.degree(n);
        let mut an = isotype_of(rest, 2).remove(&0).unwrap_or_else(|| basis.zero(n));
        let bn = isotype_of(rest, 0).remove(&0).unwrap_or_else(|| basis.zero(n));
        if n == 1 {
            an[0] += Q::one();
        }
        a.add_class(n, &an, &l0);
        b.add_class(n, &bn, &l0);
        let mut y = GradedVirtualCharacter::zero_on(basis.clone(), order);
        y.add_class(n, &an, &l2);
        y.add_class(n, &bn, &l0);
        acc = acc.mul(&y.lambda_op()?)?;
    }
    Ok(KmPrediction { a, b })
}

impl KmPrediction {
    /// `a[L2] + b[L0]`.
    pub fn combined(&self) -> Result<GradedVirtualCharacter> {
        let order = self.a.order();
        let mut y = GradedVirtualCharacter::zero_on(self.a.basis().clone(), order);
        let l2 = Sl2Character::irreducible(2);
        let l0 = Sl2Character::irreducible(0);
        for n in 1..=order {
            y.add_class(n, &self.a.coords(n), &l2);
            y.add_class(n, &self.b.coords(n), &l0);
        }
        Ok(y)
    }

    /// Recomputes `λ(a[L2] + b[L0])` and checks both defining identities.
    pub fn verify(&self) -> Result<bool> {
        let lam = self.combined()?.lambda_op()?;
        let one = GradedVirtualCharacter::one_on(self.a.basis().clone(), self.a.order());
        let v = GradedVirtualCharacter::defining(self.a.d(), self.a.order());
        Ok(lam.isotype(0) == one && lam.isotype(2) == v.scale(&-Q::one()))
    }
}

fn require_lossless(x: &GradedVirtualCharacter, n: usize) -> Result<()> {
    if n > x.order() {
        return Err(Error::input(format!("degree {n} beyond truncation {}", x.order())));
    }
    if x.d() < n {
        return Err(Error::input(format!("{} variables cannot resolve degree {n}", x.d())));
    }
    if x.degree(n).keys().any(|&e| e != 0) {
        return Err(Error::input("Schur decomposition needs an sl2-trivial class"));
    }
    Ok(())
}

/// Signed Schur multiplicities of the degree-`n` part.
pub fn schur_decompose(x: &GradedVirtualCharacter, n: usize) -> Result<VirtualSnModule> {
    require_lossless(x, n)?;
    let coords = x.coords(n);
    let table = CharacterTable::new(n);
    let basis = x.basis();
    let mut out = VirtualSnModule::new(n);
    for lam in table.partitions() {
        let mut m = Q::zero();
        for (mu, c) in basis.partitions(n).iter().zip(&coords) {
            if !c.is_zero() {
                m += c * Q::from_integer(table.value(lam, mu).into());
            }
        }
        if !m.is_integer() {
            return Err(Error::Internal(format!("non-integral multiplicity {m} for {lam}")));
        }
        out.set(lam.clone(), m.to_integer());
    }
    Ok(out)
}

/// The class `Σ m_λ s_λ` in degree `module.n`.
pub fn from_schur(d: usize, order: usize, module: &VirtualSnModule) -> GradedVirtualCharacter {
    let mut x = GradedVirtualCharacter::zero(d, order);
    let l0 = Sl2Character::irreducible(0);
    for (lam, k) in &module.mult {
        x.add_schur(lam, &Q::from_integer(k.clone()), &l0);
    }
    x
}

/// Outcome of an effectivity check in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Effectivity {
    pub effective: bool,
    pub negatives: Vec<(Partition, BigInt)>,
}

pub fn effectivity_check(x: &GradedVirtualCharacter, n: usize) -> Result<Effectivity> {
    let m = schur_decompose(x, n)?;
    let negatives: Vec<(Partition, BigInt)> = m.negatives().into_iter().map(|l| {
        let k = m.get(&l);
        (l, k)
    }).collect();
    Ok(Effectivity { effective: negatives.is_empty(), negatives })
}

/// Dimensions in `d` variables: `p_k -> d`, `q -> 1`.
///
/// `x` must either live in `d` variables or in enough variables to be
/// lossless up to its truncation.
pub fn dims_from_character(x: &GradedVirtualCharacter, d: usize) -> Result<DimSequence> {
    if x.d() != d && x.d() < x.order() {
        return Err(Error::input(format!("class in {} variables cannot be evaluated in {d}", x.d())));
    }
    let mut dims = Vec::with_capacity(x.order());
    for n in 1..=x.order() {
        let mut total = Q::zero();
        for v in x.degree(n).values() {
            total += x.basis().eval_power_sums(n, v, d);
        }
        if !total.is_integer() {
            return Err(Error::Internal(format!("non-integral dimension {total} in degree {n}")));
        }
        dims.push(total.to_integer());
    }
    Ok(DimSequence::new(d as u32, dims))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn adams_and_lambda_basics() {
        let x = GradedVirtualCharacter::defining(2, 4);
        assert_eq!(x.adams(1), x);
        let mut p2 = GradedVirtualCharacter::zero(2, 4);
        p2.add_power_sum(&[2], &q(1), &Sl2Character::irreducible(0));
        assert_eq!(x.adams(2), p2);
        let zero = GradedVirtualCharacter::zero(2, 4);
        assert_eq!(zero.lambda_op().unwrap(), GradedVirtualCharacter::one_on(zero.basis().clone(), 4));
        // λ(V) = 1 - V + Λ²V - …, so degree 2 is +e_2
        let lam = x.lambda_op().unwrap();
        let mut e2 = GradedVirtualCharacter::zero(2, 4);
        e2.add_schur(&p("1,1"), &q(1), &Sl2Character::irreducible(0));
        assert_eq!(lam.homogeneous_part(2), e2.homogeneous_part(2));
        assert!(lam.homogeneous_part(3).is_zero());
        assert!(GradedVirtualCharacter::one_on(x.basis().clone(), 4).lambda_op().is_err());
    }

    #[test]
    fn low_degrees() {
        let km = km_prediction(4, 4).unwrap();
        let a2 = schur_decompose(&km.a, 2).unwrap();
        assert_eq!(a2.get(&p("2")), BigInt::from(1));
        assert_eq!(a2.get(&p("1,1")), BigInt::from(0));
        let b2 = schur_decompose(&km.b, 2).unwrap();
        assert_eq!(b2.get(&p("1,1")), BigInt::from(1));
        assert!(schur_decompose(&km.b, 1).unwrap().mult.is_empty());
        assert_eq!(schur_decompose(&km.a, 4).unwrap().get(&p("2,2")), BigInt::from(2));
        assert!(km.verify().unwrap());
    }

    #[test]
    fn lossy_requests_are_refused() {
        let km = km_prediction(2, 4).unwrap();
        assert!(schur_decompose(&km.a, 3).is_err());
        assert!(dims_from_character(&km.a, 3).is_err());
        let neg = from_schur(1, 1, &{
            let mut m = VirtualSnModule::new(1);
            m.set(p("1"), BigInt::from(-1));
            m
        });
        let e = effectivity_check(&neg, 1).unwrap();
        assert!(!e.effective);
        assert_eq!(e.negatives, alloc::vec![(p("1"), BigInt::from(-1))]);
    }
}
