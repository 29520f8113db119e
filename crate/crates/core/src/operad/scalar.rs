use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::kernel::{Fp, Q};

/// Coefficient arithmetic for straightening: exact rationals or a prime field.
pub trait Scalars {
    type E: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::E;
    fn int(&self, k: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn half(&self) -> Self::E;
}

/// Exact rational coefficients.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Scalars for Rationals {
    type E = Q;
    fn zero(&self) -> Q {
        Q::zero()
    }
    fn int(&self, k: i64) -> Q {
        Q::from_integer(k.into())
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn half(&self) -> Q {
        Q::new(One::one(), 2.into())
    }
}

impl Scalars for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn int(&self, k: i64) -> u64 {
        Fp::from_i64(*self, k)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        Fp::add(*self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        Fp::mul(*self, *a, *b)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn half(&self) -> u64 {
        self.inv(2).expect("odd prime")
    }
}
