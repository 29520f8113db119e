//! Small algebras used in examples and checks.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{AlgebraFD, Kind};
use crate::kernel::{q, qf};
use crate::Result;

/// The ground field as a Jordan algebra: one idempotent.
pub fn ground_field() -> AlgebraFD {
    AlgebraFD::new(Kind::Jordan, vec!["1".to_string()], vec![0], None, &[(0, 0, 0, q(1))]).unwrap()
}

/// `𝕜ⁿ` with coordinatewise product.
pub fn diagonal(n: usize) -> AlgebraFD {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let products: Vec<_> = (0..n).map(|i| (i, i, i, q(1))).collect();
    AlgebraFD::new(Kind::Jordan, labels, vec![0; n], None, &products).unwrap()
}

/// Symmetric 2×2 matrices under `(AB + BA)/2`, basis `E11, E22, E12 + E21`.
pub fn symmetric_2x2() -> AlgebraFD {
    let labels = vec!["E11".to_string(), "E22".to_string(), "S".to_string()];
    let products = [
        (0, 0, 0, q(1)),
        (1, 1, 1, q(1)),
        (0, 2, 2, qf(1, 2)),
        (2, 0, 2, qf(1, 2)),
        (1, 2, 2, qf(1, 2)),
        (2, 1, 2, qf(1, 2)),
        (2, 2, 0, q(1)),
        (2, 2, 1, q(1)),
    ];
    AlgebraFD::new(Kind::Jordan, labels, vec![0; 3], None, &products).unwrap()
}

/// The free Jordan superalgebra on one odd generator: `𝕜x` with `x·x = 0`.
pub fn odd_square_zero() -> AlgebraFD {
    AlgebraFD::new(Kind::Jordan, vec!["x".to_string()], vec![1], Some(vec![1]), &[]).unwrap()
}

/// The abelian Lie algebra of dimension `n`.
pub fn abelian_lie(n: usize) -> AlgebraFD {
    let labels = (1..=n).map(|i| format!("a{i}")).collect();
    AlgebraFD::new(Kind::Lie, labels, vec![0; n], None, &[]).unwrap()
}

/// `sl₂` with basis `e, h, f`, carrying its weights.
pub fn sl2() -> Result<AlgebraFD> {
    let labels = vec!["e".to_string(), "h".to_string(), "f".to_string()];
    let products = [
        (0, 2, 1, q(1)),
        (2, 0, 1, q(-1)),
        (1, 0, 0, q(2)),
        (0, 1, 0, q(-2)),
        (1, 2, 2, q(-2)),
        (2, 1, 2, q(2)),
    ];
    AlgebraFD::new(Kind::Lie, labels, vec![0; 3], None, &products)?.with_weights(vec![2, 0, -2])
}
