//! Exact computations around free Jordan algebras.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! algorithms: residue series for the dimension predictor, the
//! character ring used for the module-level prediction, partitions and
//! symmetric-group representations, the multilinear rank method for the
//! Jordan operad, the two-generator special Jordan algebra, and the
//! Tits–Allison–Gao Lie algebra with its Chevalley–Eilenberg homology.
//!
//! IO, caching, threading and the command line live in the `freejord`
//! companion crate.
#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod clifton;
pub mod combinat;
pub mod error;
pub mod kernel;
pub mod operad;
pub mod reference;
pub mod series;
pub mod special;
pub mod symfunc;
pub mod tkk;

pub use error::{Error, Result};
