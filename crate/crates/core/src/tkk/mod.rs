//! Jordan algebras, the Lie algebras `sl₂ ⊗ J ⊕ B(J)` built from them, and
//! their Chevalley–Eilenberg homology as `sl₂`-modules.

mod algebra;
mod free;
mod homology;
mod jordan;
pub mod samples;
mod tag;

pub use algebra::{AlgebraFD, Kind, SparseVec};
pub use free::{truncated_free_jordan, SPECIAL_DEGREE_BOUND, TRUNCATION_DIM_CAP};
pub use homology::{ce_homology, sl2_decompose, Homology, CHAIN_CAP};
pub use jordan::{b_inner_map, b_space, d_operator, inner_derivations, is_derivation, BInnerReport, BSpace, DerivationSpace};
pub use tag::{tag, Tag};
