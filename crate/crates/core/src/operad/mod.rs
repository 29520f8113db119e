//! The multilinear components `Jord(n)` of the Jordan operad.
//!
//! Monomials are rewritten into left-normed products whose factors have
//! degree 1 or 2; the identities of degree `n` are generated from the
//! linearised Jordan identity by substitution and multiplication, and the
//! multiplicity of each `V_λ` is the corank of the matrix obtained by
//! pairing the identities with Clifton's matrices.

mod consequence;
mod hentzel;
mod multidegree;
mod naive;
mod normal;
mod scalar;
mod straighten;
mod tree;

pub use consequence::{consequences, GeneratingSet, MarkedTree};
pub use hentzel::{jord_module, multiplicity, HentzelBlock, JordanOperad, JORD_MODULE_BOUND};
pub use multidegree::{multidegree_dim, multidegree_support, MULTIDEGREE_WIDTH_CAP};
pub use naive::{naive_dim, NaiveQuotient, NAIVE_BOUND};
pub use normal::{normal_types, Factor, NormalMonomial, NormalType};
pub use scalar::{Rationals, Scalars};
pub use straighten::{Comb, Straightener};
pub use tree::{comm_types, labelled_trees, CommTree};

use alloc::vec::Vec;

use crate::kernel::Q;

/// Normal form of a multilinear tree with rational coefficients.
pub fn straighten(t: &CommTree) -> Vec<(NormalMonomial, Q)> {
    Straightener::new(Rationals).straighten(t)
}
