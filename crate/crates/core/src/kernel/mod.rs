//! Exact scalars and dense linear algebra over prime fields and the rationals.

mod certified;
mod modmat;
mod modp;
mod qechelon;
mod qmat;

pub use certified::{certified_rank, CertLevel, CertifiedRank};
pub use modmat::{nullspace_mod_p, rank_mod_p, Echelon, ModMatrix};
pub use modp::{is_prime, Fp, DEFAULT_PRIMES};
pub use qechelon::QEchelon;
pub use qmat::{bareiss_rank, QMatrix, Rref};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}
