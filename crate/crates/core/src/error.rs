use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("prime {prime} disagrees with the other primes (rank {rank} vs {expected})")]
    UnluckyPrime { prime: u64, rank: usize, expected: usize },
    #[error("computation refused as infeasible: {0}")]
    Infeasible(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
