//! Partitions, permutations, symmetric-group characters and Kostka numbers.

mod chars;
mod kostka;
mod partition;
mod perm;

pub use chars::{character, CharacterTable};
pub use kostka::{kostka, KostkaCache};
pub use partition::{partitions, partitions_bounded, Partition, SnModule, VirtualSnModule};
pub use perm::{all_permutations, compose, cycle_type, inverse, sign, Perm};
