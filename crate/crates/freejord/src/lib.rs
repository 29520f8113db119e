//! Command line, file formats, result cache and parallel dispatch for
//! `freejord-core`.

pub mod cache;
pub mod cli;
pub mod compute;
pub mod format;
pub mod report;
pub mod verify;
