//! Cycles of gaps in Eratosthenes sieve.
//!
//! After Eratosthenes sieve has removed the multiples of every prime up to
//! `p`, the surviving candidates repeat with period `p#` (the primorial of
//! `p`), and the gaps between consecutive candidates form a cycle `G(p#)`.
//! This crate constructs those cycles exactly, counts their gaps,
//! constellations and driving terms, and evolves the counts forward through
//! later stages of the sieve with an exact linear population model whose
//! eigenvectors are binomial matrices independent of the stage prime.
//!
//! The main pieces:
//!
//! - [`cycle`] — construction of `G(N)` for primorial and general `N`, the
//!   closure plans that drive one stage to the next, overflow-checked and
//!   optionally streaming or multi-worker (deterministic for any worker
//!   count).
//! - [`census`] — exact counts `n_{g,j}(N)` of driving terms of sum `g` and
//!   length `j`, cyclic and overlap-counting, with sharded and streamed
//!   variants that produce identical tables.
//! - [`dynamics`] — the upper-bidiagonal transfer matrix `M_J(p)`, its fixed
//!   binomial eigenvector matrices `R` and `L`, exact evolution of ratio
//!   vectors, eigenvalue products `a_j^k`, and the primorial crossover
//!   estimate.
//! - [`polignac`] — radical decompositions, closed-form driving-term totals,
//!   and the Hardy–Littlewood-style asymptotic ratio for arbitrary even gaps.
//! - [`bridge`] — the prefix of a cycle that already consists of true prime
//!   gaps, validated against an independent segmented sieve.
//! - [`format`] — the binary `GCYC` cycle file format.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `gapcycles` binary for the command-line surface.

pub mod bridge;
pub mod census;
pub mod cycle;
pub mod dd;
pub mod dynamics;
pub mod format;
pub mod polignac;
pub mod selfcheck;
pub mod sieve;

pub use census::{CensusTable, Constellation, RatioVector};
pub use cycle::{ClosurePlan, GapCycle, StreamSummary};
pub use dynamics::{EigenStructure, EigenvalueProducts, TransferMatrix};
pub use polignac::RadicalDecomposition;

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cycle over {0} is not a primorial cycle")]
    NonPrimorial(u64),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("malformed cycle file: {0}")]
    Format(String),
    #[error("visitor aborted: {0}")]
    Aborted(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
