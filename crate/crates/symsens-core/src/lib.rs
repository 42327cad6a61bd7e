//! Sensitivity analysis of symmetric Boolean functions.
//!
//! A symmetric function of `n` variables is determined by the `n + 1`
//! values it takes on inputs of each Hamming weight. This crate works with
//! that compact representation end to end:
//!
//! * [`symmetric`] — compact truth tables, their run-length compositions,
//!   and per-weight sensitivities in O(n) time;
//! * [`brute`] — the literal-definition sensitivity oracle over full
//!   `2^n`-entry truth tables, used to validate the fast path;
//! * [`counting`] — exact counts of functions by sensitivity class via a
//!   two-term linear recurrence and rational generating functions, with
//!   arbitrary-precision integers;
//! * [`distribution`] — exhaustive census of all `2^(n+1)` functions,
//!   including checks of the unit-part criterion for maximum sensitivity
//!   and of the lower bound on non-trivial sensitivities.
//!
//! All types are immutable after construction and all operations are pure,
//! so everything is safe to share and call concurrently. The crate is
//! `no_std`-compatible (requires `alloc`); the default `std` feature only
//! forwards to the arithmetic dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod bits;

pub mod brute;
pub mod counting;
pub mod distribution;
pub mod error;
pub mod symmetric;

pub use brute::{TruthTable, FULL_TABLE_CAP};
pub use counting::{CountRow, CountSeries, RationalGf};
pub use distribution::{SensitivityHistogram, TableRow, UnitPartReport, TuranReport};
pub use error::Error;
pub use symmetric::{
    compress, CompactTruthTable, CompressOutcome, Composition, NotSymmetricWitness,
    SensitivityProfile,
};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
