//! Exact combinatorial sequences, permutation-counting triangles, and
//! arbitrary-precision evaluation of nested parity-constrained series,
//! together with a verification harness for the identities that relate them.
//!
//! The crate is organized in layers:
//!
//! - [`exact`]: the eight integer/rational sequences (Bernoulli, Euler,
//!   Genocchi and friends) in exact arithmetic.
//! - [`perms`]: brute-force enumeration of down-up and Dumont permutations,
//!   used as an independent oracle for every count.
//! - [`triangles`]: the six triangular tables built from recurrences and
//!   explicit binomial sums.
//! - [`index`]: index combinatorics (weight, depth, duality, truncation).
//! - [`tvalues`]: numerical evaluation of T and T-tilde series and the
//!   weighted functional built on them.
//! - [`verify`]: the identity catalog; evaluates both sides of every
//!   registered relation and reports residuals.

pub mod exact;
pub mod gauss;
pub mod index;
pub mod perms;
pub mod report;
pub mod triangles;
pub mod tvalues;
pub mod verify;

pub use index::Index;
pub use report::CheckReport;
pub use rug::Float;
pub use tvalues::{EvalConfig, NumValue, Rigor};
