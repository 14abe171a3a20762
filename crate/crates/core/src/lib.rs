//! Exact numerical theory of normalized rank 2 vector bundles on projective
//! 3-space.
//!
//! A bundle enters this crate only through its numerical data: the
//! normalized Chern pair `(c1, c2)`, optionally the first and third relevant
//! section levels `alpha` and `gamma`, and optionally a window of its
//! cohomology table. From that the crate computes the Euler characteristic,
//! the square-root bounds `zeta`, `tau` and `eta`, the forced non-vanishing
//! range of `h^1(E(n))`, the splitting decision, and a verification of
//! tables against every numerical consequence of the theory.
//!
//! Every decision is taken in exact integer arithmetic. Irrational bounds
//! are carried as [`QuadraticValue`]s of the form `(sqrt(R) - p) / q`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod bundle;
mod error;
pub mod euler;
pub mod tables;
pub mod theorems;

pub use arith::{isqrt, qv_cmp, qv_floor, qv_is_integer, QuadraticValue, Rational};
pub use bundle::{BundleProfile, ChernClasses, FirstChern, StabilityClass};
pub use error::Error;
pub use tables::{CheckResult, CheckStatus, CohomologyRow, CohomologyTable};
pub use theorems::{ClauseId, NonVanishingReport, SplitOutcome, SplitVerdict};

/// A twist `n` of `E(n)`.
pub type Twist = i64;

pub type Result<T, E = Error> = core::result::Result<T, E>;
