//! Exact verification of two WZ-style certificate pairs, the telescoping
//! sums they prove, and the related Ramanujan-type supercongruences.
//!
//! Everything here is pure computation over arbitrary-precision rationals
//! and needs only `alloc`. File formats, the command-line front end and
//! parallel grid drivers live in the `wzcheck` crate.
//!
//! - [`exact`]: rationals, two-sided rising factorials, modular reduction
//! - [`mpoly`]: sparse polynomials and rational functions in `L, n, k, s`
//! - [`wz`]: the certificate pairs, pointwise and symbolic checks
//! - [`identities`]: both closed-form sums and the telescoping replay
//! - [`congruence`]: truncated binomial sums modulo prime powers

#![cfg_attr(not(test), no_std)]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

pub mod congruence;
pub mod error;
pub mod exact;
pub mod identities;
pub mod mpoly;
pub mod wz;

pub use error::{Error, Result};
pub use exact::{Integer, Rational};
