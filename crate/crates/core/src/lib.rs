//! Exact-arithmetic tools for Boros–Moll coefficient triangles.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: big integers, rationals, dyadic rationals, binomials and the
//!   validated row/triangle containers.
//! * [`boros_moll`]: three independent generators for the coefficients
//!   `d_i(m)`, the four linear recurrences and the closed forms used at
//!   the boundary of the triangle.
//! * [`inequality`]: exact predicates for unimodality, log-concavity,
//!   interlacing log-concavity and the sharper row/pair bounds, plus the
//!   iterated `L` operator.
//! * [`criterion`]: general triangular recurrences, the sufficient
//!   conditions on their coefficient functions, built-in classical families
//!   and a Sturm-chain real-rootedness check.
//!
//! All comparisons are exact; no floating point is involved anywhere in a
//! decision.

pub mod boros_moll;
pub mod criterion;
mod error;
pub mod exact;
pub mod inequality;
pub mod report;

pub use error::{Error, Result};
pub use exact::{
    binomial, make_row, rational_cmp, BigInt, CoefficientRow, CoefficientTriangle, DyadicRational,
    Rational,
};
pub use report::{CheckReport, Strictness, Violation, DEFAULT_VIOLATION_CAP};
