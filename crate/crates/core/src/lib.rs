//! Exact-arithmetic toolkit for the Artinian Orlik-Terao (AOT) algebra of a
//! graphic hyperplane arrangement.
//!
//! The pipeline goes: a simple graph ([`graphs::SimpleGraph`]) determines a
//! graphic arrangement, whose circuit relations present the AOT algebra
//! ([`algebra::AotPresentation`]). Broken circuits give a monomial basis
//! ([`algebra::NbcBasis`]) in which multiplication by a generic linear form
//! becomes a sparse matrix with linear-form entries ([`linalg::ParamMatrix`]).
//! Exact rank computations over the rationals and over prime fields decide the
//! Weak Lefschetz Property ([`wlp::wlp_check`]), and edge-order enumeration
//! recovers every initial ideal of the AOT ideal ([`initideals`]).

pub mod algebra;
pub mod graphs;
pub mod initideals;
pub mod linalg;
pub mod poly;
pub mod wlp;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("prime {0} divides a denominator; retry with a different prime")]
    RetryPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
