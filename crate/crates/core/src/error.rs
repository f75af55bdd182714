// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the arithmetic and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The prime 2 was supplied where an odd prime is required.
    #[error("domain error: q = 2 is not supported, an odd prime is required")]
    EvenPrime,

    /// The prime divides the radicand, so it ramifies.
    #[error("domain error: {q} ramifies in Q(√{d})")]
    Ramified { q: String, d: i64 },

    /// The radicand is not a square modulo the prime, so it stays inert.
    #[error("domain error: {q} is inert in Q(√{d})")]
    Inert { q: String, d: i64 },

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A computed object failed its own postcondition check. Never expected.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
