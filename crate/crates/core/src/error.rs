use thiserror::Error;

use crate::tunnel::FirstHit;

/// Errors produced by braid construction, tunnel classification and
/// invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside its admissible domain (bad p/q/s ranges,
    /// non-coprime pairs, invalid generator indices, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The braid closure has more than one component.
    #[error("braid closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    /// The state sum was refused because the diagram is too large.
    #[error("diagram has {crossings} crossings, exceeding the cap of {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },

    /// Neither label walk reached 1 first. Unreachable for coprime input;
    /// carries both walk transcripts for inspection if it ever fires.
    #[error(
        "tunnel classification failed for p={p}, q={q}: \
         forward walk ended ({}, {}), backward walk ended ({}, {}); \
         forward transcript {forward_walk:?}, backward transcript {backward_walk:?}",
        p1.steps, p1.label, p2.steps, p2.label
    )]
    TheoremViolation {
        p: i64,
        q: i64,
        p1: FirstHit,
        p2: FirstHit,
        forward_walk: Vec<i64>,
        backward_walk: Vec<i64>,
    },

    /// A closed-form polynomial quotient left a remainder. Indicates a bug,
    /// not a user error.
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
