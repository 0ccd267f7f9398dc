use thiserror::Error;

use crate::pointset::PointSet;

/// Which topology axiom a candidate open family breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmpty,
    MissingFull,
    /// `a ∪ b` is not in the family.
    Union(PointSet, PointSet),
    /// `a ∩ b` is not in the family.
    Intersection(PointSet, PointSet),
}

impl std::fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopologyViolation::MissingEmpty => write!(f, "the empty set is missing"),
            TopologyViolation::MissingFull => write!(f, "the full carrier is missing"),
            TopologyViolation::Union(a, b) => write!(f, "union of {a} and {b} is missing"),
            TopologyViolation::Intersection(a, b) => {
                write!(f, "intersection of {a} and {b} is missing")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a topology: {0}")]
    NotATopology(TopologyViolation),

    #[error("set {set} does not fit a carrier of {carrier} points")]
    PointOutOfRange { set: PointSet, carrier: usize },

    #[error("point {point} is outside a carrier of {carrier} points")]
    PointIndexOutOfRange { point: usize, carrier: usize },

    #[error("carrier of {needed} points exceeds the limit of {limit}")]
    CarrierOverflow { needed: usize, limit: usize },

    #[error("bound {requested} exceeds the configured limit {limit} for {what}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("map is not continuous: preimage of open set {witness} is not open")]
    NotContinuous { witness: PointSet },

    #[error("graph has {got} entries but the domain has {expected} points")]
    GraphLength { expected: usize, got: usize },

    #[error("map is not monotone: {lo} <= {hi} but their images are not ordered")]
    NotMonotone { lo: usize, hi: usize },

    #[error("cover is not directed: no member contains {a} ∪ {b}")]
    NotDirected { a: PointSet, b: PointSet },

    #[error("cover does not cover its target: {uncovered} left over")]
    NotACover { uncovered: PointSet },

    #[error("{0} is not open")]
    NotOpen(PointSet),

    #[error("family assigns the non-open set {set} to index point {index}")]
    RoleViolation { index: usize, set: PointSet },

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("mismatched spaces: {0}")]
    Mismatch(&'static str),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
