use thiserror::Error;

use crate::geometry::LatticeVector;

/// Errors raised by fan construction and ring analysis.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected ambient dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cone is not pointed: it contains the line through {direction}")]
    NotPointed { direction: LatticeVector },

    #[error("not a fan: cones with rays {left:?} and {right:?} do not intersect in a common face")]
    NotAFan {
        left: Vec<LatticeVector>,
        right: Vec<LatticeVector>,
    },

    #[error("operation requires a pure fan, but facet dimensions differ")]
    NotPure,

    #[error("operation requires a Cohen-Macaulay ring; cohomology is nonzero for cone {cone} in degree {degree}")]
    NotCohenMacaulay { cone: usize, degree: i64 },

    #[error("operation requires a non-empty fan or subfan")]
    EmptyFan,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("local cohomology degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: i64, max: i64 },

    #[error("join point {point} must have a nonzero last coordinate")]
    BadJoinPoint { point: LatticeVector },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
