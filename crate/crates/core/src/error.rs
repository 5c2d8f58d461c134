use thiserror::Error;

use crate::points::PointSet;

/// Errors produced by the library. Every failure mode is explicit; no check
/// ever fails silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("column count mismatch: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },

    #[error("enumeration too large: dimension {dimension} exceeds the limit {limit}")]
    EnumerationTooLarge { dimension: usize, limit: usize },

    #[error("minimum distance is undefined for the zero code")]
    ZeroCode,

    #[error("coefficient sum {sum} (mod 3) is nonzero: not in the augmentation ideal")]
    NotInIdeal { sum: u8 },

    #[error("{0} is not a block of the design")]
    NotABlock(PointSet),

    #[error("sets {0} and {1} overlap")]
    OverlappingSets(PointSet, PointSet),

    #[error("intersection query out of range: |A| + |B| = {total} exceeds 5")]
    IntersectionQueryTooLarge { total: usize },

    #[error("sets do not partition {{1..{expected}}}")]
    NotAPartition { expected: u8 },

    #[error("invalid point {0}: points are labelled 1..=12")]
    InvalidPoint(u32),

    #[error("point {point} is outside the allowed range {{1..{max}}}")]
    PointOutOfRange { point: u8, max: u8 },

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed. This indicates corrupted input
    /// data or a bug, never an expected runtime condition.
    #[error("structural failure: {0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
