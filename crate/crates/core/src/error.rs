use thiserror::Error;

use crate::geom::Direction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector does not span a direction")]
    ZeroVector,
    #[error("direction component does not fit in a 64-bit integer")]
    DirectionOverflow,
    #[error("direction set is empty")]
    EmptyDirectionSet,
    #[error("direction {0} appears twice in the direction set")]
    DuplicateDirection(Direction),
    #[error("polygon has {0} vertices, at least 3 are required")]
    TooFewVertices(usize),
    #[error("polygon is not strictly convex at vertex {0}")]
    NotConvex(usize),
    #[error("edge {edge} has direction {direction}, which is not in the direction set")]
    EdgeDirectionNotInSet { edge: usize, direction: Direction },
    #[error("segment endpoints coincide")]
    ZeroLengthSegment,
    #[error("segment direction {0} is not in the direction set")]
    SegmentDirectionNotInSet(Direction),
    #[error("edges {0} and {1} overlap in a segment")]
    DegenerateOverlap(usize, usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("vertex index {index} out of range for a graph with {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
