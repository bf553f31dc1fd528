use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),
    #[error("cannot form a difference between a finite point and a point at infinity")]
    InfiniteMisuse,
    #[error("zero-length vector where a direction is required")]
    ZeroVector,
    #[error("a line needs two distinct points")]
    IdenticalPoints,
    #[error("lines coincide; no unique intersection")]
    IdenticalLines,
    #[error("circles share a center")]
    ConcentricCircles,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("embedding has zero area")]
    DegenerateEmbedding,
    #[error("metric matrix is not symmetric at entry ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("invalid barycentric coordinates: {0}")]
    InvalidPoint(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational `{0}` (expected `p/q` or an integer)")]
pub struct ParseRationalError(pub String);

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
