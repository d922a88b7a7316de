use thiserror::Error;

use crate::simplex::{Simplex, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("simplex has a repeated vertex: {0:?}")]
    RepeatedVertex(Vec<Vertex>),
    #[error("vertex labels must be positive integers")]
    NonPositiveVertex,
    #[error("complex is not pure: facet {facet} has dimension {found}, expected {expected}")]
    NotPure { facet: Simplex, expected: usize, found: isize },
    #[error("complex is not closed: ridge {ridge} lies in {count} facets")]
    NotClosed { ridge: Simplex, count: usize },
    #[error("complex is not connected")]
    NotConnected,
    #[error("complex is not orientable (contradiction at facet {0})")]
    NotOrientable(Simplex),
    #[error("vertex link of {vertex} is not a single cycle")]
    NotSurface { vertex: Vertex },
    #[error("complex is empty")]
    Empty,
    #[error("duplicate facet {0}")]
    DuplicateFacet(Simplex),
    #[error("simplex {0} is not a face of the complex")]
    FaceNotInComplex(Simplex),
    #[error("join factors share vertices")]
    VertexOverlap,
    #[error("({alpha}, {beta}) is not a bistellar pair: {reason}")]
    PairNotValid { alpha: Simplex, beta: Simplex, reason: String },
    #[error("orientation cycle condition fails after the move at {0}")]
    OrientationBreak(Simplex),
    #[error("move {step} of the sequence is not valid: {source}")]
    PairNotValidAtStep { step: usize, source: Box<Error> },
    #[error("operation requires a middle move (n = 2h), got n = {n}, h = {h}")]
    NotMiddleMove { n: usize, h: usize },
    #[error("k = {k} is out of range for a simplex of dimension {dim}")]
    KOutOfRange { k: usize, dim: isize },
    #[error("{0} is not a face of the oriented simplex")]
    NotFaces(Simplex),
    #[error("faces have different dimensions")]
    DimensionMismatch,
    #[error("matrix index does not match: {0}")]
    IndexMismatch(String),
    #[error("coefficient normalization impossible in this semifield")]
    NormalizationImpossible,
    #[error("the two divisor forms disagree for face {0}")]
    DivisorMismatch(Simplex),
    #[error("monomial not divisible by its divisor for face {0}")]
    NonDivisible(Simplex),
    #[error("node budget of {cap} exceeded")]
    BudgetExceeded { cap: usize },
    #[error("wrong dimension: expected {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Format(String),
}
