use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("arc {arc} is not a nontrivial arc of {surface}")]
    InvalidArc { arc: String, surface: String },
    #[error("disjointness is only defined on distinct arc classes, got {0} twice")]
    IdenticalArcs(String),
    #[error("arcs {0} and {1} intersect")]
    NotPairwiseDisjoint(String, String),
    #[error("fan indices out of range: {0}")]
    FanOutOfRange(String),
    #[error("{0} vertices exceed the supported maximum of 128")]
    TooManyVertices(usize),
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Face),
    #[error("operation needs a nonempty face")]
    EmptyFace,
    #[error("join factors share vertex label {0:?}")]
    LabelCollision(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not a cone")]
    NotACone,
    #[error("step {step}: {free:?} is not a free face with unique coface {coface:?}")]
    NotFree { step: usize, free: Face, coface: Face },
    #[error("step {step}: vertex {vertex} is not dominated by {witness}")]
    NotDominated { step: usize, vertex: usize, witness: usize },
    #[error("vertex {0} is not dominated")]
    Undominated(usize),
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("isomorphism test is limited to 25 vertices, got {0}")]
    TooLargeForIsomorphism(usize),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
