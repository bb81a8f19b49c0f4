use thiserror::Error;

/// Errors produced by mesh handling, ideal construction and dimension assembly.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degenerate edge: endpoints coincide at {0}")]
    DegenerateEdge(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degenerate triangle {index}: vertices {vertices:?} have zero area")]
    DegenerateTriangle { index: usize, vertices: [usize; 3] },

    #[error("non-manifold edge ({0}, {1}) belongs to more than two triangles")]
    NonManifoldEdge(usize, usize),

    #[error("vertex {0} is not used by any triangle")]
    DanglingVertex(usize),

    #[error("duplicate {0}")]
    Duplicate(String),

    #[error("vertex index {index} out of range ({count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("mesh is not a disk: {0}")]
    NotADisk(String),

    #[error("vertex {0} is not interior")]
    NotInterior(usize),

    #[error("not a vertex star: {0}")]
    NotAStar(String),

    #[error("no admissible vertex ordering found: {0}")]
    OrderingNotFound(String),

    #[error("construction failed on edge ({0}, {1}): {2}")]
    ConstructionFailure(usize, usize, String),

    #[error("parameters out of range for closed form: {0}")]
    OutOfRange(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
