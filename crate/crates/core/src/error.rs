use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("edge multiplicity between {0} and {1} exceeds the supported cap")]
    MultiplicityOverflow(usize, usize),
    #[error("part labels do not describe a bipartition: edge {0}-{1} lies inside one part")]
    InvalidPartLabels(usize, usize),
    #[error("part labels cover {got} vertices, graph has {expected}")]
    PartLabelLength { got: usize, expected: usize },

    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph6 encoding requires a simple graph (parallel edge {0}-{1})")]
    NotSimple(usize, usize),

    #[error("the two vertices of a pair must differ (got {0} twice)")]
    SamePair(usize),
    #[error("reduced graph expected, vertex {vertex} has degree {degree}")]
    NotReduced { vertex: usize, degree: usize },

    #[error("vertices {0:?} do not form a triangle")]
    NotTriangle([usize; 3]),
    #[error("vertex {vertex} has degree {degree}, a Y-move needs degree 3 with distinct neighbours")]
    NotYVertex { vertex: usize, degree: usize },
    #[error("family closure exceeded {cap} members (seed {seed})")]
    FamilyTooLarge { seed: String, cap: usize },
    #[error("unknown catalog graph {0:?}")]
    UnknownCatalogName(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },
    #[error("i/o: {0}")]
    Io(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
