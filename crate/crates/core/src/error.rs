use thiserror::Error;

/// Errors raised by complex construction, the exact searches and the file readers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("facet list is empty")]
    EmptyFacetList,
    #[error("facet {index} is empty")]
    EmptyFacet { index: usize },
    #[error("facet {index} has {size} vertices; closure is limited to {limit}")]
    FacetTooLarge {
        index: usize,
        size: usize,
        limit: usize,
    },
    #[error("complex is not pure (facet dimensions range over {min}..={max})")]
    NotPure { min: usize, max: usize },
    #[error("complex is not connected")]
    Disconnected,
    #[error("operation needs dimension {expected}, complex has dimension {found}")]
    WrongDimension {
        expected: &'static str,
        found: usize,
    },
    #[error("face dimension {k} out of range 0..={n}")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("(n-1)-face degrees are not constant")]
    NonConstantDegree,
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex subset must be a proper subset")]
    NotProperSubset,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no face meets both sides of the cut")]
    NoCrossingFace,
    #[error("{what} has {size} vertices; exact search limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("no admissible subset (graph order {0})")]
    NoAdmissibleCut(usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix entry ({row}, {col}) is not 0 or 1")]
    NotBinary { row: usize, col: usize },
    #[error("nonzero diagonal entry at {0}")]
    NonzeroDiagonal(usize),
    #[error("eigen solver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualTooLarge { residual: f64, tol: f64 },
    #[error("spectrum has order {0}; need at least 2")]
    SpectrumTooSmall(usize),
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("{0}")]
    InvariantViolation(String),
    #[error("unknown corpus entry `{0}`")]
    UnknownFixture(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}duplicate vertex `{label}` in facet {facet}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    DuplicateVertex {
        facet: usize,
        line: Option<usize>,
        label: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
