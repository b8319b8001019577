use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("{0} is not a distinguished coset representative")]
    NotCosetRepresentative(String),

    #[error("{0} does not lie in the parabolic subgroup")]
    NotInParabolic(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid k-path: {0}")]
    InvalidPath(String),

    #[error("node inserted at column {column} is straddled by a constituent path")]
    Straddle { column: usize },

    #[error("support of the k-path differs from the host diagram")]
    SupportMismatch,

    #[error("composition {0} does not satisfy Hypothesis (*)")]
    HypothesisStar(String),

    #[error("diagram does not satisfy Hypothesis (\u{2020}): {0}")]
    HypothesisDagger(String),

    #[error("operation {op} does not apply at column {column}")]
    PatternMismatch { op: String, column: usize },

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("degree {n} exceeds the brute-force guard {max}")]
    GuardExceeded { n: usize, max: usize },

    #[error("diagram is not admissible")]
    NotAdmissible,

    #[error("no admissible one-node extension exists")]
    NoAdmissibleExtension,

    #[error("independent routes disagree: {0}")]
    RouteMismatch(String),

    #[error("no ordered path of the requested form exists")]
    NoFormPath,
}

pub type Result<T> = std::result::Result<T, Error>;
