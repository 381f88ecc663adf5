use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the toolkit reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("polynomial is not monic of positive degree: {0}")]
    NotMonic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("structure constants fail the algebra axioms: {0}")]
    NotAnAlgebra(String),
    #[error("path algebra has more than {cap} surviving paths")]
    InfiniteDimensional { cap: usize },
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bimodule actions")]
    NotASubBimodule,
    #[error("action matrices do not define a bimodule: {0}")]
    BadBimodule(String),
    #[error("map is not a bimodule map")]
    NotABimoduleMap,
    #[error("cochain complex exceeds the dimension cap at degree {degree}: {size} > {cap}")]
    DimensionCap { degree: usize, size: usize, cap: usize },
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("not a subset of the poset: {0}")]
    NotASubset(String),
    #[error("not an order ideal: {0}")]
    NotAnOrderIdeal(String),
    #[error("not a subcomplex")]
    NotASubcomplex,
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("poset relation has a cycle through {0}")]
    CyclicPoset(String),
    #[error("ideal is not homological: {0}")]
    NotHomological(String),
    #[error("flatness of the ideal could not be established")]
    FlatnessNotEstablished,
}
