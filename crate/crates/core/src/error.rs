use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("degree cap {0} exceeded before the path algebra quotient vanished")]
    DegreeCapExceeded(usize),
    #[error("relation is not homogeneous or not admissible: {0}")]
    NonHomogeneousRelation(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("matrix does not intertwine the module actions")]
    NotAMorphism,
    #[error("the algebra has no radical available (prime field without a structural radical)")]
    RadicalUnavailable,
    #[error("decomposition inconclusive: {0}")]
    DecompositionInconclusive(String),
    #[error("endomorphism ring has a non-split semisimple quotient")]
    NonSplitEnd,
    #[error("the evaluation map onto the target is not surjective")]
    NotGenerated,
    #[error("module is not injective")]
    NotInjective,
    #[error("no idempotent with prinj Nakayama image exists")]
    CornerUnavailable,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("simple module does not define a BB-tilting module: Ext condition fails at index {0}")]
    NotBB(usize),
    #[error("sequence is not add-exact: {0}")]
    NotAddExact(String),
    #[error("subspace is not closed under multiplication: {0}")]
    ClosureFailure(String),
    #[error("algebra is not self-injective")]
    NotSelfInjective,
    #[error("module has a nonzero projective summand")]
    ProjectiveSummand,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors meaning "the computation could not decide", as opposed to bad input.
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::DecompositionInconclusive(_) | Error::Inconclusive(_) | Error::DegreeCapExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
