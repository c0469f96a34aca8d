use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("algebra mismatch between operands")]
    AlgebraMismatch,
    #[error("the given pair does not generate the algebra")]
    NotGenerating,
    #[error("{{x, y, [x,y]}} is linearly dependent; the recursive rewriter needs it as a basis")]
    DegenerateBasis,
    #[error("no representation found with monomials of degree <= {degree}")]
    NoSolution { degree: u32 },
    #[error("index sets do not partition {{1..{rank}}}")]
    NotAPartition { rank: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("K(a,a) with nonzero a is the scalar-action algebra g, outside the parametrized family")]
    IsGSpecial,
    #[error("algebra is not three dimensional (dim = {0})")]
    NotThreeDimensional(usize),
    #[error("grading does not have the required shape: {0}")]
    WrongGradingShape(String),
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("representation matrices have mismatched sizes")]
    SizeMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
