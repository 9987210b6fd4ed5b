use thiserror::Error;

/// Errors reported by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: wrong shapes, degenerate forms, bad degrees.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the zero polynomial cannot be factored")]
    ZeroPolynomial,
    #[error("no hard Lefschetz: {0}")]
    NoHardLefschetz(String),
    #[error("no Lefschetz element found after {attempts} attempts")]
    NoLefschetzElement { attempts: usize },
    #[error("Lie algebra is not semisimple")]
    NotSemisimple,
    #[error("not simple with involution: {0}")]
    NotSimpleWithInvolution(String),
    #[error("unclassifiable involution: {0}")]
    Unclassifiable(String),
    #[error("rank undetermined after {0} sampling attempts")]
    RankUndetermined(usize),
    #[error("not invariant: {0}")]
    NotInvariant(String),
    #[error("not an eigenvector of operator {0}")]
    NotAnEigenvector(usize),
    #[error("ad(h) is not diagonalizable with integer eigenvalues: {0}")]
    NonIntegralGrading(String),
    /// An identity that must hold by construction failed.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// A stable machine-readable name for the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::Precondition(_) => "precondition",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NoHardLefschetz(_) => "no_hard_lefschetz",
            Error::NoLefschetzElement { .. } => "no_lefschetz_element",
            Error::NotSemisimple => "not_semisimple",
            Error::NotSimpleWithInvolution(_) => "not_simple_with_involution",
            Error::Unclassifiable(_) => "unclassifiable",
            Error::RankUndetermined(_) => "rank_undetermined",
            Error::NotInvariant(_) => "not_invariant",
            Error::NotAnEigenvector(_) => "not_an_eigenvector",
            Error::NonIntegralGrading(_) => "non_integral_grading",
            Error::Internal(_) => "internal",
        }
    }
}
