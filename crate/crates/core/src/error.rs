use thiserror::Error;

/// Every failure the library reports. The variant name is the stable error
/// code surfaced by the command-line front end (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("expression leaves the R(z)·exp(P(z)) normal form: {0}")]
    NotNormalForm(String),
    #[error("expression simplifies to the zero germ")]
    ZeroGerm,
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument of exp is not a polynomial: {0}")]
    NonPolynomialExponent(String),
    #[error("family member {index} ({label}) is only known through its order")]
    AbstractMember { index: usize, label: String },
    #[error("zero polynomial among the inputs")]
    ZeroInput,
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("negative entry in a vector that must lie in ℕ^n")]
    NegativeEntry,
    #[error("need at least {min} entries, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("vector is not in the semigroup")]
    NotInSemigroup,
    #[error("vector is not a nonnegative combination of the given generators")]
    NotRepresentable,
    #[error("order vector is in case {actual}, operation requires {required}")]
    WrongCase { actual: String, required: String },
    #[error("bad indices: need 1 <= p < q <= r, got p={p}, q={q}, r={r}")]
    BadIndices { p: usize, q: usize, r: usize },
    #[error("relation constant is not in Q(i): {0}")]
    NonRationalConstant(String),
    #[error("Hilbert basis has more than {cap} generators")]
    SizeGuard { cap: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("phi must be a non-constant function")]
    ConstantPhi,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("computation cancelled")]
    Cancelled,
}

impl Error {
    /// Stable code name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SyntaxError { .. } => "SyntaxError",
            Error::NotNormalForm(_) => "NotNormalForm",
            Error::ZeroGerm => "ZeroGerm",
            Error::DivisionByZero => "DivisionByZero",
            Error::NonPolynomialExponent(_) => "NonPolynomialExponent",
            Error::AbstractMember { .. } => "AbstractMember",
            Error::ZeroInput => "ZeroInput",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NegativeEntry => "NegativeEntry",
            Error::DimensionTooSmall { .. } => "DimensionTooSmall",
            Error::NotInSemigroup => "NotInSemigroup",
            Error::NotRepresentable => "NotRepresentable",
            Error::WrongCase { .. } => "WrongCase",
            Error::BadIndices { .. } => "BadIndices",
            Error::NonRationalConstant(_) => "NonRationalConstant",
            Error::SizeGuard { .. } => "SizeGuard",
            Error::NonSquare { .. } => "NonSquare",
            Error::ConstantPhi => "ConstantPhi",
            Error::RingMismatch => "RingMismatch",
            Error::Cancelled => "Cancelled",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
