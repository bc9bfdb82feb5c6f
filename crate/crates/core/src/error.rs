use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("weight matrix has no rows")]
    EmptyMatrix,
    #[error("weight row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("cannot parse order {0:?}")]
    Syntax(String),
}

/// Failures of the solving pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("not zero-dimensional in the localization: more than {cap} standard monomials")]
    NotZeroDimensional { cap: usize },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("no generators given (or all are zero)")]
    NoGenerators,
    #[error("border basis undefined: the quotient is zero (empty order ideal)")]
    EmptyQuotient,
    #[error("constant polynomial has no critical points to analyse")]
    ConstantPolynomial,
    #[error("order {0} must make exactly the constraint variables local")]
    BadSignature(String),
    #[error("could not find a fresh name for constraint variable {0}")]
    NameCollision(usize),
    #[error("multiplication matrices do not commute")]
    NotCommuting,
    #[error("generic linear form stayed degenerate after {retries} attempts")]
    GenericFormDegenerate { retries: usize },
    #[error("residual check failed: {residual:e} at point {point}")]
    Residual { residual: f64, point: String },
    #[error("constraint coordinate {value:e} exceeds tolerance at point {point}")]
    ConstraintCoordinate { value: f64, point: String },
    #[error("Chow form requested for quotient dimension {mu}, cap is {cap}; use zeros_with_multiplicities")]
    ChowCap { mu: usize, cap: usize },
    #[error("root finder did not converge for a degree {degree} factor")]
    RootsDidNotConverge { degree: usize },
}

impl Error {
    /// True for failures caused by the mathematics of the input rather
    /// than by malformed text or configuration.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Poly(_) | Error::Order(_) | Error::NoGenerators | Error::BadSignature(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
