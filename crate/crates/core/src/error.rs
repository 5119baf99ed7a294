use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("root string through a root and its negative is undefined")]
    Degenerate,
    #[error("coefficient {0} must lie in K")]
    NotInK(String),
    #[error("U-invariant violated: {0}")]
    NormViolation(String),
    #[error("nonzero octonion with zero norm")]
    IsotropicVector,
    #[error("operation requires algebraic mode")]
    ModeError,
    #[error("rewriter exceeded {steps} steps: {detail}")]
    StepBound { steps: usize, detail: String },
    #[error("the identity has no normal form in the big cell")]
    IdentityInput,
    #[error("rewriter failure: {0}")]
    Rewrite(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
