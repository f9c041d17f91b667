use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported pole field: irreducible factor {factor}")]
    UnsupportedPoleField { factor: String },
    #[error("order of zero function undefined")]
    OrderOfZero,
    #[error("empty expansion")]
    EmptyExpansion,
    #[error("square-root branch undefined: {0}")]
    SqrtBranchUndefined(String),
    #[error("radicand {0} too large to factor")]
    RadicandTooLarge(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not a polynomial remainder after removing principal parts")]
    IncompletePoleSet,
    #[error("polynomial has non-rational coefficients")]
    NotRational,
}
