use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient rings differ: {0}")]
    RingMismatch(String),
    #[error("constant term is not a unit: {0}")]
    NotAUnit(String),
    #[error("product contains the zero factor (1 - 1)")]
    ZeroFactor,
    #[error("not a formal power series in q: {0}")]
    NegativeExponent(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
    #[error("requested exponent {requested} exceeds truncation order {order}")]
    BeyondOrder { requested: usize, order: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
