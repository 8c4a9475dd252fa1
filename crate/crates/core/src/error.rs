use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative argument {0} where a nonnegative integer is required")]
    NegativeArgument(i64),

    #[error("{what}: request of {requested} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, requested: u128, cap: u128 },

    #[error("pole: {0}")]
    Pole(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not prime")]
    NotPrime(i64),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("support violation: nonzero term for `{var}` = {at} outside the declared support")]
    SupportViolation { var: String, at: String },

    #[error("cannot derive a finite support for `{0}`; declare one with `{0} = a..b`")]
    SupportUnderivable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
