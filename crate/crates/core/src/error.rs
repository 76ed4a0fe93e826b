use thiserror::Error;

/// Errors raised by series arithmetic, tuple validation and catalog handling.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient overflow at exponent {index}")]
    Overflow { index: usize },

    #[error("shift {shift} exceeds truncation order {order}")]
    ShiftOutOfRange { shift: usize, order: usize },

    #[error("progression residue {residue} invalid for modulus {modulus} at order {order}")]
    BadProgression {
        modulus: usize,
        residue: usize,
        order: usize,
    },

    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("theta factor f(q^{i}, q^{j}) needs i + j > 0")]
    InvalidFactor { i: i64, j: i64 },

    #[error("component x({a}x{b:+})/2 needs a > 0 and a - b even")]
    InvalidComponent { a: i64, b: i64 },

    #[error("polygonal numbers need m >= 3, got {0}")]
    InvalidPolygonalOrder(i64),

    #[error("diagonal form coefficients must be positive")]
    InvalidForm,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("identity {id}: {reason}")]
    MalformedRecord { id: String, reason: String },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("catalog: {0}")]
    Catalog(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Catalog(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
