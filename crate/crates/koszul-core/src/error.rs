use alloc::string::String;
use core::fmt;

/// Kernel error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands built over different rings.
    RingMismatch,
    /// Operands live in different free modules.
    AmbientMismatch,
    /// An operation that requires homogeneous input got an inhomogeneous one.
    Inhomogeneous(String),
    /// Invalid ring construction (empty variable list, duplicate names, bad weights).
    InvalidRing(String),
    /// Invalid field construction (characteristic not 0 or prime).
    InvalidField(String),
    /// Text that does not match the polynomial grammar.
    Parse { pos: usize, msg: String },
    /// Homological index outside the complex support.
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    /// A differential failed the d∘d = 0 check.
    NotAComplex(String),
    /// Zero generator where a nonzero one is required.
    ZeroGenerator,
    /// grade(I, M) is undefined because M = IM.
    GradeUndefined,
    /// The two independent routes for an invariant disagree.
    CrossCheckFailed(String),
    /// Operation requires a Cohen-Macaulay module and got something else.
    NotCohenMacaulay(String),
    /// Operation is undefined on the zero module.
    ZeroModule(String),
    /// Malformed corpus entry.
    BadEntry(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::AmbientMismatch => write!(f, "operands belong to different free modules"),
            Error::Inhomogeneous(what) => write!(f, "inhomogeneous input: {what}"),
            Error::InvalidRing(msg) => write!(f, "invalid ring: {msg}"),
            Error::InvalidField(msg) => write!(f, "invalid field: {msg}"),
            Error::Parse { pos, msg } => write!(f, "parse error at column {pos}: {msg}"),
            Error::IndexOutOfRange { index, lo, hi } => {
                write!(f, "index {index} outside complex support [{lo}, {hi}]")
            }
            Error::NotAComplex(msg) => write!(f, "d∘d != 0: {msg}"),
            Error::ZeroGenerator => write!(f, "zero generator not allowed"),
            Error::GradeUndefined => write!(f, "grade undefined: M = IM"),
            Error::CrossCheckFailed(msg) => write!(f, "cross-check failed: {msg}"),
            Error::NotCohenMacaulay(msg) => write!(f, "not Cohen-Macaulay: {msg}"),
            Error::ZeroModule(msg) => write!(f, "zero module: {msg}"),
            Error::BadEntry(msg) => write!(f, "bad corpus entry: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
