use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the engine can report.
///
/// Each variant maps to a stable machine-readable code via [`Error::code`],
/// which the command-line front end emits verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fiber {fiber} has multiplicity {multiplicity}; only smooth and I(n) fibers may be multiple")]
    Multiplicity { fiber: String, multiplicity: u64 },

    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("Euler number {euler} is not divisible by 12")]
    NotElliptic { euler: u64 },

    #[error("configuration has Euler number 0 (degenerate, product-like surface)")]
    Degenerate,

    #[error("surface `{name}` carries a section but has a multiple fiber")]
    SectionWithMultipleFiber { name: String },

    #[error("point {point} appears more than once")]
    DuplicatePoint { point: String },

    #[error("a smooth non-multiple fiber at {point} must not be marked")]
    UnmarkedSmooth { point: String },

    #[error("lambda of surface `{name}` cannot be inferred: neither a section nor a twist provenance is known")]
    UnknownLambda { name: String },

    #[error("datum at {point} does not match the local twist group of the fiber there")]
    Shape { point: String },

    #[error("cannot twist at {point}: fiber {fiber} is additive and has trivial local group")]
    AdditiveFiber { point: String, fiber: String },

    #[error("operands are built over different bases (`{left}` vs `{right}`)")]
    BaseMismatch { left: String, right: String },

    #[error("twists supported at the I(n) fiber at {point} are not modeled")]
    UnsupportedTwist { point: String },

    #[error("index {index} is not coprime to lambda = {lambda}")]
    NotCoprime { index: i64, lambda: u64 },

    #[error("Kodaira dimension is 0; the partner classification does not apply")]
    KodairaZero,

    #[error("marked configuration of `{name}` admits nontrivial Möbius symmetries")]
    NotRigid { name: String },

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("base `{name}` is not a rational surface with a section")]
    NonRationalBase { name: String },

    #[error("no catalog entry named `{name}`")]
    UnknownEntry { name: String },

    #[error("configuration `{name}` fails catalog validation")]
    InvalidEntry { name: String },

    #[error("automorphism bound {value} is not one of 1, 2, 3, 4, 6")]
    AutBound { value: u64 },

    #[error("cannot parse {what}: `{input}`")]
    Parse { what: &'static str, input: String },

    #[error("malformed JSON document: {0}")]
    Json(String),

    #[error("i/o failure on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Stable identifier used in machine-readable error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Multiplicity { .. } => "multiplicity_error",
            Error::ZeroMultiplicity => "zero_multiplicity",
            Error::NotElliptic { .. } => "not_elliptic",
            Error::Degenerate => "degenerate_config",
            Error::SectionWithMultipleFiber { .. } => "section_with_multiple_fiber",
            Error::DuplicatePoint { .. } => "duplicate_point",
            Error::UnmarkedSmooth { .. } => "unmarked_smooth",
            Error::UnknownLambda { .. } => "unknown_lambda",
            Error::Shape { .. } => "shape_error",
            Error::AdditiveFiber { .. } => "additive_fiber",
            Error::BaseMismatch { .. } => "base_mismatch",
            Error::UnsupportedTwist { .. } => "unsupported_twist",
            Error::NotCoprime { .. } => "not_coprime",
            Error::KodairaZero => "kodaira_zero",
            Error::NotRigid { .. } => "not_rigid",
            Error::NotPrime { .. } => "not_prime",
            Error::NonRationalBase { .. } => "non_rational_base",
            Error::UnknownEntry { .. } => "unknown_entry",
            Error::InvalidEntry { .. } => "invalid_entry",
            Error::AutBound { .. } => "aut_bound",
            Error::Parse { .. } => "parse_error",
            Error::Json(_) => "json_error",
            Error::Io { .. } => "io_error",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
