use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants fall in three groups: malformed input (`Parse`,
/// `InvalidArgument`, `InvalidRectangle`), violated mathematical
/// preconditions (`ZeroDivisor` through `PointIsRoot`), and internal
/// consistency checks that should never fire on correct code
/// (`StructureTheoremViolation`, `DegreeBoundViolation`,
/// `SoundnessViolation`, `InequalityViolation`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid rectangle: {0}")]
    InvalidRectangle(String),

    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("inexact division in the coefficient domain")]
    InexactDivision,
    #[error("zero input polynomial")]
    ZeroInput,
    #[error("degree order violated: {0}")]
    DegreeOrder(String),
    #[error("index {index} out of range (allowed 0..={max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("inputs are not coprime")]
    NotCoprime,
    #[error("sign condition fails on the interval for {poly}")]
    SignConditionFails { poly: String },
    #[error("polynomials have a common root in the interval")]
    CommonRoot,
    #[error("polynomial vanishes on the rectangle boundary")]
    RootOnBoundary,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("point is a root of the polynomial")]
    PointIsRoot,

    #[error("invalid (sigma, tau)-chain: {0}")]
    InvalidChain(String),
    #[error("structure theorem violated: {0}")]
    StructureTheoremViolation(String),
    #[error("degree bound violated at j={j}, i={i}: deg_Y = {degree} > {bound}")]
    DegreeBoundViolation {
        j: usize,
        i: usize,
        degree: usize,
        bound: i64,
    },
    #[error("soundness violation: {0}")]
    SoundnessViolation(String),
    #[error("inequality violated: {0}")]
    InequalityViolation(String),
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "Parse",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::InvalidRectangle(_) => "InvalidRectangle",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::InexactDivision => "InexactDivision",
            Error::ZeroInput => "ZeroInput",
            Error::DegreeOrder(_) => "DegreeOrder",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotCoprime => "NotCoprime",
            Error::SignConditionFails { .. } => "SignConditionFails",
            Error::CommonRoot => "CommonRoot",
            Error::RootOnBoundary => "RootOnBoundary",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::PointIsRoot => "PointIsRoot",
            Error::InvalidChain(_) => "InvalidChain",
            Error::StructureTheoremViolation(_) => "StructureTheoremViolation",
            Error::DegreeBoundViolation { .. } => "DegreeBoundViolation",
            Error::SoundnessViolation(_) => "SoundnessViolation",
            Error::InequalityViolation(_) => "InequalityViolation",
        }
    }

    /// True for malformed input as opposed to a failed mathematical precondition.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidRectangle(_)
        )
    }
}
