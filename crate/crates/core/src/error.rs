use thiserror::Error;

/// Everything that can go wrong in the kernel, the verifiers and the CLI.
///
/// `kind()` gives the stable short tag used in reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero-denominator")]
    ZeroDenominator,
    #[error("denominator-mismatch")]
    DenominatorMismatch,
    #[error("singular-point")]
    SingularPoint,
    #[error("degenerate-corner at {face}")]
    DegenerateCorner { face: String },
    #[error("degenerate-edge")]
    DegenerateEdge,
    #[error("involution-pole")]
    InvolutionPole,
    #[error("degenerate-boundary at {face}")]
    DegenerateBoundary { face: String },
    #[error("no-valid-samples")]
    NoValidSamples,
    #[error("degenerate-dual")]
    DegenerateDual,
    #[error("singular-orbit(step {step}, {face})")]
    SingularOrbit { step: usize, face: String },
    #[error("radical-mismatch: {0}")]
    RadicalMismatch(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("invalid configuration at {pointer}: {message}")]
    Config { pointer: String, message: String },
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero-denominator",
            Error::DenominatorMismatch => "denominator-mismatch",
            Error::SingularPoint => "singular-point",
            Error::DegenerateCorner { .. } => "degenerate-corner",
            Error::DegenerateEdge => "degenerate-edge",
            Error::InvolutionPole => "involution-pole",
            Error::DegenerateBoundary { .. } => "degenerate-boundary",
            Error::NoValidSamples => "no-valid-samples",
            Error::DegenerateDual => "degenerate-dual",
            Error::SingularOrbit { .. } => "singular-orbit",
            Error::RadicalMismatch(_) => "radical-mismatch",
            Error::UnknownId(_) => "unknown-id",
            Error::Config { .. } => "config",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn corner(face: impl Into<String>) -> Self {
        Error::DegenerateCorner { face: face.into() }
    }

    pub(crate) fn boundary(face: impl Into<String>) -> Self {
        Error::DegenerateBoundary { face: face.into() }
    }

    pub fn config(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config { pointer: pointer.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
