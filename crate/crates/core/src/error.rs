use thiserror::Error;

/// Errors raised by the algebraic operations.
///
/// Every variant carries a stable machine-readable code (see [`Error::code`]);
/// the CLI reports it alongside the human-readable message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a subcomplex: {0}")]
    NotASubcomplex(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("automorphisms do not commute")]
    NotCommuting,
    #[error("morphism is not phantom (nonzero on homology)")]
    NotPhantom,
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NotASubcomplex(_) => "not_a_subcomplex",
            Error::NotAComplex(_) => "not_a_complex",
            Error::NotAChainMap(_) => "not_a_chain_map",
            Error::NotAHomomorphism(_) => "not_a_homomorphism",
            Error::NotInvertible(_) => "not_invertible",
            Error::NotCommuting => "not_commuting",
            Error::NotPhantom => "not_phantom",
            Error::RingMismatch => "ring_mismatch",
            Error::UnsupportedRing(_) => "unsupported_ring",
            Error::InvalidModule(_) => "invalid_module",
            Error::Invalid(_) => "invalid_input",
            Error::InvariantViolated(_) => "invariant_violated",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
