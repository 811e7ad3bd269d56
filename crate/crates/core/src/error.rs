use thiserror::Error;

/// Errors reported by validating constructors and by operations whose
/// arguments can be out of domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is smaller than 2")]
    ModulusTooSmall(u64),
    #[error("modulus {0} is composite")]
    ModulusComposite(u64),
    #[error("modulus {0} exceeds the primality-check bound 65536")]
    ModulusTooLarge(u64),
    #[error("invalid partition ({0}, {1}): parts must be weakly decreasing")]
    InvalidPartition(u64, u64),
    #[error("lambda2 = {lambda2} exceeds the supported bound {cap}")]
    Lambda2TooLarge { lambda2: u64, cap: u64 },
    #[error("basis label {label} out of range (lambda2 = {lambda2})")]
    LabelOutOfRange { label: usize, lambda2: usize },
    #[error("element belongs to (m, lambda2) = ({got_m}, {got_lambda2}), this algebra is ({want_m}, {want_lambda2})")]
    ContextMismatch {
        want_m: u64,
        want_lambda2: usize,
        got_m: u64,
        got_lambda2: usize,
    },
    #[error("m = {arg_m} does not match the algebra's m = {ctx_m}")]
    WrongM { ctx_m: u64, arg_m: u64 },
    #[error("g = {g} out of range 0..={lambda2}")]
    GOutOfRange { g: u64, lambda2: usize },
    #[error("mu = ({mu1}, {mu2}) is not reachable from this lambda: {reason}")]
    InvalidMu { mu1: u64, mu2: u64, reason: String },
    #[error("Y^mu is not a summand of M^lambda at (m, g) = ({m}, {g}): C(m+2g, g) is even")]
    NotASummand { m: u64, g: u64 },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension {0} exceeds the supported bound 2^20")]
    DimensionTooLarge(u64),
    #[error("monomial {0} is not in the quotient basis")]
    NotInBasis(String),
    #[error("subset model needs r <= 14 and 2*lambda2 <= r, got r = {r}, lambda2 = {lambda2}")]
    OracleBounds { r: u64, lambda2: usize },
    #[error("algebra has lambda = ({0}, {1}) but the model was built for lambda = ({2}, {3})")]
    LambdaMismatch(u64, u64, u64, u64),
    #[error("internal consistency check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
