use thiserror::Error;

/// Errors raised by the divisor-class calculus.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("binomial polynomial needs n >= 0, got {0}")]
    NegativeBinomialDegree(i64),

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },
    #[error("genus {genus} is below the minimum {min} for this operation")]
    GenusTooSmall { genus: u32, min: u32 },
    #[error("boundary key {key} is not defined in genus {genus}")]
    InvalidBoundaryKey { key: String, genus: u32 },
    #[error("unsupported pushforward of {0}: multiplicity not configured")]
    UnsupportedPushforward(String),

    #[error("invalid Brill-Noether parameters: {0}")]
    InvalidParams(String),
    #[error("count formula requires rho = 0, got rho = {0}")]
    RhoNonzero(i64),
    #[error("inconsistent Riemann-Roch input: h0 would be {0}")]
    NegativeSectionCount(i64),
    #[error("factorial quotient is not an integer (remainder {0})")]
    NonIntegralCount(String),

    #[error("expected a homogeneous degree-1 class, got {0}")]
    NotHomogeneousDegreeOne(String),
    #[error("unpushable monomial: {0}")]
    UnpushableMonomial(String),

    #[error("negative rank {0}")]
    NegativeRank(i64),
    #[error("Porteous requires equal ranks: source {source_rank}, target {target_rank}")]
    RankImbalance { source_rank: i64, target_rank: i64 },
    #[error("generator {0} missing from pushforward table")]
    MissingGenerator(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("degeneration correction is only defined along δ0'', not {0}")]
    UnknownComponent(String),

    #[error("malformed resolution: {0}")]
    MalformedResolution(String),
    #[error("quotient Hilbert polynomial has degree {0:?}, expected a surface (degree 2)")]
    NotASurface(Option<usize>),
    #[error("section-count guard violated at twist {twist}: {reason}")]
    SectionGuard { twist: i64, reason: String },

    #[error("degenerate divisor pair: boundary parts are proportional")]
    DegeneratePair,
    #[error("no exact combination matches the target boundary coefficients: {0}")]
    Infeasible(String),
    #[error("genus {0} > 23: higher boundary coefficients must be checked")]
    GenusAboveFourTermRange(u32),
    #[error("class is not supported on λ, δ0', δ0'', δ0ram: {0}")]
    UnsupportedSupport(String),

    #[error("i/o error: {0}")]
    Io(String),
    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
