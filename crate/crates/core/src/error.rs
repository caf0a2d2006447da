use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length-unit exponents differ: {left} vs {right}")]
    ScaleMismatch { left: String, right: String },

    #[error("mass must be non-negative, got {0}")]
    NegativeMass(f64),

    #[error("Dirac splitting is undefined for a massless momentum")]
    MasslessSplitting,

    #[error("degenerate spinor: <lambda, u> vanishes")]
    DegenerateSpinor,

    #[error("<lambda, u> = {re} + {im}i is not real; the spinor is not a Dirac eigenstate")]
    NonRealPairing { re: f64, im: f64 },

    #[error("vector is not null: g(k,k) = {0}")]
    NotNull(f64),

    #[error("null vector is not future-pointing")]
    PastPointing,

    #[error("zero vector where a nonzero one is required")]
    ZeroVector,

    #[error("element is not horizontal: g(k, beta) = {0}")]
    NotHorizontal(f64),

    #[error("vector is not Hermitian")]
    NotHermitian,

    #[error("observer axis is not unit future timelike (g = {0})")]
    BadObserver(f64),

    #[error("amplitude functional is degenerate; no annihilator basis")]
    DegenerateVertex,

    #[error("grid too small: {0} nodes per axis (need at least 3)")]
    GridTooSmall(usize),

    #[error("grid shapes differ")]
    GridMismatch,

    #[error("matrix is not unitary (residual {0})")]
    NotUnitary(f64),

    #[error("matrix is not anti-Hermitian (residual {0})")]
    NotAntiHermitian(f64),

    #[error("radiative class violates k# contraction = 0 (residual {0})")]
    HorizontalityViolated(f64),

    #[error("radiative classes carry different null covectors")]
    DifferentNullCovector,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("right dimension {n_r} exceeds left dimension {n_l}")]
    RightExceedsLeft { n_r: usize, n_l: usize },

    #[error("metric is not Hermitian positive-definite")]
    BadMetric,

    #[error("Higgs vacuum is not of maximal rank")]
    RankDeficient,

    #[error("vacuum is not conformally isometric (residual {0})")]
    NotConformal(f64),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("lattices differ")]
    LatticeMismatch,

    #[error("truncated basis exceeds {0} states")]
    BasisTooLarge(usize),

    #[error("step count must be at least 1")]
    NoSteps,

    #[error("malformed grid data: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
