use thiserror::Error;

/// Configuration errors raised before any optimization work starts.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("population must be at least {min}, got {got}")]
    PopulationTooSmall { min: usize, got: usize },
    #[error("max_iterations must be at least 1")]
    ZeroIterations,
    #[error("vanish_epsilon must be positive, got {0}")]
    NonPositiveVanishEpsilon(f64),
    #[error("fixed tornado diameter k1={k1} must satisfy 1 <= k1 < population ({population})")]
    DiameterOutOfRange { k1: usize, population: usize },
    #[error("phi1 + phi2 must exceed 4 for the constriction coefficient, got {0}")]
    ConstrictionUndefined(f64),
    #[error("crossover_fraction must lie strictly between 0 and 1, got {0}")]
    BadCrossoverFraction(f64),
    #[error("{name} must lie in [0, 1], got {value}")]
    BadProbability { name: &'static str, value: f64 },
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("distortion criterion needs a nonzero known optimum; use a cost threshold instead")]
    DistortionNeedsNonzeroOptimum,
    #[error("runs must be at least 1")]
    ZeroRuns,
    #[error("dimension list must not be empty")]
    EmptyDimensionList,
    #[error("unknown benchmark function `{got}`; valid names: {valid}")]
    UnknownFunction { got: String, valid: String },
    #[error("`{name}` is a fixed {expected}-dimensional function, got dimension {got}")]
    FixedDimension {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("`{name}` requires dimension >= 1")]
    ZeroDimension { name: &'static str },
}
