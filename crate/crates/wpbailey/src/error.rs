//! Error type shared across the engine.

use thiserror::Error;

/// Everything that can go wrong during exact evaluation or lookup.
///
/// `DivisionByZero` is the degeneracy signal: a denominator vanished at
/// the sampled point, so the caller should resample (see
/// `roots::sample_non_degenerate`).  It is never a data error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A denominator vanished; the evaluation point is degenerate for
    /// the computation at hand.
    #[error("division by zero: degenerate evaluation point")]
    DivisionByZero,

    /// Square root of a monomial with an odd 16th-exponent or an
    /// imaginary unit.  A formula was applied outside the
    /// parameterization the exponent budget guarantees.
    #[error("square root unavailable for {0}")]
    RootUnavailable(String),

    /// A series outside the r = s+1 phi shape; nothing else occurs here.
    #[error("series with {nums} numerator and {dens} denominator parameters; need exactly one more numerator")]
    SeriesShape { nums: usize, dens: usize },

    /// Every retry seed produced a degenerate point.
    #[error("no non-degenerate point after {attempts} attempts from seed {seed}")]
    PointExhaustion { seed: u64, attempts: u32 },

    /// A pair, chain or identity evaluator needed an extra parameter
    /// (rho1, rho2, ...) the bundle does not carry.
    #[error("missing extra parameter {0}")]
    MissingExtra(String),

    #[error("unknown pair: {0}")]
    UnknownPair(String),

    #[error("unknown chain: {0}")]
    UnknownChain(String),

    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
}
