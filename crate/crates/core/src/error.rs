//! Error type shared by the whole crate.

use std::fmt;

/// Everything that can go wrong when building states, processes, or cycles.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input failed validation (non-finite, non-positive, out of range).
    Domain(String),
    /// A first-order GUP result was requested outside the expansion's
    /// validity window (δ = 4mβ_Gγ exceeded the configured threshold).
    Regime { delta: f64, delta_max: f64 },
    /// A brute-force series sum hit the iteration cap before its analytic
    /// tail bound dropped below the requested tolerance.
    Convergence {
        terms: u64,
        tail_bound: f64,
        tail_tol: f64,
    },
    /// A process leg violates its defining constraint (wrong kind, or the
    /// βγ = const adiabatic invariant broken beyond tolerance).
    Contract(String),
    /// A cycle specification is internally inconsistent.
    Spec(String),
    /// A figure function was evaluated within the exclusion band of its
    /// pole at r·r_L = 1.
    Pole { product: f64 },
    /// The cycle absorbs no heat, so efficiency is undefined.
    DegenerateCycle(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Regime { delta, delta_max } => write!(
                f,
                "GUP regime error: delta = {delta:e} exceeds delta_max = {delta_max:e}; \
                 the first-order GUP expansion is untrustworthy here"
            ),
            Error::Convergence {
                terms,
                tail_bound,
                tail_tol,
            } => write!(
                f,
                "series did not converge within {terms} terms \
                 (tail bound {tail_bound:e} > tolerance {tail_tol:e})"
            ),
            Error::Contract(msg) => write!(f, "process contract violated: {msg}"),
            Error::Spec(msg) => write!(f, "invalid cycle spec: {msg}"),
            Error::Pole { product } => write!(
                f,
                "figure function pole: r*r_L = {product} lies within 1e-9 of 1"
            ),
            Error::DegenerateCycle(msg) => write!(f, "degenerate cycle: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
