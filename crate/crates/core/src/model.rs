//! Working substance, thermodynamic state points, and GUP parameters.
//!
//! Everything downstream is a function of the spectral scale
//! γ = π²ħ²/(2mL²) of a particle of mass m in an infinite square well of
//! width L, evaluated in natural units (ħ = k = 1, so β = 1/T exactly).
//! The spectrum is E_n = γn² for n = 1, 2, 3, …; the minimal-length (GUP)
//! correction multiplies each level by (1 + δn²) with δ = 4mβ_Gγ.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Unit policy shared by every public quantity in the crate.
///
/// Natural units throughout: ħ = 1 and the Boltzmann constant k = 1, so
/// the inverse temperature is β = 1/T exactly and all quantities are
/// dimensionless numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitsConvention;

impl UnitsConvention {
    pub const HBAR: &'static str = "hbar = 1";
    pub const BOLTZMANN: &'static str = "k = 1";
    pub const INVERSE_TEMPERATURE: &'static str = "beta = 1/T";

    pub fn summary() -> &'static str {
        "natural units: hbar = 1, k = 1, beta = 1/T; all quantities are dimensionless"
    }
}

/// Default ceiling for δ = 4mβ_Gγ below which first-order GUP results are
/// served. The expansion drops O(δ²) terms, so the default keeps those
/// below every verification tolerance used by the oracles.
pub const DEFAULT_DELTA_MAX: f64 = 1e-3;

fn require_positive(value: f64, name: &str) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain(format!(
            "{name} must be positive and finite, got {value}"
        )))
    }
}

fn require_non_negative(value: f64, name: &str) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain(format!(
            "{name} must be non-negative and finite, got {value}"
        )))
    }
}

/// A particle of mass `mass` in an infinite square well of width `width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSubstance {
    mass: f64,
    width: f64,
}

impl WellSubstance {
    pub fn new(mass: f64, width: f64) -> Result<Self> {
        Ok(Self {
            mass: require_positive(mass, "mass")?,
            width: require_positive(width, "width")?,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    /// Spectral scale γ = π²/(2mL²). Strictly decreasing in both mass and width.
    pub fn gamma(&self) -> f64 {
        PI * PI / (2.0 * self.mass * self.width * self.width)
    }
}

/// Spectral scale of a validated substance.
pub fn gamma_of(substance: &WellSubstance) -> f64 {
    substance.gamma()
}

/// A (β, γ) state of the working substance. The dimensionless product βγ
/// is the sole argument of every closed-form statistical quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    beta: f64,
    gamma: f64,
}

impl ThermalPoint {
    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        Ok(Self {
            beta: require_positive(beta, "beta")?,
            gamma: require_positive(gamma, "gamma")?,
        })
    }

    /// Interior points of a segment between two valid points are valid.
    pub(crate) fn new_unchecked(beta: f64, gamma: f64) -> Self {
        Self { beta, gamma }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn beta_gamma(&self) -> f64 {
        self.beta * self.gamma
    }
}

/// GUP strength β_G together with the particle mass it multiplies.
///
/// β_G = 0 is a first-class value: every downstream formula degrades
/// continuously to the uncorrected result through the same code path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GupParams {
    beta_g: f64,
    mass: f64,
    delta_max: f64,
}

impl GupParams {
    pub fn new(beta_g: f64, mass: f64) -> Result<Self> {
        Ok(Self {
            beta_g: require_non_negative(beta_g, "beta_g")?,
            mass: require_positive(mass, "mass")?,
            delta_max: DEFAULT_DELTA_MAX,
        })
    }

    /// Same parameters with a different validity threshold for δ.
    pub fn with_delta_max(mut self, delta_max: f64) -> Result<Self> {
        self.delta_max = require_positive(delta_max, "delta_max")?;
        Ok(self)
    }

    pub fn beta_g(&self) -> f64 {
        self.beta_g
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn delta_max(&self) -> f64 {
        self.delta_max
    }

    /// K = (3√π/2)·β_G·m, the partition-function correction scale.
    pub fn k(&self) -> f64 {
        1.5 * PI.sqrt() * self.beta_g * self.mass
    }

    /// λ = 6·β_G·m, the heat-correction scale. Equal to 4K/√π.
    pub fn lambda(&self) -> f64 {
        6.0 * self.beta_g * self.mass
    }

    /// δ = 4mβ_Gγ, the per-level fractional spectrum shift at n = 1.
    pub fn delta(&self, gamma: f64) -> f64 {
        4.0 * self.mass * self.beta_g * gamma
    }

    /// First-order results are only served while δ stays under `delta_max`.
    pub fn check_regime(&self, gamma: f64) -> Result<()> {
        let delta = self.delta(gamma);
        if delta > self.delta_max {
            Err(Error::Regime {
                delta,
                delta_max: self.delta_max,
            })
        } else {
            Ok(())
        }
    }
}

/// The derived GUP coefficient triple (δ, K, λ) at a given γ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GupCoefficients {
    pub delta: f64,
    pub k: f64,
    pub lambda: f64,
}

/// Evaluates δ, K, and λ together. The identity λ = 4K/√π links the
/// partition-function and heat correction scales.
pub fn gup_coefficients(params: &GupParams, gamma: f64) -> Result<GupCoefficients> {
    require_positive(gamma, "gamma")?;
    Ok(GupCoefficients {
        delta: params.delta(gamma),
        k: params.k(),
        lambda: params.lambda(),
    })
}

/// E_n = γn² for n ≥ 1.
pub fn energy_level(gamma: f64, n: u64) -> Result<f64> {
    require_positive(gamma, "gamma")?;
    if n == 0 {
        return Err(Error::Domain(
            "quantum number n must be at least 1; the well spectrum starts at n = 1".into(),
        ));
    }
    let nf = n as f64;
    Ok(gamma * nf * nf)
}

/// GUP-corrected level E_n^G = γn²(1 + δn²); reduces to `energy_level`
/// at δ = 0 and exceeds it for δ > 0.
pub fn energy_level_gup(gamma: f64, delta: f64, n: u64) -> Result<f64> {
    require_non_negative(delta, "delta")?;
    let base = energy_level(gamma, n)?;
    let nf = n as f64;
    Ok(base * (1.0 + delta * nf * nf))
}
