//! Heat exchanged along individual thermodynamic legs.
//!
//! Quasi-static legs of three kinds: isothermal (β fixed), isochoric
//! (γ fixed, i.e. constant well width), and adiabatic (βγ = const, along
//! which the closed-form entropy is constant and the heat vanishes).
//! Closed forms come from integrating dQ = dS/(kβ):
//!
//! - isothermal: Q = −(1/2β)·ln(γ_f/γ_i)
//! - isochoric:  Q = (1/2)(1/β_f − 1/β_i)
//! - adiabatic:  Q = 0
//!
//! The GUP correction to any leg depends only on its endpoint
//! temperatures: Q^G = Q − (λ/2)(1/β_f² − 1/β_i²) with λ = 6β_G m, so
//! corrections telescope to zero around any closed cycle.
//!
//! [`path_heat_oracle`] integrates dS/β numerically along a polyline in
//! the (β, γ) plane and is the verification route for all of the above.

use crate::error::{Error, Result};
use crate::model::{GupParams, ThermalPoint};
use std::f64::consts::PI;

/// Relative tolerance on βγ constancy when constructing an adiabat.
/// Beyond this the constructor fails rather than renormalizing.
pub const ADIABAT_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcessKind {
    Isothermal,
    Adiabatic,
    Isochoric,
}

impl ProcessKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProcessKind::Isothermal => "isothermal",
            ProcessKind::Adiabatic => "adiabatic",
            ProcessKind::Isochoric => "isochoric",
        }
    }
}

/// One leg of a cycle: a kind plus validated endpoint states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Process {
    kind: ProcessKind,
    start: ThermalPoint,
    end: ThermalPoint,
}

impl Process {
    pub fn new(kind: ProcessKind, start: ThermalPoint, end: ThermalPoint) -> Result<Self> {
        match kind {
            ProcessKind::Isothermal => {
                if start.beta() != end.beta() {
                    return Err(Error::Contract(format!(
                        "isothermal leg requires equal endpoint betas, got {} and {}",
                        start.beta(),
                        end.beta()
                    )));
                }
            }
            ProcessKind::Isochoric => {
                if start.gamma() != end.gamma() {
                    return Err(Error::Contract(format!(
                        "isochoric leg requires equal endpoint gammas, got {} and {}",
                        start.gamma(),
                        end.gamma()
                    )));
                }
            }
            ProcessKind::Adiabatic => {
                let k_start = start.beta_gamma();
                let k_end = end.beta_gamma();
                if (k_start - k_end).abs() > ADIABAT_REL_TOL * k_start.max(k_end) {
                    return Err(Error::Contract(format!(
                        "adiabatic leg requires beta*gamma = const to {ADIABAT_REL_TOL:e} \
                         relative, got {k_start} and {k_end}"
                    )));
                }
            }
        }
        Ok(Self { kind, start, end })
    }

    pub fn isothermal(beta: f64, gamma_start: f64, gamma_end: f64) -> Result<Self> {
        Self::new(
            ProcessKind::Isothermal,
            ThermalPoint::new(beta, gamma_start)?,
            ThermalPoint::new(beta, gamma_end)?,
        )
    }

    pub fn isochoric(gamma: f64, beta_start: f64, beta_end: f64) -> Result<Self> {
        Self::new(
            ProcessKind::Isochoric,
            ThermalPoint::new(beta_start, gamma)?,
            ThermalPoint::new(beta_end, gamma)?,
        )
    }

    pub fn adiabatic(start: ThermalPoint, end: ThermalPoint) -> Result<Self> {
        Self::new(ProcessKind::Adiabatic, start, end)
    }

    pub fn kind(&self) -> ProcessKind {
        self.kind
    }

    pub fn start(&self) -> ThermalPoint {
        self.start
    }

    pub fn end(&self) -> ThermalPoint {
        self.end
    }
}

/// Signed heat of one leg (positive = absorbed), its GUP-corrected value,
/// and the correction connecting them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatResult {
    pub q: f64,
    pub q_gup: f64,
    /// −(λ/2)(1/β_f² − 1/β_i²); zero whenever β_G = 0 or β_i = β_f.
    pub correction: f64,
}

fn require_positive(value: f64, name: &str) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain(format!(
            "{name} must be positive and finite, got {value}"
        )))
    }
}

/// Q = −(1/2β)·ln(γ_f/γ_i); positive for an expansion (γ_f < γ_i).
pub fn heat_isothermal(beta: f64, gamma_start: f64, gamma_end: f64) -> Result<f64> {
    require_positive(beta, "beta")?;
    require_positive(gamma_start, "gamma_start")?;
    require_positive(gamma_end, "gamma_end")?;
    Ok(-(gamma_end / gamma_start).ln() / (2.0 * beta))
}

/// Q = (1/2)(1/β_f − 1/β_i); positive when heating (β_f < β_i).
pub fn heat_isochoric(gamma: f64, beta_start: f64, beta_end: f64) -> Result<f64> {
    require_positive(gamma, "gamma")?;
    require_positive(beta_start, "beta_start")?;
    require_positive(beta_end, "beta_end")?;
    Ok(0.5 * (1.0 / beta_end - 1.0 / beta_start))
}

/// Exactly zero along βγ = const: the 1/β difference term of the general
/// heat formula cancels the ∫dγ/(βγ) term identically.
pub fn heat_adiabatic(leg: &Process) -> Result<f64> {
    if leg.kind() != ProcessKind::Adiabatic {
        return Err(Error::Contract(format!(
            "heat_adiabatic expects an adiabatic leg, got {}",
            leg.kind().as_str()
        )));
    }
    Ok(0.0)
}

/// Dispatches to the closed form matching the leg kind.
pub fn heat_general(leg: &Process) -> Result<f64> {
    match leg.kind() {
        ProcessKind::Isothermal => {
            heat_isothermal(leg.start().beta(), leg.start().gamma(), leg.end().gamma())
        }
        ProcessKind::Isochoric => {
            heat_isochoric(leg.start().gamma(), leg.start().beta(), leg.end().beta())
        }
        ProcessKind::Adiabatic => heat_adiabatic(leg),
    }
}

/// Endpoint-only GUP correction −(λ/2)(1/β_f² − 1/β_i²). Independent of
/// the γ profile along the leg.
pub fn gup_heat_correction(params: &GupParams, beta_start: f64, beta_end: f64) -> f64 {
    -0.5 * params.lambda() * (1.0 / (beta_end * beta_end) - 1.0 / (beta_start * beta_start))
}

/// Closed-form heat plus its GUP correction. Gated on δ at both endpoints.
pub fn heat_gup(leg: &Process, params: &GupParams) -> Result<HeatResult> {
    params.check_regime(leg.start().gamma())?;
    params.check_regime(leg.end().gamma())?;
    let q = heat_general(leg)?;
    let correction = gup_heat_correction(params, leg.start().beta(), leg.end().beta());
    Ok(HeatResult {
        q,
        q_gup: q + correction,
        correction,
    })
}

// Eq-11 entropy used by the path oracle; only differences of it matter.
fn entropy_closed(beta: f64, gamma: f64) -> f64 {
    0.5 + (0.5 * (PI / (beta * gamma)).sqrt()).ln()
}

/// Numerical realization of dQ = dS/(kβ): the `steps` sub-segments are
/// distributed over the consecutive path-point pairs (at least one per
/// pair), each pair is split linearly in (β, γ), and every sub-segment
/// contributes ΔS·(1/β at its midpoint). Fixed-order accumulation keeps
/// the result deterministic; reversing the path negates it. Converges
/// O(steps⁻²) to the closed-form heat on supported legs.
pub fn path_heat_oracle(path: &[ThermalPoint], steps: u32) -> Result<f64> {
    if path.len() < 2 {
        return Err(Error::Domain(format!(
            "path needs at least 2 points, got {}",
            path.len()
        )));
    }
    if steps < 2 {
        return Err(Error::Domain(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    let pairs = path.len() as u32 - 1;
    let per_pair = steps.div_ceil(pairs).max(1);
    let n = per_pair as f64;
    let mut heat = 0.0;
    for pair in path.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let at = |t: f64| {
            (
                a.beta() * (1.0 - t) + b.beta() * t,
                a.gamma() * (1.0 - t) + b.gamma() * t,
            )
        };
        for j in 0..per_pair {
            let (b0, g0) = at(j as f64 / n);
            let (b1, g1) = at((j + 1) as f64 / n);
            let ds = entropy_closed(b1, g1) - entropy_closed(b0, g0);
            heat += ds / (0.5 * (b0 + b1));
        }
    }
    Ok(heat)
}

/// Path-integration heat of one leg. Isothermal and isochoric legs are
/// straight lines in (β, γ), so their two endpoints form the path;
/// adiabats are sampled as `steps`+1 points on the βγ = const hyperbola
/// (geometric in β) so every quadrature node carries the same closed-form
/// entropy and the heat collapses to rounding noise, confirming Q = 0.
pub fn leg_heat_oracle(leg: &Process, steps: u32) -> Result<f64> {
    match leg.kind() {
        ProcessKind::Isothermal | ProcessKind::Isochoric => {
            path_heat_oracle(&[leg.start(), leg.end()], steps)
        }
        ProcessKind::Adiabatic => {
            if steps < 2 {
                return Err(Error::Domain(format!(
                    "steps must be at least 2, got {steps}"
                )));
            }
            let k0 = leg.start().beta_gamma();
            let b_start = leg.start().beta();
            let ratio = leg.end().beta() / b_start;
            let mut points = Vec::with_capacity(steps as usize + 1);
            points.push(leg.start());
            for i in 1..steps {
                let beta = b_start * ratio.powf(i as f64 / steps as f64);
                points.push(ThermalPoint::new_unchecked(beta, k0 / beta));
            }
            points.push(leg.end());
            path_heat_oracle(&points, steps)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn pt(beta: f64, gamma: f64) -> ThermalPoint {
        ThermalPoint::new(beta, gamma).unwrap()
    }

    #[test]
    fn isothermal_desk_values() {
        assert_eq!(heat_isothermal(1.0, 1.0, 1.0).unwrap(), 0.0);
        // width doubles => gamma quarters => Q = ln 2
        assert_relative_eq!(
            heat_isothermal(1.0, 1.0, 0.25).unwrap(),
            2f64.ln(),
            max_relative = 1e-14
        );
        // expansion absorbs heat, compression releases it
        assert!(heat_isothermal(2.0, 1.0, 0.5).unwrap() > 0.0);
        assert!(heat_isothermal(2.0, 0.5, 1.0).unwrap() < 0.0);
        assert!(heat_isothermal(1.0, -1.0, 1.0).is_err());
        assert!(heat_isothermal(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn isochoric_desk_values() {
        assert_eq!(heat_isochoric(1.0, 2.0, 2.0).unwrap(), 0.0);
        assert_relative_eq!(
            heat_isochoric(1.0, 2.0, 0.5).unwrap(),
            0.75,
            max_relative = 1e-15
        );
        assert!(heat_isochoric(1.0, 1.0, f64::NAN).is_err());
    }

    proptest! {
        /// Q_AB = (gamma_h/2)(1/(beta_h gamma_h) - 1/(beta_l gamma_l)) with
        /// beta_A = beta_l gamma_l / gamma_h is the same number as
        /// (1/2)(1/beta_h - 1/beta_A), away from the Q_AB = 0 cancellation.
        #[test]
        fn isochoric_matches_gamma_weighted_form(
            beta_h in 0.1f64..2.0,
            ratio_b in 2.0f64..20.0,
            gamma_l in 0.1f64..2.0,
            ratio_g in 1.5f64..10.0,
        ) {
            prop_assume!((1.0 - ratio_g / ratio_b).abs() > 0.2);
            let beta_l = beta_h * ratio_b;
            let gamma_h = gamma_l * ratio_g;
            let beta_a = beta_l * gamma_l / gamma_h;
            let plain = heat_isochoric(gamma_h, beta_a, beta_h).unwrap();
            let weighted =
                0.5 * gamma_h * (1.0 / (beta_h * gamma_h) - 1.0 / (beta_l * gamma_l));
            prop_assert!((plain - weighted).abs() <= 1e-14 * plain.abs().max(weighted.abs()));
        }
    }

    #[test]
    fn adiabatic_heat_is_zero() {
        let leg = Process::adiabatic(pt(1.0, 1.0), pt(2.0, 0.5)).unwrap();
        assert_eq!(heat_adiabatic(&leg).unwrap(), 0.0);
        // degenerate adiabat
        let still = Process::adiabatic(pt(1.0, 1.0), pt(1.0, 1.0)).unwrap();
        assert_eq!(heat_adiabatic(&still).unwrap(), 0.0);
        // wrong kind is a contract error
        let iso = Process::isothermal(1.0, 1.0, 0.5).unwrap();
        assert!(matches!(heat_adiabatic(&iso), Err(Error::Contract(_))));
    }

    #[test]
    fn constructors_enforce_leg_invariants() {
        assert!(Process::new(ProcessKind::Isothermal, pt(1.0, 1.0), pt(1.1, 0.5)).is_err());
        assert!(Process::new(ProcessKind::Isochoric, pt(1.0, 1.0), pt(2.0, 1.0 + 1e-9)).is_err());
        // beta*gamma mismatch well beyond 1e-12 relative
        assert!(Process::adiabatic(pt(1.0, 1.0), pt(2.0, 0.5000001)).is_err());
        // mismatch within tolerance is accepted
        assert!(Process::adiabatic(pt(1.0, 1.0), pt(2.0, 0.5 * (1.0 + 1e-13))).is_ok());
    }

    #[test]
    fn heat_general_dispatches() {
        let iso = Process::isothermal(1.0, 1.0, 0.25).unwrap();
        assert_eq!(
            heat_general(&iso).unwrap(),
            heat_isothermal(1.0, 1.0, 0.25).unwrap()
        );
        let choric = Process::isochoric(1.0, 2.0, 0.5).unwrap();
        assert_eq!(
            heat_general(&choric).unwrap(),
            heat_isochoric(1.0, 2.0, 0.5).unwrap()
        );
        let adia = Process::adiabatic(pt(1.0, 1.0), pt(4.0, 0.25)).unwrap();
        assert_eq!(heat_general(&adia).unwrap(), 0.0);
    }

    #[test]
    fn gup_heat_desk_values() {
        // lambda = 6e-4; hot (beta 0.5) to cold (beta 1): correction =
        // -(3e-4)(1 - 4) = +9e-4
        let params = GupParams::new(1e-4, 1.0).unwrap();
        let leg = Process::adiabatic(pt(0.5, 0.02), pt(1.0, 0.01)).unwrap();
        let r = heat_gup(&leg, &params).unwrap();
        assert_eq!(r.q, 0.0);
        assert_relative_eq!(r.correction, 9e-4, max_relative = 1e-13);
        assert_relative_eq!(r.q_gup, 9e-4, max_relative = 1e-13);

        // isothermal legs keep Q^G = Q for any beta_g
        let iso = Process::isothermal(1.0, 0.02, 0.01).unwrap();
        let r = heat_gup(&iso, &params).unwrap();
        assert_eq!(r.correction, 0.0);
        assert_eq!(r.q_gup, r.q);

        // beta_g = 0 keeps Q^G = Q on every leg kind
        let off = GupParams::new(0.0, 1.0).unwrap();
        for leg in [
            Process::isothermal(1.0, 0.02, 0.01).unwrap(),
            Process::isochoric(0.01, 2.0, 0.5).unwrap(),
            Process::adiabatic(pt(0.5, 0.02), pt(1.0, 0.01)).unwrap(),
        ] {
            let r = heat_gup(&leg, &off).unwrap();
            assert_eq!(r.correction, 0.0);
            assert_eq!(r.q_gup, r.q);
        }
    }

    #[test]
    fn gup_heat_respects_regime_gate() {
        let params = GupParams::new(1e-3, 1.0).unwrap();
        let leg = Process::isothermal(1.0, 2.0, 1.0).unwrap(); // delta = 8e-3 at start
        assert!(matches!(heat_gup(&leg, &params), Err(Error::Regime { .. })));
    }

    #[test]
    fn path_oracle_matches_isothermal_closed_form() {
        let leg = Process::isothermal(1.0, 1.0, 0.25).unwrap();
        let oracle = leg_heat_oracle(&leg, 10_000).unwrap();
        let closed = heat_general(&leg).unwrap();
        assert_relative_eq!(oracle, closed, max_relative = 1e-8);
    }

    #[test]
    fn path_oracle_vanishes_on_adiabats() {
        let cases = [(1.0f64, 1.0f64, 4.0f64), (0.5, 0.02, 3.0), (2.0, 0.7, 0.25)];
        for (b0, g0, ratio) in cases {
            let start = pt(b0, g0);
            let end = pt(b0 * ratio, g0 / ratio);
            let leg = Process::adiabatic(start, end).unwrap();
            let q = leg_heat_oracle(&leg, 10_000).unwrap();
            let beta_min = start.beta().min(end.beta());
            assert!(
                q.abs() <= 1e-8 / beta_min,
                "adiabat heat {q} exceeds bound at beta_min={beta_min}"
            );
        }
    }

    #[test]
    fn path_oracle_is_antisymmetric() {
        let a = pt(1.0, 1.0);
        let b = pt(2.0, 0.7);
        let c = pt(2.0, 0.2);
        let forward = path_heat_oracle(&[a, b, c], 500).unwrap();
        let backward = path_heat_oracle(&[c, b, a], 500).unwrap();
        assert_abs_diff_eq!(forward, -backward, epsilon = 1e-12 * forward.abs().max(1.0));
    }

    #[test]
    fn path_oracle_converges_second_order() {
        // isochoric leg has a nonzero midpoint-rule error, halving h
        // quarters it; quadrupling steps must shrink it by >= 8x
        let leg = Process::isochoric(1.0, 1.0, 2.0).unwrap();
        let closed = heat_general(&leg).unwrap();
        let err = |steps: u32| (leg_heat_oracle(&leg, steps).unwrap() - closed).abs();
        let coarse = err(100);
        let fine = err(400);
        assert!(
            coarse / fine >= 8.0,
            "convergence ratio {} below 8",
            coarse / fine
        );
    }

    #[test]
    fn path_oracle_rejects_bad_inputs() {
        let a = pt(1.0, 1.0);
        assert!(matches!(path_heat_oracle(&[a], 100), Err(Error::Domain(_))));
        assert!(matches!(
            path_heat_oracle(&[a, pt(2.0, 1.0)], 1),
            Err(Error::Domain(_))
        ));
    }

    proptest! {
        /// Corrections telescope around any closed four-corner loop.
        #[test]
        fn corrections_telescope(
            b1 in 0.1f64..10.0,
            b2 in 0.1f64..10.0,
            b3 in 0.1f64..10.0,
            b4 in 0.1f64..10.0,
            beta_g in 1e-9f64..1e-5,
        ) {
            let params = GupParams::new(beta_g, 1.0).unwrap();
            let betas = [b1, b2, b3, b4];
            let mut total = 0.0;
            let mut largest: f64 = 0.0;
            for i in 0..4 {
                let c = gup_heat_correction(&params, betas[i], betas[(i + 1) % 4]);
                total += c;
                largest = largest.max(c.abs());
            }
            prop_assert!(total.abs() <= 8.0 * f64::EPSILON * largest.max(f64::MIN_POSITIVE));
        }

        /// Splitting a leg at an interior point preserves the closed-form heat.
        #[test]
        fn closed_forms_are_additive(
            beta in 0.1f64..10.0,
            g_start in 0.01f64..10.0,
            g_end in 0.01f64..10.0,
            t in 0.05f64..0.95,
        ) {
            let g_mid = g_start * (1.0 - t) + g_end * t;
            let whole = heat_isothermal(beta, g_start, g_end).unwrap();
            let split = heat_isothermal(beta, g_start, g_mid).unwrap()
                + heat_isothermal(beta, g_mid, g_end).unwrap();
            prop_assert!((whole - split).abs() <= 1e-12 * whole.abs().max(1e-6));

            let whole = heat_isochoric(1.0, beta, g_start).unwrap();
            let b_mid = beta * (1.0 - t) + g_start * t;
            let split = heat_isochoric(1.0, beta, b_mid).unwrap()
                + heat_isochoric(1.0, b_mid, g_start).unwrap();
            prop_assert!((whole - split).abs() <= 1e-12 * whole.abs().max(1e-6));
        }

        /// The correction never depends on the gamma profile of the leg:
        /// two legs sharing endpoint betas but living at different widths
        /// carry the identical correction.
        #[test]
        fn correction_ignores_gamma(
            beta_start in 0.1f64..10.0,
            beta_end in 0.1f64..10.0,
            gamma_a in 1e-6f64..1e-3,
            gamma_b in 1e-6f64..1e-3,
            beta_g in 1e-9f64..1e-5,
            mass in 0.1f64..10.0,
        ) {
            let params = GupParams::new(beta_g, mass).unwrap();
            let leg_a = Process::isochoric(gamma_a, beta_start, beta_end).unwrap();
            let leg_b = Process::isochoric(gamma_b, beta_start, beta_end).unwrap();
            let c_a = heat_gup(&leg_a, &params).unwrap().correction;
            let c_b = heat_gup(&leg_b, &params).unwrap().correction;
            prop_assert_eq!(c_a, c_b);
        }
    }
}
