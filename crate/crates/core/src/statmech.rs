//! Partition functions and thermodynamic potentials, closed-form and exact.
//!
//! The closed forms rest on the sum-to-integral replacement
//! Σ_{n≥1} e^{−βγn²} ≈ ∫_0^∞ e^{−βγx²} dx = (1/2)√(π/(βγ)),
//! which is a small-βγ approximation: the lattice sum sits exactly 1/2
//! below the integral (up to e^{−π²/βγ} terms), so the closed forms carry
//! a relative error of order √(βγ/π). Every closed-form result therefore
//! comes with an [`ApproxQuality`] flag, and this module also provides
//! exact tail-bounded series oracles ([`partition_sum_oracle`],
//! [`thermo_oracle`]) that quantify the gap instead of hiding it.
//!
//! GUP corrections enter through K = (3√π/2)β_G m:
//! Z^G ≈ Z − K(β³γ)^{−1/2}, F^G = F + 2K/(√πβ²), U^G = U − 2K/(√πβ²),
//! S^G = S − 4K/(√πβ). The entropy shift is independent of γ, hence of
//! the well width.

use crate::error::{Error, Result};
use crate::model::{GupParams, ThermalPoint};
use std::f64::consts::PI;

/// Closed forms are flagged `Ok` up to this βγ.
pub const QUALITY_OK_MAX: f64 = 1e-3;
/// Between [`QUALITY_OK_MAX`] and this value they are `Marginal`; above, `Invalid`.
pub const QUALITY_MARGINAL_MAX: f64 = 0.1;

/// Iteration cap for the tail-bounded series sums.
pub const MAX_SERIES_TERMS: u64 = 10_000_000;

/// Trust region of the sum-to-integral replacement behind the closed forms.
///
/// Chosen from the √(βγ/π) relative-error law of the lattice-vs-integral
/// gap: `Ok` keeps it under ~1.8%, `Invalid` marks where the closed forms
/// are qualitatively wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxQuality {
    Ok,
    Marginal,
    Invalid,
}

impl ApproxQuality {
    pub fn as_str(&self) -> &'static str {
        match self {
            ApproxQuality::Ok => "ok",
            ApproxQuality::Marginal => "marginal",
            ApproxQuality::Invalid => "invalid",
        }
    }
}

impl std::fmt::Display for ApproxQuality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn approx_quality(beta_gamma: f64) -> ApproxQuality {
    if beta_gamma <= QUALITY_OK_MAX {
        ApproxQuality::Ok
    } else if beta_gamma <= QUALITY_MARGINAL_MAX {
        ApproxQuality::Marginal
    } else {
        ApproxQuality::Invalid
    }
}

/// Z, F, U, S of one thermal point, plus the constant S_0 as metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatmechQuantities {
    pub z: f64,
    pub f: f64,
    pub u: f64,
    pub s: f64,
    /// S_0 = 1/2 + ln(√π/2); reported but never consumed downstream
    /// (it cancels under the differentials that produce heats).
    pub s0: f64,
    pub quality: ApproxQuality,
}

/// GUP-corrected counterparts Z^G, F^G, U^G, S^G.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GupStatmechQuantities {
    pub z: f64,
    pub f: f64,
    pub u: f64,
    pub s: f64,
}

/// S_0 = 1/2 + ln(√π/2) ≈ 0.379218.
pub fn s0() -> f64 {
    0.5 + (PI.sqrt() / 2.0).ln()
}

fn validated_beta_gamma(point: &ThermalPoint) -> Result<f64> {
    let bg = point.beta_gamma();
    if bg.is_finite() && bg > 0.0 {
        Ok(bg)
    } else {
        Err(Error::Domain(format!(
            "beta*gamma must stay positive and finite, got {bg}"
        )))
    }
}

/// Integral-approximation partition function Z ≈ (1/2)√(π/(βγ)).
pub fn partition_approx(point: &ThermalPoint) -> Result<f64> {
    let bg = validated_beta_gamma(point)?;
    let z = 0.5 * (PI / bg).sqrt();
    if z.is_finite() && z > 0.0 {
        Ok(z)
    } else {
        Err(Error::Domain(format!(
            "partition approximation overflowed at beta*gamma = {bg}"
        )))
    }
}

/// Exact partition sum Σ_{n≥1} e^{−βγn²(1+δn²)}; δ = 0 gives the
/// uncorrected spectrum. Terms are added until the Gaussian tail bound
/// ∫_N^∞ e^{−ax²} dx ≤ e^{−aN²}/(2aN) drops below `tail_tol`.
fn boltzmann_sum(a: f64, delta: f64, tail_tol: f64) -> Result<f64> {
    if !(tail_tol.is_finite() && tail_tol > 0.0) {
        return Err(Error::Domain(format!(
            "tail_tol must be positive and finite, got {tail_tol}"
        )));
    }
    let mut sum = 0.0;
    let mut n: u64 = 1;
    loop {
        let nf = n as f64;
        let gaussian = a * nf * nf;
        sum += (-(gaussian * (1.0 + delta * nf * nf))).exp();
        let tail_bound = (-gaussian).exp() / (2.0 * a * nf);
        if tail_bound < tail_tol {
            return Ok(sum);
        }
        n += 1;
        if n > MAX_SERIES_TERMS {
            return Err(Error::Convergence {
                terms: MAX_SERIES_TERMS,
                tail_bound,
                tail_tol,
            });
        }
    }
}

/// Brute-force Z for the uncorrected spectrum. Deterministic for fixed
/// inputs; this is the exact definition the closed form approximates.
pub fn partition_sum_oracle(point: &ThermalPoint, tail_tol: f64) -> Result<f64> {
    let bg = validated_beta_gamma(point)?;
    boltzmann_sum(bg, 0.0, tail_tol)
}

/// Brute-force Z^G summing the exact GUP spectrum E_n(1 + δn²). No regime
/// gate: the sum is exact for any δ ≥ 0 and serves as the oracle for the
/// first-order closed form.
pub fn partition_sum_oracle_gup(
    point: &ThermalPoint,
    params: &GupParams,
    tail_tol: f64,
) -> Result<f64> {
    let bg = validated_beta_gamma(point)?;
    boltzmann_sum(bg, params.delta(point.gamma()), tail_tol)
}

/// Integral approximation of the fourth moment Σ n⁴e^{−βγn²} ≈ (3√π/8)(βγ)^{−5/2}.
pub fn n4_moment_approx(point: &ThermalPoint) -> Result<f64> {
    let bg = validated_beta_gamma(point)?;
    let m = 0.375 * PI.sqrt() * bg.powf(-2.5);
    if m.is_finite() && m > 0.0 {
        Ok(m)
    } else {
        Err(Error::Domain(format!(
            "n^4 moment approximation overflowed at beta*gamma = {bg}"
        )))
    }
}

/// Brute-force fourth moment Σ_{n≥1} n⁴e^{−βγn²} with the analytic tail bound
/// ∫_N^∞ x⁴e^{−ax²} dx ≤ e^{−aN²}·(N³/(2a) + 3N/(4a²) + 3/(8a³N)).
pub fn n4_moment_sum_oracle(point: &ThermalPoint, tail_tol: f64) -> Result<f64> {
    let a = validated_beta_gamma(point)?;
    if !(tail_tol.is_finite() && tail_tol > 0.0) {
        return Err(Error::Domain(format!(
            "tail_tol must be positive and finite, got {tail_tol}"
        )));
    }
    let mut sum = 0.0;
    let mut n: u64 = 1;
    loop {
        let nf = n as f64;
        sum += nf.powi(4) * (-(a * nf * nf)).exp();
        let tail_bound = (-(a * nf * nf)).exp()
            * (nf.powi(3) / (2.0 * a) + 0.75 * nf / (a * a) + 0.375 / (a * a * a * nf));
        if tail_bound < tail_tol {
            return Ok(sum);
        }
        n += 1;
        if n > MAX_SERIES_TERMS {
            return Err(Error::Convergence {
                terms: MAX_SERIES_TERMS,
                tail_bound,
                tail_tol,
            });
        }
    }
}

/// First-order GUP partition function Z^G ≈ Z − K(β³γ)^{−1/2}.
/// Strictly below `partition_approx` whenever β_G > 0.
pub fn partition_gup(point: &ThermalPoint, params: &GupParams) -> Result<f64> {
    params.check_regime(point.gamma())?;
    let z = partition_approx(point)?;
    let beta = point.beta();
    let correction = params.k() / (beta * (beta * point.gamma()).sqrt());
    let zg = z - correction;
    if zg.is_finite() && zg > 0.0 {
        Ok(zg)
    } else {
        Err(Error::Domain(format!(
            "first-order Z^G = {zg} is non-positive; the GUP expansion does not \
             apply at beta = {beta} with these parameters"
        )))
    }
}

/// Closed-form F, U, S from the integral-approximation Z:
/// F = −ln(Z)/β, U = 1/(2β), S = 1/2 + ln Z.
pub fn thermo_closed_form(point: &ThermalPoint) -> Result<StatmechQuantities> {
    let z = partition_approx(point)?;
    let beta = point.beta();
    let ln_z = z.ln();
    Ok(StatmechQuantities {
        z,
        f: -ln_z / beta,
        u: 0.5 / beta,
        s: 0.5 + ln_z,
        s0: s0(),
        quality: approx_quality(point.beta_gamma()),
    })
}

/// GUP-shifted potentials. The shifts are width-independent:
/// S^G − S = −4K/(√πβ) = −λ/β regardless of γ.
pub fn thermo_gup(point: &ThermalPoint, params: &GupParams) -> Result<GupStatmechQuantities> {
    let base = thermo_closed_form(point)?;
    let zg = partition_gup(point, params)?;
    let beta = point.beta();
    let fu_shift = 2.0 * params.k() / (PI.sqrt() * beta * beta);
    let s_shift = 4.0 * params.k() / (PI.sqrt() * beta);
    Ok(GupStatmechQuantities {
        z: zg,
        f: base.f + fu_shift,
        u: base.u - fu_shift,
        s: base.s - s_shift,
    })
}

/// Step for the central difference in [`thermo_oracle`]: β·ε^(1/3), the
/// standard optimum balancing truncation against cancellation.
pub fn default_fd_step(beta: f64) -> f64 {
    beta * f64::EPSILON.cbrt()
}

/// Verification-side thermodynamics from exact sums: Z by tail-bounded
/// summation of the (GUP) spectrum, U = −∂_β ln Z by central difference
/// with step `h`, F = −ln Z/β, S = β(U − F). Makes no use of the
/// closed forms it is compared against.
pub fn thermo_oracle(
    point: &ThermalPoint,
    params: &GupParams,
    tail_tol: f64,
    h: f64,
) -> Result<StatmechQuantities> {
    let beta = point.beta();
    let gamma = point.gamma();
    if !(h.is_finite() && h > 0.0 && h < beta) {
        return Err(Error::Domain(format!(
            "finite-difference step h = {h} must lie in (0, beta = {beta})"
        )));
    }
    let delta = params.delta(gamma);
    let ln_z_at = |b: f64| -> Result<f64> {
        let z = boltzmann_sum(b * gamma, delta, tail_tol)?;
        if z > 0.0 && z.is_finite() {
            Ok(z.ln())
        } else {
            Err(Error::Domain(format!(
                "partition sum underflowed to {z} at beta*gamma = {}",
                b * gamma
            )))
        }
    };
    let ln_z = ln_z_at(beta)?;
    let u = -(ln_z_at(beta + h)? - ln_z_at(beta - h)?) / (2.0 * h);
    let f = -ln_z / beta;
    Ok(StatmechQuantities {
        z: ln_z.exp(),
        f,
        u,
        s: beta * (u - f),
        s0: s0(),
        quality: approx_quality(beta * gamma),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn point(beta: f64, gamma: f64) -> ThermalPoint {
        ThermalPoint::new(beta, gamma).unwrap()
    }

    fn gup_off() -> GupParams {
        GupParams::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn partition_approx_desk_values() {
        assert_relative_eq!(
            partition_approx(&point(1.0, PI / 4.0)).unwrap(),
            1.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            partition_approx(&point(1.0, 0.01)).unwrap(),
            8.86226925452758,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            partition_approx(&point(1.0, 1e-4)).unwrap(),
            88.6226925452758,
            max_relative = 1e-12
        );
    }

    #[test]
    fn partition_sum_matches_explicit_terms_at_large_beta_gamma() {
        // At beta*gamma = 10 the first three terms already pin the sum far
        // below any representable tail at tol = 1e-20.
        let oracle = partition_sum_oracle(&point(1.0, 10.0), 1e-20).unwrap();
        let explicit = (-10.0f64).exp() + (-40.0f64).exp() + (-90.0f64).exp();
        assert_relative_eq!(oracle, explicit, max_relative = 1e-14);
        assert_relative_eq!(oracle, 4.53999297624891e-5, max_relative = 1e-12);
    }

    #[test]
    fn partition_sum_sits_half_below_integral_at_small_beta_gamma() {
        let p = point(1.0, 0.01);
        let oracle = partition_sum_oracle(&p, 1e-12).unwrap();
        let approx = partition_approx(&p).unwrap();
        assert_abs_diff_eq!(approx - oracle, 0.5, epsilon = 1e-9);
        assert_relative_eq!(oracle, 8.36226925452758, max_relative = 1e-9);
    }

    #[test]
    fn partition_sum_single_term_dominates_at_huge_beta_gamma() {
        for bg in [50.0, 80.0, 200.0] {
            let oracle = partition_sum_oracle(&point(1.0, bg), 1e-30).unwrap();
            assert_relative_eq!(oracle, (-bg).exp(), max_relative = 1e-15);
        }
    }

    #[test]
    fn partition_sum_reports_convergence_failure() {
        // The tail bound cannot reach 1e-12 within the term cap here.
        let err = partition_sum_oracle(&point(1.0, 1e-20), 1e-12).unwrap_err();
        match err {
            Error::Convergence { terms, .. } => assert_eq!(terms, MAX_SERIES_TERMS),
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn partition_sum_rejects_bad_tolerance() {
        assert!(partition_sum_oracle(&point(1.0, 1.0), 0.0).is_err());
        assert!(partition_sum_oracle(&point(1.0, 1.0), -1e-9).is_err());
        assert!(partition_sum_oracle(&point(1.0, 1.0), f64::NAN).is_err());
    }

    #[test]
    fn n4_moment_desk_values() {
        assert_relative_eq!(
            n4_moment_approx(&point(1.0, 1.0)).unwrap(),
            0.6646701940895685,
            max_relative = 1e-14
        );
        // power-law scaling (beta*gamma)^(-5/2)
        let scaled = n4_moment_approx(&point(1.0, 0.01)).unwrap();
        assert_relative_eq!(scaled, 0.6646701940895685e5, max_relative = 1e-12);
        // against the brute-force moment sum
        let p = point(1.0, 0.04);
        let sum = n4_moment_sum_oracle(&p, 1e-12).unwrap();
        let approx = n4_moment_approx(&p).unwrap();
        assert!(
            (sum - approx).abs() / sum < 0.02,
            "moment approximation off by more than 2%: sum={sum}, approx={approx}"
        );
    }

    #[test]
    fn partition_gup_desk_values() {
        let p = point(1.0, 0.01);
        let params = GupParams::new(1e-4, 1.0).unwrap();

        // beta_g = 0 reproduces the approximation bit-for-bit
        assert_eq!(
            partition_gup(&p, &gup_off()).unwrap(),
            partition_approx(&p).unwrap()
        );

        let zg = partition_gup(&p, &params).unwrap();
        assert_relative_eq!(zg, 8.859610573751223, max_relative = 1e-12);
        assert!(zg < partition_approx(&p).unwrap());

        // against the exact GUP-spectrum sum: the difference is dominated by
        // the lattice-vs-integral offset, bounded by max(0.6*sqrt(bg), 10*delta)
        let sum = partition_sum_oracle_gup(&p, &params, 1e-12).unwrap();
        let bound = (0.6 * p.beta_gamma().sqrt()).max(10.0 * params.delta(p.gamma()));
        assert!(
            ((zg - sum) / sum).abs() < bound,
            "Z^G disagrees with spectrum sum beyond {bound}: zg={zg}, sum={sum}"
        );
    }

    #[test]
    fn partition_gup_respects_regime_gate() {
        let params = GupParams::new(1e-4, 1.0).unwrap();
        let err = partition_gup(&point(1.0, 5.0), &params).unwrap_err();
        assert!(matches!(err, Error::Regime { .. }));
    }

    #[test]
    fn thermo_closed_form_desk_values() {
        let q = thermo_closed_form(&point(1.0, PI / 4.0)).unwrap();
        assert_relative_eq!(q.z, 1.0, max_relative = 1e-15);
        assert_abs_diff_eq!(q.s, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(q.u, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(q.f, 0.0, epsilon = 1e-15);
        assert_relative_eq!(q.s0, 0.3792177623647547, max_relative = 1e-14);

        let q = thermo_closed_form(&point(1.0, 0.01)).unwrap();
        assert_relative_eq!(q.s, 2.6818028553588005, max_relative = 1e-12);

        // S depends on beta*gamma only
        let a = thermo_closed_form(&point(1.0, 0.01)).unwrap();
        let b = thermo_closed_form(&point(2.0, 0.005)).unwrap();
        assert_relative_eq!(a.s, b.s, max_relative = 1e-14);
    }

    #[test]
    fn quality_flags_follow_thresholds() {
        assert_eq!(approx_quality(1e-4), ApproxQuality::Ok);
        assert_eq!(approx_quality(1e-3), ApproxQuality::Ok);
        assert_eq!(approx_quality(0.05), ApproxQuality::Marginal);
        assert_eq!(approx_quality(0.5), ApproxQuality::Invalid);
        assert_eq!(
            thermo_closed_form(&point(1.0, 10.0)).unwrap().quality,
            ApproxQuality::Invalid
        );
    }

    #[test]
    fn thermo_gup_desk_values() {
        let p = point(1.0, 0.01);
        let base = thermo_closed_form(&p).unwrap();

        // beta_g = 0: all shifts vanish bit-for-bit
        let off = thermo_gup(&p, &gup_off()).unwrap();
        assert_eq!(off.f, base.f);
        assert_eq!(off.u, base.u);
        assert_eq!(off.s, base.s);

        let params = GupParams::new(1e-4, 1.0).unwrap();
        let g = thermo_gup(&p, &params).unwrap();
        // S^G - S = -lambda/beta = -6e-4, independently -4K/(sqrt(pi) beta)
        assert_relative_eq!(g.s - base.s, -6e-4, max_relative = 1e-12);
        assert_relative_eq!(
            g.s - base.s,
            -params.lambda() / p.beta(),
            max_relative = 1e-14
        );
        // (U^G - F^G) - (U - F) = -4K/(sqrt(pi) beta)
        assert_relative_eq!(
            (g.u - g.f) - (base.u - base.f),
            -4.0 * params.k() / (PI.sqrt() * p.beta()),
            max_relative = 1e-11
        );

        // width-independence: the shift is identical at gamma and 4*gamma
        let p4 = point(1.0, 0.04);
        let base4 = thermo_closed_form(&p4).unwrap();
        let g4 = thermo_gup(&p4, &params).unwrap();
        assert_abs_diff_eq!(g.s - base.s, g4.s - base4.s, epsilon = 1e-14);
    }

    #[test]
    fn thermo_oracle_agrees_in_the_integral_domain() {
        // beta*gamma = 1e-4: the ~0.56% lattice correction dominates, so
        // oracle and closed form sit within 1% of each other.
        let p = point(1.0, 1e-4);
        let closed = thermo_closed_form(&p).unwrap();
        let oracle = thermo_oracle(&p, &gup_off(), 1e-12, default_fd_step(p.beta())).unwrap();
        assert!(((oracle.s - closed.s) / closed.s).abs() < 0.01);
        assert!(((oracle.u - closed.u) / closed.u).abs() < 0.01);
    }

    #[test]
    fn thermo_oracle_disagrees_outside_the_integral_domain() {
        // beta*gamma = 10: the approximation is invalid and the probe must
        // measure a gross (>10%) disagreement.
        let p = point(1.0, 10.0);
        let closed = thermo_closed_form(&p).unwrap();
        let oracle = thermo_oracle(&p, &gup_off(), 1e-30, default_fd_step(p.beta())).unwrap();
        assert!(((oracle.s - closed.s) / closed.s).abs() > 0.10);
        assert!(((oracle.u - closed.u) / closed.u).abs() > 0.10);
    }

    #[test]
    fn thermo_oracle_rejects_bad_step() {
        let p = point(1.0, 1.0);
        assert!(thermo_oracle(&p, &gup_off(), 1e-12, 0.0).is_err());
        assert!(thermo_oracle(&p, &gup_off(), 1e-12, 1.5).is_err());
    }

    #[test]
    fn entropy_identity_holds_for_both_branches() {
        // S = beta*(U - F) is definitional; check closed form and oracle.
        for (beta, gamma) in [(1.0, 1e-4), (2.0, 5e-4), (0.5, 2e-3)] {
            let p = point(beta, gamma);
            let c = thermo_closed_form(&p).unwrap();
            assert_relative_eq!(c.s, beta * (c.u - c.f), max_relative = 1e-12);
            let o = thermo_oracle(&p, &gup_off(), 1e-12, default_fd_step(beta)).unwrap();
            assert_relative_eq!(o.s, beta * (o.u - o.f), max_relative = 1e-12);
        }
    }

    proptest! {
        /// Euler-Maclaurin offset: approx - sum stays in [0.49, 0.51] for
        /// all beta*gamma <= 1e-3.
        #[test]
        fn euler_maclaurin_offset(log_bg in -6.0f64..-3.0) {
            let bg = 10f64.powf(log_bg);
            let p = point(1.0, bg);
            let offset = partition_approx(&p).unwrap()
                - partition_sum_oracle(&p, 1e-10).unwrap();
            prop_assert!((0.49..=0.51).contains(&offset), "offset {offset} at bg={bg}");
        }

        /// Closed-form S is a function of beta*gamma alone.
        #[test]
        fn entropy_depends_on_product_only(
            beta in 1e-3f64..1e3,
            gamma in 1e-8f64..1e-1,
            a in 1e-2f64..1e2,
        ) {
            let s1 = thermo_closed_form(&point(beta, gamma)).unwrap().s;
            let s2 = thermo_closed_form(&point(a * beta, gamma / a)).unwrap().s;
            // the beta*gamma products differ by at most a couple of ulps
            prop_assert!((s1 - s2).abs() <= 1e-14 * s1.abs().max(1.0));
        }

        /// Monotone GUP direction at every valid point with beta_g > 0:
        /// Z^G < Z, F^G > F, U^G < U, S^G < S.
        #[test]
        fn gup_shifts_are_monotone(
            beta in 1e-2f64..1e2,
            gamma in 1e-6f64..1e-2,
            beta_g in 1e-10f64..1e-5,
            mass in 0.1f64..10.0,
        ) {
            let params = GupParams::new(beta_g, mass).unwrap();
            let p = point(beta, gamma);
            prop_assume!(params.check_regime(gamma).is_ok());
            let base = thermo_closed_form(&p).unwrap();
            if let Ok(g) = thermo_gup(&p, &params) {
                prop_assert!(g.z < base.z);
                prop_assert!(g.f > base.f);
                prop_assert!(g.u < base.u);
                prop_assert!(g.s < base.s);
            }
        }

        /// S^G - S never changes with gamma (width-independence).
        #[test]
        fn entropy_shift_width_independent(
            beta in 1e-1f64..10.0,
            gamma in 1e-6f64..1e-3,
            scale in 1.5f64..16.0,
            beta_g in 1e-9f64..1e-5,
        ) {
            let params = GupParams::new(beta_g, 1.0).unwrap();
            prop_assume!(params.check_regime(gamma * scale).is_ok());
            let p1 = point(beta, gamma);
            let p2 = point(beta, gamma * scale);
            let d1 = thermo_gup(&p1, &params).unwrap().s - thermo_closed_form(&p1).unwrap().s;
            let d2 = thermo_gup(&p2, &params).unwrap().s - thermo_closed_form(&p2).unwrap().s;
            prop_assert!((d1 - d2).abs() <= 1e-14);
        }
    }
}
