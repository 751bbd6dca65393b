//! Carnot and Otto cycles: corner construction, heat/work/efficiency
//! ledgers with and without GUP corrections, and the figure functions.
//!
//! Both cycles traverse A → B → C → D → A. Heat enters on AB (+BC once
//! GUP corrections make the "adiabats" exchange heat) and leaves on
//! CD (+DA), so every ledger uses Q_in = Q_AB + Q_BC and
//! Q_out = Q_CD + Q_DA with signed heats throughout. Work is the signed
//! sum over all four legs; in the engine regime it equals Q_in − |Q_out|.
//!
//! Without corrections the efficiencies collapse to η_C = 1 − T_l/T_h and
//! η_O = 1 − γ_l/γ_h. With corrections the work is unchanged (the
//! endpoint-only corrections telescope around the closed cycle) while the
//! efficiency drops by Δη = (ΔQ_in/Q_in)·η to first order.

use crate::error::{Error, Result};
use crate::model::{GupParams, ThermalPoint, WellSubstance};
use crate::process::{
    gup_heat_correction, heat_general, heat_gup, leg_heat_oracle, HeatResult, Process,
};

/// Figure functions refuse evaluation when r·r_L sits within this band of
/// the pole at 1.
pub const POLE_EXCLUSION: f64 = 1e-9;

/// Exact and first-order GUP efficiencies are compared in every ledger;
/// a gap beyond this relative size raises [`RegimeFlag::FirstOrderGap`].
pub const FIRST_ORDER_GAP_REL: f64 = 1e-6;

/// Warnings attached to a ledger. An empty set means engine operation
/// with trustworthy first-order corrections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeFlag {
    /// Q_in ≤ 0: the cycle is not absorbing heat on its intake legs.
    NonPositiveHeatInput,
    /// W ≤ 0: the cycle consumes work instead of producing it.
    NonPositiveWork,
    /// The Otto corner temperatures do not satisfy T_B > T_A > T_C > T_D.
    CornerOrderViolation,
    /// Exact and first-order GUP efficiencies disagree beyond
    /// [`FIRST_ORDER_GAP_REL`]; the discarded O(ΔQ²) term is visible.
    FirstOrderGap,
}

impl RegimeFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeFlag::NonPositiveHeatInput => "non_positive_heat_input",
            RegimeFlag::NonPositiveWork => "non_positive_work",
            RegimeFlag::CornerOrderViolation => "corner_order_violation",
            RegimeFlag::FirstOrderGap => "first_order_gap",
        }
    }
}

impl std::fmt::Display for RegimeFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four corner states of a cycle in traversal order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleCorners {
    pub a: ThermalPoint,
    pub b: ThermalPoint,
    pub c: ThermalPoint,
    pub d: ThermalPoint,
}

/// Per-cycle accounting: signed per-leg heats, totals, work, and both
/// efficiencies. `delta_eta` is the first-order deficit (ΔQ_in/Q_in)·η;
/// the exact deficit is `eta - eta_gup`.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleLedger {
    /// AB, BC, CD, DA in traversal order.
    pub legs: [HeatResult; 4],
    pub q_in: f64,
    pub q_out: f64,
    pub q_in_gup: f64,
    pub q_out_gup: f64,
    pub w: f64,
    pub w_gup: f64,
    pub eta: f64,
    pub eta_gup: f64,
    pub delta_eta: f64,
    pub flags: Vec<RegimeFlag>,
}

impl CycleLedger {
    pub fn delta_eta_exact(&self) -> f64 {
        self.eta - self.eta_gup
    }
}

fn assemble_ledger(legs: [HeatResult; 4], mut flags: Vec<RegimeFlag>) -> Result<CycleLedger> {
    let q_in = legs[0].q + legs[1].q;
    let q_out = legs[2].q + legs[3].q;
    let q_in_gup = legs[0].q_gup + legs[1].q_gup;
    let q_out_gup = legs[2].q_gup + legs[3].q_gup;
    if q_in == 0.0 || q_in_gup == 0.0 {
        return Err(Error::DegenerateCycle(
            "no heat is absorbed on legs AB+BC, efficiency is undefined".into(),
        ));
    }
    let w = q_in + q_out;
    let w_gup = q_in_gup + q_out_gup;
    let eta = w / q_in;
    let eta_gup = w_gup / q_in_gup;
    let delta_eta = (legs[0].correction + legs[1].correction) / q_in * eta;
    if q_in <= 0.0 {
        flags.push(RegimeFlag::NonPositiveHeatInput);
    }
    if w <= 0.0 {
        flags.push(RegimeFlag::NonPositiveWork);
    }
    let gap = (eta_gup - (eta - delta_eta)).abs();
    if eta_gup != 0.0 && gap > FIRST_ORDER_GAP_REL * eta_gup.abs() {
        flags.push(RegimeFlag::FirstOrderGap);
    }
    Ok(CycleLedger {
        legs,
        q_in,
        q_out,
        q_in_gup,
        q_out_gup,
        w,
        w_gup,
        eta,
        eta_gup,
        delta_eta,
        flags,
    })
}

fn require_positive(value: f64, name: &str) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Spec(format!(
            "{name} must be positive and finite, got {value}"
        )))
    }
}

/// Carnot cycle: isothermal expansion A→B at T_hot, adiabatic expansion
/// B→C, isothermal compression C→D at T_cold, adiabatic compression D→A.
/// The two remaining widths follow from βγ = const:
/// L_C = L_B·√(T_hot/T_cold) and L_D = L_A·√(T_hot/T_cold).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarnotSpec {
    t_hot: f64,
    t_cold: f64,
    l_a: f64,
    l_b: f64,
    mass: f64,
    gup: GupParams,
}

impl CarnotSpec {
    pub fn new(
        t_hot: f64,
        t_cold: f64,
        l_a: f64,
        l_b: f64,
        mass: f64,
        gup: GupParams,
    ) -> Result<Self> {
        require_positive(t_hot, "t_hot")?;
        require_positive(t_cold, "t_cold")?;
        require_positive(l_a, "l_a")?;
        require_positive(l_b, "l_b")?;
        require_positive(mass, "mass")?;
        if t_hot <= t_cold {
            return Err(Error::Spec(format!(
                "t_hot ({t_hot}) must exceed t_cold ({t_cold})"
            )));
        }
        if l_b <= l_a {
            return Err(Error::Spec(format!(
                "l_b ({l_b}) must exceed l_a ({l_a}) for an isothermal expansion A->B"
            )));
        }
        Ok(Self {
            t_hot,
            t_cold,
            l_a,
            l_b,
            mass,
            gup,
        })
    }

    pub fn t_hot(&self) -> f64 {
        self.t_hot
    }

    pub fn t_cold(&self) -> f64 {
        self.t_cold
    }

    pub fn l_a(&self) -> f64 {
        self.l_a
    }

    pub fn l_b(&self) -> f64 {
        self.l_b
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn gup(&self) -> &GupParams {
        &self.gup
    }
}

/// A built Carnot cycle: the four legs, corner states, and the derived
/// hot-side widths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarnotCycle {
    /// AB, BC, CD, DA.
    pub legs: [Process; 4],
    pub corners: CycleCorners,
    pub l_c: f64,
    pub l_d: f64,
}

pub fn carnot_build(spec: &CarnotSpec) -> Result<CarnotCycle> {
    let beta_h = 1.0 / spec.t_hot;
    let beta_l = 1.0 / spec.t_cold;
    let gamma_a = WellSubstance::new(spec.mass, spec.l_a)?.gamma();
    let gamma_b = WellSubstance::new(spec.mass, spec.l_b)?.gamma();
    // adiabats pin the cold-side gammas: beta_l*gamma_c = beta_h*gamma_b
    let rho = beta_h / beta_l; // = t_cold/t_hot < 1
    let gamma_c = gamma_b * rho;
    let gamma_d = gamma_a * rho;
    let a = ThermalPoint::new(beta_h, gamma_a)?;
    let b = ThermalPoint::new(beta_h, gamma_b)?;
    let c = ThermalPoint::new(beta_l, gamma_c)?;
    let d = ThermalPoint::new(beta_l, gamma_d)?;
    let legs = [
        Process::new(crate::process::ProcessKind::Isothermal, a, b)?,
        Process::adiabatic(b, c)?,
        Process::new(crate::process::ProcessKind::Isothermal, c, d)?,
        Process::adiabatic(d, a)?,
    ];
    let stretch = rho.sqrt(); // L_C = L_B / sqrt(rho)
    Ok(CarnotCycle {
        legs,
        corners: CycleCorners { a, b, c, d },
        l_c: spec.l_b / stretch,
        l_d: spec.l_a / stretch,
    })
}

/// Full Carnot accounting. Non-GUP: Q_AB = T_h·ln(L_B/L_A) > 0, adiabats
/// carry zero, η = 1 − T_cold/T_hot. With GUP: both adiabats pick up
/// ±ΔQ = ±(λ/2)(1/β_h² − 1/β_l²), the work is unchanged, and the
/// efficiency drops.
///
/// ```
/// use qhe_core::{carnot_ledger, CarnotSpec, GupParams};
///
/// let gup = GupParams::new(1e-5, 1.0)?;
/// let spec = CarnotSpec::new(2.0, 1.0, 1.0, 2.0, 1.0, gup)?;
/// let ledger = carnot_ledger(&spec)?;
/// assert!((ledger.eta - 0.5).abs() < 1e-14);
/// assert!(ledger.eta_gup < ledger.eta);
/// assert!((ledger.w_gup - ledger.w).abs() <= 1e-14 * ledger.w);
/// # Ok::<(), qhe_core::Error>(())
/// ```
pub fn carnot_ledger(spec: &CarnotSpec) -> Result<CycleLedger> {
    let cycle = carnot_build(spec)?;
    let legs = [
        heat_gup(&cycle.legs[0], &spec.gup)?,
        heat_gup(&cycle.legs[1], &spec.gup)?,
        heat_gup(&cycle.legs[2], &spec.gup)?,
        heat_gup(&cycle.legs[3], &spec.gup)?,
    ];
    assemble_ledger(legs, Vec::new())
}

/// Otto cycle: isochoric heating A→B at the small width (γ_h), adiabatic
/// expansion B→C, isochoric cooling C→D at the large width (γ_l),
/// adiabatic compression D→A. T_hot is the temperature at B, T_cold at D;
/// the non-GUP corner temperatures follow from βγ = const.
///
/// `f_ad`/`f_cb` generalize the corner relations β_A = f_AD·β_l and
/// β_C = f_CB·β_h for the GUP corrections; unset, they default to the
/// non-GUP values γ_l/γ_h and γ_h/γ_l.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OttoSpec {
    t_hot: f64,
    t_cold: f64,
    l_small: f64,
    l_large: f64,
    mass: f64,
    gup: GupParams,
    f_ad: Option<f64>,
    f_cb: Option<f64>,
}

impl OttoSpec {
    pub fn new(
        t_hot: f64,
        t_cold: f64,
        l_small: f64,
        l_large: f64,
        mass: f64,
        gup: GupParams,
    ) -> Result<Self> {
        require_positive(t_hot, "t_hot")?;
        require_positive(t_cold, "t_cold")?;
        require_positive(l_small, "l_small")?;
        require_positive(l_large, "l_large")?;
        require_positive(mass, "mass")?;
        if t_hot <= t_cold {
            return Err(Error::Spec(format!(
                "t_hot ({t_hot}) must exceed t_cold ({t_cold})"
            )));
        }
        if l_small >= l_large {
            return Err(Error::Spec(format!(
                "l_small ({l_small}) must be below l_large ({l_large})"
            )));
        }
        Ok(Self {
            t_hot,
            t_cold,
            l_small,
            l_large,
            mass,
            gup,
            f_ad: None,
            f_cb: None,
        })
    }

    /// Override the assumed corner relations β_A = f_AD·β_l and
    /// β_C = f_CB·β_h; requires f_AD ∈ (0,1) and f_CB > 1.
    pub fn with_corner_factors(mut self, f_ad: f64, f_cb: f64) -> Result<Self> {
        if !(f_ad.is_finite() && f_ad > 0.0 && f_ad < 1.0) {
            return Err(Error::Spec(format!("f_ad must lie in (0, 1), got {f_ad}")));
        }
        if !(f_cb.is_finite() && f_cb > 1.0) {
            return Err(Error::Spec(format!("f_cb must exceed 1, got {f_cb}")));
        }
        self.f_ad = Some(f_ad);
        self.f_cb = Some(f_cb);
        Ok(self)
    }

    pub fn t_hot(&self) -> f64 {
        self.t_hot
    }

    pub fn t_cold(&self) -> f64 {
        self.t_cold
    }

    pub fn l_small(&self) -> f64 {
        self.l_small
    }

    pub fn l_large(&self) -> f64 {
        self.l_large
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn gup(&self) -> &GupParams {
        &self.gup
    }

    pub fn gamma_hot(&self) -> f64 {
        // small width, large gamma
        std::f64::consts::PI.powi(2) / (2.0 * self.mass * self.l_small * self.l_small)
    }

    pub fn gamma_low(&self) -> f64 {
        std::f64::consts::PI.powi(2) / (2.0 * self.mass * self.l_large * self.l_large)
    }

    /// Corner factors actually used: user overrides or the non-GUP values.
    pub fn effective_corner_factors(&self) -> (f64, f64) {
        let f_ad = self
            .f_ad
            .unwrap_or_else(|| self.gamma_low() / self.gamma_hot());
        let f_cb = self
            .f_cb
            .unwrap_or_else(|| self.gamma_hot() / self.gamma_low());
        (f_ad, f_cb)
    }

    pub fn has_corner_overrides(&self) -> bool {
        self.f_ad.is_some() || self.f_cb.is_some()
    }
}

/// A built Otto cycle: legs, corners, and any corner-ordering warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct OttoCycle {
    /// AB, BC, CD, DA.
    pub legs: [Process; 4],
    pub corners: CycleCorners,
    pub flags: Vec<RegimeFlag>,
}

pub fn otto_build(spec: &OttoSpec) -> Result<OttoCycle> {
    let beta_h = 1.0 / spec.t_hot; // at B
    let beta_l = 1.0 / spec.t_cold; // at D
    let gamma_h = spec.gamma_hot();
    let gamma_l = spec.gamma_low();
    let beta_a = beta_l * gamma_l / gamma_h;
    let beta_c = beta_h * gamma_h / gamma_l;
    let a = ThermalPoint::new(beta_a, gamma_h)?;
    let b = ThermalPoint::new(beta_h, gamma_h)?;
    let c = ThermalPoint::new(beta_c, gamma_l)?;
    let d = ThermalPoint::new(beta_l, gamma_l)?;
    let legs = [
        Process::new(crate::process::ProcessKind::Isochoric, a, b)?,
        Process::adiabatic(b, c)?,
        Process::new(crate::process::ProcessKind::Isochoric, c, d)?,
        Process::adiabatic(d, a)?,
    ];
    // T_B > T_A > T_C > T_D reads beta_h < beta_a < beta_c < beta_l;
    // outside this window the GUP deficit can flip sign.
    let ordered = beta_h < beta_a && beta_a < beta_c && beta_c < beta_l;
    let flags = if ordered {
        Vec::new()
    } else {
        vec![RegimeFlag::CornerOrderViolation]
    };
    Ok(OttoCycle {
        legs,
        corners: CycleCorners { a, b, c, d },
        flags,
    })
}

/// Full Otto accounting. Non-GUP heats use the βγ = const corners; the
/// GUP corrections use the (possibly overridden) corner factors, so the
/// reported first-order deficit follows Δη_O = W·ΔQ_AB/Q_AB² with
/// ΔQ_AB = (λ/2)(1/β_A² − 1/β_C²).
pub fn otto_ledger(spec: &OttoSpec) -> Result<CycleLedger> {
    let cycle = otto_build(spec)?;
    spec.gup.check_regime(spec.gamma_hot())?;
    spec.gup.check_regime(spec.gamma_low())?;
    let beta_h = cycle.corners.b.beta();
    let beta_l = cycle.corners.d.beta();
    // corrections evaluate at the assumed corner temperatures
    let (beta_a_eff, beta_c_eff) = if spec.has_corner_overrides() {
        let (f_ad, f_cb) = spec.effective_corner_factors();
        (f_ad * beta_l, f_cb * beta_h)
    } else {
        (cycle.corners.a.beta(), cycle.corners.c.beta())
    };
    let endpoint_betas = [
        (beta_a_eff, beta_h),
        (beta_h, beta_c_eff),
        (beta_c_eff, beta_l),
        (beta_l, beta_a_eff),
    ];
    let mut legs = [HeatResult {
        q: 0.0,
        q_gup: 0.0,
        correction: 0.0,
    }; 4];
    for (i, leg) in cycle.legs.iter().enumerate() {
        let q = heat_general(leg)?;
        let correction = gup_heat_correction(&spec.gup, endpoint_betas[i].0, endpoint_betas[i].1);
        legs[i] = HeatResult {
            q,
            q_gup: q + correction,
            correction,
        };
    }
    // overridden corner factors can break T_B > T_A > T_C > T_D even when
    // the built corners respect it; the deficit sign follows the assumed
    // corners, so the ordering warning must too
    let mut flags = cycle.flags;
    let ordered_eff = beta_h < beta_a_eff && beta_a_eff < beta_c_eff && beta_c_eff < beta_l;
    if !ordered_eff && !flags.contains(&RegimeFlag::CornerOrderViolation) {
        flags.push(RegimeFlag::CornerOrderViolation);
    }
    assemble_ledger(legs, flags)
}

/// Temperature and width ratios of a Carnot cycle: r = T_l/T_h ∈ (0,1)
/// and r_L = L_C²/L_A² > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarnotRatios {
    r: f64,
    r_l: f64,
}

impl CarnotRatios {
    pub fn new(r: f64, r_l: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0 && r < 1.0) {
            return Err(Error::Domain(format!("r must lie in (0, 1), got {r}")));
        }
        if !(r_l.is_finite() && r_l > 1.0) {
            return Err(Error::Domain(format!("r_L must exceed 1, got {r_l}")));
        }
        Ok(Self { r, r_l })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r_l(&self) -> f64 {
        self.r_l
    }
}

/// Ratios of an Otto cycle: r = T_l/T_h ∈ (0,1) and
/// r_L^O = γ_h/γ_l = L_large²/L_small² > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OttoRatios {
    r: f64,
    r_l_o: f64,
}

impl OttoRatios {
    pub fn new(r: f64, r_l_o: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0 && r < 1.0) {
            return Err(Error::Domain(format!("r must lie in (0, 1), got {r}")));
        }
        if !(r_l_o.is_finite() && r_l_o > 1.0) {
            return Err(Error::Domain(format!("r_L^O must exceed 1, got {r_l_o}")));
        }
        Ok(Self { r, r_l_o })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r_l_o(&self) -> f64 {
        self.r_l_o
    }
}

fn check_pole(product: f64) -> Result<()> {
    if (product - 1.0).abs() <= POLE_EXCLUSION {
        Err(Error::Pole { product })
    } else {
        Ok(())
    }
}

/// Carnot figure function f(r, r_L) = (1 − r²)/ln(r·r_L), the efficiency
/// deficit ratio Δη/η_C stripped of its λkT_h prefactor.
pub fn carnot_figure_f(ratios: &CarnotRatios) -> Result<f64> {
    let product = ratios.r * ratios.r_l;
    check_pole(product)?;
    Ok((1.0 - ratios.r * ratios.r) / product.ln())
}

fn check_corner_factors(f_ad: f64, f_cb: f64) -> Result<()> {
    if !(f_ad.is_finite() && f_ad > 0.0 && f_ad < 1.0) {
        return Err(Error::Domain(format!(
            "f_ad must lie in (0, 1), got {f_ad}"
        )));
    }
    if !(f_cb.is_finite() && f_cb > 1.0) {
        return Err(Error::Domain(format!("f_cb must exceed 1, got {f_cb}")));
    }
    Ok(())
}

/// Otto figure function (Δη_O/η_O)·(β_A²/(λβ_h)) evaluated directly from
/// the heat-deficit ratio with β_A = f_AD·β_l and β_C = f_CB·β_h:
/// (1 − (f_AD/f_CB)²·r⁻²)/(1 − r_L^O·r). Positive exactly on
/// 1/r_L^O < r < f_AD/f_CB.
pub fn otto_figure_f(ratios: &OttoRatios, f_ad: f64, f_cb: f64) -> Result<f64> {
    check_corner_factors(f_ad, f_cb)?;
    let product = ratios.r * ratios.r_l_o;
    check_pole(product)?;
    let q = f_ad / f_cb;
    Ok((1.0 - (q * q) / (ratios.r * ratios.r)) / (1.0 - product))
}

/// The same quantity with the corner ratio entering as 1/r instead of
/// 1/r². Kept solely so the difference against [`otto_figure_f`] can be
/// measured; the 1/r form does not reproduce the positivity window.
pub fn otto_figure_f_printed(ratios: &OttoRatios, f_ad: f64, f_cb: f64) -> Result<f64> {
    check_corner_factors(f_ad, f_cb)?;
    let product = ratios.r * ratios.r_l_o;
    check_pole(product)?;
    Ok((1.0 - (f_ad * f_ad) / (f_cb * f_cb) / ratios.r) / (1.0 - product))
}

/// Builds a Carnot spec realizing the given ratios: T_l = r·T_h and
/// L_B = L_A·√(r·r_L) (so that L_C²/L_A² = r_L). Needs r·r_L > 1 for the
/// A→B leg to be an expansion.
pub fn carnot_spec_for_ratios(
    r: f64,
    r_l: f64,
    t_hot: f64,
    l_a: f64,
    mass: f64,
    gup: GupParams,
) -> Result<CarnotSpec> {
    CarnotRatios::new(r, r_l)?;
    let product = r * r_l;
    if product <= 1.0 {
        return Err(Error::Spec(format!(
            "r*r_L = {product} must exceed 1 to realize L_B > L_A"
        )));
    }
    CarnotSpec::new(t_hot, r * t_hot, l_a, l_a * product.sqrt(), mass, gup)
}

/// Builds an Otto spec realizing the given ratios:
/// T_l = r·T_h and L_large = L_small·√(r_L^O).
pub fn otto_spec_for_ratios(
    r: f64,
    r_l_o: f64,
    t_hot: f64,
    l_small: f64,
    mass: f64,
    gup: GupParams,
) -> Result<OttoSpec> {
    OttoRatios::new(r, r_l_o)?;
    OttoSpec::new(t_hot, r * t_hot, l_small, l_small * r_l_o.sqrt(), mass, gup)
}

/// Re-derives a full ledger by path integration: every leg heat comes from
/// [`leg_heat_oracle`] instead of the closed forms, plus the endpoint-only
/// GUP correction. Must agree with the closed-form ledger within the
/// oracle's discretization tolerance.
pub fn cycle_ledger_oracle(
    legs: &[Process; 4],
    params: &GupParams,
    steps: u32,
) -> Result<CycleLedger> {
    for i in 0..4 {
        let end = legs[i].end();
        let start = legs[(i + 1) % 4].start();
        if end.beta() != start.beta() || end.gamma() != start.gamma() {
            return Err(Error::Spec(format!(
                "legs do not close into a cycle: leg {i} ends at ({}, {}) but the next \
                 leg starts at ({}, {})",
                end.beta(),
                end.gamma(),
                start.beta(),
                start.gamma()
            )));
        }
    }
    let mut results = [HeatResult {
        q: 0.0,
        q_gup: 0.0,
        correction: 0.0,
    }; 4];
    for (i, leg) in legs.iter().enumerate() {
        params.check_regime(leg.start().gamma())?;
        params.check_regime(leg.end().gamma())?;
        let q = leg_heat_oracle(leg, steps)?;
        let correction = gup_heat_correction(params, leg.start().beta(), leg.end().beta());
        results[i] = HeatResult {
            q,
            q_gup: q + correction,
            correction,
        };
    }
    assemble_ledger(results, Vec::new())
}
