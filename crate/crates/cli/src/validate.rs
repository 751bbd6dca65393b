//! The `validate` subcommand: every oracle-vs-closed-form check with its
//! measured error, one pass/fail line each. Exits 0 only if all pass.

use clap::Args;
use qhe_core::*;
use std::process::ExitCode;

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// beta*gamma probe point for the closed-form validity check. Inside
    /// the trust region (<= 1e-3) the check asserts agreement within 1%;
    /// in the invalid region (> 0.1) it asserts the designed disagreement
    /// above 10%; in between it reports the measured gap informationally.
    #[arg(long, default_value_t = 1e-4)]
    pub beta_gamma: f64,
    /// Sub-segment budget for the path-integration oracle
    #[arg(long, default_value_t = 10_000)]
    pub steps: u32,
    /// Tail-bound tolerance for the series oracles
    #[arg(long, default_value_t = 1e-12)]
    pub tail_tol: f64,
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn fallible(name: &str, body: impl FnOnce() -> Result<Check>) -> Check {
    match body() {
        Ok(c) => c,
        Err(e) => check(name, false, format!("errored: {e}")),
    }
}

fn gup_off() -> GupParams {
    GupParams::new(0.0, 1.0).unwrap()
}

fn euler_maclaurin_checks(tail_tol: f64) -> Vec<Check> {
    [1e-5, 1e-4, 1e-3]
        .into_iter()
        .map(|bg| {
            let name = format!("euler_maclaurin_offset[bg={bg:e}]");
            fallible(&name, || {
                let p = ThermalPoint::new(1.0, bg)?;
                let offset = partition_approx(&p)? - partition_sum_oracle(&p, tail_tol)?;
                Ok(check(
                    name.clone(),
                    (0.49..=0.51).contains(&offset),
                    format!("approx - sum = {offset:.12} window [0.49, 0.51]"),
                ))
            })
        })
        .collect()
}

fn closed_form_validity_check(beta_gamma: f64, tail_tol: f64) -> Check {
    let name = format!("closed_form_validity[bg={beta_gamma:e}]");
    fallible(&name, || {
        let p = ThermalPoint::new(1.0, beta_gamma)?;
        let closed = thermo_closed_form(&p)?;
        let oracle = thermo_oracle(&p, &gup_off(), tail_tol, default_fd_step(p.beta()))?;
        let s_dev = ((oracle.s - closed.s) / closed.s).abs();
        let u_dev = ((oracle.u - closed.u) / closed.u).abs();
        let (passed, verdict) = match closed.quality {
            ApproxQuality::Ok => (
                s_dev <= 0.01 && u_dev <= 0.01,
                "trust region: require agreement within 1%",
            ),
            ApproxQuality::Invalid => (
                s_dev > 0.10 && u_dev > 0.10,
                "invalid region: require the designed disagreement above 10%",
            ),
            ApproxQuality::Marginal => (true, "marginal region: informational only"),
        };
        Ok(check(
            name.clone(),
            passed,
            format!("S dev {s_dev:.3e}, U dev {u_dev:.3e}; {verdict}"),
        ))
    })
}

fn gup_partition_check(tail_tol: f64) -> Check {
    fallible("gup_partition_vs_spectrum_sum", || {
        let p = ThermalPoint::new(1.0, 0.01)?;
        let params = GupParams::new(1e-4, 1.0)?;
        let closed = partition_gup(&p, &params)?;
        let sum = partition_sum_oracle_gup(&p, &params, tail_tol)?;
        let dev = ((closed - sum) / sum).abs();
        let bound = (0.6 * p.beta_gamma().sqrt()).max(10.0 * params.delta(p.gamma()));
        Ok(check(
            "gup_partition_vs_spectrum_sum",
            dev <= bound,
            format!("rel dev {dev:.3e} bound {bound:.3e}"),
        ))
    })
}

fn path_oracle_checks(steps: u32) -> Vec<Check> {
    let isothermal = fallible("path_oracle_isothermal", || {
        let leg = Process::isothermal(1.0, 1.0, 0.25)?;
        let oracle = leg_heat_oracle(&leg, steps)?;
        let closed = heat_general(&leg)?;
        let dev = ((oracle - closed) / closed).abs();
        Ok(check(
            "path_oracle_isothermal",
            dev <= 1e-8,
            format!("rel dev {dev:.3e} tol 1e-8"),
        ))
    });

    let adiabatic = fallible("path_oracle_adiabatic", || {
        let mut worst = 0.0f64;
        for (b0, g0, ratio) in [(1.0, 1.0, 4.0), (0.5, 0.02, 3.0), (2.0, 0.7, 0.25)] {
            let start = ThermalPoint::new(b0, g0)?;
            let end = ThermalPoint::new(b0 * ratio, g0 / ratio)?;
            let leg = Process::adiabatic(start, end)?;
            let q = leg_heat_oracle(&leg, steps)?;
            worst = worst.max(q.abs() * b0.min(b0 * ratio));
        }
        Ok(check(
            "path_oracle_adiabatic",
            worst <= 1e-8,
            format!("max |Q|*beta_min {worst:.3e} tol 1e-8"),
        ))
    });

    let convergence = fallible("path_oracle_convergence_order", || {
        let base = steps.max(40);
        let leg = Process::isochoric(1.0, 1.0, 2.0)?;
        let closed = heat_general(&leg)?;
        let coarse = (leg_heat_oracle(&leg, base / 4)? - closed).abs();
        let fine = (leg_heat_oracle(&leg, base)? - closed).abs();
        let ratio = coarse / fine;
        Ok(check(
            "path_oracle_convergence_order",
            ratio >= 8.0,
            format!("error ratio at 4x steps = {ratio:.2} (>= 8 required)"),
        ))
    });

    vec![isothermal, adiabatic, convergence]
}

fn cycle_oracle_checks(steps: u32) -> Vec<Check> {
    let carnot = fallible("carnot_cycle_oracle", || {
        let spec = CarnotSpec::new(2.0, 1.0, 1.0, 2.0, 1.0, gup_off())?;
        let cycle = carnot_build(&spec)?;
        let oracle = cycle_ledger_oracle(&cycle.legs, spec.gup(), steps)?;
        let dev = (oracle.eta - 0.5).abs();
        Ok(check(
            "carnot_cycle_oracle",
            dev <= 1e-7,
            format!("|eta - 0.5| = {dev:.3e} tol 1e-7"),
        ))
    });

    let otto = fallible("otto_cycle_oracle", || {
        let spec = OttoSpec::new(2.0, 1.0, 1.0, 2.0, 1.0, gup_off())?;
        let cycle = otto_build(&spec)?;
        let oracle = cycle_ledger_oracle(&cycle.legs, spec.gup(), steps)?;
        let dev = (oracle.eta - 0.75).abs();
        Ok(check(
            "otto_cycle_oracle",
            dev <= 1e-7,
            format!("|eta - 0.75| = {dev:.3e} tol 1e-7"),
        ))
    });

    let gup_adiabat = fallible("gup_carnot_adiabat_heat", || {
        let gup = GupParams::new(1e-5, 1.0)?;
        let spec = CarnotSpec::new(2.0, 1.0, 1.0, 2.0, 1.0, gup)?;
        let cycle = carnot_build(&spec)?;
        let oracle = cycle_ledger_oracle(&cycle.legs, spec.gup(), steps)?;
        let dq = 0.5 * gup.lambda() * (4.0 - 1.0); // (lambda/2)(1/beta_h^2 - 1/beta_l^2)
        let dev = (oracle.legs[1].q_gup - dq).abs();
        Ok(check(
            "gup_carnot_adiabat_heat",
            dev <= 1e-10,
            format!("|Q_BC^G - dQ| = {dev:.3e} tol 1e-10"),
        ))
    });

    vec![carnot, otto, gup_adiabat]
}

fn deficit_form_checks() -> Vec<Check> {
    let grid: Vec<f64> = (0..41)
        .map(|i| 0.205 + (0.245 - 0.205) * i as f64 / 40.0)
        .collect();

    let printed = fallible("otto_printed_form_discrepancy", || {
        let mut max_dev = 0.0f64;
        for &r in &grid {
            let ratios = OttoRatios::new(r, 5.0)?;
            let direct = otto_figure_f(&ratios, 0.5, 2.0)?;
            let printed = otto_figure_f_printed(&ratios, 0.5, 2.0)?;
            max_dev = max_dev.max(((direct - printed) / direct).abs());
        }
        Ok(check(
            "otto_printed_form_discrepancy",
            max_dev > 0.10,
            format!(
                "max |direct - printed|/|direct| = {max_dev:.6e} over the fig5 default grid \
                 (the printed 1/r form is asserted to deviate by more than 10%)"
            ),
        ))
    });

    let corrected = fallible("otto_corrected_form_agreement", || {
        let mut max_dev = 0.0f64;
        for &r in &grid {
            let ratios = OttoRatios::new(r, 5.0)?;
            let direct = otto_figure_f(&ratios, 0.5, 2.0)?;
            let corrected = (1.0 - (0.25f64 * 0.25) / (r * r)) / (1.0 - 5.0 * r);
            max_dev = max_dev.max(((direct - corrected) / direct).abs());
        }
        Ok(check(
            "otto_corrected_form_agreement",
            max_dev <= 1e-12,
            format!("max rel dev of the 1/r^2 form = {max_dev:.3e} tol 1e-12"),
        ))
    });

    vec![printed, corrected]
}

fn figure_route_check() -> Check {
    fallible("figure_spot_ledger_route", || {
        let mut max_dev = 0.0f64;
        for (r, r_l) in [(0.6, 2.0), (0.9, 2.0)] {
            let gup = GupParams::new(1e-6, 1.0)?;
            let spec = carnot_spec_for_ratios(r, r_l, 1.0, 1.0, 1.0, gup)?;
            let ledger = carnot_ledger(&spec)?;
            let via_ledger = (ledger.delta_eta / ledger.eta) / (gup.lambda() * spec.t_hot());
            let direct = carnot_figure_f(&CarnotRatios::new(r, r_l)?)?;
            max_dev = max_dev.max(((via_ledger - direct) / direct).abs());
        }
        Ok(check(
            "figure_spot_ledger_route",
            max_dev <= 1e-10,
            format!("max rel dev between closed form and ledger route {max_dev:.3e} tol 1e-10"),
        ))
    })
}

fn work_invariance_check() -> Check {
    fallible("gup_work_invariance", || {
        let gup = GupParams::new(1e-5, 1.0)?;
        let carnot = carnot_ledger(&CarnotSpec::new(2.0, 1.0, 1.0, 2.0, 1.0, gup)?)?;
        let otto = otto_ledger(&otto_spec_for_ratios(0.25, 3.0, 1.0, 1.0, 1.0, gup)?)?;
        let dev = ((carnot.w_gup - carnot.w) / carnot.w)
            .abs()
            .max(((otto.w_gup - otto.w) / otto.w).abs());
        Ok(check(
            "gup_work_invariance",
            dev <= 1e-14,
            format!("max |W^G - W|/W = {dev:.3e} tol 1e-14"),
        ))
    })
}

pub fn run(args: &ValidateArgs) -> ExitCode {
    let mut checks = Vec::new();
    checks.extend(euler_maclaurin_checks(args.tail_tol));
    checks.push(closed_form_validity_check(args.beta_gamma, args.tail_tol));
    checks.push(gup_partition_check(args.tail_tol));
    checks.extend(path_oracle_checks(args.steps));
    checks.extend(cycle_oracle_checks(args.steps));
    checks.extend(deficit_form_checks());
    checks.push(figure_route_check());
    checks.push(work_invariance_check());

    let mut all_passed = true;
    for c in &checks {
        println!(
            "{} {} — {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
        all_passed &= c.passed;
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    println!("validation: {passed}/{} checks passed", checks.len());
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
