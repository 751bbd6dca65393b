//! The `sweep` subcommand: figure-function grids as deterministic CSV/JSON.
//!
//! Targets mirror the four figures: fig3 sweeps f(r) at fixed r_L, fig4
//! sweeps f(r_L) at fixed r, fig5 sweeps the Otto deficit function over r,
//! fig6 over r_L^O. Grids are linear and endpoint-inclusive; rows landing
//! inside the pole band carry the marker `pole` and an empty value cell.

use crate::report::{Cell, OutputFormat, Table};
use clap::{Args, ValueEnum};
use qhe_core::{
    carnot_figure_f, otto_figure_f, CarnotRatios, Error, GupParams, OttoRatios, Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureTarget {
    /// Carnot deficit f(r) at fixed r_L (default r_L = 2, r in [0.55, 0.95])
    Fig3,
    /// Carnot deficit f(r_L) at fixed r (default r = 0.5, r_L in [2.1, 10])
    Fig4,
    /// Otto deficit f(r) at fixed r_L^O, f_AD, f_CB (defaults 5, 0.5, 2)
    Fig5,
    /// Otto deficit f(r_L^O) at fixed r, f_AD, f_CB (defaults 0.1, 0.5, 2)
    Fig6,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Figure function to sweep
    #[arg(value_enum)]
    pub target: FigureTarget,
    /// Grid start (default depends on the target)
    #[arg(long)]
    pub min: Option<f64>,
    /// Grid end, included (default depends on the target)
    #[arg(long)]
    pub max: Option<f64>,
    /// Number of grid points including both endpoints
    #[arg(long)]
    pub steps: Option<usize>,
    /// Fixed r_L for fig3
    #[arg(long)]
    pub r_l: Option<f64>,
    /// Fixed r for fig4/fig6
    #[arg(long)]
    pub r: Option<f64>,
    /// Fixed r_L^O for fig5
    #[arg(long)]
    pub r_l_o: Option<f64>,
    /// Otto corner factor f_AD (fig5/fig6)
    #[arg(long, default_value_t = 0.5)]
    pub f_ad: f64,
    /// Otto corner factor f_CB (fig5/fig6)
    #[arg(long, default_value_t = 2.0)]
    pub f_cb: f64,
    /// Emit the full deficit ratio instead of the stripped figure value;
    /// requires --beta-g, --mass, and --t-hot
    #[arg(long)]
    pub with_prefactor: bool,
    /// GUP strength beta_G (prefactor only)
    #[arg(long)]
    pub beta_g: Option<f64>,
    /// Particle mass (prefactor only)
    #[arg(long)]
    pub mass: Option<f64>,
    /// Hot-bath temperature T_h (prefactor only)
    #[arg(long)]
    pub t_hot: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

struct GridSpec {
    column: &'static str,
    min: f64,
    max: f64,
    steps: usize,
}

fn grid_defaults(target: FigureTarget) -> GridSpec {
    match target {
        FigureTarget::Fig3 => GridSpec {
            column: "r",
            min: 0.55,
            max: 0.95,
            steps: 41,
        },
        FigureTarget::Fig4 => GridSpec {
            column: "r_l",
            min: 2.1,
            max: 10.0,
            steps: 80,
        },
        FigureTarget::Fig5 => GridSpec {
            column: "r",
            min: 0.205,
            max: 0.245,
            steps: 41,
        },
        FigureTarget::Fig6 => GridSpec {
            column: "r_l_o",
            min: 10.0,
            max: 50.0,
            steps: 41,
        },
    }
}

pub fn run(args: &SweepArgs) -> Result<()> {
    let defaults = grid_defaults(args.target);
    let min = args.min.unwrap_or(defaults.min);
    let max = args.max.unwrap_or(defaults.max);
    let steps = args.steps.unwrap_or(defaults.steps);
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(Error::Domain(format!(
            "sweep range must satisfy min < max, got [{min}, {max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::Domain(format!(
            "sweep needs at least 2 grid points, got {steps}"
        )));
    }

    let prefactor = if args.with_prefactor {
        match (args.beta_g, args.mass, args.t_hot) {
            (Some(beta_g), Some(mass), Some(t_hot)) => {
                if !(t_hot.is_finite() && t_hot > 0.0) {
                    return Err(Error::Domain(format!(
                        "t_hot must be positive and finite, got {t_hot}"
                    )));
                }
                let lambda = GupParams::new(beta_g, mass)?.lambda();
                Some((lambda, t_hot))
            }
            _ => {
                return Err(Error::Domain(
                    "--with-prefactor requires --beta-g, --mass, and --t-hot".into(),
                ))
            }
        }
    } else {
        None
    };

    let fixed_r = args.r;
    let fixed_r_l = args.r_l.unwrap_or(2.0);
    let fixed_r_l_o = args.r_l_o.unwrap_or(5.0);

    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let x = if i + 1 == steps {
            max
        } else {
            min + (max - min) * i as f64 / (steps - 1) as f64
        };
        let value = match args.target {
            FigureTarget::Fig3 => carnot_figure_f(&CarnotRatios::new(x, fixed_r_l)?),
            FigureTarget::Fig4 => carnot_figure_f(&CarnotRatios::new(fixed_r.unwrap_or(0.5), x)?),
            FigureTarget::Fig5 => {
                otto_figure_f(&OttoRatios::new(x, fixed_r_l_o)?, args.f_ad, args.f_cb)
            }
            FigureTarget::Fig6 => otto_figure_f(
                &OttoRatios::new(fixed_r.unwrap_or(0.1), x)?,
                args.f_ad,
                args.f_cb,
            ),
        };
        let row = match value {
            Ok(mut f) => {
                if let Some((lambda, t_hot)) = prefactor {
                    f *= figure_prefactor(args.target, lambda, t_hot, fixed_r, args.f_ad, x);
                }
                let marker = if f > 0.0 { "pos" } else { "neg" };
                vec![Cell::Num(x), Cell::Num(f), Cell::Text(marker.to_string())]
            }
            Err(Error::Pole { .. }) => {
                vec![Cell::Num(x), Cell::Empty, Cell::Text("pole".to_string())]
            }
            Err(other) => return Err(other),
        };
        rows.push(row);
    }

    Table {
        columns: vec![defaults.column, "f", "marker"],
        rows,
    }
    .emit(args.format);
    Ok(())
}

/// Multiplier turning the stripped figure value into the full deficit
/// ratio: λkT_h for the Carnot figures, λβ_h/β_A² = λr²T_h/f_AD² for the
/// Otto figures (β_A = f_AD·β_l).
fn figure_prefactor(
    target: FigureTarget,
    lambda: f64,
    t_hot: f64,
    fixed_r: Option<f64>,
    f_ad: f64,
    swept: f64,
) -> f64 {
    match target {
        FigureTarget::Fig3 | FigureTarget::Fig4 => lambda * t_hot,
        FigureTarget::Fig5 => lambda * swept * swept * t_hot / (f_ad * f_ad),
        FigureTarget::Fig6 => {
            let r = fixed_r.unwrap_or(0.1);
            lambda * r * r * t_hot / (f_ad * f_ad)
        }
    }
}
