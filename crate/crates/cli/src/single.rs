//! The `carnot` and `otto` subcommands: one cycle, one report row.

use crate::report::{Cell, OutputFormat, Table};
use clap::Args;
use qhe_core::{
    carnot_build, carnot_ledger, otto_ledger, CarnotSpec, CycleLedger, GupParams, OttoSpec, Result,
    DEFAULT_DELTA_MAX,
};

#[derive(Debug, Args)]
pub struct CarnotArgs {
    /// Hot-bath temperature T_h (isothermal leg A->B)
    #[arg(long)]
    pub t_hot: f64,
    /// Cold-bath temperature T_l (isothermal leg C->D)
    #[arg(long)]
    pub t_cold: f64,
    /// Well width at corner A
    #[arg(long)]
    pub l_a: f64,
    /// Well width at corner B (must exceed --l-a)
    #[arg(long)]
    pub l_b: f64,
    /// Particle mass
    #[arg(long)]
    pub mass: f64,
    /// GUP strength beta_G; 0 switches the correction off
    #[arg(long, default_value_t = 0.0)]
    pub beta_g: f64,
    /// Validity ceiling for delta = 4*m*beta_G*gamma
    #[arg(long, default_value_t = DEFAULT_DELTA_MAX)]
    pub delta_max: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct OttoArgs {
    /// Temperature at corner B, the hottest point
    #[arg(long)]
    pub t_hot: f64,
    /// Temperature at corner D, the coldest point
    #[arg(long)]
    pub t_cold: f64,
    /// Well width along the isochoric heating leg A->B
    #[arg(long)]
    pub l_small: f64,
    /// Well width along the isochoric cooling leg C->D
    #[arg(long)]
    pub l_large: f64,
    /// Particle mass
    #[arg(long)]
    pub mass: f64,
    /// GUP strength beta_G; 0 switches the correction off
    #[arg(long, default_value_t = 0.0)]
    pub beta_g: f64,
    /// Corner factor beta_A = f_AD * beta_l; defaults to gamma_l/gamma_h
    #[arg(long)]
    pub f_ad: Option<f64>,
    /// Corner factor beta_C = f_CB * beta_h; defaults to gamma_h/gamma_l
    #[arg(long)]
    pub f_cb: Option<f64>,
    /// Validity ceiling for delta = 4*m*beta_G*gamma
    #[arg(long, default_value_t = DEFAULT_DELTA_MAX)]
    pub delta_max: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

fn flags_cell(ledger: &CycleLedger) -> Cell {
    Cell::Text(
        ledger
            .flags
            .iter()
            .map(|f| f.as_str())
            .collect::<Vec<_>>()
            .join(";"),
    )
}

fn ledger_cells(ledger: &CycleLedger) -> Vec<Cell> {
    let mut cells = vec![
        Cell::Num(ledger.eta),
        Cell::Num(ledger.eta_gup),
        Cell::Num(ledger.delta_eta),
        Cell::Num(ledger.delta_eta_exact()),
    ];
    for leg in &ledger.legs {
        cells.push(Cell::Num(leg.q));
    }
    for leg in &ledger.legs {
        cells.push(Cell::Num(leg.q_gup));
    }
    cells.extend([
        Cell::Num(ledger.q_in),
        Cell::Num(ledger.q_out),
        Cell::Num(ledger.q_in_gup),
        Cell::Num(ledger.q_out_gup),
        Cell::Num(ledger.w),
        Cell::Num(ledger.w_gup),
    ]);
    cells.push(flags_cell(ledger));
    cells
}

const LEDGER_COLUMNS: [&str; 19] = [
    "eta",
    "eta_gup",
    "delta_eta",
    "delta_eta_exact",
    "q_ab",
    "q_bc",
    "q_cd",
    "q_da",
    "q_ab_gup",
    "q_bc_gup",
    "q_cd_gup",
    "q_da_gup",
    "q_in",
    "q_out",
    "q_in_gup",
    "q_out_gup",
    "w",
    "w_gup",
    "flags",
];

pub fn run_carnot(args: &CarnotArgs) -> Result<()> {
    let gup = GupParams::new(args.beta_g, args.mass)?.with_delta_max(args.delta_max)?;
    let spec = CarnotSpec::new(args.t_hot, args.t_cold, args.l_a, args.l_b, args.mass, gup)?;
    let cycle = carnot_build(&spec)?;
    let ledger = carnot_ledger(&spec)?;

    let mut columns = vec![
        "t_hot", "t_cold", "l_a", "l_b", "l_c", "l_d", "mass", "beta_g",
    ];
    columns.extend(LEDGER_COLUMNS);
    let mut row = vec![
        Cell::Num(args.t_hot),
        Cell::Num(args.t_cold),
        Cell::Num(args.l_a),
        Cell::Num(args.l_b),
        Cell::Num(cycle.l_c),
        Cell::Num(cycle.l_d),
        Cell::Num(args.mass),
        Cell::Num(args.beta_g),
    ];
    row.extend(ledger_cells(&ledger));

    Table {
        columns,
        rows: vec![row],
    }
    .emit(args.format);
    Ok(())
}

pub fn run_otto(args: &OttoArgs) -> Result<()> {
    let gup = GupParams::new(args.beta_g, args.mass)?.with_delta_max(args.delta_max)?;
    let mut spec = OttoSpec::new(
        args.t_hot,
        args.t_cold,
        args.l_small,
        args.l_large,
        args.mass,
        gup,
    )?;
    if args.f_ad.is_some() || args.f_cb.is_some() {
        let (default_f_ad, default_f_cb) = spec.effective_corner_factors();
        spec = spec.with_corner_factors(
            args.f_ad.unwrap_or(default_f_ad),
            args.f_cb.unwrap_or(default_f_cb),
        )?;
    }
    let (f_ad, f_cb) = spec.effective_corner_factors();
    let ledger = otto_ledger(&spec)?;

    let mut columns = vec![
        "t_hot", "t_cold", "l_small", "l_large", "mass", "beta_g", "f_ad", "f_cb",
    ];
    columns.extend(LEDGER_COLUMNS);
    let mut row = vec![
        Cell::Num(args.t_hot),
        Cell::Num(args.t_cold),
        Cell::Num(args.l_small),
        Cell::Num(args.l_large),
        Cell::Num(args.mass),
        Cell::Num(args.beta_g),
        Cell::Num(f_ad),
        Cell::Num(f_cb),
    ];
    row.extend(ledger_cells(&ledger));

    Table {
        columns,
        rows: vec![row],
    }
    .emit(args.format);
    Ok(())
}
