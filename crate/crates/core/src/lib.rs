//! Quantum heat-engine thermodynamics for a particle in an infinite
//! square well, with and without minimal-length (GUP) corrections.
//!
//! The crate computes partition functions and thermodynamic potentials of
//! the well spectrum E_n = γn², the heat exchanged along isothermal,
//! isochoric, and adiabatic (βγ = const) legs, and assembles full Carnot
//! and Otto cycle ledgers: per-leg heats, Q_in/Q_out, work, efficiency,
//! and the efficiency deficit caused by a generalized-uncertainty-principle
//! correction to the spectrum. Every closed form is paired with an
//! independent brute-force oracle (tail-bounded series sums, numerical
//! path integration of dQ = dS/β) so results can be verified rather than
//! trusted.
//!
//! Natural units throughout: ħ = k = 1, so β = 1/T exactly.

pub mod cycle;
pub mod error;
pub mod model;
pub mod process;
pub mod statmech;

pub use cycle::{
    carnot_build, carnot_figure_f, carnot_ledger, carnot_spec_for_ratios, cycle_ledger_oracle,
    otto_build, otto_figure_f, otto_figure_f_printed, otto_ledger, otto_spec_for_ratios,
    CarnotCycle, CarnotRatios, CarnotSpec, CycleCorners, CycleLedger, OttoCycle, OttoRatios,
    OttoSpec, RegimeFlag, FIRST_ORDER_GAP_REL, POLE_EXCLUSION,
};
pub use error::{Error, Result};
pub use model::{
    energy_level, energy_level_gup, gamma_of, gup_coefficients, GupCoefficients, GupParams,
    ThermalPoint, UnitsConvention, WellSubstance, DEFAULT_DELTA_MAX,
};
pub use process::{
    gup_heat_correction, heat_adiabatic, heat_general, heat_gup, heat_isochoric, heat_isothermal,
    leg_heat_oracle, path_heat_oracle, HeatResult, Process, ProcessKind, ADIABAT_REL_TOL,
};
pub use statmech::{
    approx_quality, default_fd_step, n4_moment_approx, n4_moment_sum_oracle, partition_approx,
    partition_gup, partition_sum_oracle, partition_sum_oracle_gup, s0, thermo_closed_form,
    thermo_gup, thermo_oracle, ApproxQuality, GupStatmechQuantities, StatmechQuantities,
};
