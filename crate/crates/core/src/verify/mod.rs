//! End-to-end checks on the named cases, the arithmetic obstructions, and
//! sampling of the `M(3,6)` strata.

pub mod case;
pub mod obstructions;
pub mod report;
pub mod stratify;

pub use case::{closed_form_chi, golden_h0, run_case, RunOptions};
pub use obstructions::{
    abc_solutions, chi_contradiction_omega, min_pa_reduced, obstructions, omega_filter,
    realizable_genera, smooth_z_oracle, unions_with_chi, ChiContradiction, CurveDatum,
    SmoothZVerdict,
};
pub use report::{Check, Report, Severity};
pub use stratify::{stratify, StratificationReport};
