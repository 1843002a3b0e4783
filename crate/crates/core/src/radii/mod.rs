//! Radius functionals of a scene: component gaps, ρ, δ, ω and the minimal
//! j-connectivity radii α_j.

mod gaps;
mod report;
mod sweep;

pub use gaps::{
    delta_from_gaps, gap_matrix, gap_matrix_for, prim_mst, rho_from_gaps, rho_oracle, scene_components, GapMatrix,
    RhoConvention,
};
pub use report::{radii_report, RadiiReport};
pub use sweep::{alpha, alpha_sweep, critical_radii, default_sweep_bound, Alpha, CriticalSweep, Threshold};
