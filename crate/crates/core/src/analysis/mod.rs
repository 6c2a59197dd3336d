//! Optimization over detector settings, the max-payoff-versus-correlation
//! sweep, and Monte Carlo sampling of repeated rounds.

mod optimize;
mod sampling;
mod sweep;

pub use optimize::{
    effective_grid_points, maximize, maximize_fn, Assignment, Domain, FreeParam,
    OptimizationProblem, Optimum, DEFAULT_GRID_POINTS, DEFAULT_TOL, MAX_FREE_PARAMS,
    MAX_GRID_EVALUATIONS,
};
pub use sampling::{sample_rounds, SampleEstimate};
pub use sweep::{linear_grid, sweep_correlation, SweepResult, SweepRow};
