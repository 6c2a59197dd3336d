//! Derivative-free maximization over detector angles and state parameters.
//!
//! A coarse exhaustive grid locates the global basin, then cyclic coordinate
//! ascent with golden-section line searches refines the best grid point.
//! Grid cost is `points^dims`; once that exceeds [`MAX_GRID_EVALUATIONS`] the
//! per-dimension resolution is reduced so the total stays under the cap.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{expected_payoff, GameSpec, Player};
use crate::quantum_core::BlochVector;
use crate::states::{discorded_state, werner_state, CorrelationParam, StateKind, WernerParam};

pub const DEFAULT_GRID_POINTS: usize = 361;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_FREE_PARAMS: usize = 5;
/// Upper bound on coarse-grid evaluations.
pub const MAX_GRID_EVALUATIONS: usize = 1 << 20;

const MAX_CYCLES: usize = 5000;
const TIE_TOLERANCE: f64 = 1e-12;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FreeParam {
    ThetaA,
    ThetaAp,
    ThetaB,
    ThetaBp,
    X,
    Eta,
}

impl FreeParam {
    pub fn name(self) -> &'static str {
        match self {
            FreeParam::ThetaA => "theta_a",
            FreeParam::ThetaAp => "theta_ap",
            FreeParam::ThetaB => "theta_b",
            FreeParam::ThetaBp => "theta_bp",
            FreeParam::X => "x",
            FreeParam::Eta => "eta",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "theta_a" => FreeParam::ThetaA,
            "theta_ap" => FreeParam::ThetaAp,
            "theta_b" => FreeParam::ThetaB,
            "theta_bp" => FreeParam::ThetaBp,
            "x" => FreeParam::X,
            "eta" => FreeParam::Eta,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown free parameter `{other}`"
                )))
            }
        })
    }

    fn domain(self) -> Domain {
        match self {
            FreeParam::Eta => Domain::Interval(0.0, 1.0),
            _ => Domain::Periodic,
        }
    }
}

/// Search domain of one coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// An angle; searched over `[0, 2π)` and reported modulo `2π`.
    Periodic,
    Interval(f64, f64),
}

impl Domain {
    fn bounds(self) -> (f64, f64) {
        match self {
            Domain::Periodic => (0.0, TAU),
            Domain::Interval(lo, hi) => (lo, hi),
        }
    }

    fn grid_point(self, k: usize, n: usize) -> f64 {
        let (lo, hi) = self.bounds();
        match self {
            // Endpoints inclusive, so `n = 361` hits every whole degree.
            Domain::Periodic => hi * (k as f64 / (n - 1) as f64),
            Domain::Interval(..) => lo + (hi - lo) * (k as f64 / (n - 1) as f64),
        }
    }

    fn spacing(self, n: usize) -> f64 {
        let (lo, hi) = self.bounds();
        (hi - lo) / (n - 1) as f64
    }

    fn bracket(self, center: f64, half_width: f64) -> (f64, f64) {
        match self {
            Domain::Periodic => (center - half_width, center + half_width),
            Domain::Interval(lo, hi) => {
                ((center - half_width).max(lo), (center + half_width).min(hi))
            }
        }
    }

    fn normalize(self, v: f64) -> f64 {
        match self {
            Domain::Periodic => {
                let w = v.rem_euclid(TAU);
                if w >= TAU {
                    0.0
                } else {
                    w
                }
            }
            Domain::Interval(lo, hi) => v.clamp(lo, hi),
        }
    }
}

/// Outcome of a maximization.
#[derive(Debug, Clone, PartialEq)]
pub struct Optimum {
    pub point: Vec<f64>,
    pub value: f64,
    /// Best value on the coarse grid, before refinement.
    pub grid_value: f64,
    pub grid_points_per_dim: usize,
    pub evaluations: usize,
}

/// Per-dimension resolution actually used for `dims` free coordinates.
pub fn effective_grid_points(grid_points: usize, dims: usize) -> usize {
    if dims == 0 {
        return grid_points;
    }
    let mut n = grid_points;
    while n > 2
        && n.checked_pow(dims as u32)
            .is_none_or(|total| total > MAX_GRID_EVALUATIONS)
    {
        n -= 1;
    }
    n
}

fn golden_section_max(
    mut f: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> (f64, f64, usize) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    while hi - lo > tol && evals < 200 {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        evals += 1;
    }
    if f1 >= f2 {
        (x1, f1, evals)
    } else {
        (x2, f2, evals)
    }
}

fn sanitize(v: f64) -> f64 {
    if v.is_nan() {
        f64::NEG_INFINITY
    } else {
        v
    }
}

/// Maximizes `f` over the product of `domains`.
///
/// Deterministic: the grid is evaluated in parallel but reduced in index
/// order, and among grid values within `1e-12` of the best the
/// lexicographically smallest point wins.
pub fn maximize_fn<F>(f: F, domains: &[Domain], grid_points: usize, tol: f64) -> Result<Optimum>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if grid_points < 8 {
        return Err(Error::InvalidArgument(format!(
            "grid_points must be >= 8, got {grid_points}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tol must be > 0, got {tol}"
        )));
    }
    let dims = domains.len();
    if dims > MAX_FREE_PARAMS {
        return Err(Error::InvalidProblem(format!(
            "{dims} free parameters exceeds the cap of {MAX_FREE_PARAMS}"
        )));
    }
    if dims == 0 {
        let value = sanitize(f(&[]));
        return Ok(Optimum {
            point: vec![],
            value,
            grid_value: value,
            grid_points_per_dim: 0,
            evaluations: 1,
        });
    }

    let n = effective_grid_points(grid_points, dims);
    let total = n.pow(dims as u32);
    let point_at = |mut idx: usize| -> Vec<f64> {
        let mut p = vec![0.0; dims];
        for d in (0..dims).rev() {
            p[d] = domains[d].grid_point(idx % n, n);
            idx /= n;
        }
        p
    };
    let values: Vec<f64> = (0..total)
        .into_par_iter()
        .map(|i| sanitize(f(&point_at(i))))
        .collect();
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let best_idx = values
        .iter()
        .position(|&v| v >= best - TIE_TOLERANCE)
        .expect("grid is non-empty");

    let mut x = point_at(best_idx);
    let mut fx = values[best_idx];
    let grid_value = fx;
    let mut evaluations = total;
    let spacing: Vec<f64> = domains.iter().map(|d| d.spacing(n)).collect();

    for _ in 0..MAX_CYCLES {
        let start = fx;
        let mut max_step: f64 = 0.0;
        for d in 0..dims {
            let (lo, hi) = domains[d].bracket(x[d], spacing[d]);
            if hi - lo <= 0.0 {
                continue;
            }
            let mut probe = x.clone();
            let (t, ft, evals) = golden_section_max(
                |t| {
                    probe[d] = t;
                    sanitize(f(&probe))
                },
                lo,
                hi,
                tol,
            );
            evaluations += evals;
            if ft > fx {
                max_step = max_step.max((t - x[d]).abs());
                x[d] = t;
                fx = ft;
            }
        }
        if max_step < tol || fx - start <= 1e-15 * fx.abs().max(1.0) {
            break;
        }
    }

    let point = x
        .iter()
        .zip(domains)
        .map(|(&v, d)| d.normalize(v))
        .collect();
    Ok(Optimum {
        point,
        value: fx,
        grid_value,
        grid_points_per_dim: n,
        evaluations,
    })
}

/// Parameters to vary in a game and which payoff to optimize.
#[derive(Debug, Clone)]
pub struct OptimizationProblem {
    pub base: GameSpec,
    pub free_params: Vec<FreeParam>,
    pub objective: Player,
    pub maximize: bool,
}

/// Optimal assignment of the free parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assignment {
    pub values: Vec<(FreeParam, f64)>,
    pub value: f64,
}

impl OptimizationProblem {
    pub fn new(
        base: GameSpec,
        free_params: Vec<FreeParam>,
        objective: Player,
        maximize: bool,
    ) -> Result<Self> {
        for (i, p) in free_params.iter().enumerate() {
            if free_params[..i].contains(p) {
                return Err(Error::InvalidProblem(format!("{} listed twice", p.name())));
            }
        }
        if free_params.len() > MAX_FREE_PARAMS {
            return Err(Error::InvalidProblem(format!(
                "{} free parameters exceeds the cap of {MAX_FREE_PARAMS}",
                free_params.len()
            )));
        }
        let kind = base.state.label();
        if free_params.contains(&FreeParam::X) && !matches!(kind, StateKind::Discorded { .. }) {
            return Err(Error::InvalidProblem(
                "x is free but the state is not discorded".into(),
            ));
        }
        if free_params.contains(&FreeParam::Eta) && !matches!(kind, StateKind::Werner { .. }) {
            return Err(Error::InvalidProblem(
                "eta is free but the state is not Werner".into(),
            ));
        }
        Ok(Self {
            base,
            free_params,
            objective,
            maximize,
        })
    }

    /// The base game with the free parameters set to `values`.
    pub fn game_at(&self, values: &[f64]) -> GameSpec {
        let mut g = self.base.clone();
        for (&param, &v) in self.free_params.iter().zip(values) {
            let set = |dir: &mut BlochVector| *dir = BlochVector::new(v, dir.phi());
            match param {
                FreeParam::ThetaA => set(&mut g.dirs_a.0),
                FreeParam::ThetaAp => set(&mut g.dirs_a.1),
                FreeParam::ThetaB => set(&mut g.dirs_b.0),
                FreeParam::ThetaBp => set(&mut g.dirs_b.1),
                FreeParam::X => {
                    g.state = discorded_state(CorrelationParam::new(v).expect("finite grid value"))
                }
                FreeParam::Eta => {
                    g.state = werner_state(WernerParam::new(v.clamp(0.0, 1.0)).expect("clamped"))
                }
            }
        }
        g
    }

    pub fn payoff_at(&self, values: &[f64]) -> f64 {
        let (ua, ub) = expected_payoff(&self.game_at(values));
        match self.objective {
            Player::A => ua,
            Player::B => ub,
        }
    }
}

/// Optimizes the problem's objective; returns the best assignment and the
/// objective payoff there.
pub fn maximize(
    problem: &OptimizationProblem,
    grid_points: usize,
    tol: f64,
) -> Result<(Assignment, Optimum)> {
    let sign = if problem.maximize { 1.0 } else { -1.0 };
    let domains: Vec<Domain> = problem.free_params.iter().map(|p| p.domain()).collect();
    let mut opt = maximize_fn(|v| sign * problem.payoff_at(v), &domains, grid_points, tol)?;
    opt.value *= sign;
    opt.grid_value *= sign;
    let assignment = Assignment {
        values: problem
            .free_params
            .iter()
            .copied()
            .zip(opt.point.iter().copied())
            .collect(),
        value: opt.value,
    };
    Ok((assignment, opt))
}
