use rayon::prelude::*;
use serde::Serialize;

use super::optimize::{maximize_fn, Domain};
use crate::error::{Error, Result};
use crate::game::{pd_closed, Angles, Player};
use crate::quantum_core::Strength;

const SWEEP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub x: f64,
    pub theta_b_star: f64,
    pub u_a_max: f64,
    pub u_b_max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

/// Inclusive linear grid with the endpoints pinned exactly.
pub fn linear_grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|k| {
            if k + 1 == steps {
                to
            } else {
                from + (to - from) * (k as f64 / (steps - 1) as f64)
            }
        })
        .collect()
}

/// Prisoner's dilemma on the discorded state with A not measuring (`y = 0`)
/// and B measuring projectively: for each `x`, B's payoff maximized over
/// `θ_b`. A's payoff is pinned at 3/2 throughout.
pub fn sweep_correlation(
    x_from: f64,
    x_to: f64,
    steps: usize,
    grid_points: usize,
) -> Result<SweepResult> {
    if steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "steps must be >= 2, got {steps}"
        )));
    }
    if !x_from.is_finite() || !x_to.is_finite() || x_from >= x_to {
        return Err(Error::InvalidArgument(format!(
            "need finite from < to, got [{x_from}, {x_to}]"
        )));
    }
    let y = Strength::Finite(0.0);
    let z = Strength::Projective;
    let rows = linear_grid(x_from, x_to, steps)
        .into_par_iter()
        .map(|x| {
            let at = |theta_b: f64| Angles {
                theta_b,
                ..Angles::default()
            };
            let opt = maximize_fn(
                |v| pd_closed(Player::B, y, z, x, &at(v[0])),
                &[Domain::Periodic],
                grid_points,
                SWEEP_TOL,
            )?;
            let theta_b_star = opt.point[0];
            Ok(SweepRow {
                x,
                theta_b_star,
                u_a_max: pd_closed(Player::A, y, z, x, &at(theta_b_star)),
                u_b_max: opt.value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn three_point_sweep() {
        let res = sweep_correlation(0.0, TAU, 3, 361).unwrap();
        let xs: Vec<f64> = res.rows.iter().map(|r| r.x).collect();
        assert_eq!(xs, vec![0.0, PI, TAU]);
        let expected = [1.75, 1.5, 1.75];
        for (row, e) in res.rows.iter().zip(expected) {
            assert!((row.u_b_max - e).abs() < 1e-12, "{row:?}");
            assert_eq!(row.u_a_max, 1.5);
        }
        assert_eq!(res.rows[0].theta_b_star, PI);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(sweep_correlation(0.0, 1.0, 1, 361).is_err());
        assert!(sweep_correlation(1.0, 1.0, 5, 361).is_err());
        assert!(sweep_correlation(2.0, 1.0, 5, 361).is_err());
    }
}
