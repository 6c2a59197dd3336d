//! B's best payoff as a function of the state's correlation angle x, with A
//! not measuring and B projective. Writes CSV to stdout.

use std::f64::consts::TAU;

use weakgame::analysis::{sweep_correlation, DEFAULT_GRID_POINTS};
use weakgame::cli::fmt_float;

fn main() -> weakgame::Result<()> {
    let steps = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(25);
    let sweep = sweep_correlation(0.0, TAU, steps, DEFAULT_GRID_POINTS)?;
    println!("x,theta_b_star,u_A_max,u_B_max,envelope");
    for row in &sweep.rows {
        let envelope = 1.5 + 0.25 * (row.x / 2.0).cos().abs();
        println!(
            "{},{},{},{},{}",
            fmt_float(row.x),
            fmt_float(row.theta_b_star),
            fmt_float(row.u_a_max),
            fmt_float(row.u_b_max),
            fmt_float(envelope)
        );
    }
    Ok(())
}
