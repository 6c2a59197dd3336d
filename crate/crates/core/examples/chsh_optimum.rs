//! Best CHSH winning payoff for A on the Bell state (the Tsirelson value)
//! and on the discorded state (the classical 3/4).

use std::time::Instant;

use weakgame::analysis::{
    maximize, FreeParam, OptimizationProblem, DEFAULT_GRID_POINTS, DEFAULT_TOL,
};
use weakgame::game::{table_of, Angles, GameSpec, Player, TableName};
use weakgame::quantum_core::Strength;
use weakgame::states::{bell_state, discorded_state, CorrelationParam, TwoQubitState};

fn optimize(state: TwoQubitState, extra: &[FreeParam]) -> weakgame::Result<()> {
    let p = Strength::Projective;
    let base = GameSpec::planar(table_of(TableName::Chsh), state, p, p, Angles::default())?;
    let mut free = vec![
        FreeParam::ThetaA,
        FreeParam::ThetaAp,
        FreeParam::ThetaB,
        FreeParam::ThetaBp,
    ];
    free.extend_from_slice(extra);
    let problem = OptimizationProblem::new(base, free, Player::A, true)?;
    let start = Instant::now();
    let (assignment, opt) = maximize(&problem, DEFAULT_GRID_POINTS, DEFAULT_TOL)?;
    println!(
        "  value {:.12} (grid {:.6}, {} evaluations, {:.1?})",
        assignment.value,
        opt.grid_value,
        opt.evaluations,
        start.elapsed()
    );
    for (param, v) in &assignment.values {
        println!("  {:<9} {v:.9}", param.name());
    }
    Ok(())
}

fn main() -> weakgame::Result<()> {
    println!(
        "Bell state (expect {:.12}):",
        (4.0 + 2.0 * 2f64.sqrt()) / 8.0
    );
    optimize(bell_state(), &[])?;
    println!("discorded state, x free (expect 0.75):");
    optimize(
        discorded_state(CorrelationParam::new(0.0)?),
        &[FreeParam::X],
    )?;
    Ok(())
}
