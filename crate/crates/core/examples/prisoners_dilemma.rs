//! Measurement-induced asymmetry in the Bayesian prisoner's dilemma on the
//! discorded state: when A does not measure, A's payoff is pinned at 3/2
//! while B still steers their own payoff through theta_b.

use std::f64::consts::PI;

use weakgame::game::{expected_payoff, pd_closed, table_of, Angles, GameSpec, Player, TableName};
use weakgame::quantum_core::Strength;
use weakgame::states::{discorded_state, CorrelationParam};

fn main() -> weakgame::Result<()> {
    let x = 0.0;
    let state = discorded_state(CorrelationParam::new(x)?);
    println!("theta_b    u_A       u_B");
    for k in 0..=8 {
        let theta_b = PI * k as f64 / 4.0;
        let angles = Angles {
            theta_b,
            ..Angles::default()
        };
        let g = GameSpec::planar(
            table_of(TableName::PrisonersDilemma),
            state.clone(),
            Strength::Finite(0.0),
            Strength::Projective,
            angles,
        )?;
        let (ua, ub) = expected_payoff(&g);
        println!("{theta_b:<9.4}  {ua:.6}  {ub:.6}");
    }

    // Both players projective: swapping everyone's angles swaps the payoffs.
    let angles = Angles {
        theta_a: 0.4,
        theta_ap: 1.3,
        theta_b: 2.2,
        theta_bp: -0.7,
    };
    let p = Strength::Projective;
    println!(
        "\nprojective: u_A(swapped) = {:.12}, u_B = {:.12}",
        pd_closed(Player::A, p, p, 0.8, &angles.swapped()),
        pd_closed(Player::B, p, p, 0.8, &angles)
    );
    Ok(())
}
