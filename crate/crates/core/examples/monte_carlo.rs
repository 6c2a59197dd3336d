//! Plays repeated rounds with a referee drawing direction labels from the
//! prior and outcomes from the Born rule, and compares with the exact payoff.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use weakgame::analysis::sample_rounds;
use weakgame::game::{expected_payoff, table_of, Angles, GameSpec, TableName};
use weakgame::quantum_core::Strength;
use weakgame::states::bell_state;

fn main() -> weakgame::Result<()> {
    let angles = Angles {
        theta_a: 0.0,
        theta_ap: FRAC_PI_2,
        theta_b: FRAC_PI_4,
        theta_bp: -FRAC_PI_4,
    };
    let p = Strength::Projective;
    let g = GameSpec::planar(table_of(TableName::Chsh), bell_state(), p, p, angles)?;
    let exact = expected_payoff(&g).0;
    println!("exact u_A = {exact:.6}");
    println!("rounds      mean u_A   std err    z");
    for n in [1_000u64, 10_000, 100_000, 1_000_000] {
        let est = sample_rounds(&g, n, 42)?;
        let z = (est.mean_u_a - exact) / est.std_error_u_a;
        println!(
            "{n:<10}  {:.6}   {:.6}   {z:+.2}",
            est.mean_u_a, est.std_error_u_a
        );
    }
    Ok(())
}
