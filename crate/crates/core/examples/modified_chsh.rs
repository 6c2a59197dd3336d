//! Zero-sum modified CHSH game across states and measurement strengths.
//! On the discorded state a projective A still leaves B's strength in play.

use weakgame::game::{
    expected_payoff, modchsh_closed, table_of, Angles, ClosedState, GameSpec, TableName,
};
use weakgame::quantum_core::Strength;
use weakgame::states::{bell_state, discorded_state, werner_state, CorrelationParam, WernerParam};

fn main() -> weakgame::Result<()> {
    let angles = Angles {
        theta_a: 0.3,
        theta_ap: 0.9,
        theta_b: 1.7,
        theta_bp: 0.2,
    };
    let x = 1.1;
    let states = [
        ("bell", bell_state(), ClosedState::Bell),
        (
            "werner(0.6)",
            werner_state(WernerParam::new(0.6)?),
            ClosedState::Werner(0.6),
        ),
        (
            "discorded(1.1)",
            discorded_state(CorrelationParam::new(x)?),
            ClosedState::Discorded(x),
        ),
    ];
    println!(
        "{:<15} {:>5} {:>5} {:>10} {:>10} {:>10}",
        "state", "y", "z", "u_A", "u_B", "closed"
    );
    for (name, state, closed) in &states {
        for (y, z) in [
            (0.0, 0.0),
            (0.5, 0.5),
            (f64::INFINITY, 0.0),
            (f64::INFINITY, f64::INFINITY),
        ] {
            let strength = |v: f64| {
                if v.is_infinite() {
                    Strength::Projective
                } else {
                    Strength::Finite(v)
                }
            };
            let (sy, sz) = (strength(y), strength(z));
            let g = GameSpec::planar(
                table_of(TableName::ModifiedChsh),
                state.clone(),
                sy,
                sz,
                angles,
            )?;
            let (ua, ub) = expected_payoff(&g);
            let c = modchsh_closed(*closed, sy, sz, &angles) + 0.0;
            println!("{name:<15} {y:>5} {z:>5} {ua:>10.6} {ub:>10.6} {c:>10.6}");
        }
    }
    Ok(())
}
