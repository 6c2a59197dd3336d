//! Weak-to-projective measurement operators and the post-measurement state.

use std::f64::consts::FRAC_PI_2;

use weakgame::quantum_core::{
    completeness_defect, kraus, measurement_op, post_measurement_state, weight, BlochVector,
    Outcome, Strength,
};
use weakgame::states::bell_state;

fn main() -> weakgame::Result<()> {
    println!("strength   a(+y)      a(-y)");
    for y in [0.0, 0.1, 0.5, 1.0, 3.0] {
        let s = Strength::finite(y)?;
        println!(
            "{y:<9}  {:.6}   {:.6}",
            weight(Outcome::Plus, s),
            weight(Outcome::Minus, s)
        );
    }
    println!(
        "projective {:.6}   {:.6}",
        weight(Outcome::Plus, Strength::Projective),
        weight(Outcome::Minus, Strength::Projective)
    );

    let x_axis = BlochVector::planar(FRAC_PI_2);
    println!(
        "\nM(+, x, y=1) =\n{}",
        measurement_op(Outcome::Plus, x_axis, Strength::Finite(1.0))
    );

    let z_axis = BlochVector::planar(0.0);
    let dirs = (z_axis, x_axis);
    let defect = completeness_defect(
        dirs,
        dirs,
        Strength::Finite(0.4),
        Strength::Projective,
        &[0.25; 4],
    )?;
    println!("Kraus completeness defect: {defect:.2e}");

    // Weakly measure A on the Bell state and keep the + outcome.
    let k = kraus(
        z_axis,
        z_axis,
        Outcome::Plus,
        Outcome::Plus,
        Strength::Finite(0.3),
        Strength::Finite(0.0),
        1.0,
    )?;
    let post = post_measurement_state(&bell_state(), &k)?;
    println!(
        "post-selected |00> weight {:.6} (expected {:.6})",
        post.rho()[(0, 0)].re,
        (1.0 + 0.3f64.tanh()) / 2.0
    );
    println!("purity {:.6}", post.purity());
    Ok(())
}
