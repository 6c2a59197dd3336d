//! Analytic expected payoffs with all directions in the x-z plane and a
//! uniform prior. Every expression is written out term by term so it can be
//! checked against the numeric engine independently.

use crate::quantum_core::Strength;

use super::Player;

/// Polar angles of the four measurement directions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Angles {
    pub theta_a: f64,
    pub theta_ap: f64,
    pub theta_b: f64,
    pub theta_bp: f64,
}

impl Angles {
    /// Exchanges the roles of the two players' directions.
    pub fn swapped(&self) -> Self {
        Self {
            theta_a: self.theta_b,
            theta_ap: self.theta_bp,
            theta_b: self.theta_a,
            theta_bp: self.theta_ap,
        }
    }
}

/// State families with a known closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedState {
    Bell,
    Discorded(f64),
    Werner(f64),
}

// Brace term shared by the prisoner's-dilemma payoffs, written from the point of
// view of player `own` measuring at (own, own_p) against (other, other_p).
fn pd_brace(own: f64, other: f64, other_p: f64, own_p: f64, x: f64, cross_strength: f64) -> f64 {
    let half_sum = 0.5 * (other + other_p);
    let half_diff = 0.5 * (other - other_p);
    own.cos() + (own - x).cos()
        - half_diff.cos()
            * ((own_p - half_sum).cos() + (own_p - x + half_sum).cos() * x.cos())
            * cross_strength
}

/// Prisoner's-dilemma payoff on the discorded state.
pub fn pd_closed(player: Player, y: Strength, z: Strength, x: f64, angles: &Angles) -> f64 {
    let (ty, tz) = (y.tanh_value(), z.tanh_value());
    let Angles {
        theta_a,
        theta_ap,
        theta_b,
        theta_bp,
    } = *angles;
    match player {
        Player::A => 1.5 - 0.125 * ty * pd_brace(theta_a, theta_b, theta_bp, theta_ap, x, tz),
        Player::B => 1.5 - 0.125 * tz * pd_brace(theta_b, theta_a, theta_ap, theta_bp, x, ty),
    }
}

/// First-order expansion of [`pd_closed`] around `y = 0` with B projective:
/// `tanh y ↦ y`, `tanh z ↦ 1`.
pub fn pd_weak(player: Player, y_small: f64, x: f64, angles: &Angles) -> f64 {
    let Angles {
        theta_a,
        theta_ap,
        theta_b,
        theta_bp,
    } = *angles;
    match player {
        Player::A => 1.5 - 0.125 * y_small * pd_brace(theta_a, theta_b, theta_bp, theta_ap, x, 1.0),
        Player::B => 1.5 - 0.125 * pd_brace(theta_b, theta_a, theta_ap, theta_bp, x, y_small),
    }
}

// cos(a−b) + cos(a′−b) + cos(a−b′) − cos(a′−b′)
fn chsh_correlator(angles: &Angles) -> f64 {
    let Angles {
        theta_a,
        theta_ap,
        theta_b,
        theta_bp,
    } = *angles;
    (theta_a - theta_b).cos() + (theta_ap - theta_b).cos() + (theta_a - theta_bp).cos()
        - (theta_ap - theta_bp).cos()
}

/// Player A's CHSH payoff; player B receives the negative.
pub fn chsh_closed(state: ClosedState, y: Strength, z: Strength, angles: &Angles) -> f64 {
    let tt = y.tanh_value() * z.tanh_value();
    match state {
        ClosedState::Bell => (4.0 + chsh_correlator(angles) * tt) / 8.0,
        ClosedState::Werner(eta) => (4.0 - eta * chsh_correlator(angles) * tt) / 8.0,
        ClosedState::Discorded(x) => {
            let Angles {
                theta_a: a,
                theta_ap: ap,
                theta_b: b,
                theta_bp: bp,
            } = *angles;
            let two_x = 2.0 * x;
            let sums = (a + b).cos() + (ap + b).cos() + (a + bp).cos() - (ap + bp).cos();
            let shifted = (a + b - two_x).cos() + (ap + b - two_x).cos() + (a + bp - two_x).cos()
                - (ap + bp - two_x).cos();
            (16.0 + (2.0 * chsh_correlator(angles) + sums + shifted) * tt) / 32.0
        }
    }
}

/// Player A's modified-CHSH payoff; player B receives the negative.
pub fn modchsh_closed(state: ClosedState, y: Strength, z: Strength, angles: &Angles) -> f64 {
    let (ty, tz) = (y.tanh_value(), z.tanh_value());
    let Angles {
        theta_a: a,
        theta_ap: ap,
        theta_bp: bp,
        ..
    } = *angles;
    match state {
        ClosedState::Bell => -0.25 * (ap - bp).cos() * ty * tz,
        ClosedState::Werner(eta) => 0.25 * eta * (ap - bp).cos() * ty * tz,
        ClosedState::Discorded(x) => {
            0.125
                * ty
                * (2.0 * (a.cos() + (a - x).cos()) + ap.cos() + (ap - x).cos()
                    - ((ap - bp).cos() + (ap + bp - x).cos() * x.cos()) * tz)
        }
    }
}
