//! Expected payoffs of two-player Bayesian quantum games in which each player
//! measures their half of a shared two-qubit state with a tunable-strength
//! generalized measurement, from no measurement at all to fully projective.
//!
//! - [`quantum_core`]: measurement operators, Kraus operators, state update.
//! - [`states`]: Bell, Werner, discorded and validated custom states.
//! - [`game`]: payoff tables, the numeric payoff engine and closed forms.
//! - [`analysis`]: optimization, sweeps and Monte Carlo sampling.
//! - [`cli`]: the command-line front end used by the `weakgame` binary.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod game;
pub mod quantum_core;
pub mod states;

pub use error::{Error, Result};
