//! Bayesian two-player games played on a shared two-qubit state.
//!
//! A referee draws a direction pair `(α, β)` from the prior, each player
//! measures their qubit along the assigned direction with their own fixed
//! strength, and the payoff table maps the outcome pair to payoffs.

mod closed_form;
mod schema;
mod tables;

pub use closed_form::{chsh_closed, modchsh_closed, pd_closed, pd_weak, Angles, ClosedState};
pub use schema::{AnglesSpec, GameFile, TableSpec};
pub use tables::TableName;

use crate::error::{Error, Result};
use crate::quantum_core::{
    measurement_op, tensor_product, trace4, validate_prior_weights, BlochVector, ComplexMat2,
    Outcome, Strength,
};
use crate::states::{StateKind, TwoQubitState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DirectionLabel {
    Unprimed,
    Primed,
}

impl DirectionLabel {
    pub const ALL: [DirectionLabel; 2] = [DirectionLabel::Unprimed, DirectionLabel::Primed];

    fn index(self) -> usize {
        match self {
            DirectionLabel::Unprimed => 0,
            DirectionLabel::Primed => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    A,
    B,
}

/// Sixteen `(u_A, u_B)` cells indexed by direction pair and outcome pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffTable {
    cells: [[f64; 2]; 16],
    builtin: Option<TableName>,
}

fn cell_index(la: DirectionLabel, lb: DirectionLabel, sa: Outcome, sb: Outcome) -> usize {
    8 * la.index() + 4 * lb.index() + 2 * sa.index() + sb.index()
}

impl PayoffTable {
    /// Builds a table from cells in canonical order (see [`TableName`]).
    pub fn from_cells(cells: [[f64; 2]; 16]) -> Result<Self> {
        if cells.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "payoff table entries must be finite".into(),
            ));
        }
        Ok(Self {
            cells,
            builtin: None,
        })
    }

    pub fn get(
        &self,
        la: DirectionLabel,
        lb: DirectionLabel,
        sa: Outcome,
        sb: Outcome,
    ) -> (f64, f64) {
        let [a, b] = self.cells[cell_index(la, lb, sa, sb)];
        (a, b)
    }

    pub fn cells(&self) -> &[[f64; 2]; 16] {
        &self.cells
    }

    pub fn builtin(&self) -> Option<TableName> {
        self.builtin
    }
}

/// Looks up a built-in table by name.
pub fn builtin_table(name: &str) -> Result<PayoffTable> {
    let name: TableName = name.parse()?;
    Ok(table_of(name))
}

pub fn table_of(name: TableName) -> PayoffTable {
    PayoffTable {
        cells: *name.cells(),
        builtin: Some(name),
    }
}

/// Referee's distribution over the four direction pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prior([f64; 4]);

impl Prior {
    /// Weights in order `(a,b), (a,b′), (a′,b), (a′,b′)`.
    pub fn new(weights: [f64; 4]) -> Result<Self> {
        validate_prior_weights(&weights)?;
        Ok(Self(weights))
    }

    pub fn uniform() -> Self {
        Self([0.25; 4])
    }

    pub fn get(&self, la: DirectionLabel, lb: DirectionLabel) -> f64 {
        self.0[2 * la.index() + lb.index()]
    }

    pub fn weights(&self) -> [f64; 4] {
        self.0
    }

    pub fn is_uniform(&self) -> bool {
        self.0 == [0.25; 4]
    }
}

/// Everything needed to evaluate a game.
#[derive(Debug, Clone, PartialEq)]
pub struct GameSpec {
    pub dirs_a: (BlochVector, BlochVector),
    pub dirs_b: (BlochVector, BlochVector),
    pub y: Strength,
    pub z: Strength,
    pub prior: Prior,
    pub table: PayoffTable,
    pub state: TwoQubitState,
}

impl GameSpec {
    pub fn new(
        dirs_a: (BlochVector, BlochVector),
        dirs_b: (BlochVector, BlochVector),
        y: Strength,
        z: Strength,
        prior: Prior,
        table: PayoffTable,
        state: TwoQubitState,
    ) -> Result<Self> {
        y.validate()?;
        z.validate()?;
        Ok(Self {
            dirs_a,
            dirs_b,
            y,
            z,
            prior,
            table,
            state,
        })
    }

    /// Game with all four directions in the x-z plane, uniform prior.
    pub fn planar(
        table: PayoffTable,
        state: TwoQubitState,
        y: Strength,
        z: Strength,
        angles: Angles,
    ) -> Result<Self> {
        Self::new(
            (
                BlochVector::planar(angles.theta_a),
                BlochVector::planar(angles.theta_ap),
            ),
            (
                BlochVector::planar(angles.theta_b),
                BlochVector::planar(angles.theta_bp),
            ),
            y,
            z,
            Prior::uniform(),
            table,
            state,
        )
    }

    pub fn dir_a(&self, label: DirectionLabel) -> BlochVector {
        match label {
            DirectionLabel::Unprimed => self.dirs_a.0,
            DirectionLabel::Primed => self.dirs_a.1,
        }
    }

    pub fn dir_b(&self, label: DirectionLabel) -> BlochVector {
        match label {
            DirectionLabel::Unprimed => self.dirs_b.0,
            DirectionLabel::Primed => self.dirs_b.1,
        }
    }

    /// Signed planar angles of the four directions; fails unless every
    /// direction lies in the x-z plane.
    pub fn planar_angles(&self) -> Result<Angles> {
        Ok(Angles {
            theta_a: self.dirs_a.0.planar_angle()?,
            theta_ap: self.dirs_a.1.planar_angle()?,
            theta_b: self.dirs_b.0.planar_angle()?,
            theta_bp: self.dirs_b.1.planar_angle()?,
        })
    }
}

fn probability(ma: &ComplexMat2, mb: &ComplexMat2, state: &TwoQubitState) -> f64 {
    let k = tensor_product(ma, mb);
    trace4(&(k * state.rho() * k.adjoint())).re
}

/// `P(σ, σ′ | α, β) = Tr[(M_{σ|α}(y) ⊗ M_{σ′|β}(z)) ρ (M ⊗ M)†]`.
pub fn conditional_probability(
    g: &GameSpec,
    labels: (DirectionLabel, DirectionLabel),
    sigma_a: Outcome,
    sigma_b: Outcome,
) -> f64 {
    let ma = measurement_op(sigma_a, g.dir_a(labels.0), g.y);
    let mb = measurement_op(sigma_b, g.dir_b(labels.1), g.z);
    probability(&ma, &mb, &g.state)
}

/// All four outcome probabilities for one direction pair, indexed `[σ][σ′]`
/// with `+1` first.
pub fn outcome_distribution(g: &GameSpec, la: DirectionLabel, lb: DirectionLabel) -> [[f64; 2]; 2] {
    let ops_a = Outcome::ALL.map(|s| measurement_op(s, g.dir_a(la), g.y));
    let ops_b = Outcome::ALL.map(|s| measurement_op(s, g.dir_b(lb), g.z));
    let mut out = [[0.0; 2]; 2];
    for (i, ma) in ops_a.iter().enumerate() {
        for (j, mb) in ops_b.iter().enumerate() {
            out[i][j] = probability(ma, mb, &g.state);
        }
    }
    out
}

/// Prior- and outcome-averaged payoffs `(u_A, u_B)`.
pub fn expected_payoff(g: &GameSpec) -> (f64, f64) {
    let (mut ua, mut ub) = (0.0, 0.0);
    for la in DirectionLabel::ALL {
        for lb in DirectionLabel::ALL {
            let p = g.prior.get(la, lb);
            if p == 0.0 {
                continue;
            }
            let dist = outcome_distribution(g, la, lb);
            for sa in Outcome::ALL {
                for sb in Outcome::ALL {
                    let w = p * dist[sa.index()][sb.index()];
                    let (pa, pb) = g.table.get(la, lb, sa, sb);
                    ua += pa * w;
                    ub += pb * w;
                }
            }
        }
    }
    (ua, ub)
}

/// The analytic payoff for this game when one is known: a built-in table,
/// uniform prior, a Bell/Werner/discorded state and planar directions.
///
/// Returns `Ok(None)` when no closed form applies and an error when the only
/// obstacle is a direction outside the x-z plane.
pub fn closed_form_payoff(g: &GameSpec) -> Result<Option<(f64, f64)>> {
    let Some(name) = g.table.builtin() else {
        return Ok(None);
    };
    if !g.prior.is_uniform() {
        return Ok(None);
    }
    let state = match g.state.label() {
        StateKind::Bell => ClosedState::Bell,
        StateKind::Werner { eta } => ClosedState::Werner(eta),
        StateKind::Discorded { x } => ClosedState::Discorded(x),
        StateKind::Custom => return Ok(None),
    };
    let angles = g.planar_angles()?;
    let pair = match (name, state) {
        (TableName::PrisonersDilemma, ClosedState::Discorded(x)) => (
            pd_closed(Player::A, g.y, g.z, x, &angles),
            pd_closed(Player::B, g.y, g.z, x, &angles),
        ),
        (TableName::PrisonersDilemma, _) => return Ok(None),
        (TableName::Chsh, s) => {
            let ua = chsh_closed(s, g.y, g.z, &angles);
            (ua, -ua)
        }
        (TableName::ModifiedChsh, s) => {
            let ua = modchsh_closed(s, g.y, g.z, &angles);
            (ua, -ua)
        }
    };
    Ok(Some(pair))
}
