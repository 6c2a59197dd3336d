//! JSON description of a game.
//!
//! ```json
//! {
//!   "table": "prisoners_dilemma",
//!   "prior": [0.25, 0.25, 0.25, 0.25],
//!   "angles": {"theta_a": 0.0, "theta_ap": 0.0, "theta_b": 3.14159, "theta_bp": 0.0},
//!   "y": {"finite": 0.0},
//!   "z": "projective",
//!   "state": {"type": "discorded", "x": 0.0}
//! }
//! ```
//!
//! `table` may also be `{"custom": [[u_A, u_B]; 16]}` in canonical cell order.
//! `prior` defaults to uniform and every `phi_*` angle defaults to zero.

use serde::{Deserialize, Serialize};

use super::{table_of, GameSpec, PayoffTable, Prior, TableName};
use crate::error::{Error, Result};
use crate::quantum_core::{BlochVector, Strength};
use crate::states::StateSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableSpec {
    Named(String),
    Custom { custom: Vec<[f64; 2]> },
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnglesSpec {
    pub theta_a: f64,
    pub theta_ap: f64,
    pub theta_b: f64,
    pub theta_bp: f64,
    pub phi_a: f64,
    pub phi_ap: f64,
    pub phi_b: f64,
    pub phi_bp: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub table: TableSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prior: Option<[f64; 4]>,
    #[serde(default)]
    pub angles: AnglesSpec,
    pub y: Strength,
    pub z: Strength,
    pub state: StateSpec,
}

fn at(path: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::Schema {
        path: path.to_string(),
        message: e.to_string(),
    }
}

impl TableSpec {
    pub fn build(&self) -> Result<PayoffTable> {
        match self {
            TableSpec::Named(name) => Ok(table_of(name.parse::<TableName>()?)),
            TableSpec::Custom { custom } => {
                let cells: [[f64; 2]; 16] = custom.as_slice().try_into().map_err(|_| {
                    Error::InvalidArgument(format!(
                        "custom table needs 16 cells, got {}",
                        custom.len()
                    ))
                })?;
                PayoffTable::from_cells(cells)
            }
        }
    }
}

impl GameFile {
    /// Parses JSON, reporting the offending field path on failure.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::Schema {
                path,
                message: e.into_inner().to_string(),
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("game file serializes")
    }

    pub fn build(&self) -> Result<GameSpec> {
        let table = self.table.build().map_err(at("table"))?;
        let prior = match self.prior {
            Some(w) => Prior::new(w).map_err(at("prior"))?,
            None => Prior::uniform(),
        };
        let state = self.state.build().map_err(at("state"))?;
        let a = &self.angles;
        GameSpec::new(
            (
                BlochVector::new(a.theta_a, a.phi_a),
                BlochVector::new(a.theta_ap, a.phi_ap),
            ),
            (
                BlochVector::new(a.theta_b, a.phi_b),
                BlochVector::new(a.theta_bp, a.phi_bp),
            ),
            self.y,
            self.z,
            prior,
            table,
            state,
        )
    }

    pub fn from_game(g: &GameSpec) -> Self {
        let table = match g.table.builtin() {
            Some(name) => TableSpec::Named(name.as_str().to_string()),
            None => TableSpec::Custom {
                custom: g.table.cells().to_vec(),
            },
        };
        let angles = AnglesSpec {
            theta_a: g.dirs_a.0.theta(),
            theta_ap: g.dirs_a.1.theta(),
            theta_b: g.dirs_b.0.theta(),
            theta_bp: g.dirs_b.1.theta(),
            phi_a: g.dirs_a.0.phi(),
            phi_ap: g.dirs_a.1.phi(),
            phi_b: g.dirs_b.0.phi(),
            phi_bp: g.dirs_b.1.phi(),
        };
        Self {
            table,
            prior: Some(g.prior.weights()),
            angles,
            y: g.y,
            z: g.z,
            state: g.state.to_spec(),
        }
    }
}
