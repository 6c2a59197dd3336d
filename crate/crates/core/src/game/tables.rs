//! Built-in payoff tables.
//!
//! Cells are listed in canonical order: A's direction (a, a′), B's direction
//! (b, b′), A's outcome (+1, −1), B's outcome (+1, −1). Each cell is
//! `[payoff_A, payoff_B]`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableName {
    PrisonersDilemma,
    Chsh,
    ModifiedChsh,
}

impl TableName {
    pub fn as_str(self) -> &'static str {
        match self {
            TableName::PrisonersDilemma => "prisoners_dilemma",
            TableName::Chsh => "chsh",
            TableName::ModifiedChsh => "modified_chsh",
        }
    }

    pub(crate) fn cells(self) -> &'static [[f64; 2]; 16] {
        match self {
            TableName::PrisonersDilemma => &PRISONERS_DILEMMA,
            TableName::Chsh => &CHSH,
            TableName::ModifiedChsh => &MODIFIED_CHSH,
        }
    }

    /// Whether `u_A + u_B = 0` in every cell.
    pub fn is_zero_sum(self) -> bool {
        self.cells().iter().all(|[a, b]| a + b == 0.0)
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "prisoners_dilemma" | "pd" => Ok(TableName::PrisonersDilemma),
            "chsh" => Ok(TableName::Chsh),
            "modified_chsh" | "modchsh" => Ok(TableName::ModifiedChsh),
            other => Err(Error::UnknownTable(other.to_string())),
        }
    }
}

// Honest ↦ a / b, Corrupt ↦ a′ / b′, Quiet ↦ +1, Tell ↦ −1.
// A picks the inner row, B the inner column.
#[rustfmt::skip]
const PRISONERS_DILEMMA: [[f64; 2]; 16] = [
    // A honest, B honest
    [2.0, 2.0], // Q, Q
    [0.0, 3.0], // Q, T
    [3.0, 0.0], // T, Q
    [1.0, 1.0], // T, T
    // A honest, B corrupt
    [2.0, 1.0], // Q, Q
    [0.0, 0.0], // Q, T
    [3.0, 2.0], // T, Q
    [1.0, 3.0], // T, T
    // A corrupt, B honest
    [1.0, 2.0], // Q, Q
    [2.0, 3.0], // Q, T
    [0.0, 0.0], // T, Q
    [3.0, 1.0], // T, T
    // A corrupt, B corrupt
    [1.0, 1.0], // Q, Q
    [2.0, 0.0], // Q, T
    [0.0, 2.0], // T, Q
    [3.0, 3.0], // T, T
];

// Zero-sum CHSH: A wins on correlated outcomes except for (a′, b′), where
// anti-correlated outcomes win. ↑ ↦ +1, ↓ ↦ −1.
#[rustfmt::skip]
const CHSH: [[f64; 2]; 16] = [
    // (a, b)
    [1.0, -1.0], // ↑↑
    [0.0, 0.0],  // ↑↓
    [0.0, 0.0],  // ↓↑
    [1.0, -1.0], // ↓↓
    // (a, b′)
    [1.0, -1.0], // ↑↑
    [0.0, 0.0],  // ↑↓
    [0.0, 0.0],  // ↓↑
    [1.0, -1.0], // ↓↓
    // (a′, b)
    [1.0, -1.0], // ↑↑
    [0.0, 0.0],  // ↑↓
    [0.0, 0.0],  // ↓↑
    [1.0, -1.0], // ↓↓
    // (a′, b′)
    [0.0, 0.0],  // ↑↑
    [1.0, -1.0], // ↑↓
    [1.0, -1.0], // ↓↑
    [0.0, 0.0],  // ↓↓
];

// Modified zero-sum CHSH: payoff follows A's outcome alone except at (a′, b′).
#[rustfmt::skip]
const MODIFIED_CHSH: [[f64; 2]; 16] = [
    // (a, b)
    [1.0, -1.0],  // ↑↑
    [1.0, -1.0],  // ↑↓
    [-1.0, 1.0],  // ↓↑
    [-1.0, 1.0],  // ↓↓
    // (a, b′)
    [1.0, -1.0],  // ↑↑
    [1.0, -1.0],  // ↑↓
    [-1.0, 1.0],  // ↓↑
    [-1.0, 1.0],  // ↓↓
    // (a′, b)
    [1.0, -1.0],  // ↑↑
    [1.0, -1.0],  // ↑↓
    [-1.0, 1.0],  // ↓↑
    [-1.0, 1.0],  // ↓↓
    // (a′, b′)
    [-1.0, 1.0],  // ↑↑
    [1.0, -1.0],  // ↑↓
    [1.0, -1.0],  // ↓↑
    [-1.0, 1.0],  // ↓↓
];
