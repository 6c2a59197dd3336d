//! Complex matrix plumbing and the generalized-measurement operator algebra.
//!
//! A single qubit is measured along a Bloch direction with a tunable strength
//! `y`. The measurement operator for outcome `σ` is a positive combination of
//! the two projectors onto that direction,
//!
//! ```text
//! M_{σ|α}(y) = a(σ y) Π_{+1|α} + a(-σ y) Π_{-1|α},   a(±y) = sqrt((1 ± tanh y) / 2)
//! ```
//!
//! so that `y = 0` performs no measurement (`M = I/√2`) and `y → ∞` collapses to
//! a single projector. Two-qubit Kraus operators are tensor products of the
//! per-player operators weighted by the referee's prior.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::TwoQubitState;

pub type Complex = Complex64;
pub type ComplexMat2 = Matrix2<Complex64>;
pub type ComplexMat4 = Matrix4<Complex64>;

/// Eigenvalues down to this floor still count as positive semidefinite.
pub const PSD_TOLERANCE: f64 = 1e-10;
/// Minimum trace for a post-selected outcome.
pub const ZERO_PROBABILITY_THRESHOLD: f64 = 1e-14;
/// Tolerance on the sum of a prior or outcome distribution.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// Direction on the unit sphere, stored with `theta ∈ [0, π]` and `phi ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    theta: f64,
    phi: f64,
}

impl BlochVector {
    /// Builds a direction from arbitrary spherical angles, canonicalizing them.
    ///
    /// A polar angle outside `[0, π]` is folded back onto the sphere by moving
    /// to the antipodal azimuth, so `(−θ, φ)` and `(θ, φ + π)` give the same vector.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(TAU);
        let mut phi = phi;
        if theta > PI {
            theta = TAU - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    /// Direction in the x-z plane at polar angle `theta`.
    pub fn planar(theta: f64) -> Self {
        Self::new(theta, 0.0)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn cartesian(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// Signed polar angle for a direction lying in the x-z plane, i.e. the
    /// angle `ϑ` with `(sin ϑ, 0, cos ϑ)` equal to this vector. Fails for any
    /// other azimuth.
    pub fn planar_angle(&self) -> Result<f64> {
        if self.phi == 0.0 || self.theta == 0.0 || self.theta == PI {
            Ok(self.theta)
        } else if self.phi == PI {
            Ok(-self.theta)
        } else {
            Err(Error::NonZeroPhi(self.phi))
        }
    }
}

/// Measurement strength: a finite `y ≥ 0` or the projective limit `y → ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(
    rename_all = "lowercase",
    try_from = "StrengthRepr",
    into = "StrengthRepr"
)]
pub enum Strength {
    Finite(f64),
    Projective,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum StrengthRepr {
    Finite(f64),
    Projective,
}

impl TryFrom<StrengthRepr> for Strength {
    type Error = Error;

    fn try_from(value: StrengthRepr) -> Result<Self> {
        match value {
            StrengthRepr::Finite(y) => Strength::finite(y),
            StrengthRepr::Projective => Ok(Strength::Projective),
        }
    }
}

impl From<Strength> for StrengthRepr {
    fn from(value: Strength) -> Self {
        match value {
            Strength::Finite(y) => StrengthRepr::Finite(y),
            Strength::Projective => StrengthRepr::Projective,
        }
    }
}

impl Strength {
    pub fn finite(y: f64) -> Result<Self> {
        if y.is_finite() && y >= 0.0 {
            Ok(Strength::Finite(y))
        } else {
            Err(Error::InvalidStrength(y))
        }
    }

    /// `tanh y`, or exactly 1 in the projective limit.
    pub fn tanh_value(&self) -> f64 {
        match *self {
            Strength::Finite(y) => y.tanh(),
            Strength::Projective => 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Strength::Finite(y) => Strength::finite(y).map(|_| ()),
            Strength::Projective => Ok(()),
        }
    }
}

/// Binary measurement outcome `σ ∈ {+1, −1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const ALL: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Outcome::Plus => 0,
            Outcome::Minus => 1,
        }
    }
}

/// Projector `(I + σ α·σ⃗)/2` onto outcome `sigma` along `dir`.
pub fn projector(sigma: Outcome, dir: BlochVector) -> ComplexMat2 {
    let s = sigma.sign();
    let (st, ct) = dir.theta.sin_cos();
    let off = Complex64::from_polar(0.5 * s * st, dir.phi);
    Matrix2::new(
        Complex64::new(0.5 * (1.0 + s * ct), 0.0),
        off.conj(),
        off,
        Complex64::new(0.5 * (1.0 - s * ct), 0.0),
    )
}

/// Weight `a(±y) = sqrt((1 ± tanh y)/2)`; `sign` selects the branch.
pub fn weight(sign: Outcome, s: Strength) -> f64 {
    match (sign, s) {
        (Outcome::Plus, Strength::Projective) => 1.0,
        (Outcome::Minus, Strength::Projective) => 0.0,
        (_, Strength::Finite(_)) => (0.5 * (1.0 + sign.sign() * s.tanh_value())).sqrt(),
    }
}

/// Measurement operator `M_{σ|α}(y)`.
pub fn measurement_op(sigma: Outcome, dir: BlochVector, s: Strength) -> ComplexMat2 {
    let along = weight(sigma, s);
    let against = weight(sigma.flipped(), s);
    projector(Outcome::Plus, dir) * Complex64::from(along)
        + projector(Outcome::Minus, dir) * Complex64::from(against)
}

/// Two-qubit Kraus operator `sqrt(prior) · M_{σ|α}(y) ⊗ M_{σ'|β}(z)`.
#[allow(clippy::too_many_arguments)]
pub fn kraus(
    dir_a: BlochVector,
    dir_b: BlochVector,
    sigma_a: Outcome,
    sigma_b: Outcome,
    y: Strength,
    z: Strength,
    prior: f64,
) -> Result<ComplexMat4> {
    if !(0.0..=1.0).contains(&prior) {
        return Err(Error::InvalidPrior(prior));
    }
    let local = tensor_product(
        &measurement_op(sigma_a, dir_a, y),
        &measurement_op(sigma_b, dir_b, z),
    );
    Ok(local * Complex64::from(prior.sqrt()))
}

/// Checks that four prior weights are each in `[0, 1]` and sum to one.
pub fn validate_prior_weights(weights: &[f64; 4]) -> Result<()> {
    if let Some(&bad) = weights
        .iter()
        .find(|w| !w.is_finite() || !(0.0..=1.0).contains(*w))
    {
        return Err(Error::InvalidPrior(bad));
    }
    let sum: f64 = weights.iter().sum();
    let defect = (sum - 1.0).abs();
    if defect > NORMALIZATION_TOLERANCE {
        return Err(Error::PriorNotNormalized { sum, defect });
    }
    Ok(())
}

/// Max-norm of `Σ K†K − I₄` over all direction pairs and outcomes.
///
/// `prior` is indexed `[(a,b), (a,b'), (a',b), (a',b')]`.
pub fn completeness_defect(
    dirs_a: (BlochVector, BlochVector),
    dirs_b: (BlochVector, BlochVector),
    y: Strength,
    z: Strength,
    prior: &[f64; 4],
) -> Result<f64> {
    validate_prior_weights(prior)?;
    let da = [dirs_a.0, dirs_a.1];
    let db = [dirs_b.0, dirs_b.1];
    let mut sum = ComplexMat4::zeros();
    for (ia, &dir_a) in da.iter().enumerate() {
        for (ib, &dir_b) in db.iter().enumerate() {
            for sa in Outcome::ALL {
                for sb in Outcome::ALL {
                    let k = kraus(dir_a, dir_b, sa, sb, y, z, prior[2 * ia + ib])?;
                    sum += k.adjoint() * k;
                }
            }
        }
    }
    Ok(max_norm_diff4(&sum, &ComplexMat4::identity()))
}

/// Normalized post-selected state `KρK† / Tr[KρK†]`.
pub fn post_measurement_state(state: &TwoQubitState, k: &ComplexMat4) -> Result<TwoQubitState> {
    let unnormalized = k * state.rho() * k.adjoint();
    let probability = trace4(&unnormalized).re;
    if probability.is_nan() || probability <= ZERO_PROBABILITY_THRESHOLD {
        return Err(Error::ZeroProbabilityOutcome { probability });
    }
    let rho = unnormalized / Complex64::from(probability);
    // Rounding leaves a tiny anti-Hermitian part; project it away.
    let rho = (rho + rho.adjoint()) * Complex64::from(0.5);
    TwoQubitState::from_matrix(rho)
}

pub fn tensor_product(a: &ComplexMat2, b: &ComplexMat2) -> ComplexMat4 {
    let mut out = ComplexMat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

pub fn trace4(m: &ComplexMat4) -> Complex64 {
    m.trace()
}

pub fn max_norm_diff2(a: &ComplexMat2, b: &ComplexMat2) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_norm_diff4(a: &ComplexMat4, b: &ComplexMat4) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn hermiticity_defect(m: &ComplexMat4) -> f64 {
    max_norm_diff4(m, &m.adjoint())
}

/// Ascending eigenvalues of the Hermitian part of `m`.
pub fn hermitian_eigenvalues(m: &ComplexMat4) -> [f64; 4] {
    let herm = (m + m.adjoint()) * Complex64::from(0.5);
    let ev = herm.symmetric_eigenvalues();
    let mut out = [ev[0], ev[1], ev[2], ev[3]];
    out.sort_by(f64::total_cmp);
    out
}

pub fn is_finite4(m: &ComplexMat4) -> bool {
    m.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}
