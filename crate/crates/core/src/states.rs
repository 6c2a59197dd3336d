//! Two-qubit density matrices: the Bell, Werner and discorded families plus
//! validated user-supplied states.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum_core::{
    hermitian_eigenvalues, hermiticity_defect, is_finite4, trace4, ComplexMat4,
    NORMALIZATION_TOLERANCE, PSD_TOLERANCE,
};

/// Which family a state came from. Closed-form payoffs key off this.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateKind {
    Bell,
    Werner { eta: f64 },
    Discorded { x: f64 },
    Custom,
}

/// Validated density matrix: unit trace, Hermitian, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    rho: ComplexMat4,
    label: StateKind,
}

/// Parameter `x` of the discorded state, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationParam(f64);

impl CorrelationParam {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() {
            Ok(Self(x))
        } else {
            Err(Error::InvalidArgument(format!(
                "correlation parameter must be finite, got {x}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Werner mixing parameter `η ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParam(f64);

impl WernerParam {
    pub fn new(eta: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&eta) {
            Ok(Self(eta))
        } else {
            Err(Error::InvalidEta(eta))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TwoQubitState {
    pub fn rho(&self) -> &ComplexMat4 {
        &self.rho
    }

    pub fn label(&self) -> StateKind {
        self.label
    }

    pub(crate) fn from_matrix(rho: ComplexMat4) -> Result<Self> {
        validate(&rho)?;
        Ok(Self {
            rho,
            label: StateKind::Custom,
        })
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        trace4(&(self.rho * self.rho)).re
    }

    /// Ascending eigenvalues of `ρ`.
    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues(&self.rho)
    }

    /// The state with the two qubits exchanged.
    pub fn swapped(&self) -> ComplexMat4 {
        let swap = swap_matrix();
        swap * self.rho * swap
    }

    pub fn to_spec(&self) -> StateSpec {
        match self.label {
            StateKind::Bell => StateSpec::Bell,
            StateKind::Werner { eta } => StateSpec::Werner { eta },
            StateKind::Discorded { x } => StateSpec::Discorded { x },
            StateKind::Custom => StateSpec::Custom {
                rho: (0..16)
                    .map(|i| {
                        let c = self.rho[(i / 4, i % 4)];
                        [c.re, c.im]
                    })
                    .collect(),
            },
        }
    }
}

fn validate(rho: &ComplexMat4) -> Result<()> {
    if !is_finite4(rho) {
        return Err(Error::NonFinite);
    }
    let defect = hermiticity_defect(rho);
    if defect > NORMALIZATION_TOLERANCE {
        return Err(Error::NotHermitian { defect });
    }
    let trace = trace4(rho).re;
    let defect = (trace - 1.0).abs();
    if defect > NORMALIZATION_TOLERANCE {
        return Err(Error::NotUnitTrace { trace, defect });
    }
    let min_eigenvalue = hermitian_eigenvalues(rho)[0];
    if min_eigenvalue < -PSD_TOLERANCE {
        return Err(Error::NotPSD { min_eigenvalue });
    }
    Ok(())
}

fn outer(v: &[f64; 4]) -> ComplexMat4 {
    ComplexMat4::from_fn(|i, j| Complex64::new(v[i] * v[j], 0.0))
}

fn swap_matrix() -> ComplexMat4 {
    let one = Complex64::new(1.0, 0.0);
    let mut s = ComplexMat4::zeros();
    s[(0, 0)] = one;
    s[(1, 2)] = one;
    s[(2, 1)] = one;
    s[(3, 3)] = one;
    s
}

/// `(|00⟩ + |11⟩)/√2`, normalized.
pub fn bell_state() -> TwoQubitState {
    let psi = [FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2];
    TwoQubitState {
        rho: outer(&psi),
        label: StateKind::Bell,
    }
}

/// `(|00⟩⟨00| + |xx⟩⟨xx|)/2` with `|x⟩ = cos(x/2)|0⟩ + sin(x/2)|1⟩`.
pub fn discorded_state(x: CorrelationParam) -> TwoQubitState {
    let x = x.value();
    let (s, c) = (0.5 * x).sin_cos();
    let xx = [c * c, c * s, s * c, s * s];
    let zero = [1.0, 0.0, 0.0, 0.0];
    let rho = (outer(&zero) + outer(&xx)) * Complex64::new(0.5, 0.0);
    TwoQubitState {
        rho,
        label: StateKind::Discorded { x },
    }
}

/// `((1−η)/4) I₄ + η |φ⟩⟨φ|` with the singlet `|φ⟩ = (|01⟩ − |10⟩)/√2`.
pub fn werner_state(eta: WernerParam) -> TwoQubitState {
    let eta = eta.value();
    let singlet = [0.0, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0];
    let rho = ComplexMat4::identity() * Complex64::new(0.25 * (1.0 - eta), 0.0)
        + outer(&singlet) * Complex64::new(eta, 0.0);
    TwoQubitState {
        rho,
        label: StateKind::Werner { eta },
    }
}

/// Validates 16 row-major entries as a density matrix.
pub fn custom_state(entries: &[Complex64; 16]) -> Result<TwoQubitState> {
    TwoQubitState::from_matrix(ComplexMat4::from_row_slice(entries))
}

/// Random full-rank state `G G† / Tr(G G†)` with entries of `G` uniform in
/// the unit square.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    let g = ComplexMat4::from_fn(|_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    let rho = g * g.adjoint();
    let rho = rho / trace4(&rho);
    let rho = (rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
    TwoQubitState {
        rho,
        label: StateKind::Custom,
    }
}

/// JSON description of a state:
/// `{"type": "bell" | "werner" | "discorded" | "custom", "eta": …, "x": …, "rho": [[re, im]; 16]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum StateSpec {
    Bell,
    Werner { eta: f64 },
    Discorded { x: f64 },
    Custom { rho: Vec<[f64; 2]> },
}

impl StateSpec {
    pub fn build(&self) -> Result<TwoQubitState> {
        match self {
            StateSpec::Bell => Ok(bell_state()),
            StateSpec::Werner { eta } => Ok(werner_state(WernerParam::new(*eta)?)),
            StateSpec::Discorded { x } => Ok(discorded_state(CorrelationParam::new(*x)?)),
            StateSpec::Custom { rho } => {
                let entries: [Complex64; 16] = rho
                    .iter()
                    .map(|[re, im]| Complex64::new(*re, *im))
                    .collect::<Vec<_>>()
                    .try_into()
                    .map_err(|v: Vec<_>| {
                        Error::InvalidArgument(format!(
                            "custom rho needs 16 entries, got {}",
                            v.len()
                        ))
                    })?;
                custom_state(&entries)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum_core::max_norm_diff4;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn diag(d: [f64; 4]) -> [Complex64; 16] {
        let mut e = [Complex64::new(0.0, 0.0); 16];
        for i in 0..4 {
            e[5 * i] = Complex64::new(d[i], 0.0);
        }
        e
    }

    fn real(m: [[f64; 4]; 4]) -> ComplexMat4 {
        ComplexMat4::from_fn(|i, j| Complex64::new(m[i][j], 0.0))
    }

    #[test]
    fn bell_entries() {
        let rho = bell_state();
        let r = rho.rho();
        assert!((r[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!((r[(3, 3)].re - 0.5).abs() < 1e-15);
        assert!((r[(0, 3)].re - 0.5).abs() < 1e-15);
        assert!((r[(3, 0)].re - 0.5).abs() < 1e-15);
        assert!((trace4(r).re - 1.0).abs() < 1e-15);
        assert!((rho.purity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn discorded_limits() {
        let s0 = discorded_state(CorrelationParam::new(0.0).unwrap());
        let mut e00 = [[0.0; 4]; 4];
        e00[0][0] = 1.0;
        assert!(max_norm_diff4(s0.rho(), &real(e00)) < 1e-15);

        let spi = discorded_state(CorrelationParam::new(PI).unwrap());
        let mut mix = [[0.0; 4]; 4];
        mix[0][0] = 0.5;
        mix[3][3] = 0.5;
        assert!(max_norm_diff4(spi.rho(), &real(mix)) < 1e-15);

        // x = π/2: half |00⟩⟨00| plus half |++⟩⟨++|, and |++⟩⟨++| has every entry 1/4.
        let shalf = discorded_state(CorrelationParam::new(FRAC_PI_2).unwrap());
        let mut expected = [[0.125; 4]; 4];
        expected[0][0] = 0.625;
        assert!(max_norm_diff4(shalf.rho(), &real(expected)) < 1e-15);
    }

    #[test]
    fn werner_examples() {
        let w0 = werner_state(WernerParam::new(0.0).unwrap());
        assert!(
            max_norm_diff4(
                w0.rho(),
                &(ComplexMat4::identity() * Complex64::new(0.25, 0.0))
            ) < 1e-16
        );

        let w1 = werner_state(WernerParam::new(1.0).unwrap());
        let singlet = real([
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.5, -0.5, 0.0],
            [0.0, -0.5, 0.5, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]);
        assert!(max_norm_diff4(w1.rho(), &singlet) < 1e-15);

        let wh = werner_state(WernerParam::new(0.5).unwrap());
        let expected = real([
            [0.125, 0.0, 0.0, 0.0],
            [0.0, 0.375, -0.25, 0.0],
            [0.0, -0.25, 0.375, 0.0],
            [0.0, 0.0, 0.0, 0.125],
        ]);
        assert!(max_norm_diff4(wh.rho(), &expected) < 1e-15);

        assert_eq!(WernerParam::new(1.2), Err(Error::InvalidEta(1.2)));
        assert!(WernerParam::new(-0.01).is_err());
    }

    #[test]
    fn custom_validation() {
        assert!(custom_state(&diag([0.25; 4])).is_ok());
        assert!(matches!(
            custom_state(&diag([1.0, 0.0, 0.0, 0.1])),
            Err(Error::NotUnitTrace { .. })
        ));
        match custom_state(&diag([1.5, -0.5, 0.0, 0.0])) {
            Err(Error::NotPSD { min_eigenvalue }) => assert!((min_eigenvalue + 0.5).abs() < 1e-12),
            other => panic!("expected NotPSD, got {other:?}"),
        }
        let mut e = diag([0.25; 4]);
        e[1] = Complex64::new(0.1, 0.0);
        assert!(matches!(custom_state(&e), Err(Error::NotHermitian { .. })));
        e[1] = Complex64::new(f64::NAN, 0.0);
        assert_eq!(custom_state(&e), Err(Error::NonFinite));
    }

    #[test]
    fn spec_json() {
        let spec: StateSpec = serde_json::from_str(r#"{"type":"werner","eta":0.3}"#).unwrap();
        assert_eq!(spec, StateSpec::Werner { eta: 0.3 });
        let st = spec.build().unwrap();
        assert_eq!(st.label(), StateKind::Werner { eta: 0.3 });

        let custom = TwoQubitState::from_matrix(*bell_state().rho())
            .unwrap()
            .to_spec();
        let json = serde_json::to_string(&custom).unwrap();
        let back: StateSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap().rho(), bell_state().rho());

        let short = StateSpec::Custom {
            rho: vec![[0.25, 0.0]; 3],
        };
        assert!(matches!(short.build(), Err(Error::InvalidArgument(_))));
    }
}
