//! Self-check suite behind `weakgame verify`.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::game::{
    closed_form_payoff, expected_payoff, outcome_distribution, table_of, Angles, DirectionLabel,
    GameSpec, Prior, TableName,
};
use crate::quantum_core::{
    completeness_defect, kraus, max_norm_diff2, measurement_op, post_measurement_state,
    validate_prior_weights, BlochVector, ComplexMat2, Outcome, Strength,
};
use crate::states::{
    bell_state, discorded_state, random_state, werner_state, CorrelationParam, TwoQubitState,
    WernerParam,
};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub max_defect: f64,
    pub tolerance: f64,
    pub detail: Option<String>,
}

impl CheckResult {
    fn measured(name: &'static str, max_defect: f64, tolerance: f64) -> Self {
        Self {
            name,
            passed: max_defect <= tolerance,
            max_defect,
            tolerance,
            detail: None,
        }
    }
}

/// Inputs the caller wants validated alongside the built-in checks.
#[derive(Debug, Clone, Default)]
pub struct VerifyInputs {
    pub prior: Option<[f64; 4]>,
    pub state: Option<Result<TwoQubitState>>,
}

pub fn random_strength<R: Rng>(rng: &mut R) -> Strength {
    match rng.random_range(0..10) {
        0 => Strength::Projective,
        1 => Strength::Finite(0.0),
        _ => Strength::Finite(rng.random_range(0.0..3.0)),
    }
}

pub fn random_direction<R: Rng>(rng: &mut R) -> BlochVector {
    BlochVector::new(rng.random_range(0.0..PI), rng.random_range(0.0..TAU))
}

pub fn random_angles<R: Rng>(rng: &mut R) -> Angles {
    Angles {
        theta_a: rng.random_range(0.0..TAU),
        theta_ap: rng.random_range(0.0..TAU),
        theta_b: rng.random_range(0.0..TAU),
        theta_bp: rng.random_range(0.0..TAU),
    }
}

pub fn random_prior<R: Rng>(rng: &mut R) -> [f64; 4] {
    let mut w: [f64; 4] = std::array::from_fn(|_| rng.random_range(0.0..1.0));
    let sum: f64 = w.iter().sum();
    w.iter_mut().for_each(|v| *v /= sum);
    // Absorb rounding into the last weight so the sum is 1 to the ulp.
    w[3] = 1.0 - w[0] - w[1] - w[2];
    w
}

fn identity_defect(sum: &ComplexMat2) -> f64 {
    max_norm_diff2(sum, &ComplexMat2::identity())
}

/// Runs every check. `draws` random draws are used per randomized check.
pub fn run_checks(seed: u64, draws: usize, inputs: &VerifyInputs) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let prior = inputs.prior.unwrap_or([0.25; 4]);
    out.push(match validate_prior_weights(&prior) {
        Ok(()) => CheckResult::measured(
            "prior_normalization",
            (prior.iter().sum::<f64>() - 1.0).abs(),
            1e-12,
        ),
        Err(e) => CheckResult {
            name: "prior_normalization",
            passed: false,
            max_defect: (prior.iter().sum::<f64>() - 1.0).abs(),
            tolerance: 1e-12,
            detail: Some(e.to_string()),
        },
    });

    if let Some(state) = &inputs.state {
        out.push(match state {
            Ok(_) => CheckResult::measured("state_validity", 0.0, 0.0),
            Err(e) => CheckResult {
                name: "state_validity",
                passed: false,
                max_defect: f64::NAN,
                tolerance: 0.0,
                detail: Some(e.to_string()),
            },
        });
    }

    let mut worst: f64 = 0.0;
    for _ in 0..draws {
        let dir = random_direction(&mut rng);
        let s = random_strength(&mut rng);
        let sum = Outcome::ALL
            .iter()
            .map(|&o| {
                let m = measurement_op(o, dir, s);
                m.adjoint() * m
            })
            .fold(ComplexMat2::zeros(), |a, b| a + b);
        worst = worst.max(identity_defect(&sum));
    }
    out.push(CheckResult::measured(
        "measurement_completeness",
        worst,
        1e-13,
    ));

    let mut worst: f64 = 0.0;
    for i in 0..draws {
        let p = if i == 0 {
            prior_or_uniform(&prior)
        } else {
            random_prior(&mut rng)
        };
        let d = completeness_defect(
            (random_direction(&mut rng), random_direction(&mut rng)),
            (random_direction(&mut rng), random_direction(&mut rng)),
            random_strength(&mut rng),
            random_strength(&mut rng),
            &p,
        )
        .unwrap_or(f64::INFINITY);
        worst = worst.max(d);
    }
    out.push(CheckResult::measured("kraus_completeness", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..draws {
        let state = random_state(&mut rng);
        let g = random_game(&mut rng, TableName::PrisonersDilemma, state, true);
        for la in DirectionLabel::ALL {
            for lb in DirectionLabel::ALL {
                let total: f64 = outcome_distribution(&g, la, lb).iter().flatten().sum();
                worst = worst.max((total - 1.0).abs());
            }
        }
    }
    out.push(CheckResult::measured("outcome_normalization", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..draws {
        let state = random_state(&mut rng);
        let k = kraus(
            random_direction(&mut rng),
            random_direction(&mut rng),
            Outcome::ALL[rng.random_range(0..2)],
            Outcome::ALL[rng.random_range(0..2)],
            random_strength(&mut rng),
            random_strength(&mut rng),
            1.0,
        )
        .expect("unit prior");
        if let Ok(post) = post_measurement_state(&state, &k) {
            let trace: f64 = (0..4).map(|i| post.rho()[(i, i)].re).sum();
            worst = worst
                .max((trace - 1.0).abs())
                .max((-post.eigenvalues()[0]).max(0.0));
        }
    }
    out.push(CheckResult::measured(
        "post_measurement_validity",
        worst,
        1e-10,
    ));

    for (name, table) in [
        ("closed_form_prisoners_dilemma", TableName::PrisonersDilemma),
        ("closed_form_chsh", TableName::Chsh),
        ("closed_form_modified_chsh", TableName::ModifiedChsh),
    ] {
        let mut worst: f64 = 0.0;
        for i in 0..draws {
            let state = match (table, i % 3) {
                (TableName::PrisonersDilemma, _) | (_, 0) => discorded_state(
                    CorrelationParam::new(rng.random_range(-TAU..TAU)).expect("finite"),
                ),
                (_, 1) => bell_state(),
                _ => werner_state(WernerParam::new(rng.random_range(0.0..=1.0)).expect("in range")),
            };
            let g = random_game(&mut rng, table, state, false);
            let engine = expected_payoff(&g);
            let closed = closed_form_payoff(&g)
                .ok()
                .flatten()
                .unwrap_or((f64::NAN, f64::NAN));
            let d = (engine.0 - closed.0).abs().max((engine.1 - closed.1).abs());
            worst = if d.is_nan() {
                f64::INFINITY
            } else {
                worst.max(d)
            };
        }
        out.push(CheckResult::measured(name, worst, 1e-10));
    }

    let mut worst: f64 = 0.0;
    for table in [TableName::Chsh, TableName::ModifiedChsh] {
        for _ in 0..draws / 2 {
            let state = random_state(&mut rng);
            let g = random_game(&mut rng, table, state, true);
            let (ua, ub) = expected_payoff(&g);
            worst = worst.max((ua + ub).abs());
        }
    }
    out.push(CheckResult::measured("zero_sum", worst, 1e-12));

    out
}

fn prior_or_uniform(prior: &[f64; 4]) -> [f64; 4] {
    if validate_prior_weights(prior).is_ok() {
        *prior
    } else {
        [0.25; 4]
    }
}

/// Random game on `state`; `general` also randomizes azimuths and the prior.
pub fn random_game<R: Rng>(
    rng: &mut R,
    table: TableName,
    state: TwoQubitState,
    general: bool,
) -> GameSpec {
    let y = random_strength(rng);
    let z = random_strength(rng);
    if general {
        GameSpec::new(
            (random_direction(rng), random_direction(rng)),
            (random_direction(rng), random_direction(rng)),
            y,
            z,
            Prior::new(random_prior(rng)).expect("normalized"),
            table_of(table),
            state,
        )
        .expect("valid strengths")
    } else {
        GameSpec::planar(table_of(table), state, y, z, random_angles(rng)).expect("valid strengths")
    }
}
