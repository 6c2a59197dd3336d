//! Monte Carlo play of the referee protocol.
//!
//! Round `r` draws from its own ChaCha8 stream (key from `seed`, stream id
//! `r`), so every round's randomness is fixed by `(seed, r)` alone. Rounds are
//! grouped into fixed-size chunks whose statistics are merged in chunk order,
//! which keeps the result bit-identical for any number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{outcome_distribution, DirectionLabel, GameSpec};
use crate::quantum_core::{Outcome, NORMALIZATION_TOLERANCE};

const CHUNK_ROUNDS: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleEstimate {
    pub n_rounds: u64,
    pub mean_u_a: f64,
    pub mean_u_b: f64,
    pub std_error_u_a: f64,
    pub std_error_u_b: f64,
    pub seed: u64,
}

/// Running mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.n += 1.0;
        let delta = v - self.mean;
        self.mean += delta / self.n;
        self.m2 += delta * (v - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0.0 {
            return other;
        }
        if other.n == 0.0 {
            return self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        Moments {
            n,
            mean: self.mean + delta * other.n / n,
            m2: self.m2 + other.m2 + delta * delta * self.n * other.n / n,
        }
    }

    fn std_error(&self) -> f64 {
        if self.n < 2.0 {
            0.0
        } else {
            (self.m2 / (self.n - 1.0) / self.n).sqrt()
        }
    }
}

/// Cumulative distribution for inverse-CDF draws.
#[derive(Debug, Clone, Copy)]
struct Cdf<const N: usize> {
    cumulative: [f64; N],
    last_nonzero: usize,
}

impl<const N: usize> Cdf<N> {
    fn new(probs: [f64; N]) -> Result<Self> {
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE
            || probs.iter().any(|p| *p < -NORMALIZATION_TOLERANCE)
        {
            return Err(Error::UnnormalizedDistribution { sum });
        }
        let mut cumulative = [0.0; N];
        let mut acc = 0.0;
        let mut last_nonzero = 0;
        for (i, p) in probs.iter().enumerate() {
            let p = p.max(0.0) / sum;
            if p > 0.0 {
                last_nonzero = i;
            }
            acc += p;
            cumulative[i] = acc;
        }
        Ok(Self {
            cumulative,
            last_nonzero,
        })
    }

    fn draw(&self, u: f64) -> usize {
        self.cumulative
            .iter()
            .position(|&c| u < c)
            .unwrap_or(self.last_nonzero)
    }
}

/// Plays `n_rounds` rounds and reports the mean payoffs with standard errors.
pub fn sample_rounds(g: &GameSpec, n_rounds: u64, seed: u64) -> Result<SampleEstimate> {
    if n_rounds == 0 {
        return Err(Error::InvalidArgument("n_rounds must be >= 1".into()));
    }
    let labels = [
        (DirectionLabel::Unprimed, DirectionLabel::Unprimed),
        (DirectionLabel::Unprimed, DirectionLabel::Primed),
        (DirectionLabel::Primed, DirectionLabel::Unprimed),
        (DirectionLabel::Primed, DirectionLabel::Primed),
    ];
    let prior_cdf = Cdf::new(g.prior.weights())?;
    let mut outcome_cdfs = Vec::with_capacity(4);
    let mut payoffs = [[(0.0, 0.0); 4]; 4];
    for (k, &(la, lb)) in labels.iter().enumerate() {
        let d = outcome_distribution(g, la, lb);
        outcome_cdfs.push(Cdf::new([d[0][0], d[0][1], d[1][0], d[1][1]])?);
        for (j, (sa, sb)) in [
            (Outcome::Plus, Outcome::Plus),
            (Outcome::Plus, Outcome::Minus),
            (Outcome::Minus, Outcome::Plus),
            (Outcome::Minus, Outcome::Minus),
        ]
        .into_iter()
        .enumerate()
        {
            payoffs[k][j] = g.table.get(la, lb, sa, sb);
        }
    }

    let base = ChaCha8Rng::seed_from_u64(seed);
    let chunks = n_rounds.div_ceil(CHUNK_ROUNDS);
    let partials: Vec<(Moments, Moments)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut ma = Moments::default();
            let mut mb = Moments::default();
            let end = ((c + 1) * CHUNK_ROUNDS).min(n_rounds);
            for r in c * CHUNK_ROUNDS..end {
                let mut rng = base.clone();
                rng.set_stream(r);
                rng.set_word_pos(0);
                let pair = prior_cdf.draw(rng.random::<f64>());
                let cell = outcome_cdfs[pair].draw(rng.random::<f64>());
                let (ua, ub) = payoffs[pair][cell];
                ma.push(ua);
                mb.push(ub);
            }
            (ma, mb)
        })
        .collect();
    let (ma, mb) = partials.into_iter().fold(
        (Moments::default(), Moments::default()),
        |(a, b), (pa, pb)| (a.merge(pa), b.merge(pb)),
    );

    Ok(SampleEstimate {
        n_rounds,
        mean_u_a: ma.mean,
        mean_u_b: mb.mean,
        std_error_u_a: ma.std_error(),
        std_error_u_b: mb.std_error(),
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_rejects_unnormalized() {
        assert!(matches!(
            Cdf::new([0.5, 0.4]),
            Err(Error::UnnormalizedDistribution { .. })
        ));
        let cdf = Cdf::new([0.5, 0.5 + 5e-13]).unwrap();
        assert_eq!(cdf.draw(0.2), 0);
        assert_eq!(cdf.draw(0.9999999), 1);
    }

    #[test]
    fn cdf_never_picks_zero_probability_cells() {
        let cdf = Cdf::new([0.0, 1.0, 0.0, 0.0]).unwrap();
        for u in [0.0, 0.5, 1.0 - f64::EPSILON, 1.0] {
            assert_eq!(cdf.draw(u), 1);
        }
    }

    #[test]
    fn moments_merge_matches_sequential() {
        let data: Vec<f64> = (0..100).map(|i| ((i * 37) % 11) as f64 - 3.0).collect();
        let mut all = Moments::default();
        data.iter().for_each(|&v| all.push(v));
        let (mut left, mut right) = (Moments::default(), Moments::default());
        data[..40].iter().for_each(|&v| left.push(v));
        data[40..].iter().for_each(|&v| right.push(v));
        let merged = left.merge(right);
        assert!((merged.mean - all.mean).abs() < 1e-12);
        assert!((merged.m2 - all.m2).abs() < 1e-9);
    }
}
