//! Reference implementation on plain nested arrays, written without the
//! library's matrix types so it can serve as an independent check.

#![allow(dead_code, clippy::needless_range_loop)]

use num_complex::Complex64 as C;
use weakgame::quantum_core::{ComplexMat4, Strength};

pub type M2 = [[C; 2]; 2];
pub type M4 = [[C; 4]; 4];

pub fn c(re: f64) -> C {
    C::new(re, 0.0)
}

pub fn zero4() -> M4 {
    [[c(0.0); 4]; 4]
}

/// `None` is the projective limit.
pub fn strength_of(s: Strength) -> Option<f64> {
    match s {
        Strength::Finite(y) => Some(y),
        Strength::Projective => None,
    }
}

/// `a(±y)` via the logistic form `1 / (1 + e^{∓2y})`.
pub fn weight(sign: f64, y: Option<f64>) -> f64 {
    match y {
        None => {
            if sign > 0.0 {
                1.0
            } else {
                0.0
            }
        }
        Some(y) => (1.0 / (1.0 + (-2.0 * sign * y).exp())).sqrt(),
    }
}

pub fn projector(sign: f64, theta: f64, phi: f64) -> M2 {
    let off = C::from_polar(0.5 * sign * theta.sin(), -phi);
    [
        [c(0.5 * (1.0 + sign * theta.cos())), off],
        [off.conj(), c(0.5 * (1.0 - sign * theta.cos()))],
    ]
}

pub fn measurement(sign: f64, theta: f64, phi: f64, y: Option<f64>) -> M2 {
    let p = projector(1.0, theta, phi);
    let m = projector(-1.0, theta, phi);
    let (wp, wm) = (weight(sign, y), weight(-sign, y));
    let mut out = [[c(0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = p[i][j] * wp + m[i][j] * wm;
        }
    }
    out
}

pub fn kron(a: &M2, b: &M2) -> M4 {
    let mut out = zero4();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn mul(a: &M4, b: &M4) -> M4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn dagger(a: &M4) -> M4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn trace(a: &M4) -> C {
    (0..4).map(|i| a[i][i]).sum()
}

pub fn scale(a: &M4, s: f64) -> M4 {
    a.map(|row| row.map(|v| v * s))
}

pub fn add(a: &M4, b: &M4) -> M4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

pub fn outer(v: &[C; 4]) -> M4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = v[i] * v[j].conj();
        }
    }
    out
}

pub fn from_engine(m: &ComplexMat4) -> M4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[(i, j)];
        }
    }
    out
}

pub fn max_diff(a: &M4, b: &M4) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((a[i][j] - b[i][j]).norm());
        }
    }
    worst
}

pub fn bell() -> M4 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    outer(&[c(s), c(0.0), c(0.0), c(s)])
}

pub fn werner(eta: f64) -> M4 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = outer(&[c(0.0), c(s), c(-s), c(0.0)]);
    let mut id = zero4();
    for i in 0..4 {
        id[i][i] = c(1.0);
    }
    add(&scale(&id, (1.0 - eta) / 4.0), &scale(&singlet, eta))
}

/// `½(|00⟩⟨00| + |xx⟩⟨xx|)` with `|x⟩ = cos(x/2)|0⟩ + sin(x/2)|1⟩`.
pub fn discorded(x: f64) -> M4 {
    let (cx, sx) = ((x / 2.0).cos(), (x / 2.0).sin());
    let xx = [c(cx * cx), c(cx * sx), c(sx * cx), c(sx * sx)];
    add(
        &scale(&outer(&[c(1.0), c(0.0), c(0.0), c(0.0)]), 0.5),
        &scale(&outer(&xx), 0.5),
    )
}

/// Measurement settings: `(theta, phi)` for a, a′, b, b′.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub a: [(f64, f64); 2],
    pub b: [(f64, f64); 2],
    pub y: Option<f64>,
    pub z: Option<f64>,
    pub prior: [f64; 4],
}

impl Settings {
    pub fn planar(angles: [f64; 4], y: Option<f64>, z: Option<f64>) -> Self {
        Self {
            a: [(angles[0], 0.0), (angles[1], 0.0)],
            b: [(angles[2], 0.0), (angles[3], 0.0)],
            y,
            z,
            prior: [0.25; 4],
        }
    }
}

/// `P(σ, σ′ | la, lb)` for signs `±1.0`.
pub fn probability(rho: &M4, s: &Settings, la: usize, lb: usize, sa: f64, sb: f64) -> f64 {
    let (ta, pa) = s.a[la];
    let (tb, pb) = s.b[lb];
    let k = kron(&measurement(sa, ta, pa, s.y), &measurement(sb, tb, pb, s.z));
    trace(&mul(&mul(&k, rho), &dagger(&k))).re
}

/// Expected payoffs summed cell by cell over the 16-entry table, indexed
/// `8·la + 4·lb + 2·sa + sb` with `+1` before `−1`.
pub fn payoff(rho: &M4, s: &Settings, cells: &[[f64; 2]; 16]) -> (f64, f64) {
    let (mut ua, mut ub) = (0.0, 0.0);
    for la in 0..2 {
        for lb in 0..2 {
            let w = s.prior[2 * la + lb];
            for (ia, sa) in [1.0, -1.0].into_iter().enumerate() {
                for (ib, sb) in [1.0, -1.0].into_iter().enumerate() {
                    let p = probability(rho, s, la, lb, sa, sb);
                    let cell = cells[8 * la + 4 * lb + 2 * ia + ib];
                    ua += w * p * cell[0];
                    ub += w * p * cell[1];
                }
            }
        }
    }
    (ua, ub)
}
