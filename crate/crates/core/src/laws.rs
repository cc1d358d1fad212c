//! Semicircle and Marchenko–Pastur laws: densities, CDFs, quantiles, and the
//! classical (expected) eigenvalue locations they induce.
//!
//! The semicircle CDF is evaluated in closed form
//! `1/2 + t√(4−t²)/(4π) + arcsin(t/2)/π`, which keeps quadrature error out of
//! every downstream statistic; the Marchenko–Pastur CDF stays numeric since
//! nothing downstream needs its closed form. Densities return 0 exactly at the
//! support edges, CDFs are clamped to `[0, 1]`, and quantiles are solved by
//! Newton iteration safeguarded with bisection.

use crate::quad::{integrate_adaptive, QuadError};
use crate::spectral::Interval;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LawError {
    #[error("non-finite input {0}")]
    NonFinite(f64),
    #[error("probability level {0} outside the open interval (0, 1)")]
    LevelOutOfRange(f64),
    #[error("eigenvalue index {i} outside 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("Marchenko-Pastur law requires p >= n >= 1, got p={p}, n={n}")]
    BadShape { p: u64, n: u64 },
    #[error("quantile solver did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

const NEWTON_CAP: usize = 100;

/// Newton iteration on `cdf(t) - level`, safeguarded by a maintained bracket.
/// `tol` bounds `|cdf(t) - level|` at the returned point.
fn quantile_newton(
    cdf: impl Fn(f64) -> f64,
    density: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    level: f64,
    tol: f64,
) -> Result<f64, LawError> {
    let mut t = 0.5 * (lo + hi);
    for _ in 0..NEWTON_CAP {
        let g = cdf(t) - level;
        if g.abs() <= tol {
            return Ok(t);
        }
        if g > 0.0 {
            hi = t;
        } else {
            lo = t;
        }
        let d = density(t);
        let newton = t - g / d;
        t = if d > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    // The bracket collapses to machine precision long before 100 iterations;
    // accept the midpoint when the residual is only limited by f64 rounding.
    let g = cdf(t) - level;
    if g.abs() <= tol.max(1e-14) || (hi - lo) <= f64::EPSILON * (lo.abs() + hi.abs() + 1.0) {
        Ok(t)
    } else {
        Err(LawError::NoConvergence(NEWTON_CAP))
    }
}

/// The semicircle law: density `(1/2π)√(4−x²)` on `[-2, 2]`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SemicircleLaw;

impl SemicircleLaw {
    pub fn density(&self, x: f64) -> Result<f64, LawError> {
        if !x.is_finite() {
            return Err(LawError::NonFinite(x));
        }
        if x.abs() >= 2.0 {
            return Ok(0.0);
        }
        Ok((4.0 - x * x).sqrt() / (2.0 * PI))
    }

    /// Distribution function, clamped to `[0, 1]` outside the support.
    pub fn cdf(&self, t: f64) -> Result<f64, LawError> {
        if t.is_nan() {
            return Err(LawError::NonFinite(t));
        }
        if t <= -2.0 {
            return Ok(0.0);
        }
        if t >= 2.0 {
            return Ok(1.0);
        }
        let v = 0.5 + t * (4.0 - t * t).sqrt() / (4.0 * PI) + (t / 2.0).asin() / PI;
        Ok(v.clamp(0.0, 1.0))
    }

    /// Inverse CDF on `(0, 1)`; `|cdf(t) - x| <= 1e-12` at the returned `t`.
    pub fn quantile(&self, x: f64) -> Result<f64, LawError> {
        if !x.is_finite() {
            return Err(LawError::NonFinite(x));
        }
        if x <= 0.0 || x >= 1.0 {
            return Err(LawError::LevelOutOfRange(x));
        }
        quantile_newton(
            |t| self.cdf(t).expect("finite"),
            |t| self.density(t).expect("finite"),
            -2.0,
            2.0,
            x,
            1e-12,
        )
    }

    /// Semicircle mass of an interval (endpoints may be infinite).
    pub fn interval_mass(&self, interval: &Interval) -> f64 {
        let at = |v: f64| {
            if v == f64::NEG_INFINITY {
                0.0
            } else if v == f64::INFINITY {
                1.0
            } else {
                self.cdf(v).expect("finite endpoint")
            }
        };
        (at(interval.upper()) - at(interval.lower())).max(0.0)
    }
}

/// Classical location `t(i/n)` of the `i`-th eigenvalue (1-indexed); `i = n`
/// maps to the upper support edge `2` by convention.
pub fn classical_location(i: usize, n: usize) -> Result<f64, LawError> {
    if i < 1 || i > n {
        return Err(LawError::IndexOutOfRange { i, n });
    }
    if i == n {
        return Ok(2.0);
    }
    SemicircleLaw.quantile(i as f64 / n as f64)
}

/// Marchenko–Pastur law at finite shape `(p, n)`, `p >= n`: density
/// `(1/2πx)√((x−α)(β−x))` on `[α, β]` with `α = (√(p/n)−1)²`, `β = (√(p/n)+1)²`.
#[derive(Debug, Clone, Copy)]
pub struct MarchenkoPasturLaw {
    p: u64,
    n: u64,
    gamma: f64,
    alpha: f64,
    beta: f64,
}

impl MarchenkoPasturLaw {
    pub fn new(p: u64, n: u64) -> Result<Self, LawError> {
        if n == 0 || p < n {
            return Err(LawError::BadShape { p, n });
        }
        let gamma = p as f64 / n as f64;
        let root = gamma.sqrt();
        Ok(MarchenkoPasturLaw {
            p,
            n,
            gamma,
            alpha: (root - 1.0) * (root - 1.0),
            beta: (root + 1.0) * (root + 1.0),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Density; 0 outside the open support interior (including at `x = 0`
    /// when `p = n`, where the edge factor carries a `1/x` singularity).
    pub fn density(&self, x: f64) -> f64 {
        if !x.is_finite() || x <= self.alpha || x >= self.beta {
            return 0.0;
        }
        ((x - self.alpha) * (self.beta - x)).sqrt() / (2.0 * PI * x)
    }

    /// Distribution function by adaptive quadrature (absolute tolerance 1e-10).
    pub fn cdf(&self, t: f64) -> Result<f64, LawError> {
        if t.is_nan() {
            return Err(LawError::NonFinite(t));
        }
        if t <= self.alpha {
            return Ok(0.0);
        }
        if t >= self.beta {
            return Ok(1.0);
        }
        let v = integrate_adaptive(&|x| self.density(x), self.alpha, t, 1e-10)?;
        Ok(v.clamp(0.0, 1.0))
    }

    /// Inverse CDF on `(0, 1)`; `|cdf(t) - x| <= 1e-10` at the returned `t`.
    pub fn quantile(&self, x: f64) -> Result<f64, LawError> {
        if !x.is_finite() {
            return Err(LawError::NonFinite(x));
        }
        if x <= 0.0 || x >= 1.0 {
            return Err(LawError::LevelOutOfRange(x));
        }
        quantile_newton(
            |t| self.cdf(t).expect("finite"),
            |t| self.density(t),
            self.alpha,
            self.beta,
            x,
            1e-10,
        )
    }

    /// Law mass of an interval (endpoints may be infinite).
    pub fn interval_mass(&self, interval: &Interval) -> Result<f64, LawError> {
        let at = |v: f64| {
            if v == f64::NEG_INFINITY {
                Ok(0.0)
            } else if v == f64::INFINITY {
                Ok(1.0)
            } else {
                self.cdf(v)
            }
        };
        Ok((at(interval.upper())? - at(interval.lower())?).max(0.0))
    }
}
