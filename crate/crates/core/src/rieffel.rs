//! The Powers–Rieffel projection `p = P⁻¹ρ(g) + ρ(f) + ρ(g)P` built from
//! circle functions, with numerical verification of idempotency, trace,
//! and first Chern number.
//!
//! `ρ` embeds `C^∞(S¹)` via `f ↦ Σ f_m Q^m`, and conjugation by the shift
//! moves the argument: `P^a ρ(h) = ρ(h(· − aθ)) P^a`.  (The opposite
//! orientation of the shift rule is incompatible with the standard bump
//! construction below: it leaves `p² − p` of order one.  The orientation
//! is pinned here by the requirement `p² = p`, and the residual check
//! below derives the five coefficient conditions mechanically from it.)
//!
//! The bump pair lives on `[0,1]`:
//!
//! ```text
//! f: rises smoothly 0→1 on [0, 1−θ],  ≡1 on [1−θ, θ],  1 − f(x−θ) on [θ, 1]
//! g: 0 on [0, θ],  √(f − f²) on [θ, 1]
//! ```
//!
//! which needs `1/2 < θ < 1`; a parameter in `(0, 1/2)` is handled by the
//! caller via `θ ↦ 1 − θ` (see [`projection_summary`]).

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RieffelError {
    #[error("theta must lie in (1/2, 1), got {0}")]
    ThetaOutOfRange(f64),
    #[error("grid size must be a power of two at least 1024, got {0}")]
    BadGrid(usize),
}

/// Smooth step profiles for the rising branch of `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TransitionProfile {
    /// `ψ(t) = h(t)/(h(t)+h(1−t))` with `h(t) = e^{−1/t}`: all one-sided
    /// derivatives vanish at both endpoints, so `√(f−f²)` stays smooth.
    FlatExponential,
}

impl TransitionProfile {
    fn eval(&self, t: f64) -> f64 {
        match self {
            TransitionProfile::FlatExponential => {
                if t <= 0.0 {
                    0.0
                } else if t >= 1.0 {
                    1.0
                } else {
                    let a = (-1.0 / t).exp();
                    let b = (-1.0 / (1.0 - t)).exp();
                    a / (a + b)
                }
            }
        }
    }

    /// Analytic derivative of the profile.
    fn deriv(&self, t: f64) -> f64 {
        match self {
            TransitionProfile::FlatExponential => {
                if t <= 0.0 || t >= 1.0 {
                    0.0
                } else {
                    let a = (-1.0 / t).exp();
                    let b = (-1.0 / (1.0 - t)).exp();
                    let da = a / (t * t);
                    let db = -b / ((1.0 - t) * (1.0 - t));
                    (da * (a + b) - a * (da + db)) / ((a + b) * (a + b))
                }
            }
        }
    }
}

/// The circle functions `f, g` of the projection at a fixed θ, together
/// with the sampling grid.
#[derive(Clone, Debug)]
pub struct BumpPair {
    pub theta: f64,
    pub grid: usize,
    profile: TransitionProfile,
}

impl BumpPair {
    pub fn build(theta: f64, grid: usize, profile: TransitionProfile) -> Result<Self, RieffelError> {
        if !(theta > 0.5 && theta < 1.0) {
            return Err(RieffelError::ThetaOutOfRange(theta));
        }
        if grid < 1024 || !grid.is_power_of_two() {
            return Err(RieffelError::BadGrid(grid));
        }
        Ok(BumpPair { theta, grid, profile })
    }

    /// `f` evaluated at `x` (mod 1).
    pub fn f(&self, x: f64) -> f64 {
        let x = x.rem_euclid(1.0);
        let w = 1.0 - self.theta;
        if x <= w {
            self.profile.eval(x / w)
        } else if x <= self.theta {
            1.0
        } else {
            1.0 - self.profile.eval((x - self.theta) / w)
        }
    }

    /// Analytic derivative `f'`.
    pub fn f_prime(&self, x: f64) -> f64 {
        let x = x.rem_euclid(1.0);
        let w = 1.0 - self.theta;
        if x <= w {
            self.profile.deriv(x / w) / w
        } else if x <= self.theta {
            0.0
        } else {
            -self.profile.deriv((x - self.theta) / w) / w
        }
    }

    /// `g = √(f − f²)` on `[θ, 1]`, zero on `[0, θ]`.
    pub fn g(&self, x: f64) -> f64 {
        let x = x.rem_euclid(1.0);
        if x <= self.theta {
            0.0
        } else {
            let f = self.f(x);
            (f - f * f).max(0.0).sqrt()
        }
    }
}

/// The projection element: coefficient functions of `P^{-1}, P^0, P^{+1}`.
/// The hermiticity relation ties the `P^{±1}` coefficients to the same `g`.
#[derive(Clone, Debug)]
pub struct ProjectionElement {
    pub bump: BumpPair,
}

impl ProjectionElement {
    pub fn new(bump: BumpPair) -> Self {
        ProjectionElement { bump }
    }

    /// Expand `p² − p` in powers `P^{-2} … P^{+2}` with the shift rule and
    /// return the largest coefficient magnitude over the grid.  The five
    /// coefficient functions are
    ///
    /// ```text
    /// P^{-2}: g(x+θ) g(x+2θ)
    /// P^{-1}: g(x+θ) (f(x+θ) + f(x) − 1)
    /// P^{0} : f(x)² + g(x)² + g(x+θ)² − f(x)
    /// P^{+1}: g(x) (f(x) + f(x−θ) − 1)
    /// P^{+2}: g(x) g(x−θ)
    /// ```
    pub fn idempotency_residual(&self) -> f64 {
        let b = &self.bump;
        let th = b.theta;
        let n = b.grid;
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let x = k as f64 / n as f64;
            let c_m2 = b.g(x + th) * b.g(x + 2.0 * th);
            let c_m1 = b.g(x + th) * (b.f(x + th) + b.f(x) - 1.0);
            let c_0 = b.f(x) * b.f(x) + b.g(x) * b.g(x) + b.g(x + th) * b.g(x + th) - b.f(x);
            let c_p1 = b.g(x) * (b.f(x) + b.f(x - th) - 1.0);
            let c_p2 = b.g(x) * b.g(x - th);
            for c in [c_m2, c_m1, c_0, c_p1, c_p2] {
                worst = worst.max(c.abs());
            }
        }
        worst
    }

    /// `τ(p) = ∫₀¹ f`, by the composite trapezoid rule (the integrand is
    /// smooth and periodic, so the rule converges spectrally).
    pub fn trace(&self) -> f64 {
        let b = &self.bump;
        let n = b.grid;
        let mut acc = 0.0;
        for k in 0..n {
            acc += b.f(k as f64 / n as f64);
        }
        acc / n as f64
    }

    /// First Chern number `c₁(p) = −6 ∫₀¹ g² f' dx`.
    pub fn chern_number(&self) -> f64 {
        let b = &self.bump;
        let n = b.grid;
        let mut acc = 0.0;
        for k in 0..n {
            let x = k as f64 / n as f64;
            let g = b.g(x);
            acc += g * g * b.f_prime(x);
        }
        -6.0 * acc / n as f64
    }
}

/// JSON-friendly summary of one projection run.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionSummary {
    pub theta_input: f64,
    /// θ actually used for the bump pair (the reflection 1−θ when the
    /// input lies in (0, 1/2)).
    pub theta: f64,
    pub grid: usize,
    pub trace: f64,
    pub chern: f64,
    pub idempotency_residual: f64,
}

/// Build the projection and evaluate its invariants.  Inputs in `(0, 1/2)`
/// are reflected to `1 − θ` (the projection of the complementary class);
/// this is reported through `theta_input` vs `theta`.
pub fn projection_summary(
    theta: f64,
    grid: usize,
    profile: TransitionProfile,
) -> Result<ProjectionSummary, RieffelError> {
    let used = if theta > 0.0 && theta < 0.5 { 1.0 - theta } else { theta };
    let bump = BumpPair::build(used, grid, profile)?;
    let p = ProjectionElement::new(bump);
    Ok(ProjectionSummary {
        theta_input: theta,
        theta: used,
        grid,
        trace: p.trace(),
        chern: p.chern_number(),
        idempotency_residual: p.idempotency_residual(),
    })
}
