//! Integration over the Feynman-parameter triangle `0 <= x <= y <= 1`.
//!
//! The deterministic path maps the triangle onto the unit square with
//! `x = u v`, `y = v` (Jacobian `v`) and runs a globally adaptive
//! Genz-Malik cubature there. The Monte Carlo path samples the triangle
//! directly and is kept independent so it can serve as a cross-check.

mod genz_malik;
mod monte_carlo;

use thiserror::Error;

pub use genz_malik::integrate_unit_square;
pub use monte_carlo::{mc_integrate_triangle, MC_CHUNK};

use crate::real::Real;

/// Default cap on integrand evaluations for the adaptive scheme.
pub const DEFAULT_MAX_EVALUATIONS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    /// Absolute error estimate (1-sigma standard error for Monte Carlo).
    pub error_estimate: T,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error(
        "no convergence after {evaluations} evaluations: estimate {value} with error {error_estimate} > tol {tol}"
    )]
    NonConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
        tol: f64,
    },
    #[error("integrand is not finite at (x, y) = ({x}, {y})")]
    NonFiniteIntegrand { x: f64, y: f64 },
}

/// Knobs for [`integrate_triangle_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdaptiveOptions {
    /// The square starts as a `2^d x 2^d` grid of regions.
    pub initial_depth: u32,
    pub max_evaluations: usize,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self {
            initial_depth: 1,
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
        }
    }
}

/// Integrates `f(x, y)` over the triangle `0 <= x <= y <= 1` to absolute
/// tolerance `tol` with the default options.
pub fn integrate_triangle<T, F>(f: F, tol: T) -> Result<QuadratureResult<T>, QuadratureError>
where
    T: Real,
    F: Fn(T, T) -> T,
{
    integrate_triangle_with(f, tol, &AdaptiveOptions::default())
}

pub fn integrate_triangle_with<T, F>(
    f: F,
    tol: T,
    opts: &AdaptiveOptions,
) -> Result<QuadratureResult<T>, QuadratureError>
where
    T: Real,
    F: Fn(T, T) -> T,
{
    match integrate_unit_square(|u, v| f(u * v, v) * v, tol, opts) {
        // The square integrator reports (u, v); translate back to (x, y).
        Err(QuadratureError::NonFiniteIntegrand { x: u, y: v }) => {
            Err(QuadratureError::NonFiniteIntegrand { x: u * v, y: v })
        }
        other => other,
    }
}

pub(crate) fn check_tol<T: Real>(tol: T) -> Result<(), QuadratureError> {
    if tol > T::zero() && tol.is_finite() {
        Ok(())
    } else {
        Err(QuadratureError::InvalidTolerance(tol.to_f64().unwrap_or(f64::NAN)))
    }
}
