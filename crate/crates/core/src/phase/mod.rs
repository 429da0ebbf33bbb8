//! Aharonov-Casher phases of spinor and scalar particles.
//!
//! The phase picked up along a closed trajectory is `-g ∮ S · dr` for the
//! spinor and `+g ∮ S · dr` for the scalar, with `S` the dual of the
//! electric field. With the `λ / 2π` field normalization one enclosed
//! charge gives `g λ` (spinor) and `-g λ` (scalar) per counter-clockwise turn.

mod integral;
mod path;
mod winding;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldConfig, FieldError};
use crate::real::Real;

pub use integral::{line_integral_dual, NEAR_CHARGE_RATIO};
pub use path::PolylinePath;
pub use winding::{winding_number, ON_PATH_FRACTION};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhaseError {
    #[error("path needs at least {needed} vertices, got {got}")]
    TooFewVertices { got: usize, needed: usize },
    #[error("closed path repeats its first vertex at the end; closure is implicit")]
    DuplicatedClosingVertex,
    #[error("vertex {index} is not finite")]
    NonFiniteVertex { index: usize },
    #[error("operation needs a closed path")]
    ExpectedClosedPath,
    #[error("operation needs open paths")]
    ExpectedOpenPath,
    #[error("point lies on the path")]
    PointOnPath,
    #[error("path passes through charge {charge} (distance {distance})")]
    SingularPath { charge: usize, distance: f64 },
    #[error("line integral did not converge")]
    NonConvergence,
    #[error("interferometer arms must share start and end points")]
    EndpointMismatch,
    #[error("tolerance must be positive and finite")]
    InvalidTolerance,
    #[error("malformed path file: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Species {
    Spinor,
    Scalar,
}

impl Species {
    /// `+1` for the spinor, `-1` for the scalar: the phase is `sign · g · Σ λ_i w_i`.
    pub fn sign(self) -> i32 {
        match self {
            Species::Spinor => 1,
            Species::Scalar => -1,
        }
    }

    fn phase_from_integral<T: Real>(self, g: T, integral: T) -> T {
        match self {
            Species::Spinor => -(g * integral),
            Species::Scalar => g * integral,
        }
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Species::Spinor => "spinor",
            Species::Scalar => "scalar",
        })
    }
}

impl FromStr for Species {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "spinor" => Ok(Species::Spinor),
            "scalar" => Ok(Species::Scalar),
            other => Err(format!("unknown species '{other}' (expected spinor or scalar)")),
        }
    }
}

/// Sign conventions the result was computed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conventions {
    /// `s` in `γ^μ γ^ν = g^{μν} + i s ε^{μνλ} γ_λ`. The phase signs used here
    /// do not depend on it; it is carried for reporting.
    pub s: i8,
}

impl Default for Conventions {
    fn default() -> Self {
        Self { s: 1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseResult<T> {
    pub phase: T,
    /// Winding number about each charge, in configuration order.
    pub windings: Vec<i64>,
    pub error_estimate: T,
    pub species: Species,
    pub conventions: Conventions,
}

/// Topological phase for a closed trajectory.
pub fn ac_phase<T: Real>(
    path: &PolylinePath<T>,
    config: &FieldConfig<T>,
    g: T,
    species: Species,
    tol: T,
) -> Result<PhaseResult<T>, PhaseError> {
    if !path.is_closed() {
        return Err(PhaseError::ExpectedClosedPath);
    }
    let integral = line_integral_dual(path, config, tol)?;
    let windings = config
        .charges()
        .iter()
        .map(|c| winding_number(path, c.position))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PhaseResult {
        phase: species.phase_from_integral(g, integral.value),
        windings,
        error_estimate: g.abs() * integral.error_estimate,
        species,
        conventions: Conventions::default(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeShift<T> {
    /// Phase of arm `a` minus phase of arm `b`.
    pub delta_phase: T,
    /// `cos^2(delta_phase / 2)`.
    pub contrast: T,
    pub error_estimate: T,
}

/// Two-arm interferometer: both arms are open paths with common endpoints.
pub fn fringe_shift<T: Real>(
    path_a: &PolylinePath<T>,
    path_b: &PolylinePath<T>,
    config: &FieldConfig<T>,
    g: T,
    species: Species,
    tol: T,
) -> Result<FringeShift<T>, PhaseError> {
    if path_a.is_closed() || path_b.is_closed() {
        return Err(PhaseError::ExpectedOpenPath);
    }
    if path_a.start() != path_b.start() || path_a.end() != path_b.end() {
        return Err(PhaseError::EndpointMismatch);
    }
    let half = tol * T::lit(0.5);
    let ia = line_integral_dual(path_a, config, half)?;
    let ib = line_integral_dual(path_b, config, half)?;
    let delta_phase = species.phase_from_integral(g, ia.value - ib.value);
    let c = (delta_phase * T::lit(0.5)).cos();
    Ok(FringeShift {
        delta_phase,
        contrast: c * c,
        error_estimate: g.abs() * (ia.error_estimate + ib.error_estimate),
    })
}
