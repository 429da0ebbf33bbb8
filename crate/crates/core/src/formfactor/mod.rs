//! Dimensionless one-loop magnetic moment integrals.
//!
//! Both models reduce `g` to `prefactor x I` where `I` is a double integral
//! over the Feynman-parameter triangle `0 <= x <= y <= 1`. Only `I` is
//! computed; the prefactor travels alongside as a [`Prefactor`] tag and is
//! never multiplied in.

mod guard;
mod scan;
mod susy;
mod yukawa;

use serde::Serialize;
use thiserror::Error;

use crate::quadrature::QuadratureError;

pub use guard::{Corner, DENOMINATOR_FLOOR};
pub use scan::{
    ir_scan, reduction_check, reduction_check_with_mass, reduction_pointwise_deviation, IrScan, IrScanRow,
    LogFit,
};
pub use susy::{susy_form_factor, susy_form_factor_mc, susy_form_factor_with, susy_integrand, SusyParams};
pub use yukawa::{
    yukawa_form_factor, yukawa_form_factor_mc, yukawa_form_factor_with, yukawa_integrand, YukawaParams, YukawaTerm,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormFactorError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("outside the physical domain: {0}")]
    DomainError(String),
    #[error("infrared divergent: {0}")]
    InfraredDivergent(String),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Which overall factor multiplies the dimensionless integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prefactor {
    /// `e^3 / (16 pi m^2)` for the supersymmetric vertex.
    Supersymmetric,
    /// `|a|^2 / (16 pi^2 m_phi^2)`; the charges `e1`, `e2` are already inside the integral.
    Yukawa,
}

impl Prefactor {
    pub fn note(self) -> &'static str {
        match self {
            Prefactor::Supersymmetric => "e^3/(16*pi*m^2)",
            Prefactor::Yukawa => "|a|^2/(16*pi^2*m_phi^2)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormFactorResult<T> {
    pub integral: T,
    pub error_estimate: T,
    pub evaluations: usize,
    pub prefactor: Prefactor,
}

pub(crate) fn require_finite<T: crate::real::Real>(name: &str, v: T) -> Result<(), FormFactorError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(FormFactorError::InvalidParameter(format!("{name} must be finite, got {v}")))
    }
}

pub(crate) fn check_point<T: crate::real::Real>(x: T, y: T) -> Result<(), FormFactorError> {
    if x >= T::zero() && x <= y && y <= T::one() {
        Ok(())
    } else {
        Err(FormFactorError::DomainError(format!(
            "({x}, {y}) lies outside the triangle 0 <= x <= y <= 1"
        )))
    }
}
