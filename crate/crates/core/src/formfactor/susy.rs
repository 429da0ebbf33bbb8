//! Supersymmetric Maxwell(-Chern-Simons) vertex integral.
//!
//! `I = ∫∫ y / (y^2 + (1-x) M^2 - x (y-x) q^2)^{3/2}` with `q^2`, `M^2`
//! measured in units of the matter mass squared.

use crate::quadrature::{integrate_triangle_with, mc_integrate_triangle, AdaptiveOptions};
use crate::real::Real;

use super::guard::{self, Corner};
use super::{check_point, require_finite, FormFactorError, FormFactorResult, Prefactor};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusyParams<T> {
    q_hat2: T,
    mcs_hat2: T,
    corner: Corner,
}

impl<T: Real> SusyParams<T> {
    /// Validates the parameters and runs the threshold guard.
    ///
    /// `mcs_hat2 = 0` is accepted (it is the bare integral), but the form
    /// factor itself then reports [`FormFactorError::InfraredDivergent`].
    pub fn new(q_hat2: T, mcs_hat2: T) -> Result<Self, FormFactorError> {
        require_finite("q_hat2", q_hat2)?;
        require_finite("mcs_hat2", mcs_hat2)?;
        if mcs_hat2 < T::zero() {
            return Err(FormFactorError::InvalidParameter(format!(
                "mcs_hat2 must be >= 0, got {mcs_hat2}"
            )));
        }
        let corner = Corner::classify(mcs_hat2, T::zero())?;
        let p = Self { q_hat2, mcs_hat2, corner };
        guard::check(|x, y| p.denominator(x, y), corner, "supersymmetric integrand")?;
        Ok(p)
    }

    pub fn q_hat2(&self) -> T {
        self.q_hat2
    }

    pub fn mcs_hat2(&self) -> T {
        self.mcs_hat2
    }

    pub fn corner(&self) -> Corner {
        self.corner
    }

    #[inline]
    pub fn denominator(&self, x: T, y: T) -> T {
        y * y + (T::one() - x) * self.mcs_hat2 - x * (y - x) * self.q_hat2
    }

    /// Integrand without domain checks; callers must stay inside the guarded triangle.
    #[inline]
    pub fn integrand(&self, x: T, y: T) -> T {
        let d = self.denominator(x, y);
        y / (d * d.sqrt())
    }

    fn refuse_divergent(&self) -> Result<(), FormFactorError> {
        if self.corner == Corner::QuadraticZero {
            return Err(FormFactorError::InfraredDivergent(format!(
                "with mcs_hat2 = 0 the integrand behaves as 1/y^2 at x = y = 0 and the integral \
                 diverges logarithmically (q_hat2 = {}); supply a Chern-Simons mass",
                self.q_hat2
            )));
        }
        Ok(())
    }
}

/// Pointwise integrand with domain checks.
pub fn susy_integrand<T: Real>(x: T, y: T, params: &SusyParams<T>) -> Result<T, FormFactorError> {
    check_point(x, y)?;
    let d = params.denominator(x, y);
    if d <= T::zero() || !d.is_finite() {
        return Err(FormFactorError::DomainError(format!(
            "denominator {d} is not positive at ({x}, {y})"
        )));
    }
    Ok(y / (d * d.sqrt()))
}

pub fn susy_form_factor<T: Real>(params: &SusyParams<T>, tol: T) -> Result<FormFactorResult<T>, FormFactorError> {
    susy_form_factor_with(params, tol, &AdaptiveOptions::default())
}

pub fn susy_form_factor_with<T: Real>(
    params: &SusyParams<T>,
    tol: T,
    opts: &AdaptiveOptions,
) -> Result<FormFactorResult<T>, FormFactorError> {
    params.refuse_divergent()?;
    let r = integrate_triangle_with(|x, y| params.integrand(x, y), tol, opts)?;
    Ok(FormFactorResult {
        integral: r.value,
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
        prefactor: Prefactor::Supersymmetric,
    })
}

/// Monte Carlo estimate of the same integral; `error_estimate` is 1 sigma.
pub fn susy_form_factor_mc<T: Real>(
    params: &SusyParams<T>,
    samples: usize,
    seed: u64,
) -> Result<FormFactorResult<T>, FormFactorError> {
    params.refuse_divergent()?;
    let r = mc_integrate_triangle(|x, y| params.integrand(x, y), samples, seed)?;
    Ok(FormFactorResult {
        integral: r.value,
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
        prefactor: Prefactor::Supersymmetric,
    })
}
