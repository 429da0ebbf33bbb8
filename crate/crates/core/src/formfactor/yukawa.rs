//! Yukawa-coupled scalar and two spinors: the scalar magnetic moment from
//! the loop with the photon attached to a charged spinor line.
//!
//! Masses are in units of the scalar mass `m_phi`. The result is
//! `e1 I_first + e2 I_swapped`, where the swapped term exchanges the two
//! spinor masses.

use crate::quadrature::{integrate_triangle_with, mc_integrate_triangle, AdaptiveOptions};
use crate::real::Real;

use super::guard::{self, Corner};
use super::{check_point, require_finite, FormFactorError, FormFactorResult, Prefactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YukawaTerm {
    /// Photon on `psi_1`: masses `(m1, m2)`, weighted by `e1`.
    First,
    /// `m1 <-> m2`, weighted by `e2`.
    Swapped,
}

impl YukawaTerm {
    pub const BOTH: [YukawaTerm; 2] = [YukawaTerm::First, YukawaTerm::Swapped];
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YukawaParams<T> {
    q_hat2: T,
    m1_hat: T,
    m2_hat: T,
    e1: T,
    e2: T,
    a_abs2: T,
    /// Corner class per term; `None` when the term's charge is zero.
    corners: [Option<Corner>; 2],
}

impl<T: Real> YukawaParams<T> {
    /// Validates the parameters and guards every term with a nonzero charge.
    pub fn new(q_hat2: T, m1_hat: T, m2_hat: T, e1: T, e2: T, a_abs2: T) -> Result<Self, FormFactorError> {
        for (name, v) in [
            ("q_hat2", q_hat2),
            ("m1_hat", m1_hat),
            ("m2_hat", m2_hat),
            ("e1", e1),
            ("e2", e2),
            ("a_abs2", a_abs2),
        ] {
            require_finite(name, v)?;
        }
        if m1_hat <= T::zero() {
            return Err(FormFactorError::InvalidParameter(format!("m1_hat must be > 0, got {m1_hat}")));
        }
        if m2_hat < T::zero() {
            return Err(FormFactorError::InvalidParameter(format!("m2_hat must be >= 0, got {m2_hat}")));
        }
        if a_abs2 < T::zero() {
            return Err(FormFactorError::InvalidParameter(format!("a_abs2 must be >= 0, got {a_abs2}")));
        }
        let mut p = Self {
            q_hat2,
            m1_hat,
            m2_hat,
            e1,
            e2,
            a_abs2,
            corners: [None, None],
        };
        for (slot, term) in YukawaTerm::BOTH.into_iter().enumerate() {
            if p.charge(term) == T::zero() {
                continue;
            }
            let (ma, mb) = p.masses(term);
            let corner = Corner::classify(mb * mb, ma * ma - mb * mb - T::one())?;
            let what = match term {
                YukawaTerm::First => "Yukawa first term",
                YukawaTerm::Swapped => "Yukawa swapped term",
            };
            guard::check(|x, y| p.denominator(x, y, term), corner, what)?;
            p.corners[slot] = Some(corner);
        }
        Ok(p)
    }

    /// Parameters under which the Yukawa integral coincides with the
    /// supersymmetric one at `mcs_hat2 = 0`: `m1 = m_phi`, `m2 = 0`, `e1 = 1`, `e2 = 0`.
    pub fn reduction(q_hat2: T) -> Result<Self, FormFactorError> {
        Self::new(q_hat2, T::one(), T::zero(), T::one(), T::zero(), T::one())
    }

    pub fn q_hat2(&self) -> T {
        self.q_hat2
    }
    pub fn m1_hat(&self) -> T {
        self.m1_hat
    }
    pub fn m2_hat(&self) -> T {
        self.m2_hat
    }
    pub fn e1(&self) -> T {
        self.e1
    }
    pub fn e2(&self) -> T {
        self.e2
    }
    pub fn a_abs2(&self) -> T {
        self.a_abs2
    }

    /// Same physics with the two spinors relabelled.
    pub fn swapped(&self) -> Result<Self, FormFactorError> {
        Self::new(self.q_hat2, self.m2_hat, self.m1_hat, self.e2, self.e1, self.a_abs2)
    }

    pub fn charge(&self, term: YukawaTerm) -> T {
        match term {
            YukawaTerm::First => self.e1,
            YukawaTerm::Swapped => self.e2,
        }
    }

    /// `(m_a, m_b)`: the photon couples to `m_a`, `m_b` runs on the other line.
    pub fn masses(&self, term: YukawaTerm) -> (T, T) {
        match term {
            YukawaTerm::First => (self.m1_hat, self.m2_hat),
            YukawaTerm::Swapped => (self.m2_hat, self.m1_hat),
        }
    }

    #[inline]
    pub fn numerator(&self, y: T, term: YukawaTerm) -> T {
        let (ma, mb) = self.masses(term);
        (ma + mb) * y - mb
    }

    #[inline]
    pub fn denominator(&self, x: T, y: T, term: YukawaTerm) -> T {
        let (ma, mb) = self.masses(term);
        y * y - x * (y - x) * self.q_hat2 + mb * mb - y * (T::one() - (ma * ma - mb * mb))
    }

    /// Integrand without domain checks.
    #[inline]
    pub fn integrand(&self, x: T, y: T, term: YukawaTerm) -> T {
        let d = self.denominator(x, y, term);
        self.numerator(y, term) / (d * d.sqrt())
    }
}

pub fn yukawa_integrand<T: Real>(x: T, y: T, params: &YukawaParams<T>, term: YukawaTerm) -> Result<T, FormFactorError> {
    check_point(x, y)?;
    let d = params.denominator(x, y, term);
    if d <= T::zero() || !d.is_finite() {
        return Err(FormFactorError::DomainError(format!(
            "denominator {d} is not positive at ({x}, {y})"
        )));
    }
    Ok(params.numerator(y, term) / (d * d.sqrt()))
}

fn active_terms<T: Real>(params: &YukawaParams<T>) -> Result<Vec<YukawaTerm>, FormFactorError> {
    let mut terms = Vec::with_capacity(2);
    for (slot, term) in YukawaTerm::BOTH.into_iter().enumerate() {
        match params.corners[slot] {
            None => {}
            Some(Corner::QuadraticZero) => {
                let (ma, _) = params.masses(term);
                return Err(FormFactorError::InfraredDivergent(format!(
                    "massless partner spinor with m_phi = {ma} m_phi sits exactly at threshold: the \
                     denominator vanishes as y^2 at x = y = 0 and the integral diverges logarithmically \
                     (q_hat2 = {})",
                    params.q_hat2
                )));
            }
            Some(_) => terms.push(term),
        }
    }
    Ok(terms)
}

pub fn yukawa_form_factor<T: Real>(params: &YukawaParams<T>, tol: T) -> Result<FormFactorResult<T>, FormFactorError> {
    yukawa_form_factor_with(params, tol, &AdaptiveOptions::default())
}

/// Adaptive evaluation; each active term gets `tol / (2 |e|)` so the
/// charge-weighted sum meets `tol`.
pub fn yukawa_form_factor_with<T: Real>(
    params: &YukawaParams<T>,
    tol: T,
    opts: &AdaptiveOptions,
) -> Result<FormFactorResult<T>, FormFactorError> {
    crate::quadrature::check_tol(tol)?;
    let mut integral = T::zero();
    let mut error_estimate = T::zero();
    let mut evaluations = 0;
    let two = T::lit(2.0);
    for term in active_terms(params)? {
        let e = params.charge(term);
        let r = integrate_triangle_with(|x, y| params.integrand(x, y, term), tol / (two * e.abs()), opts)?;
        integral = integral + e * r.value;
        error_estimate = error_estimate + e.abs() * r.error_estimate;
        evaluations += r.evaluations;
    }
    Ok(FormFactorResult {
        integral,
        error_estimate,
        evaluations,
        prefactor: Prefactor::Yukawa,
    })
}

/// Monte Carlo estimate. Each term draws from its own seed (`seed`, `seed + 1`).
pub fn yukawa_form_factor_mc<T: Real>(
    params: &YukawaParams<T>,
    samples: usize,
    seed: u64,
) -> Result<FormFactorResult<T>, FormFactorError> {
    let mut integral = T::zero();
    let mut variance = T::zero();
    let mut evaluations = 0;
    for term in active_terms(params)? {
        let e = params.charge(term);
        let offset = match term {
            YukawaTerm::First => 0,
            YukawaTerm::Swapped => 1,
        };
        let r = mc_integrate_triangle(|x, y| params.integrand(x, y, term), samples, seed.wrapping_add(offset))?;
        integral = integral + e * r.value;
        variance = variance + (e * r.error_estimate).powi(2);
        evaluations += r.evaluations;
    }
    Ok(FormFactorResult {
        integral,
        error_estimate: variance.sqrt(),
        evaluations,
        prefactor: Prefactor::Yukawa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrand_examples() {
        let red = YukawaParams::new(0.0, 1.0, 0.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(yukawa_integrand(0.5, 1.0, &red, YukawaTerm::First).unwrap(), 1.0);

        let eq = YukawaParams::new(0.0, 2.0, 2.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(yukawa_integrand(0.3, 1.0, &eq, YukawaTerm::First).unwrap(), 0.25);
        for (x, y) in [(0.1, 0.2), (0.4, 0.9), (0.0, 1.0), (0.7, 0.7)] {
            assert_eq!(
                yukawa_integrand(x, y, &eq, YukawaTerm::First).unwrap(),
                yukawa_integrand(x, y, &eq, YukawaTerm::Swapped).unwrap()
            );
        }
    }

    #[test]
    fn validation() {
        let bad = |r: Result<YukawaParams<f64>, FormFactorError>| matches!(r, Err(FormFactorError::InvalidParameter(_)));
        assert!(bad(YukawaParams::new(-1.0, 0.0, 0.5, 1.0, 0.0, 1.0)));
        assert!(bad(YukawaParams::new(-1.0, -1.0, 0.5, 1.0, 0.0, 1.0)));
        assert!(bad(YukawaParams::new(-1.0, 1.0, -0.5, 1.0, 0.0, 1.0)));
        assert!(bad(YukawaParams::new(-1.0, 1.0, 0.5, 1.0, 0.0, -1.0)));
        assert!(bad(YukawaParams::new(-1.0, 1.0, 0.5, f64::INFINITY, 0.0, 1.0)));
    }

    #[test]
    fn scalar_heavier_than_pair_is_above_threshold() {
        // m_phi > m1 + m2: phi can decay, the denominator turns negative.
        let r = YukawaParams::new(-1.0, 0.4, 0.3, 1.0, 0.0, 1.0);
        assert!(matches!(r, Err(FormFactorError::DomainError(_))), "{r:?}");
        let r = YukawaParams::new(-1.0, 0.8, 0.0, 1.0, 0.0, 1.0);
        assert!(matches!(r, Err(FormFactorError::DomainError(_))), "{r:?}");
    }

    #[test]
    fn reduction_point_is_infrared_divergent() {
        let p = YukawaParams::reduction(-1.0).unwrap();
        assert!(matches!(yukawa_form_factor(&p, 1e-8), Err(FormFactorError::InfraredDivergent(_))));
    }

    #[test]
    fn massless_partner_below_threshold_is_finite() {
        // m2 = 0, m1 = 1.5: the denominator vanishes linearly at the corner.
        let p = YukawaParams::<f64>::new(-1.0, 1.5, 0.0, 1.0, 0.0, 1.0).unwrap();
        let r = yukawa_form_factor(&p, 1e-8).unwrap();
        let mc = yukawa_form_factor_mc(&p, 2_000_000, 5).unwrap();
        assert!((r.integral - mc.integral).abs() < 4.0 * mc.error_estimate, "{r:?} {mc:?}");
    }

    #[test]
    fn zero_charges_give_zero() {
        let p = YukawaParams::new(-1.0, 1.0, 0.0, 0.0, 0.0, 1.0).unwrap();
        let r = yukawa_form_factor(&p, 1e-8).unwrap();
        assert_eq!(r.integral, 0.0);
        assert_eq!(r.error_estimate, 0.0);
    }

    #[test]
    fn swapping_species_leaves_integral_unchanged() {
        let p = YukawaParams::new(-1.0, 1.2, 0.7, 1.0, -0.4, 2.0).unwrap();
        let a = yukawa_form_factor(&p, 1e-9).unwrap();
        let b = yukawa_form_factor(&p.swapped().unwrap(), 1e-9).unwrap();
        assert_eq!(a.integral, b.integral);
        assert_eq!(a.prefactor, Prefactor::Yukawa);
    }
}
