//! Parameter sweeps: the infrared scan and the Yukawa-to-supersymmetric reduction check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::real::Real;

use super::{
    susy_form_factor, yukawa_form_factor, FormFactorError, SusyParams, YukawaParams, YukawaTerm,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IrScanRow<T> {
    pub q_hat2: T,
    pub integral: T,
    pub error_estimate: T,
    pub evaluations: usize,
}

/// Least-squares line `integral = slope * ln(1/|q_hat2|) + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogFit<T> {
    pub slope: T,
    pub intercept: T,
    pub r_squared: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrScan<T> {
    pub mcs_hat2: T,
    pub rows: Vec<IrScanRow<T>>,
    /// `None` when fewer than two points or a flat response make the fit undefined.
    pub fit: Option<LogFit<T>>,
}

impl<T: Real> IrScan<T> {
    /// Row closest to `q_hat2 = 0`.
    pub fn limit(&self) -> Option<&IrScanRow<T>> {
        self.rows
            .iter()
            .min_by(|a, b| a.q_hat2.abs().partial_cmp(&b.q_hat2.abs()).unwrap_or(std::cmp::Ordering::Equal))
    }
}

fn fit_line<T: Real>(xs: &[T], ys: &[T]) -> Option<LogFit<T>> {
    if xs.len() < 2 {
        return None;
    }
    let n = T::from_count(xs.len());
    let mx = xs.iter().copied().sum::<T>() / n;
    let my = ys.iter().copied().sum::<T>() / n;
    let sxx: T = xs.iter().map(|&x| (x - mx) * (x - mx)).sum();
    let sxy: T = xs.iter().zip(ys).map(|(&x, &y)| (x - mx) * (y - my)).sum();
    let syy: T = ys.iter().map(|&y| (y - my) * (y - my)).sum();
    if sxx == T::zero() || syy == T::zero() {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: T = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    Some(LogFit {
        slope,
        intercept,
        r_squared: T::one() - ss_res / syy,
    })
}

/// Sweeps the supersymmetric integral over spacelike `q_hat2` at fixed
/// Chern-Simons mass and fits it against `ln(1/|q_hat2|)`.
///
/// `q_hat2_list` must be strictly increasing and negative.
pub fn ir_scan<T: Real>(q_hat2_list: &[T], mcs_hat2: T, tol: T) -> Result<IrScan<T>, FormFactorError> {
    if q_hat2_list.is_empty() {
        return Err(FormFactorError::InvalidParameter("empty q_hat2 list".into()));
    }
    if let Some(q) = q_hat2_list.iter().find(|&&q| q.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Less)) {
        return Err(FormFactorError::InvalidParameter(format!(
            "ir scan needs spacelike q_hat2 < 0, got {q}"
        )));
    }
    if q_hat2_list.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
        return Err(FormFactorError::InvalidParameter("q_hat2 list must be strictly increasing".into()));
    }
    let rows = q_hat2_list
        .par_iter()
        .map(|&q| {
            let r = susy_form_factor(&SusyParams::new(q, mcs_hat2)?, tol)?;
            Ok(IrScanRow {
                q_hat2: q,
                integral: r.integral,
                error_estimate: r.error_estimate,
                evaluations: r.evaluations,
            })
        })
        .collect::<Result<Vec<_>, FormFactorError>>()?;
    let xs: Vec<T> = rows.iter().map(|r| -(r.q_hat2.abs().ln())).collect();
    let ys: Vec<T> = rows.iter().map(|r| r.integral).collect();
    Ok(IrScan {
        mcs_hat2,
        fit: fit_line(&xs, &ys),
        rows,
    })
}

/// Maximum `|I_yukawa - I_susy|` over the grid at the reduction point.
pub fn reduction_check<T: Real>(q_hat2_grid: &[T], tol: T) -> Result<T, FormFactorError> {
    reduction_check_with_mass(q_hat2_grid, tol, T::one())
}

/// As [`reduction_check`] with `m1_hat` free; `m1_hat != 1` leaves the limit.
pub fn reduction_check_with_mass<T: Real>(q_hat2_grid: &[T], tol: T, m1_hat: T) -> Result<T, FormFactorError> {
    if q_hat2_grid.is_empty() {
        return Err(FormFactorError::InvalidParameter("empty q_hat2 grid".into()));
    }
    let mut worst = T::zero();
    for &q in q_hat2_grid {
        if q.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Less) {
            return Err(FormFactorError::InvalidParameter(format!(
                "reduction grid needs q_hat2 < 0, got {q}"
            )));
        }
        let susy = susy_form_factor(&SusyParams::new(q, T::zero())?, tol)?;
        let yuk = yukawa_form_factor(
            &YukawaParams::new(q, m1_hat, T::zero(), T::one(), T::zero(), T::one())?,
            tol,
        )?;
        worst = worst.max((yuk.integral - susy.integral).abs());
    }
    Ok(worst)
}

/// Largest pointwise `|yukawa_first - susy|` over `samples` seeded points of
/// the open triangle, with `m2 = 0`, `e2 = 0` and `mcs_hat2 = 0`.
pub fn reduction_pointwise_deviation<T: Real>(
    q_hat2: T,
    m1_hat: T,
    samples: usize,
    seed: u64,
) -> Result<T, FormFactorError> {
    let susy = SusyParams::new(q_hat2, T::zero())?;
    let yuk = YukawaParams::new(q_hat2, m1_hat, T::zero(), T::one(), T::zero(), T::one())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = T::zero();
    let mut drawn = 0;
    while drawn < samples {
        let a: f64 = rng.random();
        let b: f64 = rng.random();
        let (x, y) = (T::lit(a.min(b)), T::lit(a.max(b)));
        if y == T::zero() {
            continue;
        }
        drawn += 1;
        let d = (yuk.integrand(x, y, YukawaTerm::First) - susy.integrand(x, y)).abs();
        worst = worst.max(d);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 0.5 * x - 2.0).collect();
        let f = fit_line(&xs, &ys).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-14);
        assert!((f.intercept + 2.0).abs() < 1e-14);
        assert!((f.r_squared - 1.0).abs() < 1e-14);
    }

    #[test]
    fn single_point_fit_is_undefined() {
        let scan = ir_scan(&[-0.5], 1.0, 1e-8).unwrap();
        assert_eq!(scan.rows.len(), 1);
        assert!(scan.fit.is_none());
    }

    #[test]
    fn scan_validation() {
        assert!(matches!(ir_scan::<f64>(&[], 1.0, 1e-8), Err(FormFactorError::InvalidParameter(_))));
        assert!(matches!(ir_scan(&[-1.0, 0.5], 1.0, 1e-8), Err(FormFactorError::InvalidParameter(_))));
        assert!(matches!(ir_scan(&[-0.1, -1.0], 1.0, 1e-8), Err(FormFactorError::InvalidParameter(_))));
    }

    #[test]
    fn scan_without_chern_simons_mass_is_divergent() {
        let err = ir_scan(&[-1e-2, -1e-3], 0.0, 1e-8).unwrap_err();
        assert!(matches!(err, FormFactorError::InfraredDivergent(_)));
    }

    #[test]
    fn pointwise_reduction_is_exact() {
        let d = reduction_pointwise_deviation(-1.0, 1.0, 100, 9).unwrap();
        assert!(d <= 1e-12, "{d}");
        let d = reduction_pointwise_deviation(-1.0, 1.01, 100, 9).unwrap();
        assert!(d > 1e-3, "{d}");
    }

    #[test]
    fn integral_reduction_inherits_divergence() {
        let err = reduction_check(&[-0.5, -1.0], 1e-8).unwrap_err();
        assert!(matches!(err, FormFactorError::InfraredDivergent(_)));
    }
}
