//! Denominator positivity checks run before any integration.

use crate::real::Real;

use super::FormFactorError;

/// Grid resolution per axis of the (u, v) square.
const GRID: usize = 64;
const REFINE_ROUNDS: usize = 3;
const REFINE_POINTS: usize = 16;

/// Smallest admissible value of the normalized denominator.
pub const DENOMINATOR_FLOOR: f64 = 1e-9;

/// Behavior of a denominator `D(x, y)` at the `(0, 0)` corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    /// `D(0, 0) > 0`.
    Regular,
    /// `D(0, 0) = 0` with positive slope along `y`; the integrand is integrable.
    LinearZero,
    /// `D ~ y^2` at the corner: logarithmic infrared divergence.
    QuadraticZero,
}

impl Corner {
    /// Classifies from the corner value `D(0, 0)` and `dD/dy (0, 0)` on the `x = 0` edge.
    pub fn classify<T: Real>(value: T, slope: T) -> Result<Self, FormFactorError> {
        if value > T::zero() {
            Ok(Corner::Regular)
        } else if value < T::zero() {
            Err(FormFactorError::DomainError(format!(
                "denominator is negative at the (0,0) corner ({value})"
            )))
        } else if slope > T::zero() {
            Ok(Corner::LinearZero)
        } else if slope == T::zero() {
            Ok(Corner::QuadraticZero)
        } else {
            Err(FormFactorError::DomainError(format!(
                "denominator turns negative next to the (0,0) corner (slope {slope})"
            )))
        }
    }

    fn power(self) -> i32 {
        match self {
            Corner::Regular => 0,
            Corner::LinearZero => 1,
            Corner::QuadraticZero => 2,
        }
    }
}

/// Minimum over the triangle of `D(u v, v) / v^k`, where `k` removes the
/// known zero at the corner. Sampled on a 65x65 grid in `(u, v)` and then
/// refined around the smallest node.
pub fn min_normalized<T, D>(den: D, corner: Corner) -> T
where
    T: Real,
    D: Fn(T, T) -> T,
{
    let k = corner.power();
    // With a corner zero the v = 0 row is replaced by its limit from above.
    let v_floor = if k == 0 { T::zero() } else { T::lit(1e-6) };
    let n = |u: T, v: T| {
        let v = v.max(v_floor);
        den(u * v, v) / v.powi(k)
    };

    let step = T::one() / T::from_count(GRID);
    let mut best = (T::infinity(), T::zero(), T::zero());
    for i in 0..=GRID {
        for j in 0..=GRID {
            let (u, v) = (step * T::from_count(i), step * T::from_count(j));
            let val = n(u, v);
            if val < best.0 || val.is_nan() {
                best = (val, u, v);
            }
        }
    }
    let mut radius = step;
    for _ in 0..REFINE_ROUNDS {
        let (_, cu, cv) = best;
        let sub = radius * T::lit(2.0) / T::from_count(REFINE_POINTS);
        for i in 0..=REFINE_POINTS {
            for j in 0..=REFINE_POINTS {
                let u = (cu - radius + sub * T::from_count(i)).max(T::zero()).min(T::one());
                let v = (cv - radius + sub * T::from_count(j)).max(T::zero()).min(T::one());
                let val = n(u, v);
                if val < best.0 {
                    best = (val, u, v);
                }
            }
        }
        radius = sub;
    }
    best.0
}

/// Runs the guard and maps a non-positive minimum to `DomainError`.
pub fn check<T, D>(den: D, corner: Corner, what: &str) -> Result<(), FormFactorError>
where
    T: Real,
    D: Fn(T, T) -> T,
{
    let min = min_normalized(den, corner);
    if min.is_nan() || min <= T::lit(DENOMINATOR_FLOOR) {
        return Err(FormFactorError::DomainError(format!(
            "{what}: denominator reaches {min} on the integration domain (above threshold)"
        )));
    }
    Ok(())
}
