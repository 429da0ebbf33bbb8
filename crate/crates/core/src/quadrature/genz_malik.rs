//! Globally adaptive Genz-Malik cubature on the unit square.
//!
//! Each rectangle is integrated with the 17-point degree-7 rule and the
//! embedded degree-5 rule sharing its nodes; `|I7 - I5|` is the local
//! error. The worst rectangle is halved along the axis with the largest
//! fourth divided difference until the summed error drops below `tol`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{check_tol, AdaptiveOptions, QuadratureError, QuadratureResult};
use crate::real::Real;

const POINTS_PER_RULE: usize = 17;

// Generators and weights for n = 2, normalized so the weights sum to 1.
const LAMBDA2: f64 = 0.358_568_582_800_318_1; // sqrt(9/70)
const LAMBDA4: f64 = 0.948_683_298_050_513_8; // sqrt(9/10), also lambda3
const LAMBDA5: f64 = 0.688_247_201_611_685_3; // sqrt(9/19)

const W7: [f64; 5] = [
    -3816.0 / 19683.0,
    980.0 / 6561.0,
    1020.0 / 19683.0,
    200.0 / 19683.0,
    6859.0 / 19683.0 / 4.0,
];
const W5: [f64; 4] = [-971.0 / 729.0, 245.0 / 486.0, 65.0 / 1458.0, 25.0 / 729.0];

struct Rule<T> {
    l2: T,
    l4: T,
    l5: T,
    w7: [T; 5],
    w5: [T; 4],
    ratio: T,
}

impl<T: Real> Rule<T> {
    fn new() -> Self {
        Self {
            l2: T::lit(LAMBDA2),
            l4: T::lit(LAMBDA4),
            l5: T::lit(LAMBDA5),
            w7: W7.map(T::lit),
            w5: W5.map(T::lit),
            ratio: T::lit(LAMBDA2 * LAMBDA2 / (LAMBDA4 * LAMBDA4)),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Region<T> {
    center: [T; 2],
    half: [T; 2],
    value: T,
    error: T,
    split_axis: usize,
}

impl<T: Real> PartialEq for Region<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Real> Eq for Region<T> {}

impl<T: Real> PartialOrd for Region<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Real> Ord for Region<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        // Errors are finite once the integrand passed the finiteness check.
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn eval<T, G>(g: &mut G, rule: &Rule<T>, center: [T; 2], half: [T; 2]) -> Result<Region<T>, QuadratureError>
where
    T: Real,
    G: FnMut(T, T) -> T,
{
    let mut call = |u: T, v: T| -> Result<T, QuadratureError> {
        let r = g(u, v);
        if r.is_finite() {
            Ok(r)
        } else {
            Err(QuadratureError::NonFiniteIntegrand {
                x: u.to_f64().unwrap_or(f64::NAN),
                y: v.to_f64().unwrap_or(f64::NAN),
            })
        }
    };
    let two = T::lit(2.0);
    let [cu, cv] = center;
    let [hu, hv] = half;

    let f0 = call(cu, cv)?;
    let mut sum2 = T::zero();
    let mut sum3 = T::zero();
    let mut diff = [T::zero(); 2];
    for (axis, d) in diff.iter_mut().enumerate() {
        let step = |l: T| if axis == 0 { (hu * l, T::zero()) } else { (T::zero(), hv * l) };
        let (du2, dv2) = step(rule.l2);
        let (du3, dv3) = step(rule.l4);
        let a = call(cu - du2, cv - dv2)? + call(cu + du2, cv + dv2)?;
        let b = call(cu - du3, cv - dv3)? + call(cu + du3, cv + dv3)?;
        sum2 = sum2 + a;
        sum3 = sum3 + b;
        *d = (a - two * f0 - rule.ratio * (b - two * f0)).abs();
    }
    let mut sum4 = T::zero();
    let mut sum5 = T::zero();
    for (su, sv) in [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)] {
        let (su, sv) = (T::lit(su), T::lit(sv));
        sum4 = sum4 + call(cu + su * rule.l4 * hu, cv + sv * rule.l4 * hv)?;
        sum5 = sum5 + call(cu + su * rule.l5 * hu, cv + sv * rule.l5 * hv)?;
    }

    let vol = T::lit(4.0) * hu * hv;
    let w7 = &rule.w7;
    let w5 = &rule.w5;
    let i7 = vol * (w7[0] * f0 + w7[1] * sum2 + w7[2] * sum3 + w7[3] * sum4 + w7[4] * sum5);
    let i5 = vol * (w5[0] * f0 + w5[1] * sum2 + w5[2] * sum3 + w5[3] * sum4);

    // Near-equal differences: split the longer side.
    let tie = (diff[0] - diff[1]).abs() <= T::lit(1e-10) * (diff[0] + diff[1]);
    let split_axis = if tie {
        usize::from(hv > hu)
    } else {
        usize::from(diff[1] > diff[0])
    };

    Ok(Region {
        center,
        half,
        value: i7,
        error: (i7 - i5).abs(),
        split_axis,
    })
}

/// Neumaier-compensated sum.
fn compensated_sum<T: Real>(values: impl Iterator<Item = T>) -> T {
    let mut sum = T::zero();
    let mut comp = T::zero();
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp = comp + ((sum - t) + v);
        } else {
            comp = comp + ((v - t) + sum);
        }
        sum = t;
    }
    sum + comp
}

/// Adaptive integration of `g(u, v)` over `[0, 1]^2` to absolute tolerance `tol`.
///
/// Nodes are strictly interior to every rectangle, so `g` is never
/// evaluated on the boundary of the square.
pub fn integrate_unit_square<T, G>(
    mut g: G,
    tol: T,
    opts: &AdaptiveOptions,
) -> Result<QuadratureResult<T>, QuadratureError>
where
    T: Real,
    G: FnMut(T, T) -> T,
{
    check_tol(tol)?;
    let rule = Rule::new();
    let cells = 1usize << opts.initial_depth.min(10);
    let h = T::lit(0.5) / T::from_count(cells);
    let mut heap = BinaryHeap::with_capacity(cells * cells * 4);
    let mut evaluations = 0usize;

    for i in 0..cells {
        for j in 0..cells {
            let cu = h * T::from_count(2 * i + 1);
            let cv = h * T::from_count(2 * j + 1);
            heap.push(eval(&mut g, &rule, [cu, cv], [h, h])?);
            evaluations += POINTS_PER_RULE;
        }
    }

    let min_half = T::epsilon() * T::lit(64.0);
    let mut total_error = compensated_sum(heap.iter().map(|r| r.error));
    loop {
        if total_error <= tol {
            // The running sum drifts; confirm against a fresh sum.
            total_error = compensated_sum(heap.iter().map(|r| r.error));
            if total_error <= tol {
                break;
            }
        }
        let worst = heap.peek().copied().expect("heap is never empty");
        let too_small = worst.half[worst.split_axis] < min_half;
        if too_small || evaluations + 2 * POINTS_PER_RULE > opts.max_evaluations {
            let value = compensated_sum(heap.iter().map(|r| r.value));
            let error = compensated_sum(heap.iter().map(|r| r.error));
            return Err(QuadratureError::NonConvergence {
                value: value.to_f64().unwrap_or(f64::NAN),
                error_estimate: error.to_f64().unwrap_or(f64::NAN),
                evaluations,
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        heap.pop();

        let axis = worst.split_axis;
        let mut half = worst.half;
        half[axis] = half[axis] * T::lit(0.5);
        let mut lo = worst.center;
        let mut hi = worst.center;
        lo[axis] = lo[axis] - half[axis];
        hi[axis] = hi[axis] + half[axis];
        let a = eval(&mut g, &rule, lo, half)?;
        let b = eval(&mut g, &rule, hi, half)?;
        evaluations += 2 * POINTS_PER_RULE;
        total_error = total_error - worst.error + a.error + b.error;
        heap.push(a);
        heap.push(b);
    }

    let mut regions = heap.into_vec();
    // Fixed summation order independent of heap layout.
    regions.sort_by(|a, b| {
        a.center[0]
            .partial_cmp(&b.center[0])
            .unwrap_or(Ordering::Equal)
            .then(a.center[1].partial_cmp(&b.center[1]).unwrap_or(Ordering::Equal))
    });
    Ok(QuadratureResult {
        value: compensated_sum(regions.iter().map(|r| r.value)),
        error_estimate: compensated_sum(regions.iter().map(|r| r.error)),
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        let s7 = W7[0] + 4.0 * (W7[1] + W7[2] + W7[3] + W7[4]);
        let s5 = W5[0] + 4.0 * (W5[1] + W5[2] + W5[3]);
        assert!((s7 - 1.0).abs() < 1e-15);
        assert!((s5 - 1.0).abs() < 1e-15);
        assert!((LAMBDA2 * LAMBDA2 - 9.0 / 70.0).abs() < 1e-15);
        assert!((LAMBDA4 * LAMBDA4 - 9.0 / 10.0).abs() < 1e-15);
        assert!((LAMBDA5 * LAMBDA5 - 9.0 / 19.0).abs() < 1e-15);
    }

    #[test]
    fn degree_seven_exact_on_one_region() {
        let rule = Rule::<f64>::new();
        for a in 0..=7 {
            for b in 0..=(7 - a) {
                let mut g = |u: f64, v: f64| u.powi(a) * v.powi(b);
                let r = eval(&mut g, &rule, [0.5, 0.5], [0.5, 0.5]).unwrap();
                let exact = 1.0 / ((a + 1) * (b + 1)) as f64;
                assert!((r.value - exact).abs() < 1e-14, "u^{a} v^{b}");
                if a + b <= 5 {
                    assert!(r.error < 1e-14, "degree-5 rule exact on u^{a} v^{b}");
                }
            }
        }
    }

    #[test]
    fn splits_along_the_rough_axis() {
        let rule = Rule::<f64>::new();
        let mut g = |u: f64, _v: f64| (20.0 * u).sin();
        let r = eval(&mut g, &rule, [0.5, 0.5], [0.5, 0.5]).unwrap();
        assert_eq!(r.split_axis, 0);
        let mut g = |_u: f64, v: f64| (20.0 * v).sin();
        let r = eval(&mut g, &rule, [0.5, 0.5], [0.5, 0.5]).unwrap();
        assert_eq!(r.split_axis, 1);
    }
}
