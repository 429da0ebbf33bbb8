//! `∮ S · dr` along polylines by adaptive Gauss-Kronrod quadrature per segment.

use crate::field::{dual_field, FieldConfig};
use crate::quadrature::QuadratureResult;
use crate::real::Real;
use crate::vec2::Vec2;

use super::{PhaseError, PolylinePath};

/// Segments closer than this fraction of their length to a charge are split first.
pub const NEAR_CHARGE_RATIO: f64 = 0.1;
const MAX_DEPTH: usize = 60;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Gauss-Kronrod 7/15 estimate of `∫_a^b S · dr` on a straight piece.
fn gk15<T: Real>(config: &FieldConfig<T>, a: Vec2<T>, b: Vec2<T>) -> (T, T) {
    let half = T::lit(0.5);
    let mid = a.lerp(b, half);
    let half_d = (b - a) * half;
    let f = |x: T| dual_field(config.efield_unchecked(mid + half_d * x)).dot(half_d);

    let fc = f(T::zero());
    let mut kronrod = T::lit(WGK[7]) * fc;
    let mut gauss = T::lit(WG[3]) * fc;
    for (j, &x) in XGK.iter().enumerate().take(7) {
        let x = T::lit(x);
        let pair = f(-x) + f(x);
        kronrod = kronrod + T::lit(WGK[j]) * pair;
        if j % 2 == 1 {
            gauss = gauss + T::lit(WG[j / 2]) * pair;
        }
    }
    (kronrod, (kronrod - gauss).abs())
}

fn adaptive<T: Real>(
    config: &FieldConfig<T>,
    a: Vec2<T>,
    b: Vec2<T>,
    tol: T,
    depth: usize,
    acc: &mut QuadratureResult<T>,
) -> Result<(), PhaseError> {
    let (value, err) = gk15(config, a, b);
    acc.evaluations += 15;
    if !value.is_finite() {
        return Err(PhaseError::NonConvergence);
    }
    if err <= tol {
        acc.value = acc.value + value;
        acc.error_estimate = acc.error_estimate + err;
        return Ok(());
    }
    if depth >= MAX_DEPTH {
        return Err(PhaseError::NonConvergence);
    }
    let m = a.lerp(b, T::lit(0.5));
    let half_tol = tol * T::lit(0.5);
    adaptive(config, a, m, half_tol, depth + 1, acc)?;
    adaptive(config, m, b, half_tol, depth + 1, acc)
}

/// Splits `[a, b]` until no charge lies within `NEAR_CHARGE_RATIO` of a piece's length.
fn presplit<T: Real>(config: &FieldConfig<T>, a: Vec2<T>, b: Vec2<T>, depth: usize, out: &mut Vec<(Vec2<T>, Vec2<T>)>) {
    let len = (b - a).norm();
    let near = config
        .charges()
        .iter()
        .any(|c| c.position.distance_to_segment(a, b) < T::lit(NEAR_CHARGE_RATIO) * len);
    if near && depth < MAX_DEPTH {
        let m = a.lerp(b, T::lit(0.5));
        presplit(config, a, m, depth + 1, out);
        presplit(config, m, b, depth + 1, out);
    } else {
        out.push((a, b));
    }
}

/// `∫ S · dr` along `path` (open or closed), to absolute tolerance `tol`.
///
/// Each of the path's segments gets `tol / segments`. For a single charge
/// enclosed once counter-clockwise the exact value is `-lambda`.
pub fn line_integral_dual<T: Real>(
    path: &PolylinePath<T>,
    config: &FieldConfig<T>,
    tol: T,
) -> Result<QuadratureResult<T>, PhaseError> {
    if !(tol > T::zero() && tol.is_finite()) {
        return Err(PhaseError::InvalidTolerance);
    }
    for (a, b) in path.segments() {
        let len = (b - a).norm();
        for (index, c) in config.charges().iter().enumerate() {
            let d = c.position.distance_to_segment(a, b);
            let scale = len + (c.position - a).norm();
            if d <= T::lit(1e3) * T::epsilon() * scale {
                return Err(PhaseError::SingularPath {
                    charge: index,
                    distance: d.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
    }

    let seg_tol = tol / T::from_count(path.segment_count());
    let mut acc = QuadratureResult {
        value: T::zero(),
        error_estimate: T::zero(),
        evaluations: 0,
    };
    let mut pieces = Vec::new();
    for (a, b) in path.segments() {
        if a == b {
            continue;
        }
        pieces.clear();
        presplit(config, a, b, 0, &mut pieces);
        let piece_tol = seg_tol / T::from_count(pieces.len());
        for &(p, q) in &pieces {
            adaptive(config, p, q, piece_tol, 0, &mut acc)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_weights_integrate_constants() {
        let s: f64 = WGK[7] + 2.0 * WGK[..7].iter().sum::<f64>();
        let g: f64 = WG[3] + 2.0 * WG[..3].iter().sum::<f64>();
        assert!((s - 2.0).abs() < 1e-14);
        assert!((g - 2.0).abs() < 1e-14);
    }

    #[test]
    fn straight_segment_matches_angle_subtended() {
        // For one charge, ∫ S · dr = -lambda / (2π) × (angle swept).
        let cfg = FieldConfig::<f64>::single(0.0, 0.0, 2.0);
        let a = Vec2::new(1.0, -3.0);
        let b = Vec2::new(1.0, 5.0);
        let path = PolylinePath::open(vec![a, b]).unwrap();
        let r = line_integral_dual(&path, &cfg, 1e-12).unwrap();
        let swept = a.cross(b).atan2(a.dot(b));
        let exact = -2.0 * swept / std::f64::consts::TAU;
        assert!((r.value - exact).abs() < 1e-11, "{} vs {exact}", r.value);
    }

    #[test]
    fn grazing_segment_converges() {
        let cfg = FieldConfig::<f64>::single(0.0, 1e-7, 1.0);
        let a = Vec2::new(-1.0, 0.0);
        let b = Vec2::new(1.0, 0.0);
        let path = PolylinePath::open(vec![a, b]).unwrap();
        let r = line_integral_dual(&path, &cfg, 1e-10).unwrap();
        let (ra, rb) = (a - cfg.charges()[0].position, b - cfg.charges()[0].position);
        let exact = -ra.cross(rb).atan2(ra.dot(rb)) / std::f64::consts::TAU;
        assert!((r.value - exact).abs() < 1e-9, "{} vs {exact}", r.value);
    }

    #[test]
    fn through_a_charge_is_singular() {
        let cfg = FieldConfig::single(0.5, 0.0, 1.0);
        let path = PolylinePath::open(vec![Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)]).unwrap();
        assert!(matches!(
            line_integral_dual(&path, &cfg, 1e-8),
            Err(PhaseError::SingularPath { charge: 0, .. })
        ));
    }
}
