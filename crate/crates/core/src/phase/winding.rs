use crate::real::Real;
use crate::vec2::Vec2;

use super::{PhaseError, PolylinePath};

/// Points closer than this fraction of the path diameter count as on the path.
pub const ON_PATH_FRACTION: f64 = 1e-12;

/// Signed winding number of a closed path about `point`, counter-clockwise positive.
///
/// Sums the signed angle each segment subtends at `point` and rounds
/// the total turn to the nearest integer.
pub fn winding_number<T: Real>(path: &PolylinePath<T>, point: Vec2<T>) -> Result<i64, PhaseError> {
    if !path.is_closed() {
        return Err(PhaseError::ExpectedClosedPath);
    }
    let eps = T::lit(ON_PATH_FRACTION) * path.diameter();
    let mut turn = T::zero();
    for (a, b) in path.segments() {
        if point.distance_to_segment(a, b) <= eps {
            return Err(PhaseError::PointOnPath);
        }
        let (ra, rb) = (a - point, b - point);
        turn = turn + ra.cross(rb).atan2(ra.dot(rb));
    }
    let w = (turn / T::TAU()).round();
    Ok(w.to_i64().expect("winding number fits in i64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(cx: f64, cy: f64, ccw: bool) -> PolylinePath<f64> {
        let mut v = vec![
            Vec2::new(cx - 0.5, cy - 0.5),
            Vec2::new(cx + 0.5, cy - 0.5),
            Vec2::new(cx + 0.5, cy + 0.5),
            Vec2::new(cx - 0.5, cy + 0.5),
        ];
        if !ccw {
            v[1..].reverse();
        }
        PolylinePath::closed(v).unwrap()
    }

    #[test]
    fn unit_square() {
        let o = Vec2::new(0.0, 0.0);
        assert_eq!(winding_number(&square(0.0, 0.0, true), o).unwrap(), 1);
        assert_eq!(winding_number(&square(0.0, 0.0, false), o).unwrap(), -1);
        assert_eq!(winding_number(&square(10.0, 10.0, true), o).unwrap(), 0);
    }

    #[test]
    fn double_loop() {
        let mut v = Vec::new();
        for k in 0..64 {
            let a = std::f64::consts::TAU * 2.0 * k as f64 / 64.0;
            v.push(Vec2::new(a.cos(), a.sin()) * (1.0 + 0.01 * k as f64));
        }
        let p = PolylinePath::closed(v).unwrap();
        assert_eq!(winding_number(&p, Vec2::new(0.1, 0.0)).unwrap(), 2);
        assert_eq!(winding_number(&p.reversed(), Vec2::new(0.1, 0.0)).unwrap(), -2);
    }

    #[test]
    fn point_on_path() {
        let p = square(0.0, 0.0, true);
        assert!(matches!(winding_number(&p, Vec2::new(0.5, 0.1)), Err(PhaseError::PointOnPath)));
        assert!(matches!(winding_number(&p, Vec2::new(0.5, 0.5)), Err(PhaseError::PointOnPath)));
    }
}
