use std::f64::consts::TAU;

use proptest::prelude::*;
use scalar_ac::field::{dual_field, FieldConfig, LineCharge};
use scalar_ac::phase::{ac_phase, fringe_shift, winding_number, PolylinePath, Species};
use scalar_ac::vec2::Vec2;

const TOL: f64 = 1e-8;

/// Polygon on `r(θ) = R (1 + a sin(m θ))` that turns `k` times about `center`,
/// starting at `center + (R, 0)`. Every point within `0.3 R` of the centre
/// has winding `k`; every point beyond `2 R` has winding 0.
fn wiggly_loop(center: Vec2<f64>, radius: f64, k: i64, a: f64, m: u32, per_turn: usize) -> PolylinePath<f64> {
    let turns = k.unsigned_abs().max(1) as usize;
    let n = per_turn * turns;
    let dir = if k < 0 { -1.0 } else { 1.0 };
    let vertices = (0..n)
        .map(|j| {
            let t = dir * TAU * turns as f64 * j as f64 / n as f64;
            let r = radius * (1.0 + a * (m as f64 * t).sin());
            center + Vec2::new(r * t.cos(), r * t.sin())
        })
        .collect();
    PolylinePath::closed(vertices).unwrap()
}

/// Charges strictly inside `0.3 R` or strictly outside `2 R`, with the winding each must see.
fn charges(center: Vec2<f64>, radius: f64, k: i64, spec: &[(bool, f64, f64, f64)]) -> (FieldConfig<f64>, Vec<i64>) {
    let mut out = Vec::new();
    let mut w = Vec::new();
    for &(inside, rho, phi, lambda) in spec {
        let d = if inside { 0.3 * radius * rho } else { radius * (2.0 + 3.0 * rho) };
        out.push(LineCharge::new(center.x + d * phi.cos(), center.y + d * phi.sin(), lambda));
        w.push(if inside { k } else { 0 });
    }
    (FieldConfig::new(out).unwrap(), w)
}

fn charge_spec() -> impl Strategy<Value = Vec<(bool, f64, f64, f64)>> {
    prop::collection::vec((any::<bool>(), 0.05f64..0.95, 0.0f64..TAU, -3.0f64..3.0), 1..4)
}

fn nonzero_winding() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phase_is_quantized_by_winding(
        k in nonzero_winding(), a in 0.0f64..0.3, m in 1u32..5, spec in charge_spec(),
        cx in -5.0f64..5.0, cy in -5.0f64..5.0, radius in 0.5f64..4.0, g in -2.0f64..2.0,
    ) {
        let c = Vec2::new(cx, cy);
        let path = wiggly_loop(c, radius, k, a, m, 48);
        let (cfg, w) = charges(c, radius, k, &spec);
        let r = ac_phase(&path, &cfg, g, Species::Spinor, TOL).unwrap();
        prop_assert_eq!(&r.windings, &w);
        let expected: f64 = g * cfg.charges().iter().zip(&w).map(|(q, &n)| q.lambda * n as f64).sum::<f64>();
        prop_assert!((r.phase - expected).abs() <= 10.0 * TOL, "{} vs {}", r.phase, expected);
    }

    #[test]
    fn phase_survives_deformation(
        k in nonzero_winding(), a1 in 0.0f64..0.3, a2 in 0.0f64..0.3, m1 in 1u32..6, m2 in 1u32..6,
        n1 in 24usize..80, n2 in 24usize..80, spec in charge_spec(),
    ) {
        let c = Vec2::new(0.7, -0.2);
        let (cfg, _) = charges(c, 1.0, k, &spec);
        let p1 = ac_phase(&wiggly_loop(c, 1.0, k, a1, m1, n1), &cfg, 1.0, Species::Scalar, TOL).unwrap();
        let p2 = ac_phase(&wiggly_loop(c, 1.0, k, a2, m2, n2), &cfg, 1.0, Species::Scalar, TOL).unwrap();
        prop_assert!((p1.phase - p2.phase).abs() <= 10.0 * TOL);
    }

    #[test]
    fn species_have_opposite_phases(k in nonzero_winding(), spec in charge_spec(), g in -2.0f64..2.0) {
        let c = Vec2::zero();
        let path = wiggly_loop(c, 1.0, k, 0.1, 3, 40);
        let (cfg, _) = charges(c, 1.0, k, &spec);
        let sp = ac_phase(&path, &cfg, g, Species::Spinor, TOL).unwrap();
        let sc = ac_phase(&path, &cfg, g, Species::Scalar, TOL).unwrap();
        prop_assert_eq!(sp.phase, -sc.phase);
    }

    #[test]
    fn reversal_negates(k in nonzero_winding(), a in 0.0f64..0.3, spec in charge_spec()) {
        let c = Vec2::new(-1.0, 2.0);
        let path = wiggly_loop(c, 1.5, k, a, 2, 40);
        let (cfg, w) = charges(c, 1.5, k, &spec);
        let fwd = ac_phase(&path, &cfg, 1.0, Species::Spinor, TOL).unwrap();
        let back = ac_phase(&path.reversed(), &cfg, 1.0, Species::Spinor, TOL).unwrap();
        prop_assert!((fwd.phase + back.phase).abs() <= 10.0 * TOL);
        let neg: Vec<i64> = w.iter().map(|n| -n).collect();
        prop_assert_eq!(back.windings, neg);
    }

    #[test]
    fn concatenated_loops_add(k1 in nonzero_winding(), k2 in nonzero_winding(), spec in charge_spec()) {
        let c = Vec2::new(0.0, 0.0);
        let a = wiggly_loop(c, 1.0, k1, 0.2, 3, 32);
        let b = wiggly_loop(c, 1.0, k2, 0.1, 2, 36);
        let (cfg, _) = charges(c, 1.0, 1, &spec);
        // Both start at (1, 0): run a, return to the shared start, then run b.
        let mut v = a.vertices().to_vec();
        v.push(a.start());
        v.extend_from_slice(&b.vertices()[1..]);
        let joined = PolylinePath::closed(v).unwrap();
        let pa = ac_phase(&a, &cfg, 1.0, Species::Spinor, TOL).unwrap();
        let pb = ac_phase(&b, &cfg, 1.0, Species::Spinor, TOL).unwrap();
        let pj = ac_phase(&joined, &cfg, 1.0, Species::Spinor, TOL).unwrap();
        prop_assert!((pj.phase - pa.phase - pb.phase).abs() <= 20.0 * TOL);
        for ((wj, wa), wb) in pj.windings.iter().zip(&pa.windings).zip(&pb.windings) {
            prop_assert_eq!(*wj, wa + wb);
        }
    }

    #[test]
    fn dual_is_a_quarter_turn(ex in -1e3f64..1e3, ey in -1e3f64..1e3) {
        let e = Vec2::new(ex, ey);
        let s = dual_field(e);
        prop_assert_eq!(s.norm_squared(), e.norm_squared());
        prop_assert_eq!(s.dot(e), 0.0);
        prop_assert_eq!(dual_field(s), -e);
    }

    #[test]
    fn field_superposes(
        a in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0, -2.0f64..2.0), 1..5),
        b in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0, -2.0f64..2.0), 1..5),
        px in 4.0f64..6.0, py in -1.0f64..1.0,
    ) {
        let build = |s: &[(f64, f64, f64)]| s.iter().map(|&(x, y, l)| LineCharge::new(x, y, l)).collect::<Vec<_>>();
        let (ca, cb) = (build(&a), build(&b));
        let mut all = ca.clone();
        all.extend_from_slice(&cb);
        prop_assume!(FieldConfig::new(all).is_ok());
        let (fa, fb) = (FieldConfig::new(ca).unwrap(), FieldConfig::new(cb).unwrap());
        let p = Vec2::new(px, py);
        let sum = fa.efield(p).unwrap() + fb.efield(p).unwrap();
        let joint = fa.merged(&fb).unwrap().efield(p).unwrap();
        let scale = 1e-13 * (1.0 + sum.norm());
        prop_assert!((sum.x - joint.x).abs() <= scale && (sum.y - joint.y).abs() <= scale);
    }
}

#[test]
fn arms_around_a_charge_give_its_phase() {
    let cfg = FieldConfig::single(0.0, 0.0, 1.25);
    let upper: Vec<Vec2<f64>> = (0..=32).map(|j| {
        let t = std::f64::consts::PI * (1.0 - j as f64 / 32.0);
        // Pin the endpoints so both arms share them exactly.
        match j {
            0 => Vec2::new(-1.0, 0.0),
            32 => Vec2::new(1.0, 0.0),
            _ => Vec2::new(t.cos(), t.sin()),
        }
    }).collect();
    let lower: Vec<Vec2<f64>> = upper.iter().map(|p| Vec2::new(p.x, -p.y)).collect();
    let a = PolylinePath::open(upper).unwrap();
    let b = PolylinePath::open(lower).unwrap();
    let f = fringe_shift(&a, &b, &cfg, 2.0, Species::Spinor, TOL).unwrap();
    // a - b runs clockwise around the charge.
    assert!((f.delta_phase + 2.0 * 1.25).abs() <= 10.0 * TOL, "{}", f.delta_phase);
    let loop_ab = a.loop_with_reverse_of(&b).unwrap();
    assert_eq!(winding_number(&loop_ab, Vec2::zero()).unwrap(), -1);
    let closed = ac_phase(&loop_ab, &cfg, 2.0, Species::Spinor, TOL).unwrap();
    assert!((closed.phase - f.delta_phase).abs() <= 10.0 * TOL);
    assert!((f.contrast - (1.25f64).cos().powi(2)).abs() < 1e-7);
}
