//! Oracles that do not go through the crate's integrators.
#![allow(dead_code)]

/// q_hat2 = 0 supersymmetric integral in closed form:
/// `ln(1 + 2/M) - (2/M^2)(sqrt(1 + M^2) - 1)` with `M = sqrt(mcs_hat2)`.
pub fn susy_q0_closed_form(mcs_hat2: f64) -> f64 {
    let m = mcs_hat2.sqrt();
    (1.0 + 2.0 / m).ln() - 2.0 / mcs_hat2 * ((1.0 + mcs_hat2).sqrt() - 1.0)
}

/// The same value through the inner integral done by hand and the outer one
/// by adaptive Simpson: `∫_0^1 [(x^2 + (1-x)M^2)^{-1/2} - (1 + (1-x)M^2)^{-1/2}] dx`.
pub fn susy_q0_reduced_1d(mcs_hat2: f64, tol: f64) -> f64 {
    simpson(
        &|x: f64| (x * x + (1.0 - x) * mcs_hat2).powf(-0.5) - (1.0 + (1.0 - x) * mcs_hat2).powf(-0.5),
        0.0,
        1.0,
        tol,
    )
}

pub fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (fa, fb) = (f(a), f(b));
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Tensor-product Gauss-Legendre over the triangle through `x = u y`,
/// for smooth integrands only.
pub fn gauss_legendre_triangle(f: &dyn Fn(f64, f64) -> f64, panels: usize) -> f64 {
    // 5-point rule on [0, 1].
    const X: [f64; 5] = [
        0.046_910_077_030_668,
        0.230_765_344_947_158,
        0.5,
        0.769_234_655_052_842,
        0.953_089_922_969_332,
    ];
    const W: [f64; 5] = [
        0.118_463_442_528_095,
        0.239_314_335_249_683,
        0.284_444_444_444_444,
        0.239_314_335_249_683,
        0.118_463_442_528_095,
    ];
    let h = 1.0 / panels as f64;
    let mut s = 0.0;
    for pu in 0..panels {
        for pv in 0..panels {
            for (xu, wu) in X.iter().zip(W) {
                for (xv, wv) in X.iter().zip(W) {
                    let u = (pu as f64 + xu) * h;
                    let v = (pv as f64 + xv) * h;
                    s += wu * wv * h * h * f(u * v, v) * v;
                }
            }
        }
    }
    s
}
