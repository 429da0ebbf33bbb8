//! Plain Monte Carlo over the triangle, reproducible under any thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{QuadratureError, QuadratureResult};
use crate::real::Real;

/// Samples per independent random stream. Stream `k` covers sample
/// indices `k * MC_CHUNK .. (k + 1) * MC_CHUNK`.
pub const MC_CHUNK: usize = 1 << 16;

#[derive(Debug, Clone, Copy)]
struct Moments<T> {
    n: usize,
    mean: T,
    m2: T,
}

impl<T: Real> Moments<T> {
    fn merge(self, other: Self) -> Self {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let (na, nb, nt) = (T::from_count(self.n), T::from_count(other.n), T::from_count(n));
        let delta = other.mean - self.mean;
        Self {
            n,
            mean: self.mean + delta * nb / nt,
            m2: self.m2 + other.m2 + delta * delta * na * nb / nt,
        }
    }
}

fn chunk_moments<T, F>(f: &F, seed: u64, chunk: usize, len: usize) -> Result<Moments<T>, QuadratureError>
where
    T: Real,
    F: Fn(T, T) -> T,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    let mut m = Moments { n: 0, mean: T::zero(), m2: T::zero() };
    for _ in 0..len {
        let a: f64 = rng.random();
        let b: f64 = rng.random();
        let (x, y) = (T::lit(a.min(b)), T::lit(a.max(b)));
        let fx = f(x, y);
        if !fx.is_finite() {
            return Err(QuadratureError::NonFiniteIntegrand {
                x: a.min(b),
                y: a.max(b),
            });
        }
        m.n += 1;
        let delta = fx - m.mean;
        m.mean = m.mean + delta / T::from_count(m.n);
        m.m2 = m.m2 + delta * (fx - m.mean);
    }
    Ok(m)
}

/// Uniform-sampling estimate of `∫∫ f` over `0 <= x <= y <= 1`.
///
/// `error_estimate` is the 1-sigma standard error of the mean times the
/// triangle area (infinite for a single sample). The same `(seed, samples)`
/// pair yields bit-identical output.
pub fn mc_integrate_triangle<T, F>(f: F, samples: usize, seed: u64) -> Result<QuadratureResult<T>, QuadratureError>
where
    T: Real,
    F: Fn(T, T) -> T + Sync,
{
    if samples == 0 {
        return Err(QuadratureError::NoSamples);
    }
    let chunks = samples.div_ceil(MC_CHUNK);
    let parts: Vec<Moments<T>> = (0..chunks)
        .into_par_iter()
        .map(|k| chunk_moments(&f, seed, k, MC_CHUNK.min(samples - k * MC_CHUNK)))
        .collect::<Result<_, _>>()?;
    let total = parts
        .into_iter()
        .fold(Moments { n: 0, mean: T::zero(), m2: T::zero() }, Moments::merge);

    let area = T::lit(0.5);
    let error_estimate = if total.n > 1 {
        let n = T::from_count(total.n);
        area * (total.m2 / (n - T::one()) / n).sqrt()
    } else {
        T::infinity()
    };
    Ok(QuadratureResult {
        value: area * total.mean,
        error_estimate,
        evaluations: total.n,
    })
}
