//! Brute-force reference values for `∫ f dg` and empirical estimates of
//! regularity constants.
//!
//! Nothing here goes through the two-point rule; these routines exist to
//! check it. The constant estimators return lower bounds of the true
//! constants and are never treated as certificates.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::function::{Interval, RealFunction};
use crate::quadrature::{check_tol, ordered_sum, riemann_integral};
use crate::scalar::Scalar;

/// Coarsest partition used by [`rs_sum_oracle`].
pub const RS_SUM_START: usize = 64;
/// Finest partition [`rs_sum_oracle`] will try.
pub const RS_SUM_MAX: usize = 1 << 22;

const CHUNK: usize = 4096;

/// Midpoint-tagged Riemann-Stieltjes sum on `n` uniform panels.
pub fn rs_sum<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    n: usize,
) -> Result<T> {
    let h = iv.width() / T::count(n);
    let knot = |i: usize| {
        if i == n {
            iv.b()
        } else {
            iv.a() + h * T::count(i)
        }
    };
    let chunks = n.div_ceil(CHUNK);
    let partials: Vec<T> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(n);
            let mut acc = T::zero();
            let mut t0 = knot(lo);
            let mut g0 = g.eval(t0)?;
            for i in lo..hi {
                let t1 = knot(i + 1);
                let g1 = g.eval(t1)?;
                let xi = (t0 + t1) / T::lit(2.0);
                acc = acc + f.eval(xi)? * (g1 - g0);
                t0 = t1;
                g0 = g1;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Ok(ordered_sum(partials))
}

/// Limit of midpoint Riemann-Stieltjes sums, doubling the partition from
/// 64 panels until successive estimates differ by at most `tol`.
///
/// Fails with [`Error::NonConvergence`] once more than `2^22` panels would
/// be needed, which is how rough pairs `(f, g)` announce themselves.
pub fn rs_sum_oracle<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    tol: T,
) -> Result<T> {
    check_tol(tol)?;
    let mut n = RS_SUM_START;
    let mut prev = rs_sum(f, g, iv, n)?;
    loop {
        n *= 2;
        if n > RS_SUM_MAX {
            return Err(Error::NonConvergence {
                method: "Riemann-Stieltjes sums",
                detail: format!(
                    "successive sums still differ by more than {tol} at n = {RS_SUM_MAX}"
                ),
            });
        }
        let cur = rs_sum(f, g, iv, n)?;
        if (cur - prev).abs() <= tol {
            return Ok(cur);
        }
        prev = cur;
    }
}

/// `f(b) g(b) - f(a) g(a) - ∫ g f'`, using the derivative attached to `f`.
pub fn ibp_oracle<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    tol: T,
) -> Result<T> {
    let fp = f.require_derivative()?.clone();
    let gg = g.clone();
    let integrand =
        RealFunction::try_from_fn(format!("({}) * ({})", g.label(), fp.label()), move |t| {
            Ok(gg.eval(t)? * fp.eval(t)?)
        });
    let (a, b) = (iv.a(), iv.b());
    let boundary = f.eval(b)? * g.eval(b)? - f.eval(a)? * g.eval(a)?;
    Ok(boundary - riemann_integral(&integrand, iv, tol)?)
}

/// Largest sum of `|g|` increments over uniform partitions with
/// `64 * 2^k` panels, `k = 1..=levels`.
///
/// The partitions are nested, so the result never decreases as `levels`
/// grows; it is a lower bound for the true variation.
pub fn total_variation<T: Scalar>(
    g: &RealFunction<T>,
    iv: &Interval<T>,
    levels: usize,
) -> Result<T> {
    if levels == 0 {
        return Err(Error::InvalidArgument(
            "total_variation needs levels >= 1".into(),
        ));
    }
    let mut best = T::zero();
    for k in 1..=levels {
        let n = RS_SUM_START << k;
        let values: Vec<T> = std::iter::once(Ok(iv.a()))
            .chain(iv.split(n).iter().map(|p| Ok(p.b())))
            .map(|x: Result<T>| Ok(g.eval(x?)?))
            .collect::<Result<_>>()?;
        let sum = ordered_sum(values.windows(2).map(|w| (w[1] - w[0]).abs()).collect());
        best = best.max(sum);
    }
    Ok(best)
}

/// Base-2 radical inverse of `i`.
fn van_der_corput(mut i: usize) -> f64 {
    let mut x = 0.0;
    let mut scale = 0.5;
    while i > 0 {
        if i & 1 == 1 {
            x += scale;
        }
        i >>= 1;
        scale *= 0.5;
    }
    x
}

/// Sample points used by [`holder_constant_estimate`]: both endpoints, then
/// a van der Corput sequence. Each set contains every smaller one.
pub fn sample_points<T: Scalar>(iv: &Interval<T>, samples: usize) -> Vec<T> {
    let mut pts = vec![iv.a(), iv.b()];
    pts.extend(
        (1..samples.saturating_sub(1)).map(|i| iv.a() + iv.width() * T::lit(van_der_corput(i))),
    );
    pts.truncate(samples);
    pts
}

/// `max |f(x) - f(y)| / |x - y|^r` over all pairs of [`sample_points`]:
/// a lower-bound estimate of the Hölder constant of order `r`.
pub fn holder_constant_estimate<T: Scalar>(
    f: &RealFunction<T>,
    r: T,
    iv: &Interval<T>,
    samples: usize,
) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "Hölder exponent must be > 0, got {r}"
        )));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument(
            "holder_constant_estimate needs >= 2 samples".into(),
        ));
    }
    let pts = sample_points(iv, samples);
    let vals: Vec<T> = pts.iter().map(|&x| f.eval(x)).collect::<Result<_, _>>()?;
    let best = (0..pts.len())
        .into_par_iter()
        .map(|i| {
            let mut best = T::zero();
            for j in 0..i {
                let dx = (pts[i] - pts[j]).abs();
                if dx > T::zero() {
                    best = best.max((vals[i] - vals[j]).abs() / dx.powf(r));
                }
            }
            best
        })
        .reduce(T::zero, T::max);
    Ok(best)
}
