//! The Gauss-node rule for `∫ f dg`, its composite form, and the baseline
//! rules it is compared against.
//!
//! On `[-1, 1]` the rule reads `A f(-√3/3) + B f(√3/3)` with weights chosen
//! so that it is exact for `f = 1` and `f = t`:
//!
//! ```text
//! A = (3 / 2√3) [ ∫g - ((3-√3)/3) g(1) - ((3+√3)/3) g(-1) ]
//! B = (3 / 2√3) [ ((3+√3)/3) g(1) + ((3-√3)/3) g(-1) - ∫g ]
//! ```
//!
//! A general interval `[a, b]` is handled by pulling `f` and `g` back
//! through `φ(u) = (a+b)/2 + u (b-a)/2`. The Stieltjes integral picks up no
//! Jacobian: `∫_a^b f dg = ∫_{-1}^1 (f∘φ) d(g∘φ)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::function::{Interval, RealFunction};
use crate::scalar::{gauss_node, Scalar};

/// Recursion cap for adaptive Simpson.
pub const SIMPSON_MAX_DEPTH: usize = 50;
/// Evaluation budget for one adaptive Simpson call.
pub const SIMPSON_MAX_EVALS: usize = 4_000_000;
/// Default absolute tolerance for inner Riemann integrals.
pub const DEFAULT_TOL: f64 = 1e-10;

struct Simpson<'a, T> {
    h: &'a RealFunction<T>,
    evals: usize,
}

impl<T: Scalar> Simpson<'_, T> {
    fn eval(&mut self, x: T) -> Result<T> {
        self.evals += 1;
        if self.evals > SIMPSON_MAX_EVALS {
            return Err(Error::NonConvergence {
                method: "adaptive Simpson",
                detail: format!("evaluation budget of {SIMPSON_MAX_EVALS} exhausted"),
            });
        }
        Ok(self.h.eval(x)?)
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        a: T,
        fa: T,
        m: T,
        fm: T,
        b: T,
        fb: T,
        whole: T,
        tol: T,
        depth: usize,
    ) -> Result<T> {
        let two = T::lit(2.0);
        let lm = (a + m) / two;
        let rm = (m + b) / two;
        // the panel cannot be split any further in this precision
        if !(a < lm && lm < m && m < rm && rm < b) {
            return Ok(whole);
        }
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let left = simpson(a, fa, fm, m, flm);
        let right = simpson(m, fm, fb, b, frm);
        let delta = left + right - whole;
        if depth >= SIMPSON_MAX_DEPTH || delta.abs() <= T::lit(15.0) * tol {
            return Ok(left + right + delta / T::lit(15.0));
        }
        let half = tol / two;
        let l = self.refine(a, fa, lm, flm, m, fm, left, half, depth + 1)?;
        let r = self.refine(m, fm, rm, frm, b, fb, right, half, depth + 1)?;
        Ok(l + r)
    }
}

fn simpson<T: Scalar>(a: T, fa: T, fb: T, b: T, fm: T) -> T {
    (b - a) / T::lit(6.0) * (fa + T::lit(4.0) * fm + fb)
}

/// Adaptive Simpson estimate of `∫ h` over `iv` with estimated absolute
/// error at most `tol`.
///
/// The interval is first cut into eight panels so that a function which
/// happens to vanish on the coarsest Simpson stencil is not accepted early.
pub fn riemann_integral<T: Scalar>(h: &RealFunction<T>, iv: &Interval<T>, tol: T) -> Result<T> {
    check_tol(tol)?;
    let mut state = Simpson { h, evals: 0 };
    let panels = iv.split(8);
    let panel_tol = tol / T::count(panels.len());
    let mut total = T::zero();
    for p in &panels {
        let (a, b) = (p.a(), p.b());
        let m = p.midpoint();
        let fa = state.eval(a)?;
        let fm = state.eval(m)?;
        let fb = state.eval(b)?;
        let whole = simpson(a, fa, fb, b, fm);
        total = total + state.refine(a, fa, m, fm, b, fb, whole, panel_tol, 0)?;
    }
    Ok(total)
}

pub(crate) fn check_tol<T: Scalar>(tol: T) -> Result<()> {
    if tol > T::zero() && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance must be positive and finite, got {tol}"
        )))
    }
}

/// Weights of the two-point rule for one integrator on one interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussRSCoefficients<T> {
    /// Weight on the left node `φ(-√3/3)`.
    pub weight_a: T,
    /// Weight on the right node `φ(√3/3)`.
    pub weight_b: T,
    pub g_left: T,
    pub g_right: T,
    /// `∫_{-1}^{1} g∘φ`, i.e. `(2/(b-a)) ∫_a^b g`.
    pub g_mean_integral: T,
    pub interval: Interval<T>,
}

impl<T: Scalar> GaussRSCoefficients<T> {
    /// Builds the weights from the endpoint values and the pulled-back
    /// integral of `g`, checking `A + B = g(b) - g(a)`.
    pub fn from_parts(
        g_left: T,
        g_right: T,
        g_mean_integral: T,
        interval: Interval<T>,
    ) -> Result<Self> {
        let three = T::lit(3.0);
        let s3 = three.sqrt();
        let scale = three / (T::lit(2.0) * s3);
        let small = (three - s3) / three;
        let large = (three + s3) / three;
        let weight_a = scale * (g_mean_integral - small * g_right - large * g_left);
        let weight_b = scale * (large * g_right + small * g_left - g_mean_integral);
        let coeffs = Self {
            weight_a,
            weight_b,
            g_left,
            g_right,
            g_mean_integral,
            interval,
        };
        let gap = (coeffs.weight_sum() - coeffs.increment()).abs();
        let magnitude = T::one() + g_left.abs() + g_right.abs() + g_mean_integral.abs();
        if !(gap <= T::lit(64.0) * T::epsilon() * magnitude) {
            return Err(Error::Invariant(format!(
                "A + B = {} differs from g(b) - g(a) = {}",
                coeffs.weight_sum(),
                coeffs.increment()
            )));
        }
        Ok(coeffs)
    }

    pub fn weight_sum(&self) -> T {
        self.weight_a + self.weight_b
    }

    /// `g(b) - g(a)`.
    pub fn increment(&self) -> T {
        self.g_right - self.g_left
    }

    /// Both weights non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.weight_a >= T::zero() && self.weight_b >= T::zero()
    }

    /// The two nodes mapped onto the interval.
    pub fn nodes(&self) -> (T, T) {
        let c = gauss_node::<T>();
        (
            self.interval.from_canonical(-c),
            self.interval.from_canonical(c),
        )
    }

    /// `A f(left node) + B f(right node)`.
    pub fn apply(&self, f: &RealFunction<T>) -> Result<T> {
        let (xl, xr) = self.nodes();
        Ok(self.weight_a * f.eval(xl)? + self.weight_b * f.eval(xr)?)
    }
}

/// Weights `(A, B)` for integrator `g` on `iv`.
pub fn coefficients<T: Scalar>(
    g: &RealFunction<T>,
    iv: &Interval<T>,
    tol: T,
) -> Result<GaussRSCoefficients<T>> {
    check_tol(tol)?;
    let g_left = g.eval(iv.a())?;
    let g_right = g.eval(iv.b())?;
    let h = iv.half_width();
    let integral = riemann_integral(g, iv, tol * h)? / h;
    GaussRSCoefficients::from_parts(g_left, g_right, integral, *iv)
}

/// `∫_a^b f dg ≈ A f(φ(-√3/3)) + B f(φ(√3/3))`.
pub fn gl2_rs<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    tol: T,
) -> Result<T> {
    coefficients(g, iv, tol)?.apply(f)
}

/// Sum of [`gl2_rs`] over `n` equal panels of `iv`.
///
/// Panels are evaluated in parallel and summed in index order, so the result
/// does not depend on scheduling. `n = 1` reproduces [`gl2_rs`] bit for bit.
pub fn gl2_rs_composite<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    n: usize,
    tol: T,
) -> Result<T> {
    if n == 0 {
        return Err(Error::InvalidArgument("composite rule needs n >= 1".into()));
    }
    let panels = iv.split(n);
    let values: Vec<T> = panels
        .par_iter()
        .map(|p| gl2_rs(f, g, p, tol))
        .collect::<Result<_>>()?;
    Ok(ordered_sum(values))
}

pub(crate) fn ordered_sum<T: Scalar>(values: Vec<T>) -> T {
    values
        .into_iter()
        .reduce(|acc, v| acc + v)
        .unwrap_or_else(T::zero)
}

/// Mercer's trapezoid-type rule `[G - g(a)] f(a) + [g(b) - G] f(b)`, with
/// `G` the mean value of `g` over the interval.
pub fn mercer_trapezoid<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    tol: T,
) -> Result<T> {
    check_tol(tol)?;
    let width = iv.width();
    let mean = riemann_integral(g, iv, tol * width)? / width;
    let (a, b) = (iv.a(), iv.b());
    Ok((mean - g.eval(a)?) * f.eval(a)? + (g.eval(b)? - mean) * f.eval(b)?)
}

/// Classical two-point Gauss-Legendre approximation of `∫_a^b f dt`.
pub fn classical_gl2<T: Scalar>(f: &RealFunction<T>, iv: &Interval<T>) -> Result<T> {
    let c = gauss_node::<T>();
    let left = f.eval(iv.from_canonical(-c))?;
    let right = f.eval(iv.from_canonical(c))?;
    Ok(iv.half_width() * (left + right))
}
