//! Closed-form error bounds for the two-point rule and the Chebyshev
//! functional they are built from.
//!
//! All bounds here are stated on `[-1, 1]`; [`crate::report`] pulls
//! general intervals back before calling them.

use crate::error::{Error, Result};
use crate::function::{Interval, RealFunction};
use crate::oracle::rs_sum_oracle;
use crate::quadrature::{riemann_integral, GaussRSCoefficients};
use crate::scalar::Scalar;

/// Roundoff allowance below zero for the Chebyshev functional.
pub const CHEBYSHEV_EPS: f64 = 1e-12;

/// Chebyshev functional of a function on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebyshevValues<T> {
    /// `T(h, h) = ‖h‖² / 2 - (∫h)² / 4`.
    pub functional: T,
    /// `σ(h) = 2 T(h, h)`.
    pub sigma: T,
    pub norm2_sq: T,
    pub mean_integral: T,
}

pub fn chebyshev<T: Scalar>(h: &RealFunction<T>, tol: T) -> Result<ChebyshevValues<T>> {
    let iv = Interval::canonical();
    let hh = h.clone();
    let square = RealFunction::try_from_fn(format!("({})^2", h.label()), move |t| {
        let v = hh.eval(t)?;
        Ok(v * v)
    });
    let norm2_sq = riemann_integral(&square, &iv, tol)?;
    let mean_integral = riemann_integral(h, &iv, tol)?;
    let functional = norm2_sq / T::lit(2.0) - mean_integral * mean_integral / T::lit(4.0);
    // both integrals carry up to `tol` of quadrature error
    let slack = T::lit(CHEBYSHEV_EPS) + T::lit(2.0) * tol * (T::one() + mean_integral.abs());
    if functional < -slack {
        return Err(Error::Invariant(format!(
            "Chebyshev functional of `{}` is {functional}, below zero",
            h.label()
        )));
    }
    Ok(ChebyshevValues {
        functional,
        sigma: T::lit(2.0) * functional,
        norm2_sq,
        mean_integral,
    })
}

fn require_positive<T: Scalar>(name: &str, v: T) -> Result<()> {
    if v > T::zero() && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

/// `H ((3+√3)/3)^r V`: Hölder integrand against an integrator of bounded
/// variation `V`.
pub fn bound_bv_hoelder<T: Scalar>(h: T, r: T, v: T) -> Result<T> {
    require_positive("Hölder constant", h)?;
    require_positive("Hölder exponent", r)?;
    if !(v >= T::zero()) || !v.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "variation must be >= 0, got {v}"
        )));
    }
    let three = T::lit(3.0);
    Ok(h * ((three + three.sqrt()) / three).powf(r) * v)
}

/// `(L_g H_f / (r+1)) [((3-√3)/3)^(r+1) + ((3+√3)/3)^(r+1)]`: Hölder
/// integrand against a Lipschitz integrator.
///
/// For `r = 1` this is `(4/3) L_g H_f`.
pub fn bound_lip_hoelder<T: Scalar>(l_g: T, h_f: T, r: T) -> Result<T> {
    require_positive("Lipschitz constant", l_g)?;
    require_positive("Hölder constant", h_f)?;
    require_positive("Hölder exponent", r)?;
    let three = T::lit(3.0);
    let s3 = three.sqrt();
    let p = r + T::one();
    let bracket = ((three - s3) / three).powf(p) + ((three + s3) / three).powf(p);
    Ok(l_g * h_f / p * bracket)
}

fn clamped_sigma<T: Scalar>(c: &ChebyshevValues<T>) -> T {
    c.sigma.max(T::zero())
}

/// `σ^{1/2}(f) σ^{1/2}(g')`.
pub fn bound_gruss<T: Scalar>(f: &RealFunction<T>, g_prime: &RealFunction<T>, tol: T) -> Result<T> {
    let sf = clamped_sigma(&chebyshev(f, tol)?);
    let sg = clamped_sigma(&chebyshev(g_prime, tol)?);
    Ok(sf.sqrt() * sg.sqrt())
}

/// `sqrt((4 - 2√3)/3) σ^{1/2}(f')`, the sharp bound for the classical
/// two-point Gauss-Legendre rule on `[-1, 1]`.
pub fn bound_ujevic<T: Scalar>(f_prime: &RealFunction<T>, tol: T) -> Result<T> {
    let three = T::lit(3.0);
    let constant = ((T::lit(4.0) - T::lit(2.0) * three.sqrt()) / three).sqrt();
    Ok(constant * clamped_sigma(&chebyshev(f_prime, tol)?).sqrt())
}

/// `∫ |p| dg` with `p(t) = f(t) - (A f(x₁) + B f(x₂)) / (g(b) - g(a))`, valid
/// for a nondecreasing integrator.
///
/// Evaluated directly on `coeffs.interval` with [`rs_sum_oracle`].
pub fn bound_monotone<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    coeffs: &GaussRSCoefficients<T>,
    tol: T,
) -> Result<T> {
    let increment = coeffs.increment();
    if increment == T::zero() {
        return Err(Error::ZeroDenominator);
    }
    let level = coeffs.apply(f)? / increment;
    let ff = f.clone();
    let kernel = RealFunction::try_from_fn(format!("|{} - {level}|", f.label()), move |t| {
        Ok((ff.eval(t)? - level).abs())
    });
    rs_sum_oracle(&kernel, g, &coeffs.interval, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::coefficients;

    const TOL: f64 = 1e-10;

    fn func(text: &str) -> RealFunction<f64> {
        RealFunction::parse(text).unwrap()
    }

    #[test]
    fn chebyshev_examples() {
        let c = chebyshev(&func("1"), TOL).unwrap();
        assert!(c.functional.abs() < 1e-14 && c.sigma.abs() < 1e-14);
        let c = chebyshev(&func("t^2"), TOL).unwrap();
        assert!((c.functional - 4.0 / 45.0).abs() < 1e-10);
        assert!((c.sigma - 8.0 / 45.0).abs() < 1e-10);
        assert_eq!(c.sigma, 2.0 * c.functional);
        let c = chebyshev(&func("3*t^2"), TOL).unwrap();
        assert!((c.functional - 0.8).abs() < 1e-10);
        assert!((c.sigma - 1.6).abs() < 1e-10);
    }

    #[test]
    fn hoelder_variation_examples() {
        let s3 = 3f64.sqrt();
        let v = bound_bv_hoelder(2.0, 1.0, 2.0).unwrap();
        assert!((v - 4.0 * (3.0 + s3) / 3.0).abs() < 1e-12);
        assert_eq!(bound_bv_hoelder(1.0, 1.0, 0.0).unwrap(), 0.0);
        let (h, r) = (0.7, 0.4);
        let v = bound_bv_hoelder(h, r, 2.0).unwrap();
        assert!((v - 2.0 * h * ((3.0 + s3) / 3.0).powf(r)).abs() < 1e-12);
        assert!(bound_bv_hoelder(0.0, 1.0, 1.0).is_err());
        assert!(bound_bv_hoelder(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn lipschitz_hoelder_examples() {
        assert!((bound_lip_hoelder(3.0f64, 2.0, 1.0).unwrap() - 8.0).abs() < 1e-12);
        for (lf, lg) in [(1.0f64, 1.0f64), (0.5, 7.0), (2.0, 3.0)] {
            let v = bound_lip_hoelder(lg, lf, 1.0).unwrap();
            assert!((v - 4.0 / 3.0 * lf * lg).abs() < 1e-12);
        }
        assert!(bound_lip_hoelder(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn gruss_examples() {
        let v = bound_gruss(&func("t^2"), &func("3*t^2"), TOL).unwrap();
        assert!((v - 8.0 / 15.0).abs() < 1e-9);
        assert!(bound_gruss(&func("5"), &func("3*t^2"), TOL).unwrap().abs() < 1e-7);
        assert!(bound_gruss(&func("t^2"), &func("1"), TOL).unwrap().abs() < 1e-7);
    }

    #[test]
    fn ujevic_examples() {
        let k = ((4.0 - 2.0 * 3f64.sqrt()) / 3.0).sqrt();
        let v = bound_ujevic(&func("4*t^3"), TOL).unwrap();
        assert!((v - k * (32.0f64 / 7.0).sqrt()).abs() < 1e-9);
        assert!((v - 0.903663).abs() < 1e-6);
        assert!(bound_ujevic(&func("2"), TOL).unwrap().abs() < 1e-7);
        let v = bound_ujevic(&func("2*t"), TOL).unwrap();
        assert!((v - k * (8.0f64 / 3.0).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn monotone_examples() {
        let iv = Interval::canonical();
        let g = func("t^3");
        let c = coefficients(&g, &iv, TOL).unwrap();
        assert!(bound_monotone(&func("4"), &g, &c, TOL).unwrap().abs() < 1e-12);

        // ∫ 3t² |t² - 1/3| dt, split at ±1/√3
        let c3 = 3f64.sqrt() / 3.0;
        let anti = |t: f64| 0.6 * t.powi(5) - t.powi(3) / 3.0;
        let exact = 2.0 * ((anti(c3) - anti(0.0)).abs() + (anti(1.0) - anti(c3)).abs());
        let v = bound_monotone(&func("t^2"), &g, &c, TOL).unwrap();
        assert!((v - exact).abs() < 1e-8, "{v} vs {exact}");

        let id = func("t");
        let c = coefficients(&id, &iv, TOL).unwrap();
        let v = bound_monotone(&id, &id, &c, TOL).unwrap();
        assert!((v - 1.0).abs() < 1e-8);
    }

    #[test]
    fn monotone_rejects_flat_integrators() {
        let g = func("t^2");
        let c = coefficients(&g, &Interval::canonical(), TOL).unwrap();
        assert_eq!(
            bound_monotone(&func("t"), &g, &c, TOL).unwrap_err(),
            Error::ZeroDenominator
        );
    }
}
