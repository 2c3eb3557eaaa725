//! User-declared regularity of an integrand or integrator.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SmoothnessSpec<T> {
    /// `|f(x) - f(y)| <= constant * |x - y|^exponent`.
    Hoelder {
        exponent: T,
        constant: T,
    },
    Lipschitz {
        constant: T,
    },
    /// Upper bound on the total variation over the integration interval.
    BoundedVariation {
        variation: T,
    },
    /// The function is absolutely continuous with a square-integrable
    /// derivative, taken from the function's attached derivative.
    L2Derivative,
    /// Monotone nondecreasing on the integration interval.
    Monotone,
}

impl<T: Scalar> SmoothnessSpec<T> {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        match *self {
            SmoothnessSpec::Hoelder { exponent, constant } => {
                if !(exponent > T::zero() && constant > T::zero()) {
                    return bad(format!(
                        "Hölder spec needs r > 0 and H > 0, got r = {exponent}, H = {constant}"
                    ));
                }
            }
            SmoothnessSpec::Lipschitz { constant } => {
                if !(constant > T::zero()) {
                    return bad(format!("Lipschitz constant must be > 0, got {constant}"));
                }
            }
            SmoothnessSpec::BoundedVariation { variation } => {
                if !(variation >= T::zero()) || !variation.is_finite() {
                    return bad(format!(
                        "variation must be finite and >= 0, got {variation}"
                    ));
                }
            }
            SmoothnessSpec::L2Derivative | SmoothnessSpec::Monotone => {}
        }
        Ok(())
    }

    /// `(r, H)` for Hölder-type specs; a Lipschitz constant `L` is `(1, L)`.
    pub fn hoelder(&self) -> Option<(T, T)> {
        match *self {
            SmoothnessSpec::Hoelder { exponent, constant } => Some((exponent, constant)),
            SmoothnessSpec::Lipschitz { constant } => Some((T::one(), constant)),
            _ => None,
        }
    }

    pub fn lipschitz(&self) -> Option<T> {
        match *self {
            SmoothnessSpec::Lipschitz { constant } => Some(constant),
            SmoothnessSpec::Hoelder { exponent, constant } if exponent == T::one() => {
                Some(constant)
            }
            _ => None,
        }
    }

    pub fn variation(&self) -> Option<T> {
        match *self {
            SmoothnessSpec::BoundedVariation { variation } => Some(variation),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lipschitz_is_hoelder_of_order_one() {
        let lip = SmoothnessSpec::Lipschitz { constant: 2.0 };
        let hoe = SmoothnessSpec::Hoelder {
            exponent: 1.0,
            constant: 2.0,
        };
        assert_eq!(lip.hoelder(), hoe.hoelder());
        assert_eq!(lip.lipschitz(), hoe.lipschitz());
    }

    #[test]
    fn validation() {
        assert!(SmoothnessSpec::Hoelder {
            exponent: 0.0,
            constant: 1.0
        }
        .validate()
        .is_err());
        assert!(SmoothnessSpec::Lipschitz { constant: -1.0 }
            .validate()
            .is_err());
        assert!(SmoothnessSpec::BoundedVariation { variation: 0.0 }
            .validate()
            .is_ok());
        assert!(SmoothnessSpec::<f64>::BoundedVariation {
            variation: f64::NAN
        }
        .validate()
        .is_err());
    }
}
