//! Intervals and evaluable real functions: the shared vocabulary for
//! integrands, integrators and their derivatives.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{self, EvalError, Expr};
use crate::scalar::Scalar;

/// Closed interval `[a, b]` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    a: T,
    b: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "interval endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if a >= b {
            return Err(Error::InvalidArgument(format!(
                "interval requires a < b, got [{a}, {b}]"
            )));
        }
        Ok(Interval { a, b })
    }

    /// The reference interval `[-1, 1]`.
    pub fn canonical() -> Self {
        Interval {
            a: -T::one(),
            b: T::one(),
        }
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn width(&self) -> T {
        self.b - self.a
    }

    pub fn midpoint(&self) -> T {
        (self.a + self.b) / T::lit(2.0)
    }

    pub fn half_width(&self) -> T {
        (self.b - self.a) / T::lit(2.0)
    }

    pub fn is_canonical(&self) -> bool {
        self.a == -T::one() && self.b == T::one()
    }

    /// Affine map `u -> (a+b)/2 + u (b-a)/2` from `[-1, 1]` onto this interval.
    pub fn from_canonical(&self, u: T) -> T {
        self.midpoint() + u * self.half_width()
    }

    pub fn contains(&self, x: T) -> bool {
        self.a <= x && x <= self.b
    }

    /// `n` equal-width panels; the last one ends exactly at `b`.
    pub fn split(&self, n: usize) -> Vec<Interval<T>> {
        let h = self.width() / T::count(n);
        (0..n)
            .map(|i| {
                let lo = self.a + h * T::count(i);
                let hi = if i + 1 == n {
                    self.b
                } else {
                    self.a + h * T::count(i + 1)
                };
                Interval { a: lo, b: hi }
            })
            .collect()
    }
}

type EvalFn<T> = dyn Fn(T) -> Result<T, EvalError> + Send + Sync;

/// A deterministic map `x -> f(x)`, optionally restricted to a domain and
/// optionally carrying its derivative.
#[derive(Clone)]
pub struct RealFunction<T> {
    label: String,
    eval: Arc<EvalFn<T>>,
    derivative: Option<Arc<RealFunction<T>>>,
    domain: Option<Interval<T>>,
    expr: Option<Arc<Expr<T>>>,
}

impl<T: Scalar> RealFunction<T> {
    /// Parses `text` and attaches the symbolic derivative when one exists.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_expr(expr::parse(text)?))
    }

    pub fn from_expr(e: Expr<T>) -> Self {
        let derivative = expr::differentiate(&e)
            .ok()
            .map(|d| Arc::new(Self::bare_expr(d)));
        Self {
            derivative,
            ..Self::bare_expr(e)
        }
    }

    fn bare_expr(e: Expr<T>) -> Self {
        let e = Arc::new(e);
        let inner = Arc::clone(&e);
        Self {
            label: e.to_string(),
            eval: Arc::new(move |x| inner.eval(x)),
            derivative: None,
            domain: None,
            expr: Some(e),
        }
    }

    /// `t -> t`, with derivative `1`.
    pub fn identity() -> Self {
        Self::from_expr(Expr::Variable)
    }

    pub fn constant(c: T) -> Self {
        Self::from_expr(Expr::Constant(c))
    }

    pub fn from_fn(label: impl Into<String>, f: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        Self::try_from_fn(label, move |x| Ok(f(x)))
    }

    pub fn try_from_fn(
        label: impl Into<String>,
        f: impl Fn(T) -> Result<T, EvalError> + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            eval: Arc::new(f),
            derivative: None,
            domain: None,
            expr: None,
        }
    }

    pub fn with_derivative(mut self, derivative: RealFunction<T>) -> Self {
        self.derivative = Some(Arc::new(derivative));
        self
    }

    pub fn without_derivative(mut self) -> Self {
        self.derivative = None;
        self
    }

    pub fn with_domain(mut self, domain: Interval<T>) -> Self {
        self.domain = Some(domain);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Option<Interval<T>> {
        self.domain
    }

    pub fn expr(&self) -> Option<&Expr<T>> {
        self.expr.as_deref()
    }

    /// True only when the function is literally the bare variable.
    pub fn is_identity(&self) -> bool {
        self.expr().is_some_and(Expr::is_identity)
    }

    pub fn derivative(&self) -> Option<&RealFunction<T>> {
        self.derivative.as_deref()
    }

    pub fn require_derivative(&self) -> Result<&RealFunction<T>> {
        self.derivative().ok_or_else(|| Error::MissingDerivative {
            function: self.label.clone(),
        })
    }

    pub fn eval(&self, x: T) -> Result<T, EvalError> {
        if let Some(d) = self.domain {
            if !d.contains(x) {
                return Err(EvalError::OutsideDomain {
                    function: self.label.clone(),
                    x: x.as_f64(),
                    a: d.a().as_f64(),
                    b: d.b().as_f64(),
                });
            }
        }
        (self.eval)(x)
    }

    /// `u -> f(phi(u))` on `[-1, 1]`, where `phi` maps `[-1, 1]` onto `iv`.
    ///
    /// The attached derivative, if any, is carried over with the chain-rule
    /// factor `(b - a)/2`.
    pub fn pullback(&self, iv: &Interval<T>) -> RealFunction<T> {
        if iv.is_canonical() {
            return self.clone();
        }
        let iv = *iv;
        let outer = self.clone();
        let mut pulled = Self::try_from_fn(format!("({})∘φ", self.label), move |u| {
            outer.eval(iv.from_canonical(u))
        });
        if let Some(d) = self.derivative() {
            let d = d.clone();
            let h = iv.half_width();
            pulled.derivative = Some(Arc::new(Self::try_from_fn(
                format!("({})'∘φ", self.label),
                move |u| Ok(h * d.eval(iv.from_canonical(u))?),
            )));
        }
        pulled
    }
}

impl<T> fmt::Debug for RealFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealFunction")
            .field("label", &self.label)
            .field("has_derivative", &self.derivative.is_some())
            .finish()
    }
}
