//! Quadrature for Stieltjes integrals `∫_a^b f dg` using two Gauss nodes,
//! with the error bounds that come with it and brute-force reference values
//! to check both.
//!
//! Everything numeric is generic over [`Scalar`] (`f32`, `f64`); the
//! `*64` aliases below are what most callers want.
//!
//! ```
//! use gauss_rs::{gl2_rs, Interval64, RealFunction64};
//!
//! let f = RealFunction64::parse("t^2").unwrap();
//! let g = RealFunction64::parse("t^3").unwrap();
//! let v = gl2_rs(&f, &g, &Interval64::canonical(), 1e-10).unwrap();
//! assert!((v - 2.0 / 3.0).abs() < 1e-12);
//! ```

// `!(x > 0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
mod error;
pub mod expr;
pub mod function;
pub mod oracle;
pub mod quadrature;
pub mod report;
mod scalar;
pub mod smoothness;

pub use bounds::{
    bound_bv_hoelder, bound_gruss, bound_lip_hoelder, bound_monotone, bound_ujevic, chebyshev,
    ChebyshevValues,
};
pub use error::{Error, Result};
pub use expr::{differentiate, parse, EvalError, Expr, ParseError};
pub use function::{Interval, RealFunction};
pub use oracle::{holder_constant_estimate, ibp_oracle, rs_sum_oracle, total_variation};
pub use quadrature::{
    classical_gl2, coefficients, gl2_rs, gl2_rs_composite, mercer_trapezoid, riemann_integral,
    GaussRSCoefficients, DEFAULT_TOL,
};
pub use report::{
    build_report, convergence_sweep, BoundEntry, BoundId, ErrorBoundReport, OracleKind,
    ReportOptions, SweepRow,
};
pub use scalar::{gauss_node, Scalar};
pub use smoothness::SmoothnessSpec;

pub type Expr64 = Expr<f64>;
pub type Interval64 = Interval<f64>;
pub type RealFunction64 = RealFunction<f64>;
pub type Coefficients64 = GaussRSCoefficients<f64>;
pub type SmoothnessSpec64 = SmoothnessSpec<f64>;
pub type Report64 = ErrorBoundReport<f64>;

pub type Expr32 = Expr<f32>;
pub type Interval32 = Interval<f32>;
pub type RealFunction32 = RealFunction<f32>;
pub type Coefficients32 = GaussRSCoefficients<f32>;
