//! Assembles the rule value, an optional reference value and every
//! applicable error bound into one [`ErrorBoundReport`], plus composite
//! convergence sweeps.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{
    bound_bv_hoelder, bound_gruss, bound_lip_hoelder, bound_monotone, bound_ujevic,
};
use crate::error::{Error, Result};
use crate::function::{Interval, RealFunction};
use crate::oracle::{holder_constant_estimate, ibp_oracle, rs_sum_oracle, total_variation};
use crate::quadrature::{coefficients, gl2_rs_composite, riemann_integral, GaussRSCoefficients};
use crate::scalar::Scalar;
use crate::smoothness::SmoothnessSpec;

/// Relative and absolute slack allowed when checking that a rigorous bound
/// dominates the measured error.
pub const DOMINATION_SLACK: f64 = 1e-9;

/// The error bounds a report can carry, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// Hölder integrand, integrator of bounded variation.
    HoelderVariation,
    /// Hölder integrand, Lipschitz integrator.
    HoelderLipschitz,
    /// Grüss-type bound from the Chebyshev functionals of `f` and `g'`.
    Gruss,
    /// Sharp bound for the classical rule, identity integrator only.
    Ujevic,
    /// `∫ |p| dg` for a nondecreasing integrator.
    Monotone,
}

impl BoundId {
    pub const ALL: [BoundId; 5] = [
        BoundId::HoelderVariation,
        BoundId::HoelderLipschitz,
        BoundId::Gruss,
        BoundId::Ujevic,
        BoundId::Monotone,
    ];

    /// Identifier used on the command line and in emitted reports.
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::HoelderVariation => "thm2.2",
            BoundId::HoelderLipschitz => "thm2.3",
            BoundId::Gruss => "eq2.14",
            BoundId::Ujevic => "eq1.1",
            BoundId::Monotone => "remark-a",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown bound `{s}`; expected one of thm2.2, thm2.3, eq2.14, eq1.1, remark-a"
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry<T> {
    pub id: BoundId,
    /// `None` when the bound does not apply or could not be computed.
    pub value: Option<T>,
    /// True only when every hypothesis is user-asserted and the bound is
    /// known to hold for these inputs.
    pub rigorous: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBoundReport<T> {
    pub rule_value: T,
    pub oracle_value: Option<T>,
    /// `|oracle - rule|`.
    pub actual_error: Option<T>,
    pub bounds: Vec<BoundEntry<T>>,
}

impl<T: Scalar> ErrorBoundReport<T> {
    pub fn bound(&self, id: BoundId) -> Option<&BoundEntry<T>> {
        self.bounds.iter().find(|b| b.id == id)
    }

    /// Rigorous entries whose value falls below the measured error.
    pub fn violations(&self) -> Vec<&BoundEntry<T>> {
        let Some(err) = self.actual_error else {
            return Vec::new();
        };
        let slack = T::lit(DOMINATION_SLACK);
        self.bounds
            .iter()
            .filter(|b| b.rigorous)
            .filter(|b| match b.value {
                Some(v) => err > v + slack * (T::one() + v),
                None => false,
            })
            .collect()
    }
}

/// Which reference value a report computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Limit of midpoint Riemann-Stieltjes sums.
    RsSum,
    /// Integration by parts; needs a derivative of `f`.
    ByParts,
    /// By parts when `f` has a derivative and the integral succeeds,
    /// otherwise Riemann-Stieltjes sums.
    Auto,
}

impl OracleKind {
    pub fn evaluate<T: Scalar>(
        self,
        f: &RealFunction<T>,
        g: &RealFunction<T>,
        iv: &Interval<T>,
        tol: T,
    ) -> Result<T> {
        match self {
            OracleKind::RsSum => rs_sum_oracle(f, g, iv, tol),
            OracleKind::ByParts => ibp_oracle(f, g, iv, tol),
            OracleKind::Auto => match f.derivative() {
                Some(_) => ibp_oracle(f, g, iv, tol).or_else(|_| rs_sum_oracle(f, g, iv, tol)),
                None => rs_sum_oracle(f, g, iv, tol),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportOptions<T> {
    pub tol: T,
    pub requested: Vec<BoundId>,
    /// Reference value to measure the actual error against, if any.
    pub oracle: Option<OracleKind>,
    /// Caller asserts `g(t) = t`; enables the classical-rule bound.
    pub identity_g: bool,
    /// Fill missing constants with empirical estimates (never rigorous).
    pub estimate_constants: bool,
    pub estimate_samples: usize,
    pub variation_levels: usize,
}

impl<T: Scalar> Default for ReportOptions<T> {
    fn default() -> Self {
        Self {
            tol: T::lit(crate::quadrature::DEFAULT_TOL),
            requested: BoundId::ALL.to_vec(),
            oracle: None,
            identity_g: false,
            estimate_constants: false,
            estimate_samples: 512,
            variation_levels: 10,
        }
    }
}

/// A constant and whether it was asserted by the caller.
#[derive(Debug, Clone, Copy)]
struct Constant<T> {
    value: T,
    certified: bool,
}

struct Context<'a, T> {
    f: &'a RealFunction<T>,
    g: &'a RealFunction<T>,
    iv: Interval<T>,
    specs_f: &'a [SmoothnessSpec<T>],
    specs_g: &'a [SmoothnessSpec<T>],
    options: &'a ReportOptions<T>,
    coeffs: GaussRSCoefficients<T>,
    rule: T,
}

type Outcome<T> = (Option<T>, bool, String);

impl<T: Scalar> Context<'_, T> {
    fn h(&self) -> T {
        self.iv.half_width()
    }

    fn degenerate(&self) -> bool {
        let c = &self.coeffs;
        c.increment().abs() <= T::lit(4.0) * T::epsilon() * (c.g_left.abs() + c.g_right.abs())
    }

    fn signed_note(&self) -> Option<String> {
        (!self.coeffs.is_nonnegative()).then(|| {
            format!(
                "weights A = {}, B = {} are not both non-negative; the bound's derivation assumes they are",
                self.coeffs.weight_a, self.coeffs.weight_b
            )
        })
    }

    /// Hölder pairs `(r, H)` for `f`, rescaled to `[-1, 1]`.
    fn hoelder_f(&self) -> Result<Vec<(T, Constant<T>)>> {
        let h = self.h();
        let declared: Vec<_> = self
            .specs_f
            .iter()
            .filter_map(SmoothnessSpec::hoelder)
            .map(|(r, c)| {
                (
                    r,
                    Constant {
                        value: c * h.powf(r),
                        certified: true,
                    },
                )
            })
            .collect();
        if !declared.is_empty() || !self.options.estimate_constants {
            return Ok(declared);
        }
        let est =
            holder_constant_estimate(self.f, T::one(), &self.iv, self.options.estimate_samples)?;
        Ok(vec![(
            T::one(),
            Constant {
                value: est * h,
                certified: false,
            },
        )])
    }

    fn lipschitz_g(&self) -> Result<Option<Constant<T>>> {
        let h = self.h();
        let declared = self
            .specs_g
            .iter()
            .filter_map(SmoothnessSpec::lipschitz)
            .reduce(T::min);
        if let Some(l) = declared {
            return Ok(Some(Constant {
                value: l * h,
                certified: true,
            }));
        }
        if !self.options.estimate_constants {
            return Ok(None);
        }
        let est =
            holder_constant_estimate(self.g, T::one(), &self.iv, self.options.estimate_samples)?;
        Ok(Some(Constant {
            value: est * h,
            certified: false,
        }))
    }

    /// Total variation of `g`: declared, implied by a Lipschitz constant or
    /// monotonicity, or estimated.
    fn variation_g(&self) -> Result<Option<Constant<T>>> {
        let mut candidates: Vec<T> = self
            .specs_g
            .iter()
            .filter_map(SmoothnessSpec::variation)
            .collect();
        if let Some(l) = self
            .specs_g
            .iter()
            .filter_map(SmoothnessSpec::lipschitz)
            .reduce(T::min)
        {
            candidates.push(l * self.iv.width());
        }
        if self.specs_g.contains(&SmoothnessSpec::Monotone) {
            candidates.push(self.coeffs.increment().abs());
        }
        if let Some(v) = candidates.into_iter().reduce(T::min) {
            return Ok(Some(Constant {
                value: v,
                certified: true,
            }));
        }
        if !self.options.estimate_constants {
            return Ok(None);
        }
        let est = total_variation(self.g, &self.iv, self.options.variation_levels)?;
        Ok(Some(Constant {
            value: est,
            certified: false,
        }))
    }

    fn hoelder_variation(&self) -> Result<Outcome<T>> {
        if self.degenerate() {
            return Ok((
                None,
                false,
                "inapplicable: g(b) = g(a), and the proof divides by g(b) - g(a)".into(),
            ));
        }
        let hf = self.hoelder_f()?;
        if hf.is_empty() {
            return Ok((
                None,
                false,
                "inapplicable: no Hölder or Lipschitz constant declared for f".into(),
            ));
        }
        let Some(v) = self.variation_g()? else {
            return Ok((
                None,
                false,
                "inapplicable: no variation bound for g declared".into(),
            ));
        };
        let mut best: Option<(T, bool)> = None;
        for (r, c) in hf {
            let value = bound_bv_hoelder(c.value, r, v.value)?;
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, c.certified && v.certified));
            }
        }
        let (value, certified) = best.expect("non-empty");
        Ok(self.finish(value, certified, true))
    }

    fn hoelder_lipschitz(&self) -> Result<Outcome<T>> {
        let hf = self.hoelder_f()?;
        if hf.is_empty() {
            return Ok((
                None,
                false,
                "inapplicable: no Hölder or Lipschitz constant declared for f".into(),
            ));
        }
        let Some(lg) = self.lipschitz_g()? else {
            return Ok((
                None,
                false,
                "inapplicable: no Lipschitz constant declared for g".into(),
            ));
        };
        let mut best: Option<(T, bool)> = None;
        for (r, c) in hf {
            let value = bound_lip_hoelder(lg.value, c.value, r)?;
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, c.certified && lg.certified));
            }
        }
        let (value, certified) = best.expect("non-empty");
        Ok(self.finish(value, certified, true))
    }

    fn finish(&self, value: T, certified: bool, needs_nonnegative: bool) -> Outcome<T> {
        let mut notes = Vec::new();
        if !certified {
            notes.push("uses estimated constants (lower bounds of the true ones)".to_string());
        }
        let signed = if needs_nonnegative {
            self.signed_note()
        } else {
            None
        };
        if let Some(n) = &signed {
            notes.push(n.clone());
        }
        let rigorous = certified && signed.is_none();
        if notes.is_empty() {
            notes.push("hypotheses asserted by caller".into());
        }
        (Some(value), rigorous, notes.join("; "))
    }

    fn gruss(&self) -> Result<Outcome<T>> {
        if self.g.derivative().is_none() {
            return Ok((
                None,
                false,
                format!("inapplicable: `{}` has no derivative", self.g.label()),
            ));
        }
        let f = self.f.pullback(&self.iv);
        let g = self.g.pullback(&self.iv);
        let value = bound_gruss(&f, g.require_derivative()?, self.options.tol)?;
        let declared = self.specs_f.contains(&SmoothnessSpec::L2Derivative)
            && self.specs_g.contains(&SmoothnessSpec::L2Derivative);

        // ER = 2 T(f, g') + D with D = mean(f) (A + B) - rule; the bound only
        // controls the first term.
        let mean_f = riemann_integral(&f, &Interval::canonical(), self.options.tol)? / T::lit(2.0);
        let defect = mean_f * self.coeffs.weight_sum() - self.rule;
        let allowance = T::lit(10.0)
            * self.options.tol
            * (T::one() + self.coeffs.weight_sum().abs() + self.rule.abs());
        let mut notes = Vec::new();
        if !declared {
            notes.push("L2 derivatives not declared for both f and g".to_string());
        }
        let balanced = defect.abs() <= allowance;
        if !balanced {
            notes.push(format!(
                "kernel mean defect |mean(f)(A+B) - rule| = {} is not covered by this bound",
                defect.abs()
            ));
        }
        if notes.is_empty() {
            notes.push("hypotheses asserted by caller; kernel mean defect vanishes".into());
        }
        Ok((Some(value), declared && balanced, notes.join("; ")))
    }

    fn ujevic(&self) -> Result<Outcome<T>> {
        if !self.options.identity_g {
            return Ok((
                None,
                false,
                "inapplicable: requires g(t) = t (identity flag not set)".into(),
            ));
        }
        if self.f.derivative().is_none() {
            return Ok((
                None,
                false,
                format!("inapplicable: `{}` has no derivative", self.f.label()),
            ));
        }
        // ∫_a^b f dt = h ∫_{-1}^{1} f∘φ, so the canonical bound scales by h
        let f = self.f.pullback(&self.iv);
        let value = self.h() * bound_ujevic(f.require_derivative()?, self.options.tol)?;
        let declared = self.specs_f.contains(&SmoothnessSpec::L2Derivative);
        let note = if declared {
            "hypotheses asserted by caller"
        } else {
            "L2 derivative not declared for f"
        };
        Ok((Some(value), declared, note.into()))
    }

    fn monotone(&self) -> Result<Outcome<T>> {
        if !self.specs_g.contains(&SmoothnessSpec::Monotone) {
            return Ok((
                None,
                false,
                "inapplicable: g not declared monotone nondecreasing".into(),
            ));
        }
        if self.degenerate() {
            return Ok((None, false, "inapplicable: g(b) = g(a)".into()));
        }
        let value = bound_monotone(self.f, self.g, &self.coeffs, self.options.tol)?;
        Ok((
            Some(value),
            true,
            "hypotheses asserted by caller; integral evaluated numerically".into(),
        ))
    }
}

/// Rule value, optional reference value and every requested bound.
///
/// Inapplicable or failing bounds are reported as entries with no value and
/// an explanatory note; only errors in the rule itself or the reference
/// value are returned as `Err`.
pub fn build_report<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    specs_f: &[SmoothnessSpec<T>],
    specs_g: &[SmoothnessSpec<T>],
    options: &ReportOptions<T>,
) -> Result<ErrorBoundReport<T>> {
    for s in specs_f.iter().chain(specs_g) {
        s.validate()?;
    }
    let coeffs = coefficients(g, iv, options.tol)?;
    let rule = coeffs.apply(f)?;
    let (oracle_value, actual_error) = match options.oracle {
        Some(kind) => {
            let o = kind.evaluate(f, g, iv, options.tol)?;
            (Some(o), Some((o - rule).abs()))
        }
        None => (None, None),
    };
    let ctx = Context {
        f,
        g,
        iv: *iv,
        specs_f,
        specs_g,
        options,
        coeffs,
        rule,
    };
    let mut requested = options.requested.clone();
    requested.sort();
    requested.dedup();
    let bounds = requested
        .into_iter()
        .map(|id| {
            let outcome = match id {
                BoundId::HoelderVariation => ctx.hoelder_variation(),
                BoundId::HoelderLipschitz => ctx.hoelder_lipschitz(),
                BoundId::Gruss => ctx.gruss(),
                BoundId::Ujevic => ctx.ujevic(),
                BoundId::Monotone => ctx.monotone(),
            };
            let (value, rigorous, note) =
                outcome.unwrap_or_else(|e| (None, false, format!("failed: {e}")));
            BoundEntry {
                id,
                value,
                rigorous,
                note,
            }
        })
        .collect();
    Ok(ErrorBoundReport {
        rule_value: rule,
        oracle_value,
        actual_error,
        bounds,
    })
}

/// One row of a composite convergence table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow<T> {
    pub n: usize,
    pub value: T,
    pub error: Option<T>,
    /// `log(e_prev / e) / log(n / n_prev)`; `None` on the first row or when
    /// an error is zero or unknown.
    pub order: Option<T>,
}

/// Composite rule values for each panel count in `ns` (strictly
/// ascending), with errors against `reference` and empirical orders.
pub fn convergence_sweep<T: Scalar>(
    f: &RealFunction<T>,
    g: &RealFunction<T>,
    iv: &Interval<T>,
    ns: &[usize],
    tol: T,
    reference: Option<T>,
) -> Result<Vec<SweepRow<T>>> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument("sweep needs at least one n".into()));
    }
    if ns[0] == 0 || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "sweep values must be >= 1 and strictly ascending, got {ns:?}"
        )));
    }
    let mut rows: Vec<SweepRow<T>> = Vec::with_capacity(ns.len());
    for &n in ns {
        let value = gl2_rs_composite(f, g, iv, n, tol)?;
        let error = reference.map(|r| (r - value).abs());
        let order = match (rows.last(), error) {
            (Some(prev), Some(e)) => match prev.error {
                Some(pe) if pe > T::zero() && e > T::zero() => {
                    Some((pe / e).ln() / (T::count(n) / T::count(prev.n)).ln())
                }
                _ => None,
            },
            _ => None,
        };
        rows.push(SweepRow {
            n,
            value,
            error,
            order,
        });
    }
    Ok(rows)
}
