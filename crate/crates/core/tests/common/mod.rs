#![allow(dead_code)]

use gauss_rs::{RealFunction64, SmoothnessSpec64};

pub const TOL: f64 = 1e-10;

pub fn func(text: &str) -> RealFunction64 {
    RealFunction64::parse(text).unwrap_or_else(|e| panic!("corpus entry `{text}`: {e}"))
}

/// Twenty differentiable expressions, all defined on a neighbourhood of [-1, 1].
pub const EXPRESSIONS: [&str; 20] = [
    "t",
    "t^2",
    "t^3",
    "sin(t)",
    "cos(2*t)",
    "exp(t)",
    "exp(-t^2)",
    "log(t+2)",
    "sqrt(t+2)",
    "t*sin(t)",
    "1/(t+3)",
    "t^5 - 2*t^3 + t",
    "exp(sin(t))",
    "cos(t)^2",
    "(t+2)^t",
    "2^t",
    "sqrt(1+t^2)",
    "sin(t)/(2+cos(t))",
    "log(1+t^2)",
    "-t^4 + 3*x",
];

/// Fifty integrators continuous on [-1, 1].
pub fn integrators() -> Vec<String> {
    let mut out: Vec<String> = (1..=8).map(|k| format!("t^{k}")).collect();
    out.extend((1..=5).map(|k| format!("sin({k}*t)")));
    out.extend((1..=5).map(|k| format!("cos({k}*t)")));
    out.extend(
        ["-2", "-1", "-0.5", "0.5", "1", "2"]
            .iter()
            .map(|c| format!("exp({c}*t)")),
    );
    out.extend(
        [
            "t*exp(t)",
            "sin(t) + t^2",
            "log(t+2)",
            "sqrt(t+2)",
            "1/(t+3)",
            "abs(t)",
            "abs(t - 0.3)",
            "t*abs(t)",
            "exp(-t^2)",
            "cos(t)^2",
            "t^3 - t",
            "sin(t)*cos(3*t)",
            "(t+1)^2/4",
            "t + sin(3*t)/3",
            "sqrt(1+t^2)",
            "log(1+t^2)",
            "exp(sin(t))",
            "t^2*exp(-t)",
            "2^t",
            "sin(pi*t)",
            "cos(pi*t)",
            "t^5 - t^3",
            "(t+2)^(-1)",
            "t - t^2/2",
            "sqrt(abs(t) + 1)",
            "exp(t)*cos(t)",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    assert_eq!(out.len(), 50);
    out
}

pub fn is_odd(g: &RealFunction64) -> bool {
    [0.1, 0.37, 0.5, 0.81, 1.0]
        .iter()
        .all(|&x| (g.eval(x).unwrap() + g.eval(-x).unwrap()).abs() < 1e-14)
}

pub fn is_even(g: &RealFunction64) -> bool {
    [0.1, 0.37, 0.5, 0.81, 1.0]
        .iter()
        .all(|&x| (g.eval(x).unwrap() - g.eval(-x).unwrap()).abs() < 1e-14)
}

/// Integrands with analytically known regularity constants on [-1, 1],
/// and the tolerance their Stieltjes sums can reach within the oracle's
/// partition budget.
pub fn certified_integrands() -> Vec<(&'static str, Vec<SmoothnessSpec64>, f64)> {
    use SmoothnessSpec64 as S;
    let lip = |l: f64| (vec![S::Lipschitz { constant: l }, S::L2Derivative], TOL);
    vec![
        ("t", lip(1.0)),
        ("t^2", lip(2.0)),
        ("t^3", lip(3.0)),
        ("sin(t)", lip(1.0)),
        ("cos(t)", lip(1f64.sin())),
        ("exp(t)", lip(std::f64::consts::E)),
        ("t^4", lip(4.0)),
        ("abs(t)", (vec![S::Lipschitz { constant: 1.0 }], TOL)),
        (
            "sqrt(t+1)",
            (
                vec![S::Hoelder {
                    exponent: 0.5,
                    constant: 1.0,
                }],
                // the t^(1/2) endpoint singularity slows the sums to O(n^-1.5)
                1e-9,
            ),
        ),
    ]
    .into_iter()
    .map(|(text, (specs, tol))| (text, specs, tol))
    .collect()
}

/// Nondecreasing integrators with analytically known variation and
/// Lipschitz constants on [-1, 1].
pub fn certified_integrators() -> Vec<(&'static str, Vec<SmoothnessSpec64>)> {
    use SmoothnessSpec64 as S;
    let e = std::f64::consts::E;
    let spec = |v: f64, l: f64| {
        vec![
            S::BoundedVariation { variation: v },
            S::Lipschitz { constant: l },
            S::Monotone,
            S::L2Derivative,
        ]
    };
    vec![
        ("t", spec(2.0, 1.0)),
        ("t^3", spec(2.0, 3.0)),
        ("sin(t)", spec(2.0 * 1f64.sin(), 1.0)),
        ("exp(t)", spec(e - 1.0 / e, e)),
        ("t + t^3/3", spec(8.0 / 3.0, 2.0)),
    ]
}

/// Smooth integrands and integrators for oracle cross-checks.
pub const SMOOTH_F: [&str; 7] = ["1", "t", "t^2", "sin(t)", "exp(t)", "cos(3*t)", "t^4 - t"];
pub const SMOOTH_G: [&str; 8] = [
    "t",
    "t^2",
    "t^3",
    "sin(t)",
    "exp(t)",
    "cos(2*t)",
    "log(t+2)",
    "t*exp(-t)",
];
