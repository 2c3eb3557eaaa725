//! Acceptance gate: one line per criterion, non-zero exit if any fails.

mod common;

use std::time::Instant;

use common::{func, TOL};
use gauss_rs::{
    bound_bv_hoelder, bound_gruss, bound_lip_hoelder, bound_ujevic, build_report, classical_gl2,
    coefficients, convergence_sweep, differentiate, gl2_rs, ibp_oracle, parse, rs_sum_oracle,
    Interval64, OracleKind, ReportOptions,
};
use rand::{rngs::StdRng, Rng, SeedableRng};

struct Gate {
    failures: usize,
    total: usize,
}

impl Gate {
    fn check(&mut self, id: u32, name: &str, pass: bool, detail: String) {
        self.total += 1;
        if !pass {
            self.failures += 1;
        }
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("[{tag}] AC{id:02} {name}: {detail}");
    }
}

fn canon() -> Interval64 {
    Interval64::canonical()
}

fn ac01(gate: &mut Gate) {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for g in ["t", "t^3", "t^2", "sin(t)", "exp(t)", "abs(t)"] {
        let gf = func(g);
        let c = coefficients(&gf, &canon(), TOL).unwrap();
        let want = gf.eval(1.0).unwrap() - gf.eval(-1.0).unwrap();
        worst = worst.max((c.weight_sum() - want).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    gate.check(
        1,
        "coefficient identity A+B = g(1)-g(-1)",
        worst <= 1e-9 && elapsed < 1.0,
        format!("max gap {worst:.3e} (<= 1e-9), {elapsed:.3}s (< 1s)"),
    );
}

fn ac02(gate: &mut Gate) {
    let c = coefficients(&func("t"), &canon(), TOL).unwrap();
    let gap = (c.weight_a - 1.0).abs().max((c.weight_b - 1.0).abs());
    gate.check(
        2,
        "identity integrator gives A = B = 1",
        gap <= 1e-12,
        format!(
            "A = {}, B = {}, gap {gap:.3e} (<= 1e-12)",
            c.weight_a, c.weight_b
        ),
    );
}

fn ac03(gate: &mut Gate) {
    let odd = coefficients(&func("t^3"), &canon(), TOL).unwrap();
    let even = coefficients(&func("t^2"), &canon(), TOL).unwrap();
    let w = 2.0 * 3f64.sqrt() / 3.0;
    let odd_gap = (odd.weight_a - 1.0).abs().max((odd.weight_b - 1.0).abs());
    let even_gap = (even.weight_a + w).abs().max((even.weight_b - w).abs());
    gate.check(
        3,
        "odd/even integrator reductions",
        odd_gap <= 1e-9 && even_gap <= 1e-9,
        format!(
            "t^3: A = {}, B = {}; t^2: A = {}, B = {} (target ∓{w:.12}); gaps {odd_gap:.2e}, {even_gap:.2e}",
            odd.weight_a, odd.weight_b, even.weight_a, even.weight_b
        ),
    );
}

fn ac04(gate: &mut Gate) {
    let mut worst = 0.0f64;
    let mut worst_case = String::new();
    for g in common::integrators() {
        let gf = func(&g);
        for f in ["1", "t"] {
            let ff = func(f);
            let rule = gl2_rs(&ff, &gf, &canon(), TOL).unwrap();
            let oracle = rs_sum_oracle(&ff, &gf, &canon(), TOL).unwrap();
            let gap = (rule - oracle).abs();
            if gap > worst {
                worst = gap;
                worst_case = format!("f = {f}, g = {g}");
            }
        }
    }
    gate.check(
        4,
        "exactness for f in {1, t} over 50 integrators",
        worst <= 1e-8,
        format!("max |rule - oracle| = {worst:.3e} at {worst_case} (<= 1e-8)"),
    );
}

fn ac05(gate: &mut Gate) {
    let (f, g) = (func("t^2"), func("t^3"));
    let rule = gl2_rs(&f, &g, &canon(), TOL).unwrap();
    let rs = rs_sum_oracle(&f, &g, &canon(), TOL).unwrap();
    let ibp = ibp_oracle(&f, &g, &canon(), TOL).unwrap();
    let err = (rs - rule).abs();
    let bound = bound_gruss(&f, g.derivative().unwrap(), TOL).unwrap();
    let pass = (rule - 2.0 / 3.0).abs() <= 1e-9
        && (rs - 1.2).abs() <= 1e-9
        && (ibp - 1.2).abs() <= 1e-9
        && (err - 8.0 / 15.0).abs() <= 1e-9
        && (bound - 8.0 / 15.0).abs() <= 1e-9;
    gate.check(
        5,
        "tightness witness f = t^2, g = t^3",
        pass,
        format!("rule {rule:.15}, rs-sum {rs:.15}, ibp {ibp:.15}, error {err:.15}, Grüss bound {bound:.15} (8/15 = {:.15})", 8.0 / 15.0),
    );
}

fn ac06(gate: &mut Gate) {
    let b = bound_lip_hoelder(3.0f64, 2.0, 1.0).unwrap();
    let pass =
        (b - 8.0).abs() <= 1e-12 && (b - 4.0 / 3.0 * 2.0 * 3.0).abs() <= 1e-12 && b >= 8.0 / 15.0;
    gate.check(
        6,
        "Lipschitz-Lipschitz bound (4/3) L_f L_g",
        pass,
        format!("bound {b:.15} (8 within 1e-12, >= 8/15)"),
    );
}

fn ac07(gate: &mut Gate) {
    let (f, g) = (func("t^2"), func("t^3"));
    let b = bound_bv_hoelder(2.0, 1.0, 2.0).unwrap();
    let want = 4.0 * (3.0 + 3f64.sqrt()) / 3.0;
    let err = (rs_sum_oracle(&f, &g, &canon(), TOL).unwrap()
        - gl2_rs(&f, &g, &canon(), TOL).unwrap())
    .abs();
    gate.check(
        7,
        "Hölder/bounded-variation bound",
        (b - want).abs() <= 1e-9 && b >= err,
        format!("bound {b:.12} (want {want:.12}), actual error {err:.6}"),
    );
}

fn ac08(gate: &mut Gate) {
    let f = func("t^4");
    let rule = classical_gl2(&f, &canon()).unwrap();
    let rs_rule = gl2_rs(&f, &func("t"), &canon(), TOL).unwrap();
    let oracle = rs_sum_oracle(&f, &func("t"), &canon(), TOL).unwrap();
    let err = (oracle - rs_rule).abs();
    let bound = bound_ujevic(f.derivative().unwrap(), TOL).unwrap();
    let want = ((4.0 - 2.0 * 3f64.sqrt()) / 3.0).sqrt() * (32.0f64 / 7.0).sqrt();
    let pass = (err - 8.0 / 45.0).abs() <= 1e-9
        && (rule - rs_rule).abs() <= 1e-12
        && (bound - want).abs() <= 1e-9
        && err <= bound;
    gate.check(
        8,
        "classical-rule bound, f = t^4",
        pass,
        format!(
            "error {err:.12} (8/45 = {:.12}), bound {bound:.9} (want {want:.9})",
            8.0 / 45.0
        ),
    );
}

fn ac09(gate: &mut Gate) {
    let start = Instant::now();
    let mut pairs = 0;
    let mut rigorous_entries = 0;
    let mut violations = Vec::new();
    let mut skipped = Vec::new();
    for (f_text, specs_f, tol) in common::certified_integrands() {
        for (g_text, specs_g) in common::certified_integrators() {
            let (f, g) = (func(f_text), func(g_text));
            let c = coefficients(&g, &canon(), TOL).unwrap();
            if !c.is_nonnegative() {
                skipped.push(format!("{f_text}/{g_text}"));
                continue;
            }
            let opts = ReportOptions {
                tol,
                oracle: Some(OracleKind::RsSum),
                identity_g: g.is_identity(),
                ..ReportOptions::default()
            };
            let report = build_report(&f, &g, &canon(), &specs_f, &specs_g, &opts).unwrap();
            let err = report.actual_error.unwrap();
            pairs += 1;
            for b in report.bounds.iter().filter(|b| b.rigorous) {
                rigorous_entries += 1;
                let v = b.value.unwrap();
                if v < err - 1e-9 {
                    violations.push(format!(
                        "{f_text}/{g_text} {}: bound {v} < error {err}",
                        b.id
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    gate.check(
        9,
        "domination over certified corpus",
        pairs >= 30 && violations.is_empty() && elapsed < 30.0,
        format!(
            "{pairs} pairs (>= 30), {rigorous_entries} rigorous bounds, {} violations {violations:?}, skipped {skipped:?}, {elapsed:.2}s (< 30s)",
            violations.len()
        ),
    );
}

fn last_orders(f: &str, g: &str, ns: &[usize], reference: f64) -> Vec<f64> {
    let rows = convergence_sweep(&func(f), &func(g), &canon(), ns, TOL, Some(reference)).unwrap();
    rows.iter().filter_map(|r| r.order).collect()
}

fn ac10(gate: &mut Gate) {
    let ns = [8, 16, 32, 64];
    let quartic = rs_sum_oracle(&func("t^4"), &func("t"), &canon(), TOL).unwrap();
    let orders_gl = last_orders("t^4", "t", &ns, quartic);
    let rs_ref = ibp_oracle(&func("exp(t)"), &func("sin(t)"), &canon(), 1e-13).unwrap();
    let orders_rs = last_orders("exp(t)", "sin(t)", &ns, rs_ref);
    let pass = orders_gl.iter().all(|o| (o - 4.0).abs() <= 0.3)
        && orders_rs.iter().all(|&o| o >= 2.0 - 0.3);
    gate.check(
        10,
        "composite convergence order",
        pass,
        format!(
            "t^4 dt orders {orders_gl:.3?} (4 ± 0.3); e^t d(sin t) orders {orders_rs:.3?} (>= 1.7)"
        ),
    );
}

fn ac11(gate: &mut Gate) {
    let mut worst = 0.0f64;
    let mut worst_case = String::new();
    let mut count = 0;
    for f in common::SMOOTH_F {
        for g in common::SMOOTH_G {
            let (ff, gf) = (func(f), func(g));
            let a = rs_sum_oracle(&ff, &gf, &canon(), TOL).unwrap();
            let b = ibp_oracle(&ff, &gf, &canon(), TOL).unwrap();
            count += 1;
            if (a - b).abs() > worst {
                worst = (a - b).abs();
                worst_case = format!("f = {f}, g = {g}");
            }
        }
    }
    gate.check(
        11,
        "rs-sum and integration-by-parts oracles agree",
        worst <= 1e-7,
        format!("{count} pairs, max gap {worst:.3e} at {worst_case} (<= 1e-7)"),
    );
}

fn ac12(gate: &mut Gate) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let h = 1e-6;
    let mut failures = Vec::new();
    let mut round_trip_failures = Vec::new();
    for text in common::EXPRESSIONS {
        let e = parse::<f64>(text).unwrap();
        if parse::<f64>(&e.to_string()).unwrap() != e {
            round_trip_failures.push(text);
        }
        let d = differentiate(&e).unwrap();
        for _ in 0..100 {
            let x: f64 = rng.gen_range(-1.0..1.0);
            let exact = d.eval(x).unwrap();
            let fd = (e.eval(x + h).unwrap() - e.eval(x - h).unwrap()) / (2.0 * h);
            if (exact - fd).abs() > 1e-5 * (1.0 + exact.abs()) {
                failures.push(format!("{text} at {x}: {exact} vs {fd}"));
            }
        }
    }
    gate.check(
        12,
        "parser round trip and derivative vs finite differences",
        failures.is_empty() && round_trip_failures.is_empty(),
        format!(
            "20 expressions x 100 points; derivative mismatches {}, round-trip failures {:?}",
            failures.len(),
            round_trip_failures
        ),
    );
}

fn main() {
    let mut gate = Gate {
        failures: 0,
        total: 0,
    };
    let criteria: [fn(&mut Gate); 12] = [
        ac01, ac02, ac03, ac04, ac05, ac06, ac07, ac08, ac09, ac10, ac11, ac12,
    ];
    for run in criteria {
        run(&mut gate);
    }
    println!(
        "acceptance: {}/{} criteria passed",
        gate.total - gate.failures,
        gate.total
    );
    if gate.failures > 0 {
        std::process::exit(1);
    }
}
