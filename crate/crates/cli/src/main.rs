mod config;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gauss_rs::{
    build_report, classical_gl2, convergence_sweep, gl2_rs_composite, mercer_trapezoid, Error,
    OracleKind, RealFunction64, ReportOptions,
};

use config::{Args, Baseline, Format, RunConfig};
use output::{round15, BoundRow, CompositeRow, Report};

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) => 1,
        Error::NonConvergence { .. } => 3,
        _ => 2,
    }
}

/// Difference of two reported values, so printed errors agree with the
/// printed numbers they are derived from.
fn reported_error(reference: Option<f64>, value: f64) -> Option<f64> {
    reference.map(|r| round15((round15(r) - round15(value)).abs()))
}

fn run(cfg: &RunConfig) -> Result<Report, Error> {
    let f = RealFunction64::parse(&cfg.f_text)?;
    let g = RealFunction64::parse(&cfg.g_text)?;
    let iv = cfg.interval;
    let identity_g = cfg.identity_g || g.is_identity();

    let options = ReportOptions {
        tol: cfg.tol,
        requested: cfg.bounds_requested.iter().copied().collect(),
        oracle: cfg.oracle.then_some(OracleKind::Auto),
        identity_g,
        estimate_constants: cfg.estimate_constants,
        ..Default::default()
    };
    let report = build_report(&f, &g, &iv, &cfg.specs_f, &cfg.specs_g, &options)?;

    let composite = match &cfg.sweep {
        Some(ns) => convergence_sweep(&f, &g, &iv, ns, cfg.tol, report.oracle_value)?
            .into_iter()
            .map(|r| CompositeRow {
                n: r.n,
                value: round15(r.value),
                error: reported_error(report.oracle_value, r.value),
                order: r.order.map(round15),
            })
            .collect(),
        None => {
            let value = gl2_rs_composite(&f, &g, &iv, cfg.n, cfg.tol)?;
            vec![CompositeRow {
                n: cfg.n,
                value: round15(value),
                error: reported_error(report.oracle_value, value),
                order: None,
            }]
        }
    };

    let mut baselines = output::Baselines::default();
    if cfg.compare.contains(&Baseline::Mercer) {
        baselines.mercer = Some(round15(mercer_trapezoid(&f, &g, &iv, cfg.tol)?));
    }
    if cfg.compare.contains(&Baseline::Classical) {
        baselines.classical = Some(round15(classical_gl2(&f, &iv)?));
    }

    Ok(Report {
        rule: round15(report.rule_value),
        composite,
        baselines,
        oracle: report.oracle_value.map(round15),
        error: reported_error(report.oracle_value, report.rule_value),
        bounds: report
            .bounds
            .into_iter()
            .map(|b| BoundRow {
                id: b.id.to_string(),
                value: b.value.map(round15),
                rigorous: b.rigorous,
                note: b.note,
            })
            .collect(),
    })
}

fn emit(cfg: &RunConfig, report: &Report) -> std::io::Result<()> {
    let text = match cfg.format {
        Format::Table => report.to_table(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = RunConfig::from_args(args).and_then(|cfg| run(&cfg).map(|r| (cfg, r)));
    match result {
        Ok((cfg, report)) => match emit(&cfg, &report) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
