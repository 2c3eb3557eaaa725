use std::collections::BTreeSet;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use gauss_rs::{BoundId, Error, Interval64, SmoothnessSpec64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Baseline {
    Mercer,
    Classical,
}

/// Approximate ∫ f dg over [a, b] at the Gauss nodes ±√3/3 and report
/// error bounds.
#[derive(Debug, Parser)]
#[command(name = "gauss-rs", version)]
pub struct Args {
    /// Integrand, e.g. "t^2" (variable `t` or `x`)
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: String,

    /// Integrator, e.g. "sin(t)"
    #[arg(long = "g", allow_hyphen_values = true)]
    pub g: String,

    #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
    pub a: f64,

    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub b: f64,

    /// Panels of the composite rule
    #[arg(long, default_value_t = 1)]
    pub n: usize,

    /// Absolute tolerance for inner integrals and the reference value
    #[arg(long, default_value_t = gauss_rs::DEFAULT_TOL)]
    pub tol: f64,

    /// Bounds to report: thm2.2, thm2.3, eq2.14, eq1.1, remark-a, or all
    #[arg(long, value_delimiter = ',')]
    pub bounds: Vec<String>,

    /// Hölder exponent and constant of f, as "r,H"
    #[arg(long, value_name = "R,H")]
    pub hoelder: Option<String>,

    #[arg(long = "lipschitz-f", value_name = "L")]
    pub lipschitz_f: Option<f64>,

    #[arg(long = "lipschitz-g", value_name = "L")]
    pub lipschitz_g: Option<f64>,

    /// Upper bound on the total variation of g over [a, b]
    #[arg(long, value_name = "V")]
    pub variation: Option<f64>,

    /// Assert f' and g' are square integrable (eq2.14, eq1.1)
    #[arg(long = "l2-derivatives")]
    pub l2_derivatives: bool,

    /// Assert g(t) = t (enables eq1.1)
    #[arg(long = "identity-g")]
    pub identity_g: bool,

    /// Assert g is nondecreasing on [a, b] (enables remark-a)
    #[arg(long = "monotone-g")]
    pub monotone_g: bool,

    /// Fill missing constants with sampled estimates (reported as non-rigorous)
    #[arg(long = "estimate-constants")]
    pub estimate_constants: bool,

    #[arg(long, value_enum, value_delimiter = ',')]
    pub compare: Vec<Baseline>,

    /// Compute a reference value and the actual error
    #[arg(long)]
    pub oracle: bool,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Composite panel counts for a convergence table, e.g. 1,2,4,8
    #[arg(long, value_delimiter = ',')]
    pub sweep: Option<Vec<usize>>,

    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Validated run parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub f_text: String,
    pub g_text: String,
    pub interval: Interval64,
    pub n: usize,
    pub tol: f64,
    pub bounds_requested: BTreeSet<BoundId>,
    pub specs_f: Vec<SmoothnessSpec64>,
    pub specs_g: Vec<SmoothnessSpec64>,
    pub identity_g: bool,
    pub estimate_constants: bool,
    pub compare: BTreeSet<Baseline>,
    pub oracle: bool,
    pub format: Format,
    pub sweep: Option<Vec<usize>>,
    pub out: Option<PathBuf>,
}

fn parse_pair(text: &str) -> Result<(f64, f64), Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Error::InvalidArgument(format!("--hoelder expects \"r,H\", got `{text}`"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let r = parts[0].parse().map_err(|_| bad())?;
    let h = parts[1].parse().map_err(|_| bad())?;
    Ok((r, h))
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, Error> {
        let interval = Interval64::new(args.a, args.b)?;
        if !(args.tol > 0.0 && args.tol.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "--tol must be positive, got {}",
                args.tol
            )));
        }
        if args.n == 0 {
            return Err(Error::InvalidArgument("--n must be >= 1".into()));
        }
        let mut bounds_requested = BTreeSet::new();
        for id in &args.bounds {
            if id == "all" {
                bounds_requested.extend(BoundId::ALL);
            } else {
                bounds_requested.insert(BoundId::from_str(id)?);
            }
        }
        if let Some(sweep) = &args.sweep {
            if sweep.is_empty() || sweep[0] == 0 || sweep.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "--sweep must be non-empty, >= 1 and strictly ascending, got {sweep:?}"
                )));
            }
        }

        let mut specs_f = Vec::new();
        if let Some(text) = &args.hoelder {
            let (exponent, constant) = parse_pair(text)?;
            specs_f.push(SmoothnessSpec64::Hoelder { exponent, constant });
        }
        if let Some(constant) = args.lipschitz_f {
            specs_f.push(SmoothnessSpec64::Lipschitz { constant });
        }
        let mut specs_g = Vec::new();
        if let Some(constant) = args.lipschitz_g {
            specs_g.push(SmoothnessSpec64::Lipschitz { constant });
        }
        if let Some(variation) = args.variation {
            specs_g.push(SmoothnessSpec64::BoundedVariation { variation });
        }
        if args.monotone_g {
            specs_g.push(SmoothnessSpec64::Monotone);
        }
        if args.l2_derivatives {
            specs_f.push(SmoothnessSpec64::L2Derivative);
            specs_g.push(SmoothnessSpec64::L2Derivative);
        }
        for s in specs_f.iter().chain(&specs_g) {
            s.validate()?;
        }

        Ok(Self {
            f_text: args.f,
            g_text: args.g,
            interval,
            n: args.n,
            tol: args.tol,
            bounds_requested,
            specs_f,
            specs_g,
            identity_g: args.identity_g,
            estimate_constants: args.estimate_constants,
            compare: args.compare.into_iter().collect(),
            oracle: args.oracle || args.sweep.is_some(),
            format: args.format,
            sweep: args.sweep,
            out: args.out,
        })
    }
}
