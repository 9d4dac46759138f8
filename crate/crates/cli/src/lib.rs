//! Command-line front end: Schmidt decompositions, parameter sweeps written as
//! CSV, and three-way cross-validation of entanglement values.

pub mod format;
mod sweep;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex;
use serde_json::json;

use circstates::descriptor::StateDescriptor;
use circstates::entanglement::{
    entanglement_general, entanglement_rics, fock_oracle, rics_fock_oracle, schmidt_rics, Method,
};
use circstates::RicsLabel;

pub use sweep::{
    kerr_csv, sweep_amplitude_csv, sweep_n_csv, KerrArgs, SweepAmplitudeArgs, SweepNArgs,
};

/// Maximum pairwise disagreement accepted by `oracle`.
pub const ORACLE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] circstates::Error),
    #[error("malformed state descriptor: {0}")]
    Json(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Json(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "circstates",
    version,
    about = "Entanglement of two-mode circular states of light"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic Schmidt decomposition of a two-mode RICS, as JSON.
    Schmidt(SchmidtArgs),
    /// Entanglement versus circle radius, as CSV.
    SweepAmplitude(SweepAmplitudeArgs),
    /// Entanglement versus component count, as CSV.
    SweepN(SweepNArgs),
    /// Kerr-state entanglement versus component count, as CSV.
    Kerr(KerrArgs),
    /// Compares all applicable methods on one state; exit 1 on disagreement.
    Oracle(OracleArgs),
    /// Coefficients of a single-mode circular state in the RICS basis, as JSON.
    Decompose(DecomposeArgs),
}

/// Per-mode radius, or the in-state radius when `--in-amplitude` is given.
#[derive(Debug, Clone, Args)]
pub struct AmplitudeConvention {
    /// Interpret amplitudes as in-state radii (divided by sqrt 2 before use).
    #[arg(long, global = true)]
    pub in_amplitude: bool,
}

impl AmplitudeConvention {
    pub fn per_mode(&self, alpha: Complex<f64>) -> Complex<f64> {
        if self.in_amplitude {
            alpha / std::f64::consts::SQRT_2
        } else {
            alpha
        }
    }

    pub fn per_mode_real(&self, alpha: f64) -> f64 {
        self.per_mode(Complex::new(alpha, 0.0)).re
    }
}

#[derive(Debug, Args)]
pub struct SchmidtArgs {
    /// Circle radius as RE or RE,IM.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha0: Complex<f64>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: usize,
    #[command(flatten)]
    pub amplitude: AmplitudeConvention,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// JSON state descriptor.
    #[arg(long)]
    pub state: String,
    /// Fock cutoff for the beam-splitter simulation.
    #[arg(long)]
    pub cutoff: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// JSON state descriptor.
    #[arg(long)]
    pub state: String,
}

pub fn parse_complex(s: &str) -> Result<Complex<f64>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("`{p}`: {e}"));
    let z = match parts.as_slice() {
        [re] => Complex::new(num(re)?, 0.0),
        [re, im] => Complex::new(num(re)?, num(im)?),
        _ => return Err(format!("expected RE or RE,IM, got `{s}`")),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite amplitude `{s}`"))
    }
}

/// Output of a command: text for stdout (or `--out`) and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
    pub out: Option<PathBuf>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            exit_code: 0,
            out: None,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Schmidt(a) => cmd_schmidt(&a).map(Outcome::ok),
        Command::SweepAmplitude(a) => Ok(Outcome {
            out: a.out.clone(),
            ..Outcome::ok(sweep_amplitude_csv(&a)?.render())
        }),
        Command::SweepN(a) => Ok(Outcome {
            out: a.out.clone(),
            ..Outcome::ok(sweep_n_csv(&a)?.render())
        }),
        Command::Kerr(a) => Ok(Outcome {
            out: a.out.clone(),
            ..Outcome::ok(kerr_csv(&a)?.render())
        }),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Decompose(a) => cmd_decompose(&a).map(Outcome::ok),
    }
}

pub fn cmd_schmidt(args: &SchmidtArgs) -> Result<String, CliError> {
    let label = RicsLabel::new(args.n, args.q, args.amplitude.per_mode(args.alpha0))?;
    let schmidt = schmidt_rics(&label)?;
    let e = entanglement_rics(&label)?.e_bits;
    let value = json!({
        "lambdas": schmidt.lambdas.weights(),
        "pairing": schmidt.pairing.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        "E_bits": e,
    });
    Ok(format!("{value}\n"))
}

fn parse_descriptor(text: &str) -> Result<StateDescriptor, CliError> {
    StateDescriptor::from_json(text).map_err(|e| match e {
        circstates::Error::Descriptor(msg) => CliError::Json(msg),
        other => CliError::Domain(other),
    })
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<Outcome, CliError> {
    let desc = parse_descriptor(&args.state)?;
    let mut results: Vec<(Method, Option<f64>)> = Vec::new();

    let oracle_e = match desc.rics_label() {
        Some(label) => {
            let label = label?;
            if label.mean() == 0.0 {
                return Err(circstates::Error::ZeroAmplitude.into());
            }
            results.push((
                Method::AnalyticRics,
                Some(entanglement_rics(&label)?.e_bits),
            ));
            rics_fock_oracle(&label, args.cutoff)?.e_bits
        }
        None => {
            results.push((Method::AnalyticRics, None));
            let state = desc.two_mode()?;
            let fock = match args.cutoff {
                Some(k) => state.in_state_fock_with_cutoff(k)?,
                None => state.in_state_fock()?,
            };
            fock_oracle(&fock)?.e_bits
        }
    };
    let general = entanglement_general(&desc.two_mode()?)?.e_bits;
    results.push((Method::RicsBasisEig, Some(general)));
    results.push((Method::FockOracle, Some(oracle_e)));

    let values: Vec<f64> = results.iter().filter_map(|r| r.1).collect();
    let max_diff = values
        .iter()
        .flat_map(|a| values.iter().map(move |b| (a - b).abs()))
        .fold(0.0f64, f64::max);
    let agree = max_diff < ORACLE_TOLERANCE;

    let mut text = format!("state: {}\n", desc.to_json());
    for (method, e) in &results {
        let shown = e.map_or_else(|| "n/a".to_string(), format::fmt_num);
        text.push_str(&format!("{:<15} E_bits = {shown}\n", method.as_str()));
    }
    text.push_str(&format!("max |dE| = {}\n", format::fmt_num(max_diff)));
    text.push_str(&format!(
        "agreement: {} (tolerance {})\n",
        if agree { "PASS" } else { "FAIL" },
        format::fmt_num(ORACLE_TOLERANCE)
    ));
    Ok(Outcome {
        text,
        exit_code: if agree { 0 } else { 1 },
        out: None,
    })
}

pub fn cmd_decompose(args: &DecomposeArgs) -> Result<String, CliError> {
    let desc = parse_descriptor(&args.state)?;
    let state = desc.circular_state()?;
    let b = circstates::states::to_rics_basis(&state)?;
    let value = json!({
        "b": b.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        "norm": b.norm_sqr(),
    });
    Ok(format!("{value}\n"))
}
