use std::path::PathBuf;

use clap::Args;
use num_complex::Complex;
use rayon::prelude::*;

use circstates::entanglement::{
    asymptotic_b, asymptotic_s, entanglement_general, entanglement_kerr, entanglement_rics,
    fock_oracle, max_q_entanglement, rics_fock_oracle, thresholds, Method, TwoModeState,
};
use circstates::RicsLabel;

use crate::format::{fmt_num, Csv};
use crate::{AmplitudeConvention, CliError};

const BASE_HEADER: [&str; 5] = ["alpha0", "N", "q", "E_bits", "method"];

#[derive(Debug, Args)]
pub struct SweepAmplitudeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[arg(long)]
    pub q: usize,
    #[arg(long, default_value_t = 0.1)]
    pub alpha0_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub alpha0_max: f64,
    #[arg(long, default_value_t = 40)]
    pub steps: usize,
    #[arg(long, value_delimiter = ',', default_value = "analytic-rics")]
    pub methods: Vec<Method>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub amplitude: AmplitudeConvention,
}

#[derive(Debug, Args)]
pub struct SweepNArgs {
    #[arg(long)]
    pub alpha0: f64,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub n_max: usize,
    /// First component count; raised to q+1 when smaller.
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    /// Add the two-term approximation columns B, S, B+S.
    #[arg(long)]
    pub decompose: bool,
    #[arg(long, value_delimiter = ',', default_value = "analytic-rics")]
    pub methods: Vec<Method>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub amplitude: AmplitudeConvention,
}

#[derive(Debug, Args)]
pub struct KerrArgs {
    #[arg(long)]
    pub alpha0: f64,
    #[arg(long)]
    pub n_max: usize,
    /// Add the best-over-q RICS entanglement and the thresholds N1, N2.
    #[arg(long)]
    pub with_rics_qmax: bool,
    #[arg(long, value_delimiter = ',', default_value = "rics-basis-eig")]
    pub methods: Vec<Method>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub amplitude: AmplitudeConvention,
}

// dedupe repeated methods while keeping order
fn methods_in_order(methods: &[Method]) -> Vec<Method> {
    let mut out: Vec<Method> = Vec::new();
    for &m in methods {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn rics_e(label: &RicsLabel, method: Method) -> Result<f64, circstates::Error> {
    Ok(match method {
        Method::AnalyticRics => entanglement_rics(label)?.e_bits,
        Method::RicsBasisEig => entanglement_general(&TwoModeState::rics(label)?)?.e_bits,
        Method::FockOracle => rics_fock_oracle(label, None)?.e_bits,
    })
}

fn require_positive(alpha: f64) -> Result<(), CliError> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(circstates::Error::ZeroAmplitude.into())
    }
}

/// Linear grid with both endpoints; one step yields just `min`.
pub fn linear_grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![min];
    }
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                max
            } else {
                min + (max - min) * i as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

pub fn sweep_amplitude_csv(args: &SweepAmplitudeArgs) -> Result<Csv, CliError> {
    if args.n_list.is_empty() || args.steps == 0 {
        return Err(CliError::Usage("n-list and steps must be non-empty".into()));
    }
    if args.alpha0_max.is_nan() || args.alpha0_max < args.alpha0_min {
        return Err(CliError::Usage(
            "alpha0-max must not be below alpha0-min".into(),
        ));
    }
    let lo = args.amplitude.per_mode_real(args.alpha0_min);
    let hi = args.amplitude.per_mode_real(args.alpha0_max);
    require_positive(lo)?;
    let methods = methods_in_order(&args.methods);
    let grid = linear_grid(lo, hi, args.steps);

    let mut points = Vec::new();
    for &n in &args.n_list {
        RicsLabel::new(n, args.q, Complex::new(lo, 0.0))?;
        for &a in &grid {
            for &m in &methods {
                points.push((n, a, m));
            }
        }
    }
    let rows = points
        .par_iter()
        .map(|&(n, a, m)| {
            let label = RicsLabel::new(n, args.q, Complex::new(a, 0.0))?;
            let e = rics_e(&label, m)?;
            Ok(vec![
                fmt_num(a),
                n.to_string(),
                args.q.to_string(),
                fmt_num(e),
                m.to_string(),
            ])
        })
        .collect::<Result<Vec<_>, circstates::Error>>()?;

    let mut csv = Csv::new(BASE_HEADER);
    rows.into_iter().for_each(|r| csv.push(r));
    Ok(csv)
}

pub fn sweep_n_csv(args: &SweepNArgs) -> Result<Csv, CliError> {
    let a = args.amplitude.per_mode_real(args.alpha0);
    require_positive(a)?;
    let alpha = Complex::new(a, 0.0);
    let first = args.n_min.max(args.q + 1).max(1);
    if args.n_max < first {
        return Err(circstates::Error::LabelOutOfRange {
            q: args.q,
            n: args.n_max,
        }
        .into());
    }
    let methods = methods_in_order(&args.methods);
    let points: Vec<(usize, Method)> = (first..=args.n_max)
        .flat_map(|n| methods.iter().map(move |&m| (n, m)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(n, m)| {
            let e = rics_e(&RicsLabel::new(n, args.q, alpha)?, m)?;
            let mut row = vec![
                fmt_num(a),
                n.to_string(),
                args.q.to_string(),
                fmt_num(e),
                m.to_string(),
            ];
            if args.decompose {
                let b = asymptotic_b(n, alpha);
                let s = asymptotic_s(n, alpha);
                row.extend([fmt_num(b), fmt_num(s), fmt_num(b + s)]);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, circstates::Error>>()?;

    let mut header = BASE_HEADER.to_vec();
    if args.decompose {
        header.extend(["B", "S", "BplusS"]);
    }
    let mut csv = Csv::new(header);
    rows.into_iter().for_each(|r| csv.push(r));
    Ok(csv)
}

pub fn kerr_csv(args: &KerrArgs) -> Result<Csv, CliError> {
    let a = args.amplitude.per_mode_real(args.alpha0);
    require_positive(a)?;
    if args.n_max == 0 {
        return Err(circstates::Error::ZeroComponents.into());
    }
    let methods = methods_in_order(&args.methods);
    if methods.contains(&Method::AnalyticRics) {
        return Err(CliError::Usage(
            "analytic-rics does not apply to Kerr states".into(),
        ));
    }
    let alpha = Complex::new(a, 0.0);
    let th = thresholds(alpha, 0);
    let points: Vec<(usize, Method)> = (1..=args.n_max)
        .flat_map(|n| methods.iter().map(move |&m| (n, m)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(n, m)| {
            let e = match m {
                Method::FockOracle => {
                    fock_oracle(&TwoModeState::kerr(n, alpha)?.in_state_fock()?)?.e_bits
                }
                _ => entanglement_kerr(n, alpha)?.e_bits,
            };
            let mut row = vec![
                fmt_num(a),
                n.to_string(),
                "kerr".to_string(),
                fmt_num(e),
                m.to_string(),
            ];
            if args.with_rics_qmax {
                let (_, best) = max_q_entanglement(alpha, n)?;
                row.extend([fmt_num(best), fmt_num(th.n1), fmt_num(th.n2)]);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, circstates::Error>>()?;

    let mut header = BASE_HEADER.to_vec();
    if args.with_rics_qmax {
        header.extend(["E_rics_qmax", "N1", "N2"]);
    }
    let mut csv = Csv::new(header);
    rows.into_iter().for_each(|r| csv.push(r));
    Ok(csv)
}
