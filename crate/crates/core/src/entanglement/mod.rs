//! Entanglement of formation of two-mode circular states
//! `sum_m c_m |alpha_m>_A |alpha_m>_B`.
//!
//! Three independent routes are provided: the closed-form Schmidt
//! decomposition of two-mode RICS, diagonalization of the `N x N` partial
//! density matrix in the RICS basis, and a truncated Fock-basis beam splitter.

mod asymptotics;
mod oracle;
mod two_mode;

pub use asymptotics::{
    asymptotic_b, asymptotic_s, bounds_check, max_q_entanglement, thresholds, BoundsReport,
    Thresholds,
};
pub use oracle::{fock_oracle, rics_fock_oracle};
pub use two_mode::{
    entanglement_general, entanglement_kerr, partial_density_kerr, partial_density_rics_basis,
    TwoModeState,
};

use std::fmt;

use num_complex::Complex;

use crate::error::Result;
use crate::scalar::Real;
use crate::spectral::{g_tilde, shannon_entropy, ProbDist};
use crate::states::RicsLabel;

/// How an entanglement value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    AnalyticRics,
    RicsBasisEig,
    FockOracle,
}

impl Method {
    pub const ALL: [Method; 3] = [
        Method::AnalyticRics,
        Method::RicsBasisEig,
        Method::FockOracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::AnalyticRics => "analytic-rics",
            Method::RicsBasisEig => "rics-basis-eig",
            Method::FockOracle => "fock-oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// What a report was computed for. Amplitudes are per-mode radii.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSource<T> {
    Rics(RicsLabel<T>),
    Kerr { n: usize, alpha0: Complex<T> },
    Circular { n: usize, alpha0: Complex<T> },
    Fock { cutoff: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntanglementReport<T> {
    pub e_bits: T,
    pub method: Method,
    pub source: StateSource<T>,
    pub lambdas: ProbDist<T>,
}

impl<T: Real> EntanglementReport<T> {
    fn from_lambdas(lambdas: ProbDist<T>, method: Method, source: StateSource<T>) -> Self {
        Self {
            e_bits: shannon_entropy(&lambdas),
            method,
            source,
            lambdas,
        }
    }
}

/// Schmidt coefficients of a two-mode RICS with pairs `|c_k>_A |c_{q-k}>_B`.
#[derive(Clone, Debug, PartialEq)]
pub struct SchmidtDecomposition<T> {
    pub lambdas: ProbDist<T>,
    pub pairing: Vec<(usize, usize)>,
}

/// `lambda_k = g~(k) g~(q - k) / g~_1(q)`, where `g~` is taken at `|alpha0|^2`
/// and `g~_1` at `2 |alpha0|^2`.
///
/// `label.alpha0()` is the per-mode radius; the corresponding in-state lives
/// on a circle `sqrt(2)` times larger.
pub fn schmidt_rics<T: Real>(label: &RicsLabel<T>) -> Result<SchmidtDecomposition<T>> {
    if label.mean() == T::zero() {
        return Err(crate::error::Error::ZeroAmplitude);
    }
    let n = label.n();
    let q = label.q();
    let g = g_tilde(label.mean(), n)?;
    let g1 = g_tilde(label.mean() * T::lit(2.0), n)?;
    let g = g.weights();
    let norm = g1.weights()[q];
    if norm <= T::zero() {
        return Err(crate::error::Error::Underflow(q));
    }
    let pairing: Vec<(usize, usize)> = (0..n).map(|k| (k, (q + n - k) % n)).collect();
    let lambdas = pairing.iter().map(|&(a, b)| g[a] * g[b] / norm).collect();
    Ok(SchmidtDecomposition {
        lambdas: ProbDist::new(lambdas)?,
        pairing,
    })
}

pub fn entanglement_rics<T: Real>(label: &RicsLabel<T>) -> Result<EntanglementReport<T>> {
    let schmidt = schmidt_rics(label)?;
    Ok(EntanglementReport::from_lambdas(
        schmidt.lambdas,
        Method::AnalyticRics,
        StateSource::Rics(*label),
    ))
}
