use num_complex::Complex;

use super::{EntanglementReport, Method, StateSource};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{density_spectrum, HermitianMatrix};
use crate::states::{default_cutoff, fock_expansion, FockVector, RicsLabel};

/// Splits a truncated single-mode state on a balanced beam splitter (vacuum in
/// the other port) and returns the entropy of mode A.
///
/// With outputs `(a + b)/sqrt(2)` and `(a - b)/sqrt(2)`, `|n>` maps to
/// `sum_m sqrt(C(n, m) 2^-n) |m>_A |n-m>_B`. Works entirely in the photon-number
/// basis and never touches the circulant machinery, so it serves as an
/// independent check of the other two routes.
pub fn fock_oracle<T: Real>(in_state: &FockVector<T>) -> Result<EntanglementReport<T>> {
    let norm = in_state.norm_sqr();
    if norm.is_nan() || (norm - T::one()).abs() > T::tol(1e-8) {
        return Err(Error::NotNormalized(norm.as_f64()));
    }
    let amps: Vec<Complex<T>> = in_state.amps().iter().map(|a| a / norm.sqrt()).collect();
    let k = amps.len();

    // psi[m][j]: amplitude of |m>_A |j>_B, m + j < k
    let zero = Complex::new(T::zero(), T::zero());
    let mut psi = vec![zero; k * k];
    let mut row = vec![T::one()];
    for (n, a) in amps.iter().enumerate() {
        if n > 0 {
            row = pascal_half_step(&row);
        }
        if *a == zero {
            continue;
        }
        for (m, w) in row.iter().enumerate() {
            psi[m * k + (n - m)] = a * w.sqrt();
        }
    }

    let rho = HermitianMatrix::from_upper(k, |m, mp| {
        (0..k - m.max(mp)).fold(zero, |acc, j| acc + psi[m * k + j] * psi[mp * k + j].conj())
    })?;
    let lambdas = density_spectrum(&rho)?;
    Ok(EntanglementReport::from_lambdas(
        lambdas,
        Method::FockOracle,
        StateSource::Fock { cutoff: k },
    ))
}

/// Oracle run for a two-mode RICS with per-mode radius `label.alpha0()`,
/// fed with the closed-form Fock expansion of its in-state.
pub fn rics_fock_oracle<T: Real>(
    label: &RicsLabel<T>,
    cutoff: Option<usize>,
) -> Result<EntanglementReport<T>> {
    let in_label = label.with_alpha0(label.alpha0() * T::SQRT_2());
    let cutoff = cutoff.unwrap_or_else(|| default_cutoff(in_label.alpha0(), label.n()));
    fock_oracle(&fock_expansion(&in_label, cutoff)?)
}

/// Next row of `C(n, m) 2^-n` from the previous one.
fn pascal_half_step<T: Real>(row: &[T]) -> Vec<T> {
    let half = T::lit(0.5);
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(row[0] * half);
    for w in row.windows(2) {
        next.push((w[0] + w[1]) * half);
    }
    next.push(row[row.len() - 1] * half);
    next
}
