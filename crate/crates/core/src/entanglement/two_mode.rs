use num_complex::Complex;

use super::{EntanglementReport, Method, StateSource};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{
    density_spectrum, g_tilde, gram_vector, root_of_unity, CVector, HermitianMatrix,
};
use crate::states::{
    circular_fock_expansion, default_cutoff, kerr_state, rics_coefficients, CircularState,
    FockVector, RicsLabel,
};

/// Two-mode circular state `sum_m c_m |alpha_m>_A |alpha_m>_B`.
///
/// Stored through its in-state `sum_m c_m |sqrt(2) alpha_m>`: the same
/// coefficients on a circle `sqrt(2)` times larger, which a balanced beam
/// splitter maps onto this state. Both are normalized by the same `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoModeState<T> {
    in_state: CircularState<T>,
}

impl<T: Real> TwoModeState<T> {
    pub fn from_in_state(in_state: CircularState<T>) -> Self {
        Self { in_state }
    }

    /// Two-mode RICS with per-mode radius `label.alpha0()`.
    pub fn rics(label: &RicsLabel<T>) -> Result<Self> {
        let in_label = label.with_alpha0(label.alpha0() * T::SQRT_2());
        Ok(Self::from_in_state(rics_coefficients(&in_label)?))
    }

    pub fn kerr(n: usize, alpha0: Complex<T>) -> Result<Self> {
        Ok(Self::from_in_state(kerr_state(n, alpha0 * T::SQRT_2())?))
    }

    /// Arbitrary coefficients, rescaled to a normalized two-mode state.
    pub fn normalized(alpha0: Complex<T>, coeffs: CVector<T>) -> Result<Self> {
        Ok(Self::from_in_state(CircularState::normalized(
            alpha0 * T::SQRT_2(),
            coeffs,
        )?))
    }

    pub fn n(&self) -> usize {
        self.in_state.n()
    }

    /// Per-mode circle radius.
    pub fn alpha0(&self) -> Complex<T> {
        self.in_state.alpha0() / T::SQRT_2()
    }

    pub fn coeffs(&self) -> &CVector<T> {
        self.in_state.coeffs()
    }

    pub fn in_state(&self) -> &CircularState<T> {
        &self.in_state
    }

    /// Default-cutoff Fock expansion of the in-state, ready for [`super::fock_oracle`].
    pub fn in_state_fock(&self) -> Result<FockVector<T>> {
        self.in_state_fock_with_cutoff(default_cutoff(self.in_state.alpha0(), self.n()))
    }

    pub fn in_state_fock_with_cutoff(&self, cutoff: usize) -> Result<FockVector<T>> {
        circular_fock_expansion(&self.in_state, cutoff)
    }
}

/// Partial density matrix of mode A in the RICS basis:
/// `R'_{mn} = N^2 sqrt(g~(m) g~(n)) sum_k c~_{m+k} g~(k) conj(c~_{k+n})`.
///
/// Its trace equals the two-mode norm; the result is rescaled to unit trace.
pub fn partial_density_rics_basis<T: Real>(s: &TwoModeState<T>) -> Result<HermitianMatrix<T>> {
    let n = s.n();
    let g = g_tilde(s.alpha0().norm_sqr(), n)?;
    let g = g.weights();
    let ct = s.in_state().spectral();
    let n2 = T::from_count(n * n);
    let r = HermitianMatrix::from_upper(n, |m, k| {
        let sum = (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
            acc + ct[(m + j) % n] * g[j] * ct[(j + k) % n].conj()
        });
        sum * (n2 * (g[m] * g[k]).sqrt())
    })?;
    unit_trace(r, T::tol(1e-6))
}

/// Closed-form partial density matrix of a two-mode Kerr state:
/// `R'_{mn} = sqrt(g~(m) g~(n)) g(n - m) exp(i pi (n(n-p) - m(m-p)) / N)`.
pub fn partial_density_kerr<T: Real>(n: usize, alpha0: Complex<T>) -> Result<HermitianMatrix<T>> {
    let g_t = g_tilde(alpha0.norm_sqr(), n)?;
    let g_t = g_t.weights();
    let g = gram_vector(alpha0, n)?;
    let p = n % 2;
    let quad = |j: usize| (j * j - j * p) as i64;
    let r = HermitianMatrix::from_upper(n, |m, k| {
        let phase = root_of_unity::<T>(quad(m) - quad(k), 2 * n);
        g.at(k as i64 - m as i64) * phase * (g_t[m] * g_t[k]).sqrt()
    })?;
    unit_trace(r, T::tol(1e-6))
}

fn unit_trace<T: Real>(r: HermitianMatrix<T>, tolerance: T) -> Result<HermitianMatrix<T>> {
    let trace = r.trace();
    if trace.is_nan() || (trace - T::one()).abs() > tolerance {
        return Err(Error::NotNormalized(trace.as_f64()));
    }
    Ok(r.scaled(trace.recip()))
}

/// Entanglement from the eigenvalues of [`partial_density_rics_basis`].
pub fn entanglement_general<T: Real>(s: &TwoModeState<T>) -> Result<EntanglementReport<T>> {
    let lambdas = density_spectrum(&partial_density_rics_basis(s)?)?;
    Ok(EntanglementReport::from_lambdas(
        lambdas,
        Method::RicsBasisEig,
        StateSource::Circular {
            n: s.n(),
            alpha0: s.alpha0(),
        },
    ))
}

/// Entanglement from the eigenvalues of [`partial_density_kerr`].
pub fn entanglement_kerr<T: Real>(n: usize, alpha0: Complex<T>) -> Result<EntanglementReport<T>> {
    let lambdas = density_spectrum(&partial_density_kerr(n, alpha0)?)?;
    Ok(EntanglementReport::from_lambdas(
        lambdas,
        Method::RicsBasisEig,
        StateSource::Kerr { n, alpha0 },
    ))
}
