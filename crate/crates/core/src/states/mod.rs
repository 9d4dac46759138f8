//! Single-mode circular states: superpositions of `N` coherent states
//! `|alpha_m>`, `alpha_m = alpha0 exp(-i 2 pi m / N)`.

mod fock;

pub use fock::{circular_fock_expansion, default_cutoff, fock_expansion, min_cutoff, FockVector};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{dft, g_tilde, gram_vector, idft, ln_g_tilde, root_of_unity, CVector};

/// Selects the rotation eigenstate `|c_q>` among the `N` RICS of radius `alpha0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RicsLabel<T> {
    n: usize,
    q: usize,
    alpha0: Complex<T>,
}

impl<T: Real> RicsLabel<T> {
    pub fn new(n: usize, q: usize, alpha0: Complex<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroComponents);
        }
        if q >= n {
            return Err(Error::LabelOutOfRange { q, n });
        }
        Ok(Self { n, q, alpha0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn alpha0(&self) -> Complex<T> {
        self.alpha0
    }

    pub fn mean(&self) -> T {
        self.alpha0.norm_sqr()
    }

    /// Same `N` and `q` on a circle of a different radius.
    pub fn with_alpha0(&self, alpha0: Complex<T>) -> Self {
        Self { alpha0, ..*self }
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.alpha0.norm_sqr() == T::zero() {
            Err(Error::ZeroAmplitude)
        } else {
            Ok(())
        }
    }
}

/// Normalized single-mode state `sum_m c_m |alpha_m>`.
#[derive(Clone, Debug, PartialEq)]
pub struct CircularState<T> {
    alpha0: Complex<T>,
    coeffs: CVector<T>,
}

impl<T: Real> CircularState<T> {
    /// Wraps coefficients that already satisfy `c^dagger G c = 1`.
    pub fn new(alpha0: Complex<T>, coeffs: CVector<T>) -> Result<Self> {
        let norm = gram_norm_sqr(alpha0, &coeffs)?;
        if (norm - T::one()).abs() > T::tol(1e-10) {
            return Err(Error::NotNormalized(norm.as_f64()));
        }
        Ok(Self { alpha0, coeffs })
    }

    /// Rescales `coeffs` by the positive factor that normalizes the state.
    pub fn normalized(alpha0: Complex<T>, coeffs: CVector<T>) -> Result<Self> {
        let norm = gram_norm_sqr(alpha0, &coeffs)?;
        if !norm.is_finite() || norm <= T::zero() {
            return Err(Error::NotNormalized(norm.as_f64()));
        }
        let coeffs = coeffs.scale(Complex::new(norm.sqrt().recip(), T::zero()));
        Ok(Self { alpha0, coeffs })
    }

    /// The coherent state `|alpha_m>` written as an `N`-component circular state.
    pub fn coherent_component(n: usize, alpha0: Complex<T>, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroComponents);
        }
        Self::new(alpha0, CVector::basis(n, m)?)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn alpha0(&self) -> Complex<T> {
        self.alpha0
    }

    pub fn coeffs(&self) -> &CVector<T> {
        &self.coeffs
    }

    /// Coherent amplitude `alpha_m` of component `m`.
    pub fn component_amplitude(&self, m: usize) -> Complex<T> {
        self.alpha0 * root_of_unity(m as i64, self.n())
    }

    /// `c^dagger G c`.
    pub fn norm_sqr(&self) -> T {
        gram_norm_sqr(self.alpha0, &self.coeffs).expect("lengths agree by construction")
    }

    /// Fourier coefficients `c~_k`.
    pub fn spectral(&self) -> CVector<T> {
        dft(&self.coeffs)
    }
}

/// `c^dagger G c` with `G_{mn} = g(m - n)`.
pub(crate) fn gram_norm_sqr<T: Real>(alpha0: Complex<T>, coeffs: &CVector<T>) -> Result<T> {
    let n = coeffs.len();
    let g = gram_vector(alpha0, n)?;
    let mut acc = Complex::new(T::zero(), T::zero());
    for (m, cm) in coeffs.iter().enumerate() {
        for (k, ck) in coeffs.iter().enumerate() {
            acc += cm.conj() * g.at(m as i64 - k as i64) * ck;
        }
    }
    Ok(acc.re)
}

/// `|c_q>`: coefficients `c_m = exp(i 2 pi m q / N) / (N sqrt(g~(q)))`.
pub fn rics_coefficients<T: Real>(label: &RicsLabel<T>) -> Result<CircularState<T>> {
    label.require_nonzero()?;
    let n = label.n;
    let gq = g_tilde(label.mean(), n)?.weights()[label.q];
    if gq <= T::zero() {
        return Err(Error::Underflow(label.q));
    }
    let amp = (T::from_count(n) * gq.sqrt()).recip();
    let coeffs = (0..n)
        .map(|m| root_of_unity::<T>(-((m * label.q) as i64), n) * amp)
        .collect();
    Ok(CircularState {
        alpha0: label.alpha0,
        coeffs: CVector::new(coeffs)?,
    })
}

/// Kerr state: `c~_k = exp(-i pi k (k - p) / N) / N` with `p = N mod 2`,
/// transformed back to the direct domain and normalized.
pub fn kerr_state<T: Real>(n: usize, alpha0: Complex<T>) -> Result<CircularState<T>> {
    let spectral = CVector::new(kerr_spectrum(n)?)?;
    CircularState::normalized(alpha0, idft(&spectral))
}

pub(crate) fn kerr_spectrum<T: Real>(n: usize) -> Result<Vec<Complex<T>>> {
    if n == 0 {
        return Err(Error::ZeroComponents);
    }
    let p = n % 2;
    let inv_n = T::from_count(n).recip();
    // exp(-i pi j / N) = exp(-i 2 pi j / (2N))
    Ok((0..n)
        .map(|k| root_of_unity::<T>((k * k - k * p) as i64, 2 * n) * inv_n)
        .collect())
}

/// Coefficients `b_q = N sqrt(g~(q)) c~_q` of `s` in the RICS basis.
pub fn to_rics_basis<T: Real>(s: &CircularState<T>) -> Result<CVector<T>> {
    let n = s.n();
    let g = g_tilde(s.alpha0.norm_sqr(), n)?;
    let nt = T::from_count(n);
    let spectral = s.spectral();
    let b = (0..n)
        .map(|q| spectral[q] * (nt * g.weights()[q].sqrt()))
        .collect();
    CVector::new(b)
}

/// Inverse of [`to_rics_basis`].
pub fn from_rics_basis<T: Real>(alpha0: Complex<T>, b: &CVector<T>) -> Result<CircularState<T>> {
    if alpha0.norm_sqr() == T::zero() {
        return Err(Error::ZeroAmplitude);
    }
    let n = b.len();
    let g = g_tilde(alpha0.norm_sqr(), n)?;
    let nt = T::from_count(n);
    let spectral = (0..n)
        .map(|q| {
            let gq = g.weights()[q];
            if gq > T::zero() {
                Ok(b[q] / (nt * gq.sqrt()))
            } else {
                Err(Error::Underflow(q))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CircularState::new(alpha0, idft(&CVector::new(spectral)?))
}

/// `<c_q| a^dagger a |c_q> = |alpha0|^2 g~(q - 1) / g~(q)`, with the ratio
/// taken in log space so it survives weights below the float range.
pub fn mean_photon_number<T: Real>(label: &RicsLabel<T>) -> Result<T> {
    label.require_nonzero()?;
    let n = label.n;
    let lg = ln_g_tilde(label.mean(), n)?;
    let ratio = (lg[(label.q + n - 1) % n] - lg[label.q]).exp();
    if !ratio.is_finite() {
        return Err(Error::Underflow(label.q));
    }
    Ok(label.mean() * ratio)
}

/// Probability `|<alpha_m|c_q>|^2 = g~(q)` of projecting a coherent component onto `|c_q>`.
pub fn projection_probability<T: Real>(label: &RicsLabel<T>) -> T {
    g_tilde(label.mean(), label.n)
        .expect("label holds a valid component count")
        .weights()[label.q]
}
