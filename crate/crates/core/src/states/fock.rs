use num_complex::Complex;

use super::{CircularState, RicsLabel};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{g_tilde, root_of_unity};

/// Pure single-mode state truncated to photon numbers `0..cutoff`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Real> FockVector<T> {
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Self { amps })
    }

    /// `|n>` inside a space of the given cutoff.
    pub fn number_state(n: usize, cutoff: usize) -> Result<Self> {
        if n >= cutoff {
            return Err(Error::CutoffTooSmall {
                cutoff,
                required: n + 1,
            });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); cutoff];
        amps[n] = Complex::new(T::one(), T::zero());
        Ok(Self { amps })
    }

    /// Coherent state `|alpha>`; amplitudes `e^{-|alpha|^2/2} alpha^n / sqrt(n!)` by recurrence.
    pub fn coherent(alpha: Complex<T>, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::EmptyVector);
        }
        Ok(Self {
            amps: coherent_amplitudes(alpha, cutoff),
        })
    }

    pub fn cutoff(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            })
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            amps: self.amps.iter().map(|z| z * factor).collect(),
        }
    }

    /// `a|psi>`; the top amplitude has nowhere to come from and is zero.
    pub fn annihilate(&self) -> Self {
        let k = self.amps.len();
        let amps = (0..k)
            .map(|n| {
                if n + 1 < k {
                    self.amps[n + 1] * T::from_count(n + 1).sqrt()
                } else {
                    Complex::new(T::zero(), T::zero())
                }
            })
            .collect();
        Self { amps }
    }

    /// `exp(-i 2 pi a^dagger a / n)|psi>`.
    pub fn rotate(&self, n: usize) -> Self {
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(j, z)| z * root_of_unity::<T>(j as i64, n))
            .collect();
        Self { amps }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }
}

fn coherent_amplitudes<T: Real>(alpha: Complex<T>, cutoff: usize) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(cutoff);
    let mut a = Complex::new((-alpha.norm_sqr() / T::lit(2.0)).exp(), T::zero());
    out.push(a);
    for n in 1..cutoff {
        a = a * alpha / T::from_count(n).sqrt();
        out.push(a);
    }
    out
}

/// Smallest cutoff accepted for a state of radius `alpha` with `n` components:
/// `|alpha|^2 + 10 sqrt(|alpha|^2 + 1) + n`.
pub fn min_cutoff<T: Real>(alpha: Complex<T>, n: usize) -> usize {
    let mu = alpha.norm_sqr().as_f64();
    (mu + 10.0 * (mu + 1.0).sqrt() + n as f64).ceil() as usize
}

/// [`min_cutoff`] plus ten levels of headroom.
pub fn default_cutoff<T: Real>(alpha: Complex<T>, n: usize) -> usize {
    min_cutoff(alpha, n) + 10
}

fn check_cutoff<T: Real>(alpha: Complex<T>, n: usize, cutoff: usize) -> Result<()> {
    let required = min_cutoff(alpha, n);
    if cutoff < required {
        return Err(Error::CutoffTooSmall { cutoff, required });
    }
    Ok(())
}

/// Photon-number amplitudes of `|c_q>`: supported on `n = q (mod N)` with
/// `e^{-|alpha0|^2/2} alpha0^n / (sqrt(g~(q)) sqrt(n!))`.
pub fn fock_expansion<T: Real>(label: &RicsLabel<T>, cutoff: usize) -> Result<FockVector<T>> {
    if label.mean() == T::zero() {
        return Err(Error::ZeroAmplitude);
    }
    check_cutoff(label.alpha0(), label.n(), cutoff)?;
    let gq = g_tilde(label.mean(), label.n())?.weights()[label.q()];
    if gq <= T::zero() {
        return Err(Error::Underflow(label.q()));
    }
    let inv = gq.sqrt().recip();
    let amps = coherent_amplitudes(label.alpha0(), cutoff)
        .into_iter()
        .enumerate()
        .map(|(j, a)| {
            if j % label.n() == label.q() {
                a * inv
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
        .collect();
    Ok(FockVector { amps })
}

/// Photon-number amplitudes of `sum_m c_m |alpha_m>`, superposing the
/// coherent-state expansions component by component.
pub fn circular_fock_expansion<T: Real>(
    s: &CircularState<T>,
    cutoff: usize,
) -> Result<FockVector<T>> {
    let n = s.n();
    check_cutoff(s.alpha0(), n, cutoff)?;
    let base = coherent_amplitudes(s.alpha0(), cutoff);
    let amps = base
        .iter()
        .enumerate()
        .map(|(j, a)| {
            // alpha_m^j = alpha0^j exp(-i 2 pi m j / N)
            let phase_sum = s
                .coeffs()
                .iter()
                .enumerate()
                .fold(Complex::new(T::zero(), T::zero()), |acc, (m, c)| {
                    acc + c * root_of_unity::<T>(((m * j) % n) as i64, n)
                });
            a * phase_sum
        })
        .collect();
    Ok(FockVector { amps })
}
