use num_complex::Complex;

use super::{CVector, ProbDist};
use crate::error::{Error, Result};
use crate::scalar::{ln_factorial, Real};

/// Overlaps `g(m) = <alpha_0|alpha_m>` of the coherent states on the circle,
/// `g(m) = exp{|alpha0|^2 (exp(i 2 pi m / N) - 1)}`.
///
/// Entries `m` and `N - m` are exact conjugates of each other.
pub fn gram_vector<T: Real>(alpha0: Complex<T>, n: usize) -> Result<CVector<T>> {
    if n == 0 {
        return Err(Error::ZeroComponents);
    }
    let mu = alpha0.norm_sqr();
    let two = T::lit(2.0);
    let mut g = vec![Complex::new(T::zero(), T::zero()); n];
    for m in 0..=n / 2 {
        let half = T::PI() * T::from_count(m) / T::from_count(n);
        // cos(theta) - 1 = -2 sin^2(theta/2) avoids cancellation near m = 0
        let re = -two * mu * half.sin().powi(2);
        let im = mu * (two * half).sin();
        g[m] = Complex::from_polar(re.exp(), im);
        if m != 0 {
            g[n - m] = g[m].conj();
        }
    }
    g[0] = Complex::new(T::one(), T::zero());
    CVector::new(g)
}

/// Poisson(`mu`) mass collected by residue class: entry `k` is the probability
/// that a Poisson variate is congruent to `k` modulo `n`.
///
/// The pmf is generated by the ratio recurrence outward from the mode, so
/// neither factorials nor powers are formed, and summed up to
/// `ceil(mu + 40 sqrt(mu + 1) + n)`.
pub fn g_tilde<T: Real>(mu: T, n: usize) -> Result<ProbDist<T>> {
    if n == 0 {
        return Err(Error::ZeroComponents);
    }
    if mu.is_nan() || mu < T::zero() {
        return Err(Error::NegativeMean(mu.as_f64()));
    }
    let mut classes = vec![T::zero(); n];
    if mu == T::zero() {
        classes[0] = T::one();
        return ProbDist::new(classes);
    }
    let mu_f = mu.as_f64();
    let j_max = (mu_f + 40.0 * (mu_f + 1.0).sqrt() + n as f64).ceil() as usize;
    let mode = (mu_f.floor() as usize).min(j_max);

    let p_mode = (-mu + T::from_count(mode) * mu.ln() - ln_factorial::<T>(mode)).exp();
    let mut p = p_mode;
    classes[mode % n] += p;
    for j in mode + 1..=j_max {
        p = p * mu / T::from_count(j);
        classes[j % n] += p;
    }
    p = p_mode;
    for j in (0..mode).rev() {
        p = p * T::from_count(j + 1) / mu;
        classes[j % n] += p;
    }
    ProbDist::new(classes)
}

/// Natural logarithms of the [`g_tilde`] weights.
///
/// Stays finite for classes whose mass is below the smallest representable
/// float (large `n` with small `mu`), so ratios of weights remain usable.
pub fn ln_g_tilde<T: Real>(mu: T, n: usize) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::ZeroComponents);
    }
    if mu.is_nan() || mu < T::zero() {
        return Err(Error::NegativeMean(mu.as_f64()));
    }
    if mu == T::zero() {
        let mut out = vec![T::neg_infinity(); n];
        out[0] = T::zero();
        return Ok(out);
    }
    let mu_f = mu.as_f64();
    let j_max = (mu_f + 40.0 * (mu_f + 1.0).sqrt() + n as f64).ceil() as usize;
    let ln_mu = mu.ln();
    let mut ln_fact = T::zero();
    let ln_p: Vec<T> = (0..=j_max)
        .map(|j| {
            if j > 1 {
                ln_fact += T::from_count(j).ln();
            }
            -mu + T::from_count(j) * ln_mu - ln_fact
        })
        .collect();
    Ok((0..n)
        .map(|k| {
            let terms = ln_p.iter().skip(k).step_by(n);
            let peak = terms.clone().fold(T::neg_infinity(), |a, &b| a.max(b));
            peak + terms.fold(T::zero(), |acc, &t| acc + (t - peak).exp()).ln()
        })
        .collect())
}
