//! Two-term approximation of the RICS entanglement near the Fock limit, the
//! region thresholds, and the rank bounds on the maximal entanglement.

use num_complex::Complex;

use super::entanglement_rics;
use crate::error::{Error, Result};
use crate::scalar::{ln_factorial, Real};
use crate::states::RicsLabel;

/// `ln X` with `X = (2 |alpha0|^2)^N / N!`.
fn ln_x<T: Real>(n: usize, alpha0: Complex<T>) -> T {
    let two_mu = T::lit(2.0) * alpha0.norm_sqr();
    T::from_count(n) * two_mu.ln() - ln_factorial::<T>(n)
}

/// `(ln(1/(1+X)), ln(X/(1+X)))` without forming `X`.
fn ln_weights<T: Real>(ln_x: T) -> (T, T) {
    let ln_vac = -softplus(ln_x);
    let ln_bin = -softplus(-ln_x);
    (ln_vac, ln_bin)
}

// ln(1 + e^x)
fn softplus<T: Real>(x: T) -> T {
    if x > T::zero() {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Binomial part `X/(1+X) * (1/2) log2(pi e N / 2)` of the two-term approximation.
pub fn asymptotic_b<T: Real>(n: usize, alpha0: Complex<T>) -> T {
    let (_, ln_bin) = ln_weights(ln_x(n, alpha0));
    let entropy = T::lit(0.5) * (T::PI() * T::E() * T::from_count(n) / T::lit(2.0)).log2();
    ln_bin.exp() * entropy
}

/// Shannon entropy (bits) of the weights `1/(1+X)` and `X/(1+X)`.
pub fn asymptotic_s<T: Real>(n: usize, alpha0: Complex<T>) -> T {
    let (ln_vac, ln_bin) = ln_weights(ln_x(n, alpha0));
    let h = -(ln_vac.exp() * ln_vac + ln_bin.exp() * ln_bin) / T::LN_2();
    h.max(T::zero())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds<T> {
    /// `pi |alpha0|`: end of logarithmic growth.
    pub n1: T,
    /// `2 e |alpha0|^2`: start of the Fock-limit plateau.
    pub n2: T,
    /// Large-`q` plateau estimate `(1/2) log2(pi e q / 2)`; `-inf` at `q = 0`.
    pub e_bin: T,
}

pub fn thresholds<T: Real>(alpha0: Complex<T>, q: usize) -> Thresholds<T> {
    let r = alpha0.norm();
    Thresholds {
        n1: T::PI() * r,
        n2: T::lit(2.0) * T::E() * r * r,
        e_bin: T::lit(0.5) * (T::PI() * T::E() * T::from_count(q) / T::lit(2.0)).log2(),
    }
}

/// Largest RICS entanglement over `q in 0..N`, ties going to the smallest `q`.
pub fn max_q_entanglement<T: Real>(alpha0: Complex<T>, n: usize) -> Result<(usize, T)> {
    let mut best = (0, T::neg_infinity());
    for q in 0..n {
        let e = entanglement_rics(&RicsLabel::new(n, q, alpha0)?)?.e_bits;
        if e > best.1 {
            best = (q, e);
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundsReport<T> {
    pub max_q_e: T,
    pub argmax_q: usize,
    pub lower: T,
    pub upper: T,
    pub satisfied: bool,
}

/// Checks `(1/2) log2 N < max_q E <= log2 N`.
///
/// Only answers for `0 < |alpha0| <= 4`; outside that range the strict lower
/// bound is not established and an error is returned.
pub fn bounds_check<T: Real>(alpha0: Complex<T>, n: usize) -> Result<BoundsReport<T>> {
    let r = alpha0.norm();
    if !(r > T::zero() && r <= T::lit(4.0)) {
        return Err(Error::OutsideVerifiedRange(r.as_f64()));
    }
    if n == 0 {
        return Err(Error::ZeroComponents);
    }
    let upper = T::from_count(n).log2();
    let lower = T::lit(0.5) * upper;
    let (argmax_q, max_q_e) = max_q_entanglement(alpha0, n)?;
    let satisfied = if n == 1 {
        true
    } else {
        max_q_e > lower && max_q_e <= upper + T::tol(1e-9)
    };
    Ok(BoundsReport {
        max_q_e,
        argmax_q,
        lower,
        upper,
        satisfied,
    })
}
