use crate::error::{Error, Result};
use crate::scalar::{ln_factorial, Real};

/// Weights below this contribute nothing to an entropy.
const ENTROPY_FLOOR: f64 = 1e-15;

/// Non-negative weights summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbDist<T> {
    weights: Vec<T>,
}

impl<T: Real> ProbDist<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("no weights".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.is_nan() || **w < T::zero()) {
            return Err(Error::InvalidDistribution(format!(
                "negative or NaN weight {w}"
            )));
        }
        let total = weights.iter().fold(T::zero(), |acc, &w| acc + w);
        if (total - T::one()).abs() > T::tol(1e-10) {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {total}"
            )));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn into_inner(self) -> Vec<T> {
        self.weights
    }

    /// Weights sorted in descending order.
    pub fn sorted_desc(&self) -> Vec<T> {
        let mut w = self.weights.clone();
        w.sort_by(|a, b| b.partial_cmp(a).expect("weights are not NaN"));
        w
    }
}

/// Shannon entropy in bits with `0 log 0 = 0`.
pub fn shannon_entropy<T: Real>(p: &ProbDist<T>) -> T {
    let floor = T::lit(ENTROPY_FLOOR);
    let h = p
        .weights()
        .iter()
        .filter(|&&w| w >= floor)
        .fold(T::zero(), |acc, &w| acc - w * w.log2());
    h.max(T::zero())
}

/// Binomial(q, 1/2): the photon-number split of `|q>` on a balanced beam splitter.
pub fn binomial_dist<T: Real>(q: usize) -> ProbDist<T> {
    let ln_qf = ln_factorial::<T>(q);
    let ln_half = T::from_count(q) * T::LN_2();
    let weights = (0..=q)
        .map(|k| (ln_qf - ln_factorial::<T>(k) - ln_factorial::<T>(q - k) - ln_half).exp())
        .collect();
    ProbDist::new(weights).expect("binomial weights are normalized")
}
