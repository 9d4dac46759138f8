//! JSON state descriptors:
//! `{"kind": "rics"|"kerr"|"custom", "N": int, "alpha0": [re, im], "q": int, "coeffs": [[re, im], ...]}`.
//!
//! `q` is required for `rics` and `coeffs` for `custom`; `alpha0` is the
//! per-mode radius.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::entanglement::TwoModeState;
use crate::error::{Error, Result};
use crate::spectral::CVector;
use crate::states::{kerr_state, rics_coefficients, CircularState, RicsLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Rics,
    Kerr,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDescriptor {
    pub kind: StateKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub alpha0: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<[f64; 2]>>,
}

impl StateDescriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        let d: Self = serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroComponents);
        }
        if !self.alpha0.iter().all(|x| x.is_finite()) {
            return Err(Error::Descriptor("alpha0 must be finite".into()));
        }
        match self.kind {
            StateKind::Rics if self.q.is_none() => Err(Error::Descriptor("rics requires q".into())),
            StateKind::Custom => match &self.coeffs {
                None => Err(Error::Descriptor("custom requires coeffs".into())),
                Some(c) if c.len() != self.n => Err(Error::Descriptor(format!(
                    "custom has {} coeffs for N={}",
                    c.len(),
                    self.n
                ))),
                Some(c) if !c.iter().flatten().all(|x| x.is_finite()) => {
                    Err(Error::Descriptor("coeffs must be finite".into()))
                }
                Some(_) => Ok(()),
            },
            _ => Ok(()),
        }
    }

    pub fn alpha0(&self) -> Complex<f64> {
        Complex::new(self.alpha0[0], self.alpha0[1])
    }

    pub fn rics_label(&self) -> Option<Result<RicsLabel<f64>>> {
        match self.kind {
            StateKind::Rics => Some(RicsLabel::new(self.n, self.q.unwrap_or(0), self.alpha0())),
            _ => None,
        }
    }

    /// The described coefficients as a single-mode state on a circle of radius `radius`.
    /// Custom coefficients are rescaled to unit norm.
    pub fn single_mode(&self, radius: Complex<f64>) -> Result<CircularState<f64>> {
        match self.kind {
            StateKind::Rics => {
                rics_coefficients(&RicsLabel::new(self.n, self.q.unwrap_or(0), radius)?)
            }
            StateKind::Kerr => kerr_state(self.n, radius),
            StateKind::Custom => CircularState::normalized(radius, self.custom_coeffs()?),
        }
    }

    /// The described single-mode state at radius `alpha0`.
    pub fn circular_state(&self) -> Result<CircularState<f64>> {
        self.single_mode(self.alpha0())
    }

    /// The two-mode state with per-mode radius `alpha0`.
    pub fn two_mode(&self) -> Result<TwoModeState<f64>> {
        self.single_mode(self.alpha0() * std::f64::consts::SQRT_2)
            .map(TwoModeState::from_in_state)
    }

    fn custom_coeffs(&self) -> Result<CVector<f64>> {
        let c = self
            .coeffs
            .as_ref()
            .ok_or_else(|| Error::Descriptor("custom requires coeffs".into()))?;
        CVector::new(c.iter().map(|&[re, im]| Complex::new(re, im)).collect())
    }
}
