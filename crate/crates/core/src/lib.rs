//! Entanglement of formation for two-mode circular states of light.
//!
//! A circular state superposes `N` coherent states placed equidistantly on a
//! circle of radius `|alpha0|` in phase space. Split on a balanced beam
//! splitter it yields a two-mode state whose entanglement this crate computes
//! by three routes:
//!
//! * [`entanglement::entanglement_rics`]: closed-form Schmidt coefficients for
//!   rotationally-invariant circular states (RICS);
//! * [`entanglement::entanglement_general`] / [`entanglement::entanglement_kerr`]:
//!   eigenvalues of the `N x N` partial density matrix in the RICS basis;
//! * [`entanglement::fock_oracle`]: the same beam splitter simulated in a
//!   truncated photon-number basis.
//!
//! All numerics are generic over [`Real`]; the aliases below fix the scalar to `f64`.

pub mod descriptor;
pub mod entanglement;
pub mod error;
pub mod scalar;
pub mod spectral;
pub mod states;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type CVector = spectral::CVector<f64>;
pub type HermitianMatrix = spectral::HermitianMatrix<f64>;
pub type ProbDist = spectral::ProbDist<f64>;
pub type CircularState = states::CircularState<f64>;
pub type RicsLabel = states::RicsLabel<f64>;
pub type FockVector = states::FockVector<f64>;
pub type TwoModeState = entanglement::TwoModeState<f64>;
pub type SchmidtDecomposition = entanglement::SchmidtDecomposition<f64>;
pub type EntanglementReport = entanglement::EntanglementReport<f64>;
