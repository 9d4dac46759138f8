//! Foundation numerics: complex vectors with cyclic indexing, the DFT pair,
//! the coherent-state Gram vector and its Poisson-residue spectrum, entropies,
//! and a dense Hermitian eigensolver.

mod cvector;
mod dft;
mod entropy;
mod hermitian;
mod poisson;

pub use cvector::CVector;
pub use dft::{dft, idft};
pub use entropy::{binomial_dist, shannon_entropy, ProbDist};
pub use hermitian::{
    density_spectrum, hermitian_eigen, hermitian_eigenvalues, HermitianEigen, HermitianMatrix,
};
pub use poisson::{g_tilde, gram_vector, ln_g_tilde};

use num_complex::Complex;

use crate::scalar::Real;

/// `exp(-i 2 pi j / n)` with `j` reduced modulo `n` first.
pub(crate) fn root_of_unity<T: Real>(j: i64, n: usize) -> Complex<T> {
    let n_i = n as i64;
    let j = j.rem_euclid(n_i);
    let theta = -T::TAU() * T::from_i64(j).unwrap() / T::from_count(n);
    Complex::from_polar(T::one(), theta)
}
