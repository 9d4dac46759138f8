use num_complex::Complex;

use super::{CVector, ProbDist};
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Dense Hermitian matrix in row-major storage.
///
/// Construction checks Hermiticity and then symmetrizes the storage, so the
/// eigensolver always sees an exactly Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> HermitianMatrix<T> {
    pub fn new(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroComponents);
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        let scale = data.iter().fold(T::one(), |acc, z| acc.max(z.norm()));
        let mut asym = T::zero();
        for i in 0..dim {
            for j in i..dim {
                asym = asym.max((data[i * dim + j] - data[j * dim + i].conj()).norm());
            }
        }
        if asym.is_nan() || asym > T::tol(1e-9) * scale {
            return Err(Error::NotHermitian(asym.as_f64()));
        }
        let mut m = Self { dim, data };
        m.symmetrize();
        Ok(m)
    }

    /// Builds from the upper triangle; `f(i, j)` is only called for `i <= j`.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroComponents);
        }
        let mut data = vec![Complex::new(T::zero(), T::zero()); dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let z = f(i, j);
                data[i * dim + j] = z;
                data[j * dim + i] = z.conj();
            }
        }
        let mut m = Self { dim, data };
        m.symmetrize();
        Ok(m)
    }

    /// Circulant matrix `M_{mn} = v(m - n)`; Hermitian when `v(-m) = conj(v(m))`.
    pub fn circulant(v: &CVector<T>) -> Result<Self> {
        let n = v.len();
        let data = (0..n * n)
            .map(|idx| v.at((idx / n) as i64 - (idx % n) as i64))
            .collect();
        Self::new(n, data)
    }

    pub fn diagonal(values: &[T]) -> Result<Self> {
        Self::from_upper(values.len(), |i, j| {
            if i == j {
                Complex::new(values[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    fn symmetrize(&mut self) {
        let n = self.dim;
        let half = T::lit(0.5);
        for i in 0..n {
            self.data[i * n + i].im = T::zero();
            for j in i + 1..n {
                let avg = (self.data[i * n + j] + self.data[j * n + i].conj()) * half;
                self.data[i * n + j] = avg;
                self.data[j * n + i] = avg.conj();
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.dim + j]
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc + self.data[i * self.dim + i].re)
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        (0..self.dim)
            .map(|i| {
                self.data[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, x)| {
                        acc + a * x
                    })
            })
            .collect()
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        let zero = Complex::new(T::zero(), T::zero());
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j) == zero))
    }
}

/// Eigenvalues in descending order with unit eigenvectors (`vectors[k]` pairs with `values[k]`).
#[derive(Clone, Debug)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<Complex<T>>>,
}

/// Cyclic complex Jacobi iteration.
///
/// Each rotation first removes the phase of the pivot `a_pq` and then applies
/// the real symmetric Jacobi rotation. Iteration stops once the off-diagonal
/// Frobenius norm drops below `1e-13 ||M||_F`.
pub fn hermitian_eigen<T: Real>(m: &HermitianMatrix<T>) -> Result<HermitianEigen<T>> {
    let n = m.dim;
    let mut a = m.data.clone();
    let zero = Complex::new(T::zero(), T::zero());
    let mut v = vec![zero; n * n];
    for i in 0..n {
        v[i * n + i] = Complex::new(T::one(), T::zero());
    }
    let target = T::tol(1e-13) * m.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r <= T::min_positive_value() {
                    continue;
                }
                let phase = apq / r;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (r + r);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let s_conj_phase = phase.conj() * s;
                let c_conj_phase = phase.conj() * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c - akq * s_conj_phase;
                    a[k * n + q] = akp * s + akq * c_conj_phase;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c - aqk * s_conj_phase.conj();
                    a[q * n + k] = apk * s + aqk * c_conj_phase.conj();
                }
                a[p * n + q] = zero;
                a[q * n + p] = zero;
                a[p * n + p] = Complex::new(app - t * r, T::zero());
                a[q * n + q] = Complex::new(aqq + t * r, T::zero());

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * c - vkq * s_conj_phase;
                    v[k * n + q] = vkp * s + vkq * c_conj_phase;
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a, n) > target {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .re
            .partial_cmp(&a[i * n + i].re)
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|k| v[k * n + col]).collect())
        .collect();
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm<T: Real>(a: &[Complex<T>], n: usize) -> T {
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[i * n + j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// All eigenvalues, descending.
pub fn hermitian_eigenvalues<T: Real>(m: &HermitianMatrix<T>) -> Result<Vec<T>> {
    if m.is_diagonal() {
        let mut d: Vec<T> = (0..m.dim).map(|i| m.get(i, i).re).collect();
        d.sort_by(|a, b| b.partial_cmp(a).expect("finite diagonal"));
        return Ok(d);
    }
    Ok(hermitian_eigen(m)?.values)
}

/// Spectrum of a trace-one positive semidefinite matrix as a distribution.
///
/// Eigenvalues in `[-1e-12, 0)` are rounding noise and become zero; anything
/// more negative is an error.
pub fn density_spectrum<T: Real>(m: &HermitianMatrix<T>) -> Result<ProbDist<T>> {
    let clip = T::tol(1e-12);
    let values = hermitian_eigenvalues(m)?
        .into_iter()
        .map(|x| {
            if x >= T::zero() {
                Ok(x)
            } else if x >= -clip {
                Ok(T::zero())
            } else {
                Err(Error::NegativeEigenvalue(x.as_f64()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ProbDist::new(values)
}
