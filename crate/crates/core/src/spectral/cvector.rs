use std::ops::Index;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Fixed-length complex vector; [`CVector::at`] indexes modulo the length.
#[derive(Clone, Debug, PartialEq)]
pub struct CVector<T> {
    entries: Vec<Complex<T>>,
}

impl<T: Real> CVector<T> {
    pub fn new(entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Self { entries })
    }

    pub fn from_real(values: &[T]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![Complex::new(T::zero(), T::zero()); len])
    }

    /// Unit vector at `k mod len`.
    pub fn basis(len: usize, k: usize) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        v.entries[k % len] = Complex::new(T::one(), T::zero());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn at(&self, i: i64) -> Complex<T> {
        self.entries[i.rem_euclid(self.len() as i64) as usize]
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex<T>> {
        self.entries.iter()
    }

    pub fn into_inner(self) -> Vec<Complex<T>> {
        self.entries
    }

    pub fn norm_sqr(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            }))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }
}

impl<T> Index<usize> for CVector<T> {
    type Output = Complex<T>;

    fn index(&self, i: usize) -> &Complex<T> {
        &self.entries[i]
    }
}
