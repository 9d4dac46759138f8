use num_complex::Complex;

use super::{root_of_unity, CVector};
use crate::scalar::Real;

fn transform<T: Real>(v: &CVector<T>, sign: i64, scale: T) -> CVector<T> {
    let n = v.len();
    let twiddles: Vec<Complex<T>> = (0..n).map(|j| root_of_unity(sign * j as i64, n)).collect();
    let out = (0..n)
        .map(|k| {
            let acc = v
                .iter()
                .enumerate()
                .fold(Complex::new(T::zero(), T::zero()), |acc, (m, x)| {
                    acc + x * twiddles[(k * m) % n]
                });
            acc * scale
        })
        .collect();
    CVector::new(out).expect("transform preserves length")
}

/// Forward transform `v~(k) = (1/N) sum_m v(m) exp(-i 2 pi k m / N)`.
pub fn dft<T: Real>(v: &CVector<T>) -> CVector<T> {
    transform(v, 1, T::one() / T::from_count(v.len()))
}

/// Inverse of [`dft`]: `v(m) = sum_k v~(k) exp(i 2 pi k m / N)`.
pub fn idft<T: Real>(v: &CVector<T>) -> CVector<T> {
    transform(v, -1, T::one())
}
