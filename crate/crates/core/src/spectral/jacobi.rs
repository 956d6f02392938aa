//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use crate::error::SpectralError;
use crate::scalar::Scalar;

pub(crate) const MAX_SWEEPS: usize = 50;

/// Eigen-decomposition of a symmetric matrix given row-major.
///
/// Returns unsorted eigenvalues and, when requested, the eigenvector matrix
/// (row-major, eigenvector `k` in column `k`). Only the upper triangle of
/// `a` is trusted; the lower triangle is overwritten.
pub(crate) fn jacobi_eigen<T: Scalar>(
    a: &mut [T],
    n: usize,
    want_vectors: bool,
) -> Result<(Vec<T>, Option<Vec<T>>), SpectralError> {
    debug_assert_eq!(a.len(), n * n);
    for i in 0..n {
        for j in 0..i {
            a[i * n + j] = a[j * n + i];
        }
    }
    let mut v = want_vectors.then(|| {
        let mut v = vec![T::zero(); n * n];
        for i in 0..n {
            v[i * n + i] = T::one();
        }
        v
    });

    let norm = a.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let tol = T::convergence_floor() * norm;

    let off_mass = |a: &[T]| {
        let mut s = T::zero();
        for i in 0..n {
            for j in i + 1..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (s + s).sqrt()
    };

    let two = T::one() + T::one();
    let mut off = off_mass(a);
    let mut sweeps = 0;
    while off > tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence {
                sweeps,
                off: off.to_f64().unwrap_or(f64::NAN),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (two * apq);
                // t = tan of the rotation angle, smaller root for stability.
                let t = if theta.abs() > T::one() / T::epsilon() {
                    T::one() / (two * theta)
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[k * n + p] = new_p;
                    a[p * n + k] = new_p;
                    a[k * n + q] = new_q;
                    a[q * n + k] = new_q;
                }
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        off = off_mass(a);
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok((values, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_symmetric(rng: &mut impl Rng, n: usize) -> Vec<f64> {
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = rng.gen_range(-10.0..10.0);
                m[i * n + j] = x;
                m[j * n + i] = x;
            }
        }
        m
    }

    #[test]
    fn residuals_are_small() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=12 {
            let m = random_symmetric(&mut rng, n);
            let norm = m.iter().map(|x| x * x).sum::<f64>().sqrt();
            let mut work = m.clone();
            let (vals, vecs) = jacobi_eigen(&mut work, n, true).unwrap();
            let vecs = vecs.unwrap();
            for k in 0..n {
                let mut r2 = 0.0;
                for i in 0..n {
                    let mv: f64 = (0..n).map(|j| m[i * n + j] * vecs[j * n + k]).sum();
                    r2 += (mv - vals[k] * vecs[i * n + k]).powi(2);
                }
                assert!(r2.sqrt() <= 1e-8 * norm, "n={n} k={k} residual {}", r2.sqrt());
            }
            // Orthonormal eigenvectors.
            for a in 0..n {
                for b in 0..n {
                    let dot: f64 = (0..n).map(|i| vecs[i * n + a] * vecs[i * n + b]).sum();
                    let want = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn diagonal_needs_no_sweeps() {
        let mut a = vec![3.0, 0.0, 0.0, -1.0];
        let (vals, _) = jacobi_eigen::<f64>(&mut a, 2, false).unwrap();
        assert_eq!(vals, vec![3.0, -1.0]);
    }

    #[test]
    fn empty_matrix() {
        let (vals, _) = jacobi_eigen::<f64>(&mut [], 0, false).unwrap();
        assert!(vals.is_empty());
    }
}
