//! Spectra, energies and characteristic polynomials of weighted graph matrices.
//!
//! Every quantity here is derived from one numeric kernel, the cyclic Jacobi
//! eigensolver in [`jacobi`]. Closed-form results elsewhere in the crate are
//! checked against these values.

mod jacobi;
mod permanent;

pub use permanent::{permanent, PERMANENT_MAX_ORDER};

use serde::Serialize;

use crate::error::SpectralError;
use crate::poly::CharPoly;
use crate::scalar::Scalar;
use crate::weights::{WeightScheme, WeightedMatrix};

/// Relative asymmetry above which a matrix is rejected.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Relative width of the windows used to group repeated eigenvalues.
pub const CLUSTER_TOL: f64 = 1e-7;

/// Eigenvalues sorted descending, plus the tolerance used to report multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T = f64> {
    values: Vec<T>,
    tol: T,
}

impl<T: Scalar> Spectrum<T> {
    /// Sorts `values` descending and derives the clustering tolerance
    /// `1e-7 * max(1, |λ_max|)`.
    pub fn from_values(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        let top = values.iter().fold(T::one(), |m, v| m.max(v.abs()));
        Spectrum {
            values,
            tol: T::from_f64_lossy(CLUSTER_TOL) * top,
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |a, &v| a + v)
    }

    pub fn sum_of_squares(&self) -> T {
        self.values.iter().fold(T::zero(), |a, &v| a + v * v)
    }

    pub fn abs_sum(&self) -> T {
        self.values.iter().fold(T::zero(), |a, &v| a + v.abs())
    }

    /// Distinct eigenvalues (cluster means) with multiplicities, descending.
    /// Neighbouring values closer than `tol` fall in one cluster.
    pub fn multiplicities(&self) -> Vec<(T, usize)> {
        let mut out: Vec<(T, usize, T)> = Vec::new();
        let mut last: Option<T> = None;
        for &v in &self.values {
            match (out.last_mut(), last) {
                (Some((_, count, sum)), Some(prev)) if prev - v <= self.tol => {
                    *count += 1;
                    *sum += v;
                }
                _ => out.push((v, 1, v)),
            }
            last = Some(v);
        }
        out.into_iter()
            .map(|(_, c, s)| (s / T::from_usize_lossy(c), c))
            .collect()
    }

    /// Magnitude reference for each characteristic-polynomial coefficient,
    /// ascending. For `c_k` this is the larger of `e_{n-k}(|λ_1|, ..., |λ_n|)`
    /// (the matching coefficient of `Π (λ + |λ_i|)`, which bounds `|c_k|`) and
    /// `ρ^{n-k}` with `ρ` the spectral radius. The floor keeps coefficients that
    /// vanish exactly (zero eigenvalues, bipartite symmetry) measurable: it is
    /// what comparing `p(ρx) / ρ^n` with an absolute tolerance amounts to.
    pub fn coefficient_scale(&self) -> Vec<T> {
        let n = self.values.len();
        let rho = self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let mut c = vec![T::one()];
        for &v in &self.values {
            let a = v.abs();
            let mut next = vec![T::zero(); c.len() + 1];
            for (k, &ck) in c.iter().enumerate() {
                next[k] += ck * a;
                next[k + 1] += ck;
            }
            c = next;
        }
        c.iter()
            .enumerate()
            .map(|(k, &ck)| ck.max(rho.powi((n - k) as i32)))
            .collect()
    }
}

/// Energy of a matrix together with the spectrum it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport<T = f64> {
    pub energy: T,
    pub spectrum: Spectrum<T>,
    pub scheme: Option<WeightScheme>,
}

fn check_symmetric<T: Scalar>(m: &WeightedMatrix<T>) -> Result<(), SpectralError> {
    let (i, j, diff) = m.max_asymmetry();
    let scale = m
        .as_slice()
        .iter()
        .fold(T::one(), |acc, x| acc.max(x.abs()));
    if diff > T::from_f64_lossy(SYMMETRY_TOL) * scale {
        return Err(SpectralError::NotSymmetric {
            i,
            j,
            diff: diff.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Eigenvalues of a symmetric matrix, descending.
pub fn eigenvalues<T: Scalar>(m: &WeightedMatrix<T>) -> Result<Spectrum<T>, SpectralError> {
    check_symmetric(m)?;
    let mut work = m.as_slice().to_vec();
    let (values, _) = jacobi::jacobi_eigen(&mut work, m.dim(), false)?;
    Ok(Spectrum::from_values(values))
}

/// Sum of absolute eigenvalues.
pub fn energy<T: Scalar>(m: &WeightedMatrix<T>) -> Result<EnergyReport<T>, SpectralError> {
    let spectrum = eigenvalues(m)?;
    Ok(EnergyReport {
        energy: spectrum.abs_sum(),
        spectrum,
        scheme: m.scheme(),
    })
}

/// Characteristic polynomial `det(λI - M)`, expanded from the computed spectrum.
pub fn char_poly<T: Scalar>(m: &WeightedMatrix<T>) -> Result<CharPoly<T>, SpectralError> {
    Ok(char_poly_of(&eigenvalues(m)?))
}

/// `Π (λ - λ_i)` over a spectrum.
pub fn char_poly_of<T: Scalar>(s: &Spectrum<T>) -> CharPoly<T> {
    CharPoly::from_roots(s.values().iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path, petersen, star, Graph};
    use crate::weights::build_matrix;
    use rand::{Rng, SeedableRng};

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn eso(g: &Graph) -> WeightedMatrix<f64> {
        build_matrix(g, WeightScheme::EllipticSombor)
    }

    #[test]
    fn zero_and_two_by_two() {
        let s = eigenvalues(&WeightedMatrix::<f64>::zeros(4)).unwrap();
        assert_eq!(s.values(), &[0.0; 4]);
        let s = eigenvalues(&eso(&complete(2).unwrap())).unwrap();
        assert!((s.values()[0] - 2.0 * SQRT2).abs() < 1e-12);
        assert!((s.values()[1] + 2.0 * SQRT2).abs() < 1e-12);
    }

    #[test]
    fn petersen_spectrum() {
        let s = eigenvalues(&eso(&petersen())).unwrap();
        let mult = s.multiplicities();
        assert_eq!(mult.len(), 3);
        let want = [(54.0 * SQRT2, 1), (18.0 * SQRT2, 5), (-36.0 * SQRT2, 4)];
        for ((v, c), (wv, wc)) in mult.iter().zip(want) {
            assert_eq!(*c, wc);
            assert!((v - wv).abs() < 1e-9 * wv.abs());
        }
    }

    #[test]
    fn asymmetric_rejected() {
        let m = WeightedMatrix::from_row_major(2, vec![0.0, 1.0, 1.5, 0.0]).unwrap();
        assert!(matches!(
            eigenvalues(&m),
            Err(SpectralError::NotSymmetric { i: 0, j: 1, .. })
        ));
        let tiny = WeightedMatrix::from_row_major(2, vec![0.0, 1.0, 1.0 + 1e-15, 0.0]).unwrap();
        assert!(eigenvalues(&tiny).is_ok());
        assert!(matches!(
            WeightedMatrix::<f64>::from_row_major(2, vec![0.0; 3]),
            Err(SpectralError::BadShape { n: 2, got: 3 })
        ));
    }

    #[test]
    fn energy_examples() {
        let e = energy(&eso(&star(5).unwrap())).unwrap().energy;
        assert!((e - 10.0 * 68f64.sqrt()).abs() < 1e-9);
        assert!((e - 82.462113).abs() < 1e-6);
        assert_eq!(energy(&eso(&Graph::empty(3))).unwrap().energy, 0.0);
        let k2 = complete(2).unwrap();
        let e = energy(&eso(&disjoint_union([&k2, &k2]))).unwrap().energy;
        assert!((e - 8.0 * SQRT2).abs() < 1e-12);
    }

    #[test]
    fn char_poly_examples() {
        let p = char_poly(&eso(&path(4).unwrap())).unwrap();
        let want = [2025.0, 0.0, -218.0, 0.0, 1.0];
        for (c, w) in p.coeffs().iter().zip(want) {
            assert!((c - w).abs() < 1e-9 * 2025.0);
        }
        let p = char_poly(&eso(&path(3).unwrap())).unwrap();
        let want = [0.0, -90.0, 0.0, 1.0];
        for (c, w) in p.coeffs().iter().zip(want) {
            assert!((c - w).abs() < 1e-10 * 90.0);
        }
        let p = char_poly(&WeightedMatrix::<f64>::zeros(2)).unwrap();
        assert_eq!(p.coeffs(), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn char_poly_vanishes_on_spectrum() {
        for g in [petersen(), cycle(7).unwrap(), star(6).unwrap(), path(9).unwrap()] {
            let m = eso(&g);
            let s = eigenvalues(&m).unwrap();
            let p = char_poly_of(&s);
            assert!(p.is_monic());
            assert!(p.coeff(g.order() - 1).abs() <= g.order() as f64 * 1e-10 * s.values()[0].abs());
            for &v in s.values() {
                assert!(p.eval(v).abs() <= 1e-6 * p.l1_norm());
            }
        }
    }

    #[test]
    fn random_trace_and_frobenius() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let mut data = vec![0.0f64; n * n];
            for i in 0..n {
                for j in i..n {
                    let x = rng.gen_range(-10.0..10.0);
                    data[i * n + j] = x;
                    data[j * n + i] = x;
                }
            }
            let m = WeightedMatrix::from_row_major(n, data).unwrap();
            let s = eigenvalues(&m).unwrap();
            let fro2 = m.frobenius_norm().powi(2);
            assert!((s.sum() - m.trace()).abs() <= 1e-8 * fro2.sqrt().max(1.0));
            assert!((s.sum_of_squares() - fro2).abs() <= 1e-8 * fro2.max(1.0));
        }
    }

    #[test]
    fn bipartite_spectra_are_symmetric() {
        for g in [path(7).unwrap(), cycle(8).unwrap(), star(5).unwrap(), crate::graph::complete_bipartite(2, 5).unwrap()] {
            assert!(g.is_bipartite());
            let s = eigenvalues(&eso(&g)).unwrap();
            let v = s.values();
            for i in 0..v.len() {
                assert!((v[i] + v[v.len() - 1 - i]).abs() <= 1e-9 * v[0].abs().max(1.0));
            }
        }
    }

    #[test]
    fn f32_solver() {
        let m = build_matrix::<f32>(&petersen(), WeightScheme::Adjacency);
        let s = eigenvalues(&m).unwrap();
        let want = [3.0f32, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        for (v, w) in s.values().iter().zip(want) {
            assert!((v - w).abs() < 1e-4, "{v} vs {w}");
        }
        assert!((energy(&m).unwrap().energy - 16.0).abs() < 1e-3);
    }

    #[test]
    fn coefficient_scale_bounds_coefficients() {
        let s = eigenvalues(&eso(&path(6).unwrap())).unwrap();
        let p = char_poly_of(&s);
        for (c, b) in p.coeffs().iter().zip(s.coefficient_scale()) {
            assert!(c.abs() <= b * (1.0 + 1e-12));
        }
    }
}
