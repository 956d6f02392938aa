//! Closed-form characteristic polynomials and energies of the elliptic Sombor
//! matrix for paths, cycles, stars, complete bipartite and complete graphs.
//!
//! These are evaluated independently of the eigensolver and are meant to be
//! checked against it. Polynomials whose coefficients are integers are generic
//! over any `Num` ring so they can be built exactly.
//!
//! Edge weights that appear below, all from `(a + b) sqrt(a^2 + b^2)`:
//!
//! | edge degrees | weight | squared |
//! |--------------|--------|---------|
//! | (1, 1)       | 2√2    | 8       |
//! | (1, 2)       | 3√5    | 45      |
//! | (2, 2)       | 4√8    | 128     |

use num_traits::{FromPrimitive, Num};
use serde::Serialize;

use crate::error::ClosedFormError;
use crate::graph::Graph;
use crate::poly::CharPoly;
use crate::scalar::Scalar;
use crate::error::SpectralError;
use crate::spectral::energy;
use crate::weights::{build_matrix, WeightScheme};

/// Squared weight of an edge between two degree-2 vertices.
pub const INNER_W2: i64 = 128;
/// Squared weight of a pendant edge next to a degree-2 vertex.
pub const PENDANT_W2: i64 = 45;

fn c<T: FromPrimitive>(v: i64) -> T {
    T::from_i64(v).expect("constant representable in coefficient type")
}

fn check_min(family: &'static str, min: usize, got: usize) -> Result<(), ClosedFormError> {
    if got < min {
        Err(ClosedFormError::BelowMinimum { family, min, got })
    } else {
        Ok(())
    }
}

/// Characteristic polynomials `Λ_k` of the `k × k` tridiagonal matrices with
/// zero diagonal and constant off-diagonal `w`, where `w² = w2`:
/// `Λ_0 = 1`, `Λ_1 = λ`, `Λ_k = λ Λ_{k-1} - w2 Λ_{k-2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceState<T = f64> {
    minors: Vec<CharPoly<T>>,
    w2: T,
}

impl<T: Num + Clone> RecurrenceState<T> {
    pub fn new(w2: T) -> Self {
        RecurrenceState {
            minors: vec![CharPoly::one(), CharPoly::monomial(1)],
            w2,
        }
    }

    pub fn w2(&self) -> &T {
        &self.w2
    }

    /// `Λ_k`, extending the sequence as needed.
    pub fn minor(&mut self, k: usize) -> &CharPoly<T> {
        while self.minors.len() <= k {
            let len = self.minors.len();
            let next = &self.minors[len - 1].shift(1) - &self.minors[len - 2].scale(self.w2.clone());
            self.minors.push(next);
        }
        &self.minors[k]
    }
}

/// Characteristic polynomial of the elliptic Sombor matrix of `P_n`.
///
/// For `n >= 5`: `λ² Λ_{n-2} - 90 λ Λ_{n-3} + 2025 Λ_{n-4}` with `Λ` built on
/// `w2 = 128`, so `Λ_2 = λ² - 128`. The pendant edges contribute `45 = (3√5)²`.
pub fn path_charpoly<T: Num + Clone + FromPrimitive>(n: usize) -> Result<CharPoly<T>, ClosedFormError> {
    check_min("path", 2, n)?;
    let p = match n {
        2 => CharPoly::from_descending(vec![c(1), c(0), c(-8)]),
        3 => CharPoly::from_descending(vec![c(1), c(0), c(-90), c(0)]),
        4 => CharPoly::from_descending(vec![c(1), c(0), c(-218), c(0), c(2025)]),
        _ => {
            let mut lam = RecurrenceState::new(c::<T>(INNER_W2));
            let a = lam.minor(n - 2).shift(2);
            let b = lam.minor(n - 3).shift(1).scale(c(2 * PENDANT_W2));
            let d = lam.minor(n - 4).scale(c(PENDANT_W2 * PENDANT_W2));
            &(&a - &b) + &d
        }
    };
    Ok(p)
}

/// Uniform elliptic Sombor edge weight of `C_n`: `4√8 = 8√2`.
pub fn cycle_weight<T: Scalar>() -> T {
    T::from_f64_lossy(8.0) * T::from_f64_lossy(2.0).sqrt()
}

/// Characteristic polynomial of the elliptic Sombor matrix of `C_n`:
/// `λ Λ_{n-1} - 2 w² Λ_{n-2} - 2 wⁿ` with `w = 4√8` and `Λ` on `w2 = 128`.
pub fn cycle_charpoly<T: Scalar>(n: usize) -> Result<CharPoly<T>, ClosedFormError> {
    check_min("cycle", 3, n)?;
    let w2 = c::<T>(INNER_W2);
    // wⁿ through integer powers of w² keeps even orders exact.
    let wn = if n.is_multiple_of(2) {
        w2.powi((n / 2) as i32)
    } else {
        w2.powi((n / 2) as i32) * cycle_weight::<T>()
    };
    let mut lam = RecurrenceState::new(w2);
    let head = lam.minor(n - 1).shift(1);
    let tail = lam.minor(n - 2).scale(w2 + w2);
    let two = T::one() + T::one();
    Ok(&(&head - &tail) - &CharPoly::constant(two * wn))
}

/// Elliptic Sombor spectrum of `C_n`: `w · 2cos(2πj/n)`, `j = 0..n`, descending.
pub fn cycle_spectrum<T: Scalar>(n: usize) -> Result<Vec<T>, ClosedFormError> {
    check_min("cycle", 3, n)?;
    let w = cycle_weight::<T>();
    let two = T::one() + T::one();
    let tau = two * T::from_f64_lossy(std::f64::consts::PI);
    let nf = T::from_usize_lossy(n);
    let mut v: Vec<T> = (0..n)
        .map(|j| w * two * (tau * T::from_usize_lossy(j) / nf).cos())
        .collect();
    v.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Ok(v)
}

/// Elliptic Sombor energy of `C_n`, from [`cycle_spectrum`].
pub fn cycle_energy<T: Scalar>(n: usize) -> Result<T, ClosedFormError> {
    Ok(cycle_spectrum::<T>(n)?
        .into_iter()
        .fold(T::zero(), |a, v| a + v.abs()))
}

/// `λ^{n-2} (λ² - (n-1) n² (n² - 2n + 2))` for the star `S_n = K_{1,n-1}`.
pub fn star_charpoly<T: Num + Clone + FromPrimitive>(n: usize) -> Result<CharPoly<T>, ClosedFormError> {
    check_min("star", 2, n)?;
    let n = n as i64;
    let k = (n - 1) * n * n * (n * n - 2 * n + 2);
    let quad = CharPoly::from_descending(vec![c(1), c(0), c(-k)]);
    Ok(quad.shift((n - 2) as usize))
}

/// `2n √((n-1)(n² - 2n + 2))`.
pub fn star_energy<T: Scalar>(n: usize) -> Result<T, ClosedFormError> {
    check_min("star", 2, n)?;
    let nf = T::from_usize_lossy(n);
    let two = T::one() + T::one();
    Ok(two * nf * ((nf - T::one()) * (nf * nf - two * nf + two)).sqrt())
}

/// `λ^{m+n-2} (λ² - mn (m² + n²)(m + n)²)` for `K_{m,n}`.
pub fn bipartite_charpoly<T: Num + Clone + FromPrimitive>(
    m: usize,
    n: usize,
) -> Result<CharPoly<T>, ClosedFormError> {
    check_min("bipartite (m)", 1, m)?;
    check_min("bipartite (n)", 1, n)?;
    let (mi, ni) = (m as i64, n as i64);
    let k = mi * ni * (mi * mi + ni * ni) * (mi + ni) * (mi + ni);
    let quad = CharPoly::from_descending(vec![c(1), c(0), c(-k)]);
    Ok(quad.shift(m + n - 2))
}

/// `2(m + n) √(mn (m² + n²))`.
pub fn bipartite_energy<T: Scalar>(m: usize, n: usize) -> Result<T, ClosedFormError> {
    check_min("bipartite (m)", 1, m)?;
    check_min("bipartite (n)", 1, n)?;
    let (mf, nf) = (T::from_usize_lossy(m), T::from_usize_lossy(n));
    let two = T::one() + T::one();
    Ok(two * (mf + nf) * (mf * nf * (mf * mf + nf * nf)).sqrt())
}

/// `(λ - (n-1) w)(λ + w)^{n-1}` with `w = 2√2 (n-1)²`, the elliptic Sombor
/// weight of every edge of `K_n`.
pub fn complete_charpoly<T: Scalar>(n: usize) -> Result<CharPoly<T>, ClosedFormError> {
    check_min("complete", 2, n)?;
    let w = complete_weight::<T>(n);
    let top = T::from_usize_lossy(n - 1) * w;
    Ok(CharPoly::from_roots(
        std::iter::once(top).chain(std::iter::repeat_n(-w, n - 1)),
    ))
}

fn complete_weight<T: Scalar>(n: usize) -> T {
    let k = T::from_usize_lossy(n - 1);
    let two = T::one() + T::one();
    two * two.sqrt() * k * k
}

/// `4 (n-1)³ √2`: the Sombor energy `2(n-1)²√2` of `K_n` times the regular
/// scaling factor `2k` with `k = n - 1`.
pub fn complete_energy<T: Scalar>(n: usize) -> Result<T, ClosedFormError> {
    check_min("complete", 2, n)?;
    let k = T::from_usize_lossy(n - 1);
    let four = T::from_f64_lossy(4.0);
    Ok(four * k * k * k * (T::one() + T::one()).sqrt())
}

/// Ratio of elliptic Sombor to Sombor energy for a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingReport {
    pub k: usize,
    pub eso_energy: f64,
    pub so_energy: f64,
    /// `None` when the Sombor energy is zero (edgeless graphs).
    pub ratio: Option<f64>,
}

impl ScalingReport {
    /// Expected ratio `2k`.
    pub fn expected(&self) -> f64 {
        2.0 * self.k as f64
    }

    pub fn is_degenerate(&self) -> bool {
        self.ratio.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScalingError {
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// For a `k`-regular graph, `A_ESO = 2k · A_SO` entrywise, so the energy ratio is `2k`.
pub fn regular_scaling_check(g: &Graph) -> Result<ScalingReport, ScalingError> {
    let d = g.degrees();
    let k = d.regular_degree().ok_or(ClosedFormError::NotRegular {
        min: d.min().unwrap_or(0),
        max: d.max().unwrap_or(0),
    })?;
    let eso = energy(&build_matrix::<f64>(g, WeightScheme::EllipticSombor))?.energy;
    let so = energy(&build_matrix::<f64>(g, WeightScheme::Sombor))?.energy;
    Ok(ScalingReport {
        k,
        eso_energy: eso,
        so_energy: so,
        ratio: (so > 0.0).then(|| eso / so),
    })
}
