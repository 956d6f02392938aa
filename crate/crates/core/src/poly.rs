//! Dense univariate polynomials in `λ`, stored lowest degree first.
//!
//! Generic over any `num_traits::Num` coefficient ring, so integer-coefficient
//! characteristic polynomials can be built exactly (`i64`, `i128`, rationals)
//! and compared against floating-point ones after conversion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, ToPrimitive};

/// Polynomial `Σ c_k λ^k`. Characteristic polynomials are monic of degree `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly<T = f64> {
    coeffs: Vec<T>,
}

impl<T: Num + Clone> CharPoly<T> {
    /// From coefficients `c_0, c_1, ..., c_n`. Trailing zero coefficients are
    /// kept, so the degree is exactly `coeffs.len() - 1`.
    pub fn from_ascending(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        CharPoly { coeffs }
    }

    /// From coefficients `c_n, ..., c_0`.
    pub fn from_descending(mut coeffs: Vec<T>) -> Self {
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    pub fn constant(c: T) -> Self {
        CharPoly { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        CharPoly { coeffs }
    }

    /// `λ - root`.
    pub fn linear(root: T) -> Self {
        CharPoly {
            coeffs: vec![T::zero() - root, T::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs_descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        CharPoly { coeffs }
    }

    pub fn scale(&self, s: T) -> Self {
        CharPoly {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Product of `λ - r` over `roots`.
    pub fn from_roots<I: IntoIterator<Item = T>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    /// Lossy conversion of every coefficient to `f64`.
    pub fn to_f64(&self) -> CharPoly<f64>
    where
        T: ToPrimitive,
    {
        CharPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.to_f64().unwrap_or(f64::NAN))
                .collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        CharPoly {
            coeffs: (0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect(),
        }
    }
}

impl<T: Num + Clone> Add for &CharPoly<T> {
    type Output = CharPoly<T>;
    fn add(self, rhs: Self) -> CharPoly<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Num + Clone> Sub for &CharPoly<T> {
    type Output = CharPoly<T>;
    fn sub(self, rhs: Self) -> CharPoly<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Num + Clone> Neg for &CharPoly<T> {
    type Output = CharPoly<T>;
    fn neg(self) -> CharPoly<T> {
        self.scale(T::zero() - T::one())
    }
}

/// Coefficient convolution.
impl<T: Num + Clone> Mul for &CharPoly<T> {
    type Output = CharPoly<T>;
    fn mul(self, rhs: Self) -> CharPoly<T> {
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        CharPoly { coeffs }
    }
}

impl CharPoly<f64> {
    /// Sum of absolute coefficient values.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Coefficientwise closeness: `|a_k - b_k| <= tol * scale_k` for every `k`.
    ///
    /// `scale` supplies the magnitude each coefficient is measured against; see
    /// [`crate::spectral::Spectrum::coefficient_scale`]. Degrees must agree.
    pub fn max_scaled_deviation(&self, other: &CharPoly<f64>, scale: &[f64]) -> f64 {
        if self.degree() != other.degree() {
            return f64::INFINITY;
        }
        (0..=self.degree())
            .map(|k| {
                let s = scale.get(k).copied().unwrap_or(1.0).max(f64::MIN_POSITIVE);
                (self.coeffs[k] - other.coeffs[k]).abs() / s
            })
            .fold(0.0, f64::max)
    }
}

/// Descending-power rendering: `1 0 -218 0 2025`.
impl<T: Num + Clone + fmt::Display> fmt::Display for CharPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().rev().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
