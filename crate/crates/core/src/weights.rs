//! Degree-based edge weights and the weighted graph matrices built from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SpectralError;
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Edge-weight scheme, a symmetric function of the two endpoint degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightScheme {
    /// `(a + b) * sqrt(a^2 + b^2)`
    EllipticSombor,
    /// `sqrt(a^2 + b^2)`
    Sombor,
    /// Constant 1.
    Adjacency,
}

impl WeightScheme {
    pub const ALL: [WeightScheme; 3] = [
        WeightScheme::EllipticSombor,
        WeightScheme::Sombor,
        WeightScheme::Adjacency,
    ];

    pub fn weight<T: Scalar>(self, a: usize, b: usize) -> T {
        let (a, b) = (T::from_usize_lossy(a), T::from_usize_lossy(b));
        match self {
            WeightScheme::EllipticSombor => (a + b) * a.hypot(b),
            WeightScheme::Sombor => a.hypot(b),
            WeightScheme::Adjacency => T::one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::EllipticSombor => "elliptic_sombor",
            WeightScheme::Sombor => "sombor",
            WeightScheme::Adjacency => "adjacency",
        }
    }

    /// Short CLI spelling: `eso`, `so`, `adj`.
    pub fn short_name(self) -> &'static str {
        match self {
            WeightScheme::EllipticSombor => "eso",
            WeightScheme::Sombor => "so",
            WeightScheme::Adjacency => "adj",
        }
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eso" | "elliptic_sombor" | "elliptic-sombor" => Ok(WeightScheme::EllipticSombor),
            "so" | "sombor" => Ok(WeightScheme::Sombor),
            "adj" | "adjacency" => Ok(WeightScheme::Adjacency),
            other => Err(format!("unknown weight scheme `{other}` (expected eso, so or adj)")),
        }
    }
}

/// Dense square matrix, row-major. Matrices built from graphs are symmetric
/// with zero diagonal; matrices built from raw rows are checked for symmetry
/// only when handed to the eigensolver.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedMatrix<T = f64> {
    n: usize,
    data: Vec<T>,
    scheme: Option<WeightScheme>,
}

impl<T: Scalar> WeightedMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        WeightedMatrix {
            n,
            data: vec![T::zero(); n * n],
            scheme: None,
        }
    }

    /// Wraps row-major data of length `n * n`.
    pub fn from_row_major(n: usize, data: Vec<T>) -> Result<Self, SpectralError> {
        if data.len() != n * n {
            return Err(SpectralError::BadShape { n, got: data.len() });
        }
        Ok(WeightedMatrix {
            n,
            data,
            scheme: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn scheme(&self) -> Option<WeightScheme> {
        self.scheme
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
    }

    pub fn sum(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc + x)
    }

    pub fn scaled(&self, factor: T) -> Self {
        WeightedMatrix {
            n: self.n,
            data: self.data.iter().map(|&x| x * factor).collect(),
            scheme: None,
        }
    }

    /// Largest `|a_ij - a_ji|` and where it occurs.
    pub fn max_asymmetry(&self) -> (usize, usize, T) {
        let mut worst = (0, 0, T::zero());
        for i in 0..self.n {
            for j in i + 1..self.n {
                let d = (self.get(i, j) - self.get(j, i)).abs();
                if d > worst.2 {
                    worst = (i, j, d);
                }
            }
        }
        worst
    }

    /// Renders as CSV, one row per line.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:.6}")).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }
}

/// Builds the weighted matrix of `g`: entry `(i, j)` is `scheme.weight(d_i, d_j)`
/// on edges and zero elsewhere.
pub fn build_matrix<T: Scalar>(g: &Graph, scheme: WeightScheme) -> WeightedMatrix<T> {
    let n = g.order();
    let d = g.degrees();
    let mut data = vec![T::zero(); n * n];
    for &(i, j) in g.edges() {
        let w = scheme.weight::<T>(d.get(i), d.get(j));
        data[i * n + j] = w;
        data[j * n + i] = w;
    }
    WeightedMatrix {
        n,
        data,
        scheme: Some(scheme),
    }
}

fn edge_weight_sum<T: Scalar>(g: &Graph, scheme: WeightScheme) -> T {
    let d = g.degrees();
    g.edges()
        .iter()
        .fold(T::zero(), |acc, &(i, j)| acc + scheme.weight::<T>(d.get(i), d.get(j)))
}

/// Elliptic Sombor index: sum over edges of `(d_u + d_v) sqrt(d_u^2 + d_v^2)`.
pub fn eso_index<T: Scalar>(g: &Graph) -> T {
    edge_weight_sum(g, WeightScheme::EllipticSombor)
}

/// Sombor index: sum over edges of `sqrt(d_u^2 + d_v^2)`.
pub fn so_index<T: Scalar>(g: &Graph) -> T {
    edge_weight_sum(g, WeightScheme::Sombor)
}
