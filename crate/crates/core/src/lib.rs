//! Degree-weighted graph matrices and their spectra.
//!
//! A simple graph is turned into a symmetric matrix whose entry on edge `uv`
//! depends on the endpoint degrees: the elliptic Sombor weight
//! `(d_u + d_v) sqrt(d_u^2 + d_v^2)`, the Sombor weight `sqrt(d_u^2 + d_v^2)`,
//! or plain adjacency. From there the crate computes spectra, energies
//! (`Σ |λ_i|`) and characteristic polynomials, evaluates closed forms for the
//! standard families, and builds catalogs of all k-regular graphs of small
//! order up to isomorphism.
//!
//! Numeric code is generic over [`Scalar`] (`f32`, `f64`); integer-coefficient
//! polynomials are generic over any `num_traits::Num` ring.
//!
//! ```
//! use sombor::{build_matrix, energy, graph::petersen, WeightScheme};
//!
//! let m = build_matrix::<f64>(&petersen(), WeightScheme::EllipticSombor);
//! let e = energy(&m).unwrap().energy;
//! assert!((e - 288.0 * 2f64.sqrt()).abs() < 1e-9);
//! ```

pub mod catalog;
pub mod closed_forms;
pub mod error;
pub mod formats;
pub mod graph;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod verify;
pub mod weights;

pub use catalog::{build_catalog, canonical_form, generate_regular, CanonicalForm, CatalogEntry};
pub use error::{CatalogError, ClosedFormError, FormatError, GraphError, SpectralError};
pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use graph::{DegreeSequence, Graph};
pub use poly::CharPoly;
pub use scalar::Scalar;
pub use spectral::{char_poly, eigenvalues, energy, permanent, EnergyReport, Spectrum};
pub use weights::{build_matrix, eso_index, so_index, WeightScheme, WeightedMatrix};

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type WeightedMatrix64 = WeightedMatrix<f64>;
pub type WeightedMatrix32 = WeightedMatrix<f32>;
pub type EnergyReport64 = EnergyReport<f64>;
pub type EnergyReport32 = EnergyReport<f32>;
pub type CharPoly64 = CharPoly<f64>;
/// Exact integer-coefficient polynomials.
pub type CharPolyI128 = CharPoly<i128>;
