//! Catalogs of regular graphs with their spectral data: generation up to
//! isomorphism, per-graph energies, energy-equivalence classes and scans.

pub mod canon;
mod cache;
mod generate;
pub mod reference;

pub use cache::{cache_dir, load_or_generate, CACHE_ENV};
pub use canon::{canonical_form, canonical_graph, CanonicalForm, CANON_MAX_ORDER};
pub use generate::{generate_regular, GENERATION_MAX_ORDER};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::CatalogError;
use crate::spectral::{energy, permanent};
use crate::weights::{build_matrix, eso_index, WeightScheme};

/// Default absolute tolerance for calling two energies equal.
pub const DEFAULT_TOL_CLASS: f64 = 1e-6;

/// Default distance to the nearest integer below which an energy is flagged.
pub const DEFAULT_TOL_INT: f64 = 1e-6;

/// CSV header of [`to_csv`].
pub const CSV_HEADER: &str = "canon_g6,connected,k,so_energy,eso_energy,eso_index,permanent";

/// One isomorphism class of a catalog with its computed invariants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub canon: CanonicalForm,
    pub connected: bool,
    pub k: usize,
    pub so_energy: f64,
    pub eso_energy: f64,
    pub eso_index: f64,
    /// Permanent of the 0/1 adjacency matrix.
    pub permanent: u128,
}

impl CatalogEntry {
    pub fn from_form(canon: CanonicalForm) -> Result<Self, CatalogError> {
        let g = canon.graph();
        let k = g.degrees().max().unwrap_or(0);
        let so = energy(&build_matrix::<f64>(&g, WeightScheme::Sombor))?.energy;
        let eso = energy(&build_matrix::<f64>(&g, WeightScheme::EllipticSombor))?.energy;
        Ok(CatalogEntry {
            connected: g.is_connected(),
            k,
            so_energy: so,
            eso_energy: eso,
            eso_index: eso_index(&g),
            permanent: permanent(&g)?,
            canon,
        })
    }
}

/// All k-regular graphs of order `n` with their energies, index and
/// permanent, in canonical-string order.
pub fn build_catalog(n: usize, k: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    entries_from_forms(load_or_generate(n, k, false)?)
}

pub fn entries_from_forms(forms: Vec<CanonicalForm>) -> Result<Vec<CatalogEntry>, CatalogError> {
    forms.into_par_iter().map(CatalogEntry::from_form).collect()
}

/// Entries grouped by elliptic Sombor energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceClasses {
    pub tol: f64,
    /// Classes in ascending energy order, members in input order.
    pub classes: Vec<Vec<CatalogEntry>>,
}

impl EquivalenceClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class sizes, in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Classes with more than one member.
    pub fn nontrivial(&self) -> impl Iterator<Item = &[CatalogEntry]> {
        self.classes.iter().filter(|c| c.len() > 1).map(Vec::as_slice)
    }

    /// The class containing the entry with canonical form `canon`.
    pub fn class_of(&self, canon: &CanonicalForm) -> Option<&[CatalogEntry]> {
        self.classes
            .iter()
            .find(|c| c.iter().any(|e| &e.canon == canon))
            .map(Vec::as_slice)
    }
}

/// Groups entries whose elliptic Sombor energies lie within `tol` of the
/// smallest energy in their group. Every pair inside a class is then within
/// `tol`, and the smallest energies of consecutive classes differ by more.
pub fn equivalence_classes(entries: &[CatalogEntry], tol: f64) -> EquivalenceClasses {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| {
        entries[a]
            .eso_energy
            .total_cmp(&entries[b].eso_energy)
            .then(a.cmp(&b))
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut anchor = f64::NEG_INFINITY;
    for i in order {
        let e = entries[i].eso_energy;
        match groups.last_mut() {
            Some(g) if e - anchor <= tol => g.push(i),
            _ => {
                anchor = e;
                groups.push(vec![i]);
            }
        }
    }
    EquivalenceClasses {
        tol,
        classes: groups
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g.into_iter().map(|i| entries[i].clone()).collect()
            })
            .collect(),
    }
}

/// Entry of largest elliptic Sombor energy (first in input order on ties).
pub fn max_energy_entry(entries: &[CatalogEntry]) -> Result<&CatalogEntry, CatalogError> {
    entries
        .iter()
        .reduce(|best, e| if e.eso_energy > best.eso_energy { e } else { best })
        .ok_or(CatalogError::Empty)
}

/// An entry whose energy is suspiciously close to an integer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegerSuspect {
    pub canon: CanonicalForm,
    pub eso_energy: f64,
    pub nearest: f64,
    pub distance: f64,
}

/// Entries whose elliptic Sombor energy is within `tol` of an integer.
/// Edgeless graphs have energy 0 and are always flagged.
pub fn integer_energy_scan(entries: &[CatalogEntry], tol: f64) -> Vec<IntegerSuspect> {
    entries
        .iter()
        .filter_map(|e| {
            let nearest = e.eso_energy.round();
            let distance = (e.eso_energy - nearest).abs();
            (distance <= tol).then(|| IntegerSuspect {
                canon: e.canon.clone(),
                eso_energy: e.eso_energy,
                nearest,
                distance,
            })
        })
        .collect()
}

/// Adjacency permanents of the members of one energy class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PermanentGroup {
    pub eso_energy: f64,
    pub members: Vec<CanonicalForm>,
    pub permanents: Vec<u128>,
}

impl PermanentGroup {
    pub fn all_equal(&self) -> bool {
        self.permanents.windows(2).all(|w| w[0] == w[1])
    }
}

/// Permanents of every class, in class order.
pub fn permanent_comparison(classes: &EquivalenceClasses) -> Vec<PermanentGroup> {
    classes
        .classes
        .iter()
        .map(|c| PermanentGroup {
            eso_energy: c[0].eso_energy,
            members: c.iter().map(|e| e.canon.clone()).collect(),
            permanents: c.iter().map(|e| e.permanent).collect(),
        })
        .collect()
}

/// CSV with header [`CSV_HEADER`]; reals carry six decimals.
pub fn to_csv(entries: &[CatalogEntry]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER.split(',')).expect("in-memory write");
    for e in entries {
        w.write_record([
            e.canon.g6().to_string(),
            e.connected.to_string(),
            e.k.to_string(),
            format!("{:.6}", e.so_energy),
            format!("{:.6}", e.eso_energy),
            format!("{:.6}", e.eso_index),
            e.permanent.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// JSON array with the same fields as [`to_csv`], reals rounded to six decimals.
pub fn to_json(entries: &[CatalogEntry]) -> String {
    let rows: Vec<serde_json::Value> = entries
        .iter()
        .map(|e| {
            serde_json::json!({
                "canon_g6": e.canon.g6(),
                "connected": e.connected,
                "k": e.k,
                "so_energy": round6(e.so_energy),
                "eso_energy": round6(e.eso_energy),
                "eso_index": round6(e.eso_index),
                "permanent": e.permanent,
            })
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("serializable")
}

pub(crate) fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}
