//! Named self-checks: closed forms against the eigensolver, union and
//! edge-deletion laws, regular scaling, the cubic order-10 catalog and the
//! numeric kernels. Each check reports its worst measured deviation.
//!
//! Closed forms are read through [`ClosedFormSource`] so a deliberately broken
//! source can be substituted and the corresponding check seen to fail.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::catalog::reference::{cubic10_comparison, CUBIC10_SO_ENERGIES, CUBIC_SCALING};
use crate::catalog::{
    build_catalog, equivalence_classes, integer_energy_scan, max_energy_entry, CatalogEntry,
    DEFAULT_TOL_CLASS, DEFAULT_TOL_INT,
};
use crate::closed_forms;
use crate::error::ClosedFormError;
use crate::formats::{emit_graph6, parse_graph6};
use crate::graph::{complete, complete_bipartite, cycle, disjoint_union, path, petersen, star, Graph};
use crate::poly::CharPoly;
use crate::spectral::{char_poly, eigenvalues, energy, permanent};
use crate::weights::{build_matrix, WeightScheme, WeightedMatrix};

/// Coefficientwise tolerance for characteristic polynomials.
pub const TOL_POLY: f64 = 1e-8;
/// Relative tolerance for closed-form energies and exact identities.
pub const TOL_ENERGY: f64 = 1e-9;
/// Relative tolerance for union laws and eigensolver invariants.
pub const TOL_UNION: f64 = 1e-8;
/// Absolute tolerance against three-decimal published energies.
pub const TOL_TABLE: f64 = 1e-3;
/// Absolute tolerance for the published elliptic Sombor column.
pub const TOL_PUBLISHED: f64 = 1e-2;
/// Absolute tolerance for the Petersen energy `288√2`.
pub const TOL_PETERSEN: f64 = 1e-6;

/// Closed-form expressions under test.
pub trait ClosedFormSource: Sync {
    fn path_charpoly(&self, n: usize) -> Result<CharPoly<f64>, ClosedFormError> {
        closed_forms::path_charpoly::<i64>(n).map(|p| p.to_f64())
    }
    fn cycle_charpoly(&self, n: usize) -> Result<CharPoly<f64>, ClosedFormError> {
        closed_forms::cycle_charpoly(n)
    }
    fn cycle_energy(&self, n: usize) -> Result<f64, ClosedFormError> {
        closed_forms::cycle_energy(n)
    }
    fn star_charpoly(&self, n: usize) -> Result<CharPoly<f64>, ClosedFormError> {
        closed_forms::star_charpoly::<i64>(n).map(|p| p.to_f64())
    }
    fn star_energy(&self, n: usize) -> Result<f64, ClosedFormError> {
        closed_forms::star_energy(n)
    }
    fn bipartite_charpoly(&self, m: usize, n: usize) -> Result<CharPoly<f64>, ClosedFormError> {
        closed_forms::bipartite_charpoly::<i64>(m, n).map(|p| p.to_f64())
    }
    fn bipartite_energy(&self, m: usize, n: usize) -> Result<f64, ClosedFormError> {
        closed_forms::bipartite_energy(m, n)
    }
    fn complete_charpoly(&self, n: usize) -> Result<CharPoly<f64>, ClosedFormError> {
        closed_forms::complete_charpoly(n)
    }
    fn complete_energy(&self, n: usize) -> Result<f64, ClosedFormError> {
        closed_forms::complete_energy(n)
    }
}

/// The crate's closed forms.
#[derive(Debug, Clone, Copy, Default)]
pub struct Standard;

impl ClosedFormSource for Standard {}

/// Deliberate defects for exercising the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Flips the sign of the constant `2wⁿ` term of the cycle polynomial.
    CycleSign,
    /// Drops the `(m + n)²` factor from the bipartite energy.
    BipartiteFactor,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycle-sign" => Ok(Fault::CycleSign),
            "bipartite-factor" => Ok(Fault::BipartiteFactor),
            other => Err(format!("unknown fault `{other}`")),
        }
    }
}

/// [`Standard`] with one [`Fault`] applied.
#[derive(Debug, Clone, Copy)]
pub struct Faulty(pub Fault);

impl ClosedFormSource for Faulty {
    fn cycle_charpoly(&self, n: usize) -> Result<CharPoly<f64>, ClosedFormError> {
        let p = closed_forms::cycle_charpoly::<f64>(n)?;
        if self.0 != Fault::CycleSign {
            return Ok(p);
        }
        // Turn the trailing -2wⁿ into +2wⁿ.
        let wn = closed_forms::cycle_weight::<f64>().powi(n as i32);
        Ok(&p + &CharPoly::constant(4.0 * wn))
    }

    fn bipartite_energy(&self, m: usize, n: usize) -> Result<f64, ClosedFormError> {
        let e = closed_forms::bipartite_energy(m, n)?;
        Ok(match self.0 {
            Fault::BipartiteFactor => e / (m + n) as f64,
            Fault::CycleSign => e,
        })
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Worst deviation observed, in the units of `tolerance`.
    pub deviation: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<5} {:<14} dev {:.3e} (tol {:.0e})  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.deviation,
            self.tolerance,
            self.detail
        )
    }
}

/// All checks that were run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Names accepted by [`run`], in execution order.
pub const CHECK_NAMES: [&str; 17] = [
    "path",
    "cycle",
    "star",
    "bipartite",
    "complete",
    "union",
    "edge-deletion",
    "scaling",
    "counts",
    "published-so",
    "published-eso",
    "classes",
    "petersen",
    "integer-scan",
    "eigen",
    "permanent",
    "graph6",
];

/// Runs the checks named in `only` (all when empty). Unknown names are an error.
pub fn run(source: &dyn ClosedFormSource, only: &[String]) -> Result<Report, String> {
    for name in only {
        if !CHECK_NAMES.contains(&name.as_str()) {
            return Err(format!(
                "unknown check `{name}` (known: {})",
                CHECK_NAMES.join(", ")
            ));
        }
    }
    let selected = |name: &str| only.is_empty() || only.iter().any(|o| o == name);
    let mut cubic10: Option<Vec<CatalogEntry>> = None;
    let mut checks = Vec::new();
    for name in CHECK_NAMES {
        if !selected(name) {
            continue;
        }
        let check = match name {
            "path" => check_path(source),
            "cycle" => check_cycle(source),
            "star" => check_star(source),
            "bipartite" => check_bipartite(source),
            "complete" => check_complete(source),
            "union" => check_union(),
            "edge-deletion" => check_edge_deletion(),
            "scaling" => check_scaling(),
            "counts" => check_counts(),
            "integer-scan" => check_integer_scan(),
            "eigen" => check_eigen(),
            "permanent" => check_permanent(),
            other => {
                let entries = match &cubic10 {
                    Some(e) => e,
                    None => cubic10.insert(build_catalog(10, 3).map_err(|e| e.to_string())?),
                };
                match other {
                    "published-so" => check_published_so(entries),
                    "published-eso" => check_published_eso(entries),
                    "classes" => check_classes(entries),
                    "petersen" => check_petersen(entries),
                    "graph6" => check_graph6(entries),
                    _ => unreachable!("name list is closed"),
                }
            }
        };
        checks.push(check);
    }
    Ok(Report { checks })
}

/// Worst value seen plus the case where it occurred.
struct Worst {
    dev: f64,
    at: String,
    errors: Vec<String>,
}

impl Worst {
    fn new() -> Self {
        Worst {
            dev: 0.0,
            at: String::new(),
            errors: Vec::new(),
        }
    }

    fn see(&mut self, dev: f64, at: impl fmt::Display) {
        if dev > self.dev || dev.is_nan() {
            self.dev = dev;
            self.at = at.to_string();
        }
    }

    fn error(&mut self, e: impl fmt::Display) {
        self.errors.push(e.to_string());
    }

    fn finish(self, name: &'static str, tolerance: f64, cases: usize) -> Check {
        let passed = self.errors.is_empty() && self.dev <= tolerance;
        let mut detail = format!("{cases} cases");
        if !self.at.is_empty() {
            detail.push_str(&format!(", worst at {}", self.at));
        }
        if !self.errors.is_empty() {
            detail.push_str(&format!(", errors: {}", self.errors.join("; ")));
        }
        Check {
            name,
            passed,
            deviation: self.dev,
            tolerance,
            detail,
        }
    }
}

fn eso(g: &Graph) -> WeightedMatrix<f64> {
    build_matrix(g, WeightScheme::EllipticSombor)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Scaled coefficient deviation of `p` from the eigensolver polynomial of `g`,
/// and the relative energy deviation if `e` is given.
fn compare_family(
    w: &mut Worst,
    label: String,
    g: &Graph,
    p: Result<CharPoly<f64>, ClosedFormError>,
    e: Option<Result<f64, ClosedFormError>>,
    ew: &mut Worst,
) {
    let m = eso(g);
    let s = match eigenvalues(&m) {
        Ok(s) => s,
        Err(err) => return w.error(format!("{label}: {err}")),
    };
    match p {
        Ok(p) => {
            let want = CharPoly::from_roots(s.values().iter().copied());
            w.see(p.max_scaled_deviation(&want, &s.coefficient_scale()), &label);
        }
        Err(err) => w.error(format!("{label}: {err}")),
    }
    match e {
        Some(Ok(e)) => ew.see(rel(e, s.abs_sum()), &label),
        Some(Err(err)) => ew.error(format!("{label}: {err}")),
        None => {}
    }
}

/// Charpoly and energy checks of one family folded into one result.
fn family_check(name: &'static str, poly: Worst, en: Worst, cases: usize, has_energy: bool) -> Check {
    let p = poly.finish(name, TOL_POLY, cases);
    if !has_energy {
        return p;
    }
    let e = en.finish(name, TOL_ENERGY, cases);
    // Report in units of each tolerance so one number covers both.
    let dev = (p.deviation / TOL_POLY).max(e.deviation / TOL_ENERGY);
    Check {
        name,
        passed: p.passed && e.passed,
        deviation: dev,
        tolerance: 1.0,
        detail: format!(
            "charpoly dev {:.2e} (tol {TOL_POLY:.0e}; {}), energy dev {:.2e} (tol {TOL_ENERGY:.0e}; {})",
            p.deviation, p.detail, e.deviation, e.detail
        ),
    }
}

fn check_path(src: &dyn ClosedFormSource) -> Check {
    let (mut w, mut ew) = (Worst::new(), Worst::new());
    for n in 2..=12 {
        let g = path(n).expect("n >= 1");
        compare_family(&mut w, format!("P_{n}"), &g, src.path_charpoly(n), None, &mut ew);
    }
    family_check("path", w, ew, 11, false)
}

fn check_cycle(src: &dyn ClosedFormSource) -> Check {
    let (mut w, mut ew) = (Worst::new(), Worst::new());
    for n in 3..=12 {
        let g = cycle(n).expect("n >= 3");
        let label = format!("C_{n}");
        compare_family(&mut w, label, &g, src.cycle_charpoly(n), Some(src.cycle_energy(n)), &mut ew);
    }
    family_check("cycle", w, ew, 10, true)
}

fn check_star(src: &dyn ClosedFormSource) -> Check {
    let (mut w, mut ew) = (Worst::new(), Worst::new());
    for n in 2..=12 {
        let g = star(n).expect("n >= 2");
        let label = format!("S_{n}");
        compare_family(&mut w, label, &g, src.star_charpoly(n), Some(src.star_energy(n)), &mut ew);
    }
    family_check("star", w, ew, 11, true)
}

fn check_bipartite(src: &dyn ClosedFormSource) -> Check {
    let (mut w, mut ew) = (Worst::new(), Worst::new());
    let mut cases = 0;
    for m in 1..12 {
        for n in 1..=12 - m {
            let g = complete_bipartite(m, n).expect("m, n >= 1");
            let label = format!("K_{{{m},{n}}}");
            let e = Some(src.bipartite_energy(m, n));
            compare_family(&mut w, label, &g, src.bipartite_charpoly(m, n), e, &mut ew);
            cases += 1;
        }
    }
    family_check("bipartite", w, ew, cases, true)
}

fn check_complete(src: &dyn ClosedFormSource) -> Check {
    let (mut w, mut ew) = (Worst::new(), Worst::new());
    for n in 2..=10 {
        let g = complete(n).expect("n >= 1");
        let label = format!("K_{n}");
        compare_family(&mut w, label, &g, src.complete_charpoly(n), Some(src.complete_energy(n)), &mut ew);
    }
    family_check("complete", w, ew, 9, true)
}

/// A random member of one of the closed-form families, at most 8 vertices.
pub fn random_family_graph(rng: &mut impl Rng) -> (String, Graph) {
    match rng.gen_range(0..6) {
        0 => {
            let n = rng.gen_range(1..=8);
            (format!("P_{n}"), path(n).expect("n >= 1"))
        }
        1 => {
            let n = rng.gen_range(3..=8);
            (format!("C_{n}"), cycle(n).expect("n >= 3"))
        }
        2 => {
            let n = rng.gen_range(2..=8);
            (format!("S_{n}"), star(n).expect("n >= 2"))
        }
        3 => {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=4);
            (format!("K_{{{m},{n}}}"), complete_bipartite(m, n).expect("m, n >= 1"))
        }
        4 => {
            let n = rng.gen_range(1..=6);
            (format!("K_{n}"), complete(n).expect("n >= 1"))
        }
        _ => ("Petersen".to_string(), petersen()),
    }
}

fn check_union() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut w = Worst::new();
    for _ in 0..50 {
        let parts: Vec<(String, Graph)> = (0..rng.gen_range(2..=4))
            .map(|_| random_family_graph(&mut rng))
            .collect();
        let label = parts.iter().map(|p| p.0.as_str()).collect::<Vec<_>>().join("+");
        let u = disjoint_union(parts.iter().map(|p| &p.1));
        let (Ok(whole), Ok(s)) = (energy(&eso(&u)), eigenvalues(&eso(&u))) else {
            w.error(format!("{label}: eigensolver failed"));
            continue;
        };
        let mut sum = 0.0;
        let mut prod = CharPoly::one();
        for (_, g) in &parts {
            match (energy(&eso(g)), char_poly(&eso(g))) {
                (Ok(e), Ok(p)) => {
                    sum += e.energy;
                    prod = &prod * &p;
                }
                _ => w.error(format!("{label}: eigensolver failed on a part")),
            }
        }
        w.see(rel(sum, whole.energy), format!("{label} (energy)"));
        let dev = prod.max_scaled_deviation(&CharPoly::from_roots(s.values().iter().copied()), &s.coefficient_scale());
        w.see(dev, format!("{label} (charpoly)"));
    }
    w.finish("union", TOL_UNION, 50)
}

fn check_edge_deletion() -> Check {
    let mut w = Worst::new();
    for n in 3..=12 {
        let c = cycle(n).expect("n >= 3");
        let s = star(n).expect("n >= 2");
        let pairs = [
            (format!("C_{n}-e vs P_{n}"), c.remove_edge(0, 1), path(n).expect("n >= 1")),
            (
                format!("S_{n}-e vs S_{}", n - 1),
                s.remove_edge(0, n - 1),
                star(n - 1).expect("n >= 2"),
            ),
        ];
        for (label, a, b) in pairs {
            match (energy(&eso(&a)), energy(&eso(&b))) {
                (Ok(x), Ok(y)) => w.see(rel(x.energy, y.energy), label),
                _ => w.error(format!("{label}: eigensolver failed")),
            }
        }
    }
    w.finish("edge-deletion", TOL_ENERGY, 20)
}

fn check_scaling() -> Check {
    let mut w = Worst::new();
    let mut graphs: Vec<(String, Graph)> = vec![("Petersen".into(), petersen())];
    graphs.extend((3..=12).map(|n| (format!("C_{n}"), cycle(n).expect("n >= 3"))));
    graphs.extend((2..=10).map(|n| (format!("K_{n}"), complete(n).expect("n >= 1"))));
    graphs.extend((1..=6).map(|n| (format!("K_{{{n},{n}}}"), complete_bipartite(n, n).expect("n >= 1"))));
    let cases = graphs.len();
    for (label, g) in graphs {
        match closed_forms::regular_scaling_check(&g) {
            Ok(r) => match r.ratio {
                Some(ratio) => w.see(rel(ratio, r.expected()), label),
                None => w.error(format!("{label}: zero Sombor energy")),
            },
            Err(e) => w.error(format!("{label}: {e}")),
        }
    }
    w.finish("scaling", TOL_ENERGY, cases)
}

fn check_counts() -> Check {
    let want = [((4, 3, false), 1), ((6, 3, false), 2), ((10, 3, false), 21), ((10, 3, true), 19)];
    let mut w = Worst::new();
    let mut got = Vec::new();
    for ((n, k, conn), count) in want {
        match crate::catalog::load_or_generate(n, k, conn) {
            Ok(forms) => {
                got.push(format!("({n},{k}{})={}", if conn { ",conn" } else { "" }, forms.len()));
                w.see(forms.len().abs_diff(count) as f64, format!("({n},{k})"));
            }
            Err(e) => w.error(e),
        }
    }
    let mut c = w.finish("counts", 0.0, want.len());
    c.detail = got.join(" ");
    c
}

/// Sorted computed Sombor energies paired with sorted published ones.
fn published_so_deviations(entries: &[CatalogEntry]) -> Vec<(f64, f64)> {
    let mut got: Vec<f64> = entries.iter().map(|e| e.so_energy).collect();
    got.sort_by(f64::total_cmp);
    let mut want = CUBIC10_SO_ENERGIES.to_vec();
    want.sort_by(f64::total_cmp);
    got.into_iter().zip(want).collect()
}

fn check_published_so(entries: &[CatalogEntry]) -> Check {
    let mut w = Worst::new();
    if entries.len() != CUBIC10_SO_ENERGIES.len() {
        w.error(format!("expected 21 entries, got {}", entries.len()));
    }
    let mut outside = Vec::new();
    for (got, want) in published_so_deviations(entries) {
        let dev = (got - want).abs();
        w.see(dev, format!("published {want:.3}, computed {got:.6}"));
        if dev > TOL_TABLE {
            outside.push(format!("{want:.3} vs {got:.6}"));
        }
    }
    let mut c = w.finish("published-so", TOL_TABLE, 21);
    if !outside.is_empty() {
        c.detail.push_str(&format!(", outside tolerance: {}", outside.join(", ")));
    }
    c
}

fn check_published_eso(entries: &[CatalogEntry]) -> Check {
    let mut w = Worst::new();
    let Some(rows) = cubic10_comparison(entries) else {
        w.error("expected 21 entries");
        return w.finish("published-eso", TOL_PUBLISHED, 0);
    };
    let mut scaling = 0.0f64;
    for e in entries {
        scaling = scaling.max(rel(e.eso_energy, CUBIC_SCALING * e.so_energy));
    }
    if scaling > TOL_ENERGY {
        w.error(format!("eso/so deviates from 6 by {scaling:.2e} relative"));
    }
    let mut off = Vec::new();
    for r in &rows {
        w.see(r.published_residual.abs(), format!("row {}", r.row));
        if !r.is_factor_216(TOL_PUBLISHED) {
            off.push(format!("row {} ratio {:.4}", r.row, r.published_ratio));
        }
    }
    let mut c = w.finish("published-eso", TOL_PUBLISHED, rows.len());
    c.detail = format!(
        "eso = 6 so to {scaling:.1e} rel; published column = 216 x Sombor column on {}/21 rows{}",
        21 - off.len(),
        if off.is_empty() { String::new() } else { format!(" (not: {})", off.join(", ")) }
    );
    c
}

fn check_classes(entries: &[CatalogEntry]) -> Check {
    let cls = equivalence_classes(entries, DEFAULT_TOL_CLASS);
    let mut sizes = cls.sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let doubles: Vec<String> = cls
        .nontrivial()
        .map(|c| format!("{:.3}", c[0].so_energy))
        .collect();
    let ok = cls.len() == 18 && sizes[..3] == [2, 2, 2] && sizes[3..].iter().all(|&s| s == 1);
    Check {
        name: "classes",
        passed: ok,
        deviation: (cls.len() as f64 - 18.0).abs(),
        tolerance: 0.0,
        detail: format!("{} classes, doubletons at Sombor energy {}", cls.len(), doubles.join(", ")),
    }
}

fn check_petersen(entries: &[CatalogEntry]) -> Check {
    let mut w = Worst::new();
    let Ok(top) = max_energy_entry(entries) else {
        w.error("empty catalog");
        return w.finish("petersen", TOL_PETERSEN, 0);
    };
    let target = 288.0 * std::f64::consts::SQRT_2;
    w.see((top.eso_energy - target).abs(), "eso vs 288√2");
    if (top.so_energy - 67.882).abs() > TOL_TABLE {
        w.error(format!("so_energy {:.6} not 67.882", top.so_energy));
    }
    let petersen_form = crate::catalog::canonical_form(&petersen());
    let cls = equivalence_classes(entries, DEFAULT_TOL_CLASS);
    let size = cls.class_of(&top.canon).map_or(0, <[_]>::len);
    if size != 2 {
        w.error(format!("class size {size}, expected 2"));
    }
    let in_class = cls
        .class_of(&top.canon)
        .is_some_and(|c| c.iter().any(|e| e.canon == petersen_form));
    if !in_class {
        w.error("Petersen graph not in the top class");
    }
    let mut c = w.finish("petersen", TOL_PETERSEN, 1);
    c.detail = format!(
        "max eso {:.6}, so {:.6}, class size {size}, contains Petersen: {in_class}",
        top.eso_energy, top.so_energy
    );
    c
}

fn check_integer_scan() -> Check {
    let mut flagged = Vec::new();
    let mut scanned = 0;
    let mut w = Worst::new();
    for n in 1..=10 {
        for k in 1..n {
            if n * k % 2 == 1 {
                continue;
            }
            match build_catalog(n, k) {
                Ok(entries) => {
                    scanned += entries.len();
                    for s in integer_energy_scan(&entries, DEFAULT_TOL_INT) {
                        flagged.push(format!("{} ({:.9})", s.canon, s.eso_energy));
                    }
                }
                Err(e) => w.error(e),
            }
        }
    }
    w.see(flagged.len() as f64, "flagged entries");
    let mut c = w.finish("integer-scan", 0.0, scanned);
    c.detail = if flagged.is_empty() {
        format!("{scanned} graphs, orders 1..=10, degrees >= 1, none within {DEFAULT_TOL_INT:.0e} of an integer")
    } else {
        format!("flagged: {}", flagged.join(", "))
    };
    c
}

fn check_eigen() -> Check {
    let mut rng = StdRng::seed_from_u64(0xe16e);
    let mut w = Worst::new();
    for case in 0..200 {
        let n = rng.gen_range(1..=12);
        let mut data = vec![0.0f64; n * n];
        for i in 0..n {
            for j in i..n {
                let x = rng.gen_range(-10.0..10.0);
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        let m = WeightedMatrix::from_row_major(n, data).expect("n * n entries");
        let Ok(s) = eigenvalues(&m) else {
            w.error(format!("case {case}: eigensolver failed"));
            continue;
        };
        let norm2 = m.frobenius_norm().powi(2);
        let scale = norm2.sqrt().max(1.0);
        w.see((s.sum() - m.trace()).abs() / scale, format!("case {case} trace"));
        w.see((s.sum_of_squares() - norm2).abs() / norm2.max(1.0), format!("case {case} frobenius"));
    }
    w.finish("eigen", TOL_UNION, 200)
}

/// Permanent by summing over all permutations.
fn brute_permanent(g: &Graph) -> u128 {
    fn go(g: &Graph, row: usize, used: &mut [bool]) -> u128 {
        let n = used.len();
        if row == n {
            return 1;
        }
        let mut total = 0;
        for col in 0..n {
            if !used[col] && g.has_edge(row, col) {
                used[col] = true;
                total += go(g, row + 1, used);
                used[col] = false;
            }
        }
        total
    }
    go(g, 0, &mut vec![false; g.order()])
}

fn check_permanent() -> Check {
    let mut w = Worst::new();
    let mut cases = 0;
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("valid pairs");
            cases += 1;
            match permanent(&g) {
                Ok(p) => {
                    let want = brute_permanent(&g);
                    if p != want {
                        w.see(p.abs_diff(want) as f64, format!("n={n} mask={mask:#x}"));
                    }
                }
                Err(e) => w.error(e),
            }
        }
    }
    w.finish("permanent", 0.0, cases)
}

fn check_graph6(entries: &[CatalogEntry]) -> Check {
    let mut w = Worst::new();
    for e in entries {
        let g = e.canon.graph();
        match emit_graph6(&g).and_then(|s| parse_graph6(&s).map(|h| (s, h))) {
            Ok((s, h)) => {
                if s != e.canon.g6() || h != g {
                    w.see(1.0, e.canon.g6());
                }
            }
            Err(err) => w.error(err),
        }
    }
    w.finish("graph6", 0.0, entries.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn closed_form_checks_pass() {
        let r = run(&Standard, &only(&["path", "cycle", "star", "bipartite", "complete"])).unwrap();
        assert_eq!(r.checks.len(), 5);
        for c in &r.checks {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn injected_cycle_sign_flip_is_caught() {
        let r = run(&Faulty(Fault::CycleSign), &only(&["cycle", "star"])).unwrap();
        let failed: Vec<_> = r.failed().map(|c| c.name).collect();
        assert_eq!(failed, vec!["cycle"]);
    }

    #[test]
    fn injected_bipartite_fault_is_caught() {
        let r = run(&Faulty(Fault::BipartiteFactor), &only(&["bipartite"])).unwrap();
        assert!(!r.all_passed());
    }

    #[test]
    fn only_filters_and_rejects_unknown() {
        let r = run(&Standard, &only(&["star"])).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].name, "star");
        assert!(run(&Standard, &only(&["wheel"])).is_err());
    }

    #[test]
    fn law_checks_pass() {
        let r = run(&Standard, &only(&["union", "edge-deletion", "scaling", "counts"])).unwrap();
        for c in &r.checks {
            assert!(c.passed, "{c}");
        }
    }
}
