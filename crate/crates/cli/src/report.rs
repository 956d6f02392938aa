//! Rendering of command results as text, CSV or JSON.

use serde_json::{json, Value};

use sombor::catalog::reference::{cubic10_comparison, CUBIC_SCALING, PUBLISHED_FACTOR};
use sombor::catalog::{self, CatalogEntry, EquivalenceClasses, IntegerSuspect};
use sombor::closed_forms;
use sombor::verify::Report;
use sombor::{build_matrix, eigenvalues, CharPoly, Graph, Spectrum, WeightScheme};

use crate::input::Family;
use crate::Format;

fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn spectrum_of(g: &Graph, scheme: WeightScheme) -> Result<Spectrum, String> {
    eigenvalues(&build_matrix::<f64>(g, scheme)).map_err(|e| e.to_string())
}

pub fn energy(g: &Graph, scheme: WeightScheme, fmt: Format) -> Result<String, String> {
    let e = spectrum_of(g, scheme)?.abs_sum();
    Ok(match fmt {
        Format::Text => format!("{e:.6}\n"),
        Format::Csv => csv_text(
            &["scheme", "order", "size", "energy"],
            [vec![
                scheme.short_name().into(),
                g.order().to_string(),
                g.size().to_string(),
                format!("{e:.6}"),
            ]],
        ),
        Format::Json => json_text(json!({
            "scheme": scheme,
            "order": g.order(),
            "size": g.size(),
            "energy": round6(e),
        })),
    })
}

pub fn spectrum(g: &Graph, scheme: WeightScheme, fmt: Format) -> Result<String, String> {
    let s = spectrum_of(g, scheme)?;
    let mult = s.multiplicities();
    Ok(match fmt {
        Format::Text => mult
            .iter()
            .map(|(v, m)| format!("{:.6} {m}\n", round6(*v)))
            .collect(),
        Format::Csv => csv_text(
            &["eigenvalue", "multiplicity"],
            mult.iter()
                .map(|(v, m)| vec![format!("{:.6}", round6(*v)), m.to_string()]),
        ),
        Format::Json => json_text(json!({
            "scheme": scheme,
            "eigenvalues": s.values().iter().map(|&v| round6(v)).collect::<Vec<_>>(),
            "multiplicities": mult.iter().map(|(v, m)| json!([round6(*v), m])).collect::<Vec<_>>(),
        })),
    })
}

/// Descending coefficients as strings. Values within `1e-9` (relative to the
/// coefficient scale) of an integer print as that integer, others with six
/// decimals and trailing zeros trimmed.
fn coefficient_strings(p: &CharPoly<f64>, scale: &[f64]) -> Vec<String> {
    let n = p.degree();
    (0..=n)
        .rev()
        .map(|k| {
            let c = p.coeff(k);
            let s = scale.get(k).copied().unwrap_or(1.0).max(1.0);
            let r = c.round();
            if (c - r).abs() <= 1e-9 * s {
                format!("{}", r as i128)
            } else {
                let t = format!("{c:.6}");
                t.trim_end_matches('0').trim_end_matches('.').to_string()
            }
        })
        .collect()
}

fn poly_output(strings: Vec<String>, fmt: Format, extra: Value) -> String {
    match fmt {
        Format::Text => format!("{}\n", strings.join(" ")),
        Format::Csv => {
            let n = strings.len().saturating_sub(1);
            csv_text(
                &["power", "coefficient"],
                strings.into_iter().enumerate().map(|(i, c)| vec![(n - i).to_string(), c]),
            )
        }
        Format::Json => {
            let mut v = extra;
            v["coefficients_descending"] = strings
                .iter()
                .map(|s| serde_json::from_str::<Value>(s).unwrap_or(Value::String(s.clone())))
                .collect();
            json_text(v)
        }
    }
}

pub fn charpoly(g: &Graph, scheme: WeightScheme, fmt: Format) -> Result<String, String> {
    let s = spectrum_of(g, scheme)?;
    let p = sombor::spectral::char_poly_of(&s);
    let strings = coefficient_strings(&p, &s.coefficient_scale());
    Ok(poly_output(strings, fmt, json!({ "scheme": scheme })))
}

pub fn index(g: &Graph, scheme: WeightScheme, fmt: Format) -> String {
    let x = build_matrix::<f64>(g, scheme).sum() / 2.0;
    match fmt {
        Format::Text => format!("{x:.6}\n"),
        Format::Csv => csv_text(&["scheme", "index"], [vec![scheme.short_name().into(), format!("{x:.6}")]]),
        Format::Json => json_text(json!({ "scheme": scheme, "index": round6(x) })),
    }
}

pub fn closed_form(family: Family, fmt: Format) -> Result<String, String> {
    let e = |r: Result<f64, sombor::ClosedFormError>| r.map(Some).map_err(|e| e.to_string());
    let exact = |r: Result<CharPoly<i128>, sombor::ClosedFormError>| {
        r.map(|p| p.coeffs_descending().iter().map(i128::to_string).collect::<Vec<_>>())
            .map_err(|e| e.to_string())
    };
    let g = family.graph().map_err(|e| e.to_string())?;
    let oracle = spectrum_of(&g, WeightScheme::EllipticSombor)?;
    let scale = oracle.coefficient_scale();
    let float = |r: Result<CharPoly<f64>, sombor::ClosedFormError>| {
        r.map(|p| coefficient_strings(&p, &scale)).map_err(|e| e.to_string())
    };
    let (poly, energy) = match family {
        Family::Path(n) => (exact(closed_forms::path_charpoly(n))?, None),
        Family::Cycle(n) => (float(closed_forms::cycle_charpoly(n))?, e(closed_forms::cycle_energy(n))?),
        Family::Star(n) => (exact(closed_forms::star_charpoly(n))?, e(closed_forms::star_energy(n))?),
        Family::Complete(n) => (
            float(closed_forms::complete_charpoly(n))?,
            e(closed_forms::complete_energy(n))?,
        ),
        Family::Bipartite(m, n) => (
            exact(closed_forms::bipartite_charpoly(m, n))?,
            e(closed_forms::bipartite_energy(m, n))?,
        ),
        Family::Petersen => return Err("no closed form for petersen; use `energy`".into()),
    };
    let numeric = oracle.abs_sum();
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("family: {family}\ncharpoly: {}\n", poly.join(" "));
            match energy {
                Some(x) => s.push_str(&format!("energy: {x:.6}\n")),
                None => s.push_str("energy: -\n"),
            }
            s.push_str(&format!("eigensolver energy: {numeric:.6}\n"));
            s
        }
        Format::Csv => csv_text(
            &["family", "charpoly", "energy", "eigensolver_energy"],
            [vec![
                family.to_string(),
                poly.join(" "),
                energy.map_or(String::new(), |x| format!("{x:.6}")),
                format!("{numeric:.6}"),
            ]],
        ),
        Format::Json => poly_output(
            poly,
            Format::Json,
            json!({
                "family": family.to_string(),
                "energy": energy.map(round6),
                "eigensolver_energy": round6(numeric),
            }),
        ),
    })
}

pub fn catalog(entries: &[CatalogEntry], fmt: Format) -> String {
    match fmt {
        Format::Csv => catalog::to_csv(entries),
        Format::Json => {
            let mut s = catalog::to_json(entries);
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:<12} {:<9} {:>10} {:>10} {:>10} {:>10}\n",
                "canon_g6", "connected", "so_energy", "eso_energy", "eso_index", "permanent"
            );
            for e in entries {
                s.push_str(&format!(
                    "{:<12} {:<9} {:>10.3} {:>10.3} {:>10.3} {:>10}\n",
                    e.canon.g6(),
                    e.connected,
                    e.so_energy,
                    e.eso_energy,
                    e.eso_index,
                    e.permanent
                ));
            }
            s
        }
    }
}

pub fn published(entries: &[CatalogEntry], fmt: Format) -> Result<String, String> {
    let rows = cubic10_comparison(entries)
        .ok_or("the published comparison covers the 21 cubic graphs of order 10 (--order 10 --degree 3)")?;
    let factor = |r: f64| if (r - PUBLISHED_FACTOR).abs() < 1e-2 { "216" } else { "other" };
    Ok(match fmt {
        Format::Text => {
            let mut s = format!(
                "{:<4} {:>10} {:>10} {:>11} {:>13} {:>10}\n",
                "row", "so (pub)", "so", "eso = 6 so", "eso (pub)", "pub ratio"
            );
            for r in &rows {
                s.push_str(&format!(
                    "{:<4} {:>10.3} {:>10.3} {:>11.3} {:>13.3} {:>10.3}\n",
                    r.row, r.published_so, r.computed_so, r.computed_eso, r.published_eso, r.published_ratio
                ));
            }
            let off: Vec<String> = rows
                .iter()
                .filter(|r| !r.is_factor_216(1e-2))
                .map(|r| format!("row {}", r.row))
                .collect();
            s.push_str(&format!(
                "computed eso/so = {CUBIC_SCALING}; published eso column = {PUBLISHED_FACTOR} x so column on {}/21 rows",
                21 - off.len()
            ));
            if !off.is_empty() {
                s.push_str(&format!(" (other rows: {})", off.join(", ")));
            }
            s.push('\n');
            s
        }
        Format::Csv => csv_text(
            &[
                "row",
                "published_so",
                "computed_so",
                "computed_eso",
                "published_eso",
                "published_ratio",
                "published_factor",
            ],
            rows.iter().map(|r| {
                vec![
                    r.row.to_string(),
                    format!("{:.3}", r.published_so),
                    format!("{:.6}", r.computed_so),
                    format!("{:.6}", r.computed_eso),
                    format!("{:.3}", r.published_eso),
                    format!("{:.6}", r.published_ratio),
                    factor(r.published_ratio).to_string(),
                ]
            }),
        ),
        Format::Json => json_text(json!(rows
            .iter()
            .map(|r| json!({
                "row": r.row,
                "published_so": r.published_so,
                "computed_so": round6(r.computed_so),
                "computed_eso": round6(r.computed_eso),
                "published_eso": r.published_eso,
                "published_ratio": round6(r.published_ratio),
            }))
            .collect::<Vec<_>>())),
    })
}

pub fn classes(cls: &EquivalenceClasses, fmt: Format) -> String {
    let groups = catalog::permanent_comparison(cls);
    match fmt {
        Format::Text => {
            let sizes = cls.sizes();
            let nontrivial = sizes.iter().filter(|&&s| s > 1).count();
            let mut s = format!(
                "{} classes at tol {:e}, {} with more than one member\n",
                cls.len(),
                cls.tol,
                nontrivial
            );
            for (c, g) in cls.classes.iter().zip(&groups) {
                let perms: Vec<String> = g.permanents.iter().map(u128::to_string).collect();
                let members: Vec<&str> = c.iter().map(|e| e.canon.g6()).collect();
                s.push_str(&format!(
                    "eso {:>10.3}  so {:>8.3}  size {}  {}  permanents {}\n",
                    c[0].eso_energy,
                    c[0].so_energy,
                    c.len(),
                    members.join(","),
                    perms.join(",")
                ));
            }
            s
        }
        Format::Csv => csv_text(
            &["class", "canon_g6", "so_energy", "eso_energy", "permanent"],
            cls.classes.iter().enumerate().flat_map(|(i, c)| {
                c.iter().map(move |e| {
                    vec![
                        i.to_string(),
                        e.canon.g6().to_string(),
                        format!("{:.6}", e.so_energy),
                        format!("{:.6}", e.eso_energy),
                        e.permanent.to_string(),
                    ]
                })
            }),
        ),
        Format::Json => json_text(json!({
            "tol_class": cls.tol,
            "classes": cls.classes.iter().zip(&groups).map(|(c, g)| json!({
                "eso_energy": round6(c[0].eso_energy),
                "so_energy": round6(c[0].so_energy),
                "members": g.members,
                "permanents": g.permanents,
                "equal_permanents": g.all_equal(),
            })).collect::<Vec<_>>(),
        })),
    }
}

pub fn scan(scanned: usize, tol: f64, hits: &[IntegerSuspect], fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = format!(
                "scanned {scanned} graphs; {} with energy within {tol:e} of an integer\n",
                hits.len()
            );
            for h in hits {
                s.push_str(&format!("{} {:.9} (nearest {})\n", h.canon, h.eso_energy, h.nearest));
            }
            s
        }
        Format::Csv => csv_text(
            &["canon_g6", "eso_energy", "nearest", "distance"],
            hits.iter().map(|h| {
                vec![
                    h.canon.g6().to_string(),
                    format!("{:.9}", h.eso_energy),
                    format!("{}", h.nearest),
                    format!("{:.3e}", h.distance),
                ]
            }),
        ),
        Format::Json => json_text(json!({
            "scanned": scanned,
            "tol_int": tol,
            "suspects": hits,
        })),
    }
}

pub fn verify(rep: &Report, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s: String = rep.checks.iter().map(|c| format!("{c}\n")).collect();
            let passed = rep.checks.iter().filter(|c| c.passed).count();
            s.push_str(&format!("{passed}/{} checks passed\n", rep.checks.len()));
            s
        }
        Format::Csv => csv_text(
            &["name", "passed", "deviation", "tolerance", "detail"],
            rep.checks.iter().map(|c| {
                vec![
                    c.name.to_string(),
                    c.passed.to_string(),
                    format!("{:.3e}", c.deviation),
                    format!("{:e}", c.tolerance),
                    c.detail.clone(),
                ]
            }),
        ),
        Format::Json => json_text(serde_json::to_value(rep).expect("report serializes")),
    }
}
