//! `sombor`: spectra, energies, closed forms and regular-graph catalogs from
//! the command line.
//!
//! Exit status: 0 on success, 1 on bad input, 2 when `verify` finds a failing check.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::Family;
use sombor::catalog::{self, DEFAULT_TOL_CLASS, DEFAULT_TOL_INT};
use sombor::verify::{self, Fault, Faulty, Standard};
use sombor::{formats, Graph, WeightScheme};

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "Degree-weighted graph spectra and energies")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Exactly one graph source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// path:N, cycle:N, star:N, complete:N, bipartite:M,N or petersen.
    #[arg(long)]
    family: Option<Family>,
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file: a line `n <order>` then one `u v` pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl Input {
    fn graph(&self) -> Result<Graph, String> {
        if let Some(f) = self.family {
            return f.graph().map_err(|e| e.to_string());
        }
        if let Some(s) = &self.g6 {
            return formats::parse_graph6(s).map_err(|e| format!("graph6: {e}"));
        }
        let path = self.edges.as_ref().expect("clap enforces one input");
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        formats::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[derive(Debug, Args)]
struct Weighted {
    #[command(flatten)]
    input: Input,
    /// Edge weights: eso (elliptic Sombor), so (Sombor) or adj (adjacency).
    #[arg(long, default_value = "eso")]
    scheme: WeightScheme,
}

#[derive(Debug, Args)]
struct Order {
    /// Number of vertices.
    #[arg(long)]
    order: usize,
    /// Common vertex degree.
    #[arg(long)]
    degree: usize,
    /// Keep connected graphs only.
    #[arg(long)]
    connected_only: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy (sum of absolute eigenvalues) of the weighted matrix.
    Energy(Weighted),
    /// Eigenvalues with multiplicities, descending.
    Spectrum(Weighted),
    /// Characteristic polynomial, descending coefficients.
    Charpoly(Weighted),
    /// Sum of edge weights (elliptic Sombor or Sombor index).
    Index(Weighted),
    /// Closed-form elliptic Sombor polynomial and energy of a family.
    ClosedForm {
        #[arg(long)]
        family: Family,
    },
    /// All k-regular graphs of an order with energies, index and permanent.
    Catalog {
        #[command(flatten)]
        order: Order,
        /// Compare with the published cubic order-10 energies instead.
        #[arg(long)]
        published: bool,
    },
    /// Energy-equivalence classes of a catalog with their permanents.
    Classes {
        #[command(flatten)]
        order: Order,
        /// Energies within this distance are equal.
        #[arg(long, default_value_t = DEFAULT_TOL_CLASS)]
        tol_class: f64,
    },
    /// Run the named self-checks; exit 2 if any fails.
    Verify {
        /// Run only these checks (repeat or comma-separate).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Catalog entries whose elliptic Sombor energy is within a tolerance of an integer.
    ScanInteger {
        /// Single order (default: every order from 1 to 10).
        #[arg(long)]
        order: Option<usize>,
        /// Single degree (default: every degree from 1 to order - 1).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL_INT)]
        tol_int: f64,
    },
}

enum Failure {
    Input(String),
    /// Report text to emit before exiting with status 2.
    Verification(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (text, code) = match run(&cli) {
        Ok(t) => (t, 0),
        Err(Failure::Verification(t)) => (t, 2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    Ok(match &cli.command {
        Command::Energy(w) => report::energy(&w.input.graph()?, w.scheme, fmt)?,
        Command::Spectrum(w) => report::spectrum(&w.input.graph()?, w.scheme, fmt)?,
        Command::Charpoly(w) => report::charpoly(&w.input.graph()?, w.scheme, fmt)?,
        Command::Index(w) => report::index(&w.input.graph()?, w.scheme, fmt),
        Command::ClosedForm { family } => report::closed_form(*family, fmt)?,
        Command::Catalog { order, published } => {
            let entries = entries(order)?;
            if *published {
                report::published(&entries, fmt)?
            } else {
                report::catalog(&entries, fmt)
            }
        }
        Command::Classes { order, tol_class } => {
            if tol_class.is_nan() || *tol_class <= 0.0 {
                return Err(Failure::Input("--tol-class must be positive".into()));
            }
            let entries = entries(order)?;
            if entries.is_empty() {
                return Err(Failure::Input("empty catalog".into()));
            }
            report::classes(&catalog::equivalence_classes(&entries, *tol_class), fmt)
        }
        Command::Verify { only, inject_fault } => {
            let result = match inject_fault {
                Some(f) => verify::run(&Faulty(*f), only),
                None => verify::run(&Standard, only),
            };
            let rep = result?;
            let text = report::verify(&rep, fmt);
            if !rep.all_passed() {
                return Err(Failure::Verification(text));
            }
            text
        }
        Command::ScanInteger {
            order,
            degree,
            tol_int,
        } => scan(*order, *degree, *tol_int, fmt)?,
    })
}

fn entries(o: &Order) -> Result<Vec<catalog::CatalogEntry>, String> {
    let forms = catalog::load_or_generate(o.order, o.degree, o.connected_only).map_err(|e| e.to_string())?;
    catalog::entries_from_forms(forms).map_err(|e| e.to_string())
}

fn scan(order: Option<usize>, degree: Option<usize>, tol: f64, fmt: Format) -> Result<String, String> {
    let orders: Vec<usize> = match order {
        Some(n) => vec![n],
        None => (1..=10).collect(),
    };
    let mut scanned = 0;
    let mut hits = Vec::new();
    for n in orders {
        let degrees: Vec<usize> = match degree {
            Some(k) => vec![k],
            None => (1..n).filter(|k| n * k % 2 == 0).collect(),
        };
        for k in degrees {
            let entries = entries(&Order {
                order: n,
                degree: k,
                connected_only: false,
            })?;
            scanned += entries.len();
            hits.extend(catalog::integer_energy_scan(&entries, tol));
        }
    }
    Ok(report::scan(scanned, tol, &hits, fmt))
}
