//! Optional on-disk corpus of generated graphs: one canonical graph6 string per
//! line, sorted, one file per `(n, k)`.

use std::fs;
use std::path::PathBuf;

use super::canon::{canonical_form, CanonicalForm};
use super::generate::{check_request, generate_regular};
use crate::error::CatalogError;
use crate::formats::parse_graph6;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SOMBOR_CACHE_DIR";

/// Cache directory from the environment, if set and non-empty.
pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn file_name(n: usize, k: usize) -> String {
    format!("regular_n{n}_k{k}.g6")
}

/// [`generate_regular`] backed by the corpus cache when [`CACHE_ENV`] is set.
/// A missing file is generated and written; a present one is read and each
/// line checked to be a canonical k-regular graph of order `n`.
pub fn load_or_generate(
    n: usize,
    k: usize,
    connected_only: bool,
) -> Result<Vec<CanonicalForm>, CatalogError> {
    let Some(dir) = cache_dir() else {
        return generate_regular(n, k, connected_only);
    };
    // Validate the request before touching the filesystem.
    check_request(n, k)?;
    let path = dir.join(file_name(n, k));
    let all = if path.exists() {
        read_corpus(&path, n, k)?
    } else {
        let all = generate_regular(n, k, false)?;
        let text: String = all.iter().map(|f| format!("{f}\n")).collect();
        fs::create_dir_all(&dir).map_err(|e| CatalogError::Cache(e.to_string()))?;
        fs::write(&path, text).map_err(|e| CatalogError::Cache(e.to_string()))?;
        all
    };
    Ok(all
        .into_iter()
        .filter(|f| !connected_only || f.graph().is_connected())
        .collect())
}

fn read_corpus(path: &std::path::Path, n: usize, k: usize) -> Result<Vec<CanonicalForm>, CatalogError> {
    let bad = |msg: String| CatalogError::Cache(format!("{}: {msg}", path.display()));
    let text = fs::read_to_string(path).map_err(|e| bad(e.to_string()))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let g = parse_graph6(line).map_err(|e| bad(format!("line {}: {e}", i + 1)))?;
        if g.order() != n || g.degrees().regular_degree() != Some(k) {
            return Err(bad(format!("line {}: not a {k}-regular graph of order {n}", i + 1)));
        }
        let form = canonical_form(&g);
        if form.g6() != line {
            return Err(bad(format!("line {}: not in canonical form", i + 1)));
        }
        out.push(form);
    }
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("entries not strictly sorted".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_file_round_trip() {
        let dir = std::env::temp_dir().join(format!("sombor-cache-test-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join(file_name(8, 3));
        let forms = generate_regular(8, 3, false).unwrap();
        let text: String = forms.iter().map(|f| format!("{f}\n")).collect();
        fs::write(&path, &text).unwrap();
        assert_eq!(read_corpus(&path, 8, 3).unwrap(), forms);

        let mut lines: Vec<&str> = text.lines().collect();
        lines.reverse();
        fs::write(&path, lines.join("\n")).unwrap();
        assert!(matches!(read_corpus(&path, 8, 3), Err(CatalogError::Cache(_))));
        assert!(matches!(read_corpus(&path, 8, 4), Err(CatalogError::Cache(_))));
        fs::remove_dir_all(&dir).unwrap();
    }
}
