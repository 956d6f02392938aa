//! Text formats: graph6 (short form) and a plain edge list.
//!
//! graph6 layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! six bits per byte (most significant first), each byte offset by 63, with
//! the last byte zero-padded.

use crate::error::{FormatError, GraphError};
use crate::graph::Graph;

/// Largest order representable in graph6 short form.
pub const GRAPH6_MAX_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a graph6 short-form string. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text);
    let bytes = text.as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(FormatError::Empty)?;
    if header == 126 {
        return Err(FormatError::LongForm);
    }
    if !(OFFSET..126).contains(&header) {
        return Err(FormatError::BadHeader(header));
    }
    let n = usize::from(header - OFFSET);
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(FormatError::TrailingBytes(payload.len() - expected));
    }
    if let Some(&b) = payload.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(FormatError::BadPayloadByte(b));
    }

    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in k..expected * 6 {
        if bit(pad) {
            return Err(FormatError::NonZeroPadding);
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Encodes a graph in graph6 short form.
pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::TooLarge(n));
    }
    let mut bits = vec![0u8; payload_len(n)];
    for &(i, j) in g.edges() {
        // Column-major index of (i, j), i < j.
        let k = j * (j - 1) / 2 + i;
        bits[k / 6] |= 1 << (5 - k % 6);
    }
    let mut out = String::with_capacity(1 + bits.len());
    out.push(char::from(n as u8 + OFFSET));
    out.extend(bits.into_iter().map(|b| char::from(b + OFFSET)));
    Ok(out)
}

/// Parses the edge-list format:
///
/// ```text
/// n 4
/// 0 1
/// 1 2
/// ```
///
/// Blank lines and lines starting with `#` are ignored. Edges are normalized
/// and deduplicated.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(FormatError::EdgeList {
        line: 1,
        msg: "missing `n <count>` header".into(),
    })?;
    let mut toks = header.split_whitespace();
    let n = match (toks.next(), toks.next(), toks.next()) {
        (Some("n"), Some(count), None) => parse_index(count, hline)?,
        _ => {
            return Err(FormatError::EdgeList {
                line: hline,
                msg: format!("expected `n <count>`, found `{header}`"),
            })
        }
    };

    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let (u, v) = match (toks.next(), toks.next(), toks.next()) {
            (Some(u), Some(v), None) => (parse_index(u, line)?, parse_index(v, line)?),
            _ => {
                return Err(FormatError::EdgeList {
                    line,
                    msg: format!("expected `u v`, found `{l}`"),
                })
            }
        };
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            }
            .into());
        }
        if u == v {
            return Err(GraphError::SelfLoop(u).into());
        }
        edges.push((u, v));
    }
    Ok(Graph::new(n, edges)?)
}

fn parse_index(tok: &str, line: usize) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::EdgeList {
        line,
        msg: format!("`{tok}` is not a non-negative integer"),
    })
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for &(i, j) in g.edges() {
        s.push_str(&format!("{i} {j}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};
    use proptest::prelude::*;

    /// Reference decoder written straight from the layout description, bit by bit,
    /// without the packing arithmetic used above.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bitstream = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for shift in (0..6).rev() {
                bitstream.push((v >> shift) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 0..n {
            for i in 0..j {
                if bitstream[idx] == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn known_strings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, complete(4).unwrap());
        assert_eq!(reference_decode("C~"), (4, k4.edges().to_vec()));
        let a = parse_graph6("A?").unwrap();
        assert_eq!((a.order(), a.size()), (2, 0));
        assert_eq!(emit_graph6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(emit_graph6(&path(2).unwrap()).unwrap(), "A_");
        assert_eq!(reference_decode("A_"), (2, vec![(0, 1)]));
    }

    #[test]
    fn petgraph_fixture() {
        // Edges a-c, a-e, b-d, d-e on five vertices encode as "DQc".
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn malformed_inputs_are_distinct_errors() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(parse_graph6("D??x"), Err(FormatError::TrailingBytes(1)));
        assert_eq!(
            parse_graph6("D?"),
            Err(FormatError::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(parse_graph6(" "), Err(FormatError::BadHeader(b' ')));
        assert_eq!(parse_graph6("~?@?"), Err(FormatError::LongForm));
        assert_eq!(parse_graph6("A "), Err(FormatError::BadPayloadByte(b' ')));
        // n=2 has one data bit; any other set bit is padding.
        assert_eq!(parse_graph6("A@"), Err(FormatError::NonZeroPadding));
        assert!(parse_graph6("D??").is_ok());
        assert!(parse_graph6("C~\n").is_ok());
    }

    #[test]
    fn too_large_to_emit() {
        assert_eq!(
            emit_graph6(&Graph::empty(63)),
            Err(FormatError::TooLarge(63))
        );
        assert!(emit_graph6(&Graph::empty(62)).is_ok());
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("n 3\n0 1\n1 2").unwrap(), path(3).unwrap());
        assert_eq!(
            parse_edge_list("n 2\n0 0"),
            Err(FormatError::Graph(GraphError::SelfLoop(0)))
        );
        let g = parse_edge_list("n 4\n0 1\n1 0").unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
        assert!(matches!(
            parse_edge_list("n 3\n0 3"),
            Err(FormatError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 x"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        let c = cycle(6).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&c)).unwrap(), c);
    }

    #[test]
    fn petersen_round_trip() {
        let p = petersen();
        let s = emit_graph6(&p).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), p);
        assert_eq!(reference_decode(&s), (10, p.edges().to_vec()));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = emit_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()).unwrap(), s.clone());
            prop_assert_eq!(reference_decode(&s), (g.order(), g.edges().to_vec()));
        }
    }
}
