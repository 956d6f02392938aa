//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is an immutable value: vertex count plus a sorted, duplicate-free
//! list of normalized edges `(i, j)` with `i < j`. Constructors reject self-loops
//! and out-of-range endpoints, so every `Graph` in circulation is simple.

use std::fmt;

use crate::error::GraphError;

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Vertex degrees, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.iter().copied().min()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// The common degree if every vertex has the same degree.
    ///
    /// The graph on zero vertices is reported as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        match (self.min(), self.max()) {
            (None, None) => Some(0),
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Edges are normalized to
    /// `i < j` and deduplicated.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph { n, edges: out })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    /// Trusted constructor for callers that already hold normalized, sorted,
    /// duplicate-free edges.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(i, j)| i < j && j < n));
        Graph { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> DegreeSequence {
        let mut d = vec![0; self.n];
        for &(i, j) in &self.edges {
            d[i] += 1;
            d[j] += 1;
        }
        DegreeSequence(d)
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for &(i, j) in &self.edges {
            m[i][j] = 1;
            m[j][i] = 1;
        }
        m
    }

    /// Adjacency rows as bitmasks; bit `j` of row `i` is set iff `i ~ j`.
    ///
    /// # Panics
    /// If the order exceeds 64.
    pub fn adjacency_bits(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        let mut rows = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        rows
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (perm[i], perm[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph { n: self.n, edges }
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.size());
        let mut it = self.edges.iter().peekable();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if it.peek() == Some(&&(i, j)) {
                    it.next();
                } else {
                    edges.push((i, j));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Copy of the graph with edge `{a, b}` removed. Removing an absent edge is a no-op.
    pub fn remove_edge(&self, a: usize, b: usize) -> Graph {
        let key = (a.min(b), a.max(b));
        Graph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&e| e != key).collect(),
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            index[old] = new;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                let (a, b) = (index[i], index[j]);
                (a != usize::MAX && b != usize::MAX).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        edges.sort_unstable();
        Graph {
            n: vertices.len(),
            edges,
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone graphs. Vertex order inside each
    /// component follows the original labels.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_vertex_sets()
            .iter()
            .map(|vs| self.induced(vs))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_vertex_sets().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Disjoint union; the k-th graph's vertices are shifted by the total order of
/// the graphs before it.
pub fn disjoint_union<'a, I>(graphs: I) -> Graph
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut n = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges.iter().map(|&(i, j)| (i + n, j + n)));
        n += g.n;
    }
    // Shifted blocks stay sorted and never interleave.
    Graph { n, edges }
}

fn check_min(family: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::BelowMinimum { family, min, got })
    } else {
        Ok(())
    }
}

/// Path `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    check_min("path", 1, n)?;
    Ok(Graph::from_sorted_unchecked(
        n,
        (1..n).map(|i| (i - 1, i)).collect(),
    ))
}

/// Cycle `C_n`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    check_min("cycle", 3, n)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star `S_n = K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    check_min("star", 2, n)?;
    Ok(Graph::from_sorted_unchecked(
        n,
        (1..n).map(|i| (0, i)).collect(),
    ))
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    check_min("complete", 1, n)?;
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// Complete bipartite `K_{m,n}`: parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    check_min("complete_bipartite (m)", 1, m)?;
    check_min("complete_bipartite (n)", 1, n)?;
    let edges = (0..m)
        .flat_map(|i| (m..m + n).map(move |j| (i, j)))
        .collect();
    Ok(Graph::from_sorted_unchecked(m + n, edges))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::new(10, outer.chain(inner).chain(spokes)).expect("petersen edges are valid")
}
