//! Canonical labeling by individualization and colour refinement.
//!
//! The search tree is built from label-independent choices only (refinement
//! orders cells by signature, branching always splits the first non-singleton
//! cell), so the minimum relabelled adjacency over its leaves is an isomorphism
//! invariant. Disconnected and dense graphs are reduced first: components are
//! labelled independently and concatenated in canonical order, and a graph
//! with more than half of all possible edges is labelled through its complement.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::formats::emit_graph6;
use crate::graph::{disjoint_union, Graph};

/// Largest order accepted by the canonical labeler (bitmask adjacency).
pub const CANON_MAX_ORDER: usize = 62;

/// Isomorphism-class representative: graph6 of the canonically labelled graph.
/// Two graphs have equal forms iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    g6: String,
}

impl CanonicalForm {
    pub fn g6(&self) -> &str {
        &self.g6
    }

    /// The canonically labelled graph.
    pub fn graph(&self) -> Graph {
        crate::formats::parse_graph6(&self.g6).expect("canonical forms hold valid graph6")
    }

    /// Wraps a graph6 string that is already known to be canonical (e.g. read
    /// back from a corpus cache written by this crate).
    pub fn from_canonical_g6(g6: String) -> Self {
        CanonicalForm { g6 }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.g6)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.g6)
    }
}

/// Canonical form of `g`.
///
/// # Panics
/// If `g` has more than [`CANON_MAX_ORDER`] vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let c = canonical_graph(g);
    CanonicalForm {
        g6: emit_graph6(&c).expect("order checked by canonical_graph"),
    }
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    assert!(
        g.order() <= CANON_MAX_ORDER,
        "canonical labeling supports n <= {CANON_MAX_ORDER}"
    );
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    if !g.is_connected() {
        let mut parts: Vec<Graph> = g.connected_components().iter().map(canonical_graph).collect();
        parts.sort_by(compare_labelled);
        return disjoint_union(&parts);
    }
    let all = n * (n - 1) / 2;
    if 2 * g.size() > all {
        return canonical_graph(&g.complement()).complement();
    }
    let rows = g.adjacency_bits();
    let best = Search::new(&rows).run();
    let mut edges = Vec::with_capacity(g.size());
    for (i, row) in best.iter().enumerate() {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_sorted_unchecked(n, edges)
}

/// Total order on labelled graphs: by order, then size, then edge list.
fn compare_labelled(a: &Graph, b: &Graph) -> Ordering {
    a.order()
        .cmp(&b.order())
        .then(a.size().cmp(&b.size()))
        .then_with(|| a.edges().cmp(b.edges()))
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    rows: &'a [u64],
    best: Option<Vec<u64>>,
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64]) -> Self {
        Search { rows, best: None }
    }

    fn run(mut self) -> Vec<u64> {
        let n = self.rows.len();
        let root = self.refine(vec![(0..n).collect()]);
        self.descend(root);
        self.best.expect("search visits at least one leaf")
    }

    fn descend(&mut self, part: Partition) {
        let Some(target) = part.iter().position(|c| c.len() > 1) else {
            self.leaf(&part);
            return;
        };
        for &v in &part[target] {
            let mut next = Vec::with_capacity(part.len() + 1);
            next.extend(part[..target].iter().cloned());
            next.push(vec![v]);
            next.push(part[target].iter().copied().filter(|&u| u != v).collect());
            next.extend(part[target + 1..].iter().cloned());
            let refined = self.refine(next);
            self.descend(refined);
        }
    }

    fn leaf(&mut self, part: &Partition) {
        let n = self.rows.len();
        let mut label = vec![0usize; n];
        for (pos, cell) in part.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let mut relabelled = vec![0u64; n];
        for v in 0..n {
            let mut bits = self.rows[v];
            let mut row = 0u64;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << label[u];
            }
            relabelled[label[v]] = row;
        }
        if self.best.as_ref().is_none_or(|b| relabelled < *b) {
            self.best = Some(relabelled);
        }
    }

    /// Colour refinement to the coarsest equitable partition finer than `part`.
    /// Cells are split by the count of neighbours in every current cell and the
    /// pieces ordered by that count vector, keeping the parent's position.
    fn refine(&self, mut part: Partition) -> Partition {
        loop {
            let masks: Vec<u64> = part
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            let mut next: Partition = Vec::with_capacity(part.len());
            for cell in &part {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks
                            .iter()
                            .map(|m| (self.rows[v] & m).count_ones())
                            .collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == part.len() {
                return next;
            }
            part = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen, star};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    /// Minimum upper-triangle bit string over all n! relabelings.
    fn brute_canon(g: &Graph) -> Vec<bool> {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.order();
        permutations(n)
            .into_iter()
            .map(|p| {
                let h = g.relabel(&p);
                (1..n)
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .map(|(i, j)| h.has_edge(i, j))
                    .collect::<Vec<bool>>()
            })
            .min()
            .unwrap()
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::new(n, edges).unwrap()
    }

    fn shuffled(rng: &mut impl Rng, g: &Graph) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    #[test]
    fn relabeling_invariance_examples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let c5 = cycle(5).unwrap();
        let f = canonical_form(&c5);
        for _ in 0..50 {
            assert_eq!(canonical_form(&shuffled(&mut rng, &c5)), f);
        }
        assert_eq!(
            canonical_form(&path(3).unwrap()),
            canonical_form(&star(3).unwrap())
        );
        let prism = Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_ne!(
            canonical_form(&complete_bipartite(3, 3).unwrap()),
            canonical_form(&prism)
        );
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        for g in [petersen(), complete(6).unwrap(), star(7).unwrap()] {
            let c = canonical_graph(&g);
            assert_eq!(c.order(), g.order());
            assert_eq!(c.size(), g.size());
            assert_eq!(canonical_graph(&c), c);
        }
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        // Equal canonical forms exactly when brute-force minimal strings agree.
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let mut samples = Vec::new();
        for _ in 0..150 {
            let n = rng.gen_range(1..=6);
            let p = rng.gen_range(0.2..0.8);
            samples.push(random_graph(&mut rng, n, p));
        }
        let keys: Vec<_> = samples
            .iter()
            .map(|g| (canonical_form(g), (g.order(), brute_canon(g))))
            .collect();
        for a in &keys {
            for b in &keys {
                assert_eq!(a.0 == b.0, a.1 == b.1);
            }
        }
    }

    #[test]
    fn permutation_invariance_random() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let h = shuffled(&mut rng, &g);
            assert_eq!(canonical_form(&g), canonical_form(&h), "{g:?}");
        }
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        // Large automorphism groups are handled through components and complements.
        let k12 = complete(12).unwrap();
        assert_eq!(canonical_graph(&k12), k12);
        let k66 = complete_bipartite(6, 6).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        assert_eq!(
            canonical_form(&k66),
            canonical_form(&shuffled(&mut rng, &k66))
        );
    }
}
