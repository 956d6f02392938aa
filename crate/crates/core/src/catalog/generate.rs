//! Exhaustive generation of k-regular graphs up to isomorphism.
//!
//! Backtracking assigns edges vertex by vertex in label order. Labelings are
//! restricted to breadth-first ones: when vertex `v` picks its neighbours
//! above it, any untouched vertices it takes must be the next unused labels in
//! sequence. Every graph has such a labeling, so nothing is lost, and far fewer
//! labelled copies reach the canonical-form deduplication step.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::catalog::canon::{canonical_form, CanonicalForm};
use crate::error::CatalogError;
use crate::graph::Graph;

/// Largest order accepted by [`generate_regular`].
pub const GENERATION_MAX_ORDER: usize = 12;

/// All k-regular graphs of order `n` up to isomorphism, sorted by canonical
/// graph6 string.
pub fn generate_regular(
    n: usize,
    k: usize,
    connected_only: bool,
) -> Result<Vec<CanonicalForm>, CatalogError> {
    check_request(n, k)?;

    // Dense degrees are generated as complements of sparse ones.
    let complemented = n > 0 && 2 * k > n - 1;
    let gen_k = if complemented { n - 1 - k } else { k };

    let labelled = enumerate_labelled(n, gen_k);
    let forms: BTreeSet<CanonicalForm> = labelled
        .par_iter()
        .map(|g| {
            let g = if complemented { g.complement() } else { g.clone() };
            canonical_form(&g)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(forms
        .into_iter()
        .filter(|f| !connected_only || f.graph().is_connected())
        .collect())
}

pub(super) fn check_request(n: usize, k: usize) -> Result<(), CatalogError> {
    if n > GENERATION_MAX_ORDER {
        return Err(CatalogError::OrderTooLarge {
            n,
            max: GENERATION_MAX_ORDER,
        });
    }
    if k >= n.max(1) && !(n == 0 && k == 0) {
        return Err(CatalogError::DegreeTooLarge { n, k });
    }
    if (n * k) % 2 == 1 {
        return Err(CatalogError::Parity { n, k });
    }

    Ok(())
}

/// Breadth-first-labelled k-regular graphs on `n` vertices (with repeats across
/// isomorphism classes).
fn enumerate_labelled(n: usize, k: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    // Vertex 0 is always the first root and its neighbours are 1..=k, so the
    // search starts one level down. Split there for parallel workers.
    let mut st = State::new(n, k);
    if k > 0 {
        for u in 1..=k {
            st.add(0, u);
        }
        st.next_fresh = k + 1;
    } else {
        st.next_fresh = 1;
    }
    let mut out = Vec::new();
    st.extend(1, &mut out);
    out
}

#[derive(Clone)]
struct State {
    n: usize,
    k: usize,
    rows: Vec<u64>,
    deg: Vec<usize>,
    /// Labels below this have been reached by some edge or processed.
    next_fresh: usize,
}

impl State {
    fn new(n: usize, k: usize) -> Self {
        State {
            n,
            k,
            rows: vec![0; n],
            deg: vec![0; n],
            next_fresh: 0,
        }
    }

    fn add(&mut self, a: usize, b: usize) {
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
        self.deg[a] += 1;
        self.deg[b] += 1;
    }

    fn remove(&mut self, a: usize, b: usize) {
        self.rows[a] &= !(1 << b);
        self.rows[b] &= !(1 << a);
        self.deg[a] -= 1;
        self.deg[b] -= 1;
    }

    fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[i] >> j & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_sorted_unchecked(self.n, edges)
    }

    /// Completes vertex `v` and recurses on `v + 1`.
    fn extend(&mut self, v: usize, out: &mut Vec<Graph>) {
        if v == self.n {
            out.push(self.to_graph());
            return;
        }
        let saved_fresh = self.next_fresh;
        if v >= self.next_fresh {
            // v starts a new component.
            self.next_fresh = v + 1;
        }
        let need = self.k - self.deg[v];
        let touched: Vec<usize> = (v + 1..self.next_fresh)
            .filter(|&u| self.deg[u] < self.k)
            .collect();
        let fresh_avail = self.n - self.next_fresh;
        let max_fresh = need.min(fresh_avail);
        for fresh in (0..=max_fresh).rev() {
            let from_touched = need - fresh;
            if from_touched > touched.len() {
                continue;
            }
            let first_fresh = self.next_fresh;
            for u in first_fresh..first_fresh + fresh {
                self.add(v, u);
            }
            self.next_fresh = first_fresh + fresh;
            self.choose(v, &touched, 0, from_touched, out);
            self.next_fresh = first_fresh;
            for u in first_fresh..first_fresh + fresh {
                self.remove(v, u);
            }
        }
        self.next_fresh = saved_fresh;
    }

    /// Picks `left` more neighbours for `v` from `touched[start..]`.
    fn choose(&mut self, v: usize, touched: &[usize], start: usize, left: usize, out: &mut Vec<Graph>) {
        if left == 0 {
            if self.feasible_after(v) {
                self.extend(v + 1, out);
            }
            return;
        }
        for idx in start..=touched.len() - left {
            let u = touched[idx];
            self.add(v, u);
            self.choose(v, touched, idx + 1, left - 1, out);
            self.remove(v, u);
        }
    }

    /// Cheap necessary condition once vertices `0..=v` are complete: every
    /// later vertex can still reach degree `k` using later vertices only, and
    /// the remaining degree deficit is even.
    fn feasible_after(&self, v: usize) -> bool {
        let rest = self.n - v - 1;
        let mut deficit = 0;
        for u in v + 1..self.n {
            let need = self.k - self.deg[u];
            // Possible partners: later vertices not yet adjacent to u.
            let adjacent_later = (self.rows[u] >> (v + 1)).count_ones() as usize;
            if need > rest - 1 - adjacent_later {
                return false;
            }
            deficit += need;
        }
        deficit % 2 == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    /// Regular graphs found by filtering every labelled graph on n vertices.
    fn brute_force(n: usize, k: usize) -> BTreeSet<CanonicalForm> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            if mask.count_ones() as usize * 2 != n * k {
                continue;
            }
            let g = Graph::new(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            if g.degrees().regular_degree() == Some(k) {
                out.insert(canonical_form(&g));
            }
        }
        out
    }

    #[test]
    fn small_counts() {
        assert_eq!(generate_regular(4, 3, false).unwrap(), vec![canonical_form(&complete(4).unwrap())]);
        assert_eq!(generate_regular(6, 3, false).unwrap().len(), 2);
        assert_eq!(generate_regular(8, 3, false).unwrap().len(), 6);
        assert_eq!(generate_regular(8, 3, true).unwrap().len(), 5);
        assert_eq!(generate_regular(6, 2, false).unwrap().len(), 2);
        assert_eq!(generate_regular(5, 0, false).unwrap().len(), 1);
        assert_eq!(generate_regular(0, 0, false).unwrap().len(), 1);
    }

    #[test]
    fn matches_brute_force_up_to_seven() {
        for n in 1..=7 {
            for k in 0..n {
                if n * k % 2 == 1 {
                    continue;
                }
                let got: BTreeSet<_> = generate_regular(n, k, false).unwrap().into_iter().collect();
                assert_eq!(got, brute_force(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(generate_regular(5, 3, false), Err(CatalogError::Parity { n: 5, k: 3 }));
        assert_eq!(generate_regular(4, 4, false), Err(CatalogError::DegreeTooLarge { n: 4, k: 4 }));
        assert_eq!(
            generate_regular(13, 2, false),
            Err(CatalogError::OrderTooLarge { n: 13, max: 12 })
        );
    }

    #[test]
    fn output_is_sorted_and_regular() {
        let forms = generate_regular(8, 4, false).unwrap();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        for f in &forms {
            assert_eq!(f.graph().degrees().regular_degree(), Some(4));
        }
        assert_eq!(forms.len(), 6);
    }
}
