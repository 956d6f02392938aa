//! Exact permanent of a graph's 0/1 adjacency matrix.

use crate::error::SpectralError;
use crate::graph::Graph;

/// Largest order accepted by [`permanent`]; the cost is `O(2^n n)`.
pub const PERMANENT_MAX_ORDER: usize = 20;

/// Permanent of the adjacency matrix via Ryser's inclusion-exclusion formula,
/// walking column subsets in Gray-code order so each step toggles one column.
///
/// `perm(A) = (-1)^n Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j ∈ S} a_ij`
pub fn permanent(g: &Graph) -> Result<u128, SpectralError> {
    let n = g.order();
    if n > PERMANENT_MAX_ORDER {
        return Err(SpectralError::PermanentTooLarge {
            n,
            max: PERMANENT_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(1);
    }
    let adj = g.adjacency_matrix();
    // Column j as a vector over rows.
    let cols: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(adj[i][j])).collect())
        .collect();

    let mut row_sums = vec![0i64; n];
    let mut in_set = vec![false; n];
    let mut set_size = 0usize;
    let mut total: i128 = 0;
    for step in 1u64..(1u64 << n) {
        let j = step.trailing_zeros() as usize;
        if in_set[j] {
            for (r, c) in row_sums.iter_mut().zip(&cols[j]) {
                *r -= c;
            }
            set_size -= 1;
        } else {
            for (r, c) in row_sums.iter_mut().zip(&cols[j]) {
                *r += c;
            }
            set_size += 1;
        }
        in_set[j] = !in_set[j];

        let prod = row_sums
            .iter()
            .try_fold(1i128, |acc, &s| (s != 0).then(|| acc * i128::from(s)));
        if let Some(p) = prod {
            if set_size.is_multiple_of(2) {
                total += p;
            } else {
                total -= p;
            }
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    Ok(u128::try_from(total).expect("permanent of a 0/1 matrix is non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};

    /// Sum over all permutations of the product of selected entries.
    pub(crate) fn brute_force(g: &Graph) -> u128 {
        fn rec(adj: &[Vec<u8>], row: usize, used: &mut [bool]) -> u128 {
            if row == adj.len() {
                return 1;
            }
            let mut s = 0;
            for c in 0..adj.len() {
                if !used[c] && adj[row][c] == 1 {
                    used[c] = true;
                    s += rec(adj, row + 1, used);
                    used[c] = false;
                }
            }
            s
        }
        let adj = g.adjacency_matrix();
        rec(&adj, 0, &mut vec![false; g.order()])
    }

    #[test]
    fn small_values() {
        assert_eq!(permanent(&complete(2).unwrap()).unwrap(), 1);
        assert_eq!(permanent(&complete(4).unwrap()).unwrap(), 9);
        assert_eq!(brute_force(&complete(4).unwrap()), 9);
        assert_eq!(permanent(&cycle(4).unwrap()).unwrap(), 4);
        assert_eq!(permanent(&Graph::empty(0)).unwrap(), 1);
        assert_eq!(permanent(&Graph::empty(3)).unwrap(), 0);
        assert_eq!(permanent(&path(3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn derangements() {
        // perm(J - I) is the derangement count.
        let d = [1u128, 0, 1, 2, 9, 44, 265, 1854, 14833];
        for (n, &want) in d.iter().enumerate().skip(1) {
            assert_eq!(permanent(&complete(n).unwrap()).unwrap(), want, "n={n}");
        }
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for n in 0..=6 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(permanent(&g).unwrap(), brute_force(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn petersen_matches_brute_force() {
        let p = petersen();
        assert_eq!(permanent(&p).unwrap(), brute_force(&p));
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            permanent(&Graph::empty(21)),
            Err(SpectralError::PermanentTooLarge { n: 21, max: 20 })
        ));
    }
}
