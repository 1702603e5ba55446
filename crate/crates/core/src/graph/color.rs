//! Exact chromatic number by DSATUR branch and bound.
//!
//! A maximum clique is precolored to break color symmetry and to give the
//! lower bound; a greedy DSATUR run gives the upper bound. `k_colorable`
//! answers the decision problem for a fixed color budget, and `chromatic`
//! walks the budget down from the greedy bound to the clique bound.

use super::clique;

/// Exact chromatic number plus one optimal coloring.
pub(crate) fn chromatic(rows: &[u64], n: usize) -> (usize, Vec<u8>) {
    if n == 0 {
        return (0, Vec::new());
    }
    if rows.iter().all(|&r| r == 0) {
        return (1, vec![0; n]);
    }
    let (clique_mask, clique_size) = clique::max_clique(rows, n);
    let (greedy_k, greedy_coloring) = greedy_dsatur(rows, n);
    let mut best = (greedy_k, greedy_coloring);
    if clique_size == greedy_k {
        return best;
    }
    let mut k = greedy_k - 1;
    while k >= clique_size {
        match k_colorable_from(rows, n, k, clique_mask, clique_size) {
            Some(coloring) => {
                best = (k, coloring);
                if k == clique_size {
                    break;
                }
                k -= 1;
            }
            None => break,
        }
    }
    best
}

/// A proper coloring with at most `k` colors, or `None` if impossible.
pub(crate) fn k_colorable(rows: &[u64], n: usize, k: usize) -> Option<Vec<u8>> {
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    if rows.iter().all(|&r| r == 0) {
        return Some(vec![0; n]);
    }
    let (clique_mask, clique_size) = clique::max_clique(rows, n);
    if clique_size > k {
        return None;
    }
    let (greedy_k, greedy_coloring) = greedy_dsatur(rows, n);
    if greedy_k <= k {
        return Some(greedy_coloring);
    }
    k_colorable_from(rows, n, k, clique_mask, clique_size)
}

/// Greedy DSATUR: repeatedly color the vertex with the most distinctly
/// colored neighbors. Returns an upper bound and its coloring.
fn greedy_dsatur(rows: &[u64], n: usize) -> (usize, Vec<u8>) {
    let mut color = vec![u8::MAX; n];
    let mut neighbor_colors = vec![0u64; n];
    let mut used = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == u8::MAX)
            .max_by_key(|&v| {
                (
                    neighbor_colors[v].count_ones(),
                    rows[v].count_ones(),
                    usize::MAX - v,
                )
            })
            .expect("an uncolored vertex remains");
        let c = (!neighbor_colors[v]).trailing_zeros() as usize;
        color[v] = c as u8;
        used = used.max(c + 1);
        let mut nbrs = rows[v];
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            neighbor_colors[u] |= 1u64 << c;
        }
    }
    (used, color)
}

struct ColorSearch<'a> {
    rows: &'a [u64],
    n: usize,
    budget: usize,
    color: Vec<u8>,
    neighbor_colors: Vec<u64>,
    colored: u64,
    used: usize,
}

fn k_colorable_from(
    rows: &[u64],
    n: usize,
    k: usize,
    clique_mask: u64,
    clique_size: usize,
) -> Option<Vec<u8>> {
    debug_assert!(clique_size <= k);
    let mut s = ColorSearch {
        rows,
        n,
        budget: k,
        color: vec![u8::MAX; n],
        neighbor_colors: vec![0u64; n],
        colored: 0,
        used: 0,
    };
    // Precolor a maximum clique: its vertices need pairwise distinct
    // colors in any solution, so fixing them loses nothing.
    let mut c = 0u8;
    let mut rest = clique_mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        s.assign(v, c);
        c += 1;
    }
    if s.dfs() {
        Some(s.color)
    } else {
        None
    }
}

impl ColorSearch<'_> {
    fn assign(&mut self, v: usize, c: u8) {
        self.color[v] = c;
        self.colored |= 1u64 << v;
        self.used = self.used.max(c as usize + 1);
        let mut nbrs = self.rows[v];
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            self.neighbor_colors[u] |= 1u64 << c;
        }
    }

    fn unassign(&mut self, v: usize, prev_used: usize) {
        let c = self.color[v];
        self.color[v] = u8::MAX;
        self.colored &= !(1u64 << v);
        self.used = prev_used;
        let mut nbrs = self.rows[v];
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            // Recompute from scratch: another neighbor may share color c.
            let mut mask = 0u64;
            let mut un = self.rows[u];
            while un != 0 {
                let w = un.trailing_zeros() as usize;
                un &= un - 1;
                if self.color[w] != u8::MAX {
                    mask |= 1u64 << self.color[w];
                }
            }
            self.neighbor_colors[u] = mask;
        }
        let _ = c;
    }

    fn dfs(&mut self) -> bool {
        if self.colored.count_ones() as usize == self.n {
            return true;
        }
        // DSATUR branching vertex: maximum saturation, then maximum
        // degree, then smallest index.
        let v = (0..self.n)
            .filter(|&v| self.colored >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    self.neighbor_colors[v].count_ones(),
                    self.rows[v].count_ones(),
                    usize::MAX - v,
                )
            })
            .expect("an uncolored vertex remains");
        // Existing colors first, then at most one fresh color.
        let limit = (self.used + 1).min(self.budget);
        let allowed = !self.neighbor_colors[v];
        let prev_used = self.used;
        for c in 0..limit {
            if allowed >> c & 1 == 0 {
                continue;
            }
            self.assign(v, c as u8);
            if self.dfs() {
                return true;
            }
            self.unassign(v, prev_used);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }

    fn check_proper(rows: &[u64], coloring: &[u8], k: usize) {
        for (v, &cv) in coloring.iter().enumerate() {
            assert!((cv as usize) < k);
            for (u, &cu) in coloring.iter().enumerate() {
                if rows[v] >> u & 1 == 1 {
                    assert_ne!(cv, cu, "edge ({u},{v}) is monochromatic");
                }
            }
        }
    }

    #[test]
    fn odd_cycle_needs_three() {
        let rows = rows_from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]);
        let (chi, coloring) = chromatic(&rows, 7);
        assert_eq!(chi, 3);
        check_proper(&rows, &coloring, 3);
        assert!(k_colorable(&rows, 7, 2).is_none());
        assert!(k_colorable(&rows, 7, 3).is_some());
    }

    #[test]
    fn budget_edges() {
        let rows = rows_from_edges(3, &[(0, 1)]);
        assert!(k_colorable(&rows, 3, 0).is_none());
        assert!(k_colorable(&rows, 3, 1).is_none());
        assert!(k_colorable(&rows, 3, 2).is_some());
        assert!(k_colorable(&[], 0, 0).is_some());
    }
}
