//! Exact maximum clique by branch and bound on bitset candidate sets.
//!
//! Tomita-style pruning: candidates are greedily colored, vertices are
//! expanded in descending color order, and a branch is cut when the
//! current clique plus the candidate's color bound cannot beat the best.

struct Search<'a> {
    rows: &'a [u64],
    best_mask: u64,
    best_size: usize,
    current_mask: u64,
    current_size: usize,
}

/// Returns `(mask, size)` of one maximum clique. Deterministic: the
/// expansion order depends only on the adjacency structure.
pub(crate) fn max_clique(rows: &[u64], n: usize) -> (u64, usize) {
    if n == 0 {
        return (0, 0);
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = Search {
        rows,
        best_mask: 0,
        best_size: 0,
        current_mask: 0,
        current_size: 0,
    };
    s.expand(full);
    (s.best_mask, s.best_size)
}

impl Search<'_> {
    fn expand(&mut self, cand: u64) {
        // Greedy coloring of the candidate set; order[i] gets colors[i],
        // colors are nondecreasing in i.
        let mut order = [0usize; 64];
        let mut colors = [0usize; 64];
        let mut m = 0;
        let mut uncolored = cand;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1u64 << v);
                avail &= !self.rows[v];
                uncolored &= !(1u64 << v);
                order[m] = v;
                colors[m] = color;
                m += 1;
            }
        }

        let mut cand = cand;
        for i in (0..m).rev() {
            if self.current_size + colors[i] <= self.best_size {
                return;
            }
            let v = order[i];
            self.current_mask |= 1u64 << v;
            self.current_size += 1;
            let next = cand & self.rows[v];
            if next == 0 {
                if self.current_size > self.best_size {
                    self.best_size = self.current_size;
                    self.best_mask = self.current_mask;
                }
            } else {
                self.expand(next);
            }
            self.current_mask &= !(1u64 << v);
            self.current_size -= 1;
            cand &= !(1u64 << v);
        }
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

    #[test]
    fn clique_mask_is_a_clique() {
        let rows = rows_from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        let (mask, size) = max_clique(&rows, 6);
        assert_eq!(size, 3);
        assert_eq!(mask.count_ones() as usize, size);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            assert_eq!(mask & !(1 << v) & !rows[v], 0);
        }
    }

    #[test]
    fn edge_cases() {
        assert_eq!(max_clique(&[], 0), (0, 0));
        assert_eq!(max_clique(&[0], 1).1, 1);
        assert_eq!(max_clique(&[0u64; 9], 9).1, 1);
    }
}
