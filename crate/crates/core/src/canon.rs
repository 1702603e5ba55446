//! Canonical labeling by maximizing the packed upper-triangle adjacency
//! code over vertex orderings.
//!
//! The code of a labeled graph is the concatenation of its upper-triangle
//! columns in pair order (0,1), (0,2), (1,2), (0,3), ... — the same bit
//! order graph6 uses. The canonical labeling is the one whose code is
//! lexicographically maximal over all n! orderings.
//!
//! Two facts make this usable:
//!
//! * At search depth `p` only vertices whose adjacency pattern to the
//!   placed prefix is maximal can extend a maximal labeling, because the
//!   pattern is exactly the next column of the code. The search therefore
//!   branches only on pattern-maximal candidates, with twin vertices
//!   (equal rows off the pair) deduplicated.
//! * Deleting the last vertex of a code-maximal labeled graph leaves a
//!   code-maximal labeled graph, since the first `C(n-1,2)` code bits of
//!   a labeling that fixes vertex `n-1` are the code of the rest. This is
//!   what lets the generator in [`crate::enumerate`] extend canonical
//!   parents and keep exactly the children that are their own canonical
//!   form.

use crate::graph::Graph;

/// Search state shared by the canonicality test and the full relabeling.
struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    /// perm[pos] = original vertex placed at position pos.
    perm: [usize; 64],
    placed_mask: u64,
    /// Column patterns of the best labeling found so far.
    best_cols: [u64; 64],
    best_perm: [usize; 64],
    cur_cols: [u64; 64],
    /// Test mode: abort as soon as any labeling beats the identity.
    test_only: bool,
    beaten: bool,
}

#[derive(Clone, Copy, PartialEq)]
enum PrefixCmp {
    Equal,
    Greater,
}

/// Whether the identity labeling of `rows` attains the maximal code.
/// This is the acceptance test of orderly generation.
pub(crate) fn is_canonical(rows: &[u64], n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    let mut s = Search::new(rows, n, true);
    s.seed_identity();
    s.dfs(0, PrefixCmp::Equal);
    !s.beaten
}

/// The canonically relabeled copy of `g` (code-maximal labeling).
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let rows = g.rows();
    let mut s = Search::new(rows, n, false);
    s.seed_identity();
    s.dfs(0, PrefixCmp::Equal);
    let perm = &s.best_perm[..n];
    let mut out = vec![0u64; n];
    for (pi, &vi) in perm.iter().enumerate() {
        for (pj, &vj) in perm.iter().enumerate() {
            if pi != pj && rows[vi] >> vj & 1 == 1 {
                out[pi] |= 1u64 << pj;
            }
        }
    }
    Graph::from_rows(n, out).expect("relabeling preserves validity")
}

/// graph6 string of the canonical form; equal for isomorphic graphs and
/// usable as a total order on isomorphism classes of the same order.
pub fn canonical_g6(g: &Graph) -> crate::error::Result<String> {
    canonical_form(g).to_graph6()
}

/// Packed code of an already-labeled graph: upper-triangle bits in pair
/// order, most significant first, padded with zeros into `u64` words.
/// Lexicographic order on the result equals code order for equal `n`.
pub(crate) fn pack_code(rows: &[u64], n: usize) -> Vec<u64> {
    let pair_count = n * (n - 1) / 2;
    let mut out = vec![0u64; pair_count.div_ceil(64).max(1)];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if rows[i] >> j & 1 == 1 {
                out[idx / 64] |= 1u64 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    out
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64], n: usize, test_only: bool) -> Self {
        Search {
            rows,
            n,
            perm: [0; 64],
            placed_mask: 0,
            best_cols: [0; 64],
            best_perm: [0; 64],
            cur_cols: [0; 64],
            test_only,
            beaten: false,
        }
    }

    /// Seeds `best` with the identity labeling.
    fn seed_identity(&mut self) {
        for level in 0..self.n {
            let mut pat = 0u64;
            for i in 0..level {
                pat = (pat << 1) | (self.rows[level] >> i & 1);
            }
            self.best_cols[level] = pat;
            self.best_perm[level] = level;
        }
    }

    /// Adjacency pattern of `v` against the placed prefix at `level`:
    /// the bit for position 0 is most significant.
    fn pattern(&self, v: usize, level: usize) -> u64 {
        let mut pat = 0u64;
        for i in 0..level {
            pat = (pat << 1) | (self.rows[v] >> self.perm[i] & 1);
        }
        pat
    }

    fn dfs(&mut self, level: usize, cmp: PrefixCmp) {
        if self.beaten {
            return;
        }
        if level == self.n {
            // Leaves are compared in full: `cmp == Greater` only records
            // that some earlier column beat the best at the time that
            // subtree was entered, and the best may have moved since.
            if code_greater(&self.cur_cols[..self.n], &self.best_cols[..self.n]) {
                self.best_cols[..self.n].copy_from_slice(&self.cur_cols[..self.n]);
                self.best_perm[..self.n].copy_from_slice(&self.perm[..self.n]);
            }
            return;
        }

        let mut candidates = [0usize; 64];
        let mut count = 0;
        let mut max_pat = 0u64;
        for v in 0..self.n {
            if self.placed_mask >> v & 1 == 1 {
                continue;
            }
            let pat = self.pattern(v, level);
            match pat.cmp(&max_pat) {
                std::cmp::Ordering::Greater => {
                    max_pat = pat;
                    candidates[0] = v;
                    count = 1;
                }
                std::cmp::Ordering::Equal => {
                    candidates[count] = v;
                    count += 1;
                }
                std::cmp::Ordering::Less => {}
            }
        }

        let child_cmp = match cmp {
            PrefixCmp::Equal => match max_pat.cmp(&self.best_cols[level]) {
                std::cmp::Ordering::Less => return,
                std::cmp::Ordering::Equal => PrefixCmp::Equal,
                std::cmp::Ordering::Greater => {
                    if self.test_only {
                        self.beaten = true;
                        return;
                    }
                    PrefixCmp::Greater
                }
            },
            PrefixCmp::Greater => PrefixCmp::Greater,
        };

        self.cur_cols[level] = max_pat;
        let unplaced = !self.placed_mask;
        for ci in 0..count {
            let v = candidates[ci];
            // Twin pruning: skip v if an already-explored sibling u has the
            // same row off {u, v} among unplaced vertices; the transposition
            // (u v) is then an automorphism fixing the placed prefix.
            let mut twin = false;
            for &u in &candidates[..ci] {
                let off = unplaced & !(1u64 << u) & !(1u64 << v);
                if (self.rows[u] ^ self.rows[v]) & off == 0 {
                    twin = true;
                    break;
                }
            }
            if twin {
                continue;
            }
            self.perm[level] = v;
            self.placed_mask |= 1u64 << v;
            self.dfs(level + 1, child_cmp);
            self.placed_mask &= !(1u64 << v);
            if self.beaten {
                return;
            }
        }
    }
}

fn code_greater(a: &[u64], b: &[u64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            std::cmp::Ordering::Greater => return true,
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        // perm[new] = old
        let n = g.n();
        let mut rows = vec![0u64; n];
        for (pi, &vi) in perm.iter().enumerate() {
            for (pj, &vj) in perm.iter().enumerate() {
                if pi != pj && g.rows()[vi] >> vj & 1 == 1 {
                    rows[pi] |= 1u64 << pj;
                }
            }
        }
        Graph::from_rows(n, rows).unwrap()
    }

    #[test]
    fn canonical_is_labeling_invariant() {
        let g = Graph::from_edges(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5)]).unwrap();
        let c1 = canonical_form(&g);
        let c2 = canonical_form(&relabel(&g, &[5, 3, 1, 4, 2, 0]));
        assert_eq!(c1, c2);
        assert!(is_canonical(c1.rows(), c1.n()));
    }

    #[test]
    fn canonical_preserves_invariants() {
        let p = named::petersen();
        let c = canonical_form(&p);
        assert_eq!(c.edge_count(), p.edge_count());
        assert_eq!(c.clique_number(), p.clique_number());
        assert_eq!(c.chromatic_number(), p.chromatic_number());
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        for g in [
            Graph::empty(20).unwrap(),
            Graph::complete(20).unwrap(),
            named::clique_blocks(20, 4).unwrap(),
        ] {
            let c = canonical_form(&g);
            assert_eq!(c.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn edge_must_lead_in_canonical_form() {
        // Any canonical graph with at least one edge has the edge (0,1).
        let g = Graph::from_edges(5, &[(3, 4)]).unwrap();
        assert!(!is_canonical(g.rows(), 5));
        let c = canonical_form(&g);
        assert!(c.has_edge(0, 1));
    }

    #[test]
    fn pack_code_matches_graph6_bits() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        // "DQc": data bytes Q=18, c=36 -> bits 010010 100100
        let code = pack_code(g.rows(), g.n());
        assert_eq!(code.len(), 1);
        assert_eq!(code[0] >> 54, 0b0100101001);
    }
}
