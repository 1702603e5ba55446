//! Naive reference computations used as independent test oracles.
//!
//! Everything here trades speed for obviousness: cliques and independent
//! sets by scanning all vertex subsets, chromatic number by dynamic
//! programming over subsets, isomorphism classes by minimizing over all
//! vertex permutations. None of it shares code with the optimized solvers
//! it is meant to check.
//!
//! Graphs are passed as adjacency bitsets: `rows[v]` has bit `u` set iff
//! `u` and `v` are adjacent. All functions assume `n <= 64`, no self-loops,
//! and a symmetric adjacency relation.

/// Maximum clique size by scanning all `2^n` vertex subsets. `n <= ~25`.
pub fn max_clique_subsets(n: usize, rows: &[u64]) -> usize {
    assert!(n <= 25, "subset scan is exponential; keep n small");
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        if subset.count_ones() as usize <= best {
            continue;
        }
        if is_clique(rows, subset) {
            best = subset.count_ones() as usize;
        }
    }
    best
}

/// Maximum independent set size by scanning all subsets. `n <= ~25`.
pub fn max_independent_subsets(n: usize, rows: &[u64]) -> usize {
    let comp = complement_rows(n, rows);
    max_clique_subsets(n, &comp)
}

fn is_clique(rows: &[u64], subset: u64) -> bool {
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if subset & !(1u64 << v) & !rows[v] != 0 {
            return false;
        }
    }
    true
}

fn complement_rows(n: usize, rows: &[u64]) -> Vec<u64> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..n).map(|v| full & !rows[v] & !(1u64 << v)).collect()
}

/// Exact chromatic number by dynamic programming over vertex subsets:
/// `chi[S] = 1 + min chi[S \ I]` over independent `I ⊆ S` containing the
/// lowest vertex of `S`. Runs in `O(3^n)`; keep `n <= 16`.
pub fn chromatic_subset_dp(n: usize, rows: &[u64]) -> usize {
    assert!(n <= 16, "subset DP is 3^n; keep n small");
    if n == 0 {
        return 0;
    }
    let size = 1usize << n;
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && (rows[v] & rest as u64) == 0;
    }
    let mut chi = vec![u32::MAX; size];
    chi[0] = 0;
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let mut t = s;
        let mut best = u32::MAX;
        while t != 0 {
            if t & low != 0 && independent[t] && chi[s ^ t] != u32::MAX {
                best = best.min(1 + chi[s ^ t]);
            }
            t = (t - 1) & s;
        }
        chi[s] = best;
    }
    chi[size - 1] as usize
}

/// All permutations of `0..n` (Heap's algorithm).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap_recurse(n, &mut items, &mut out);
    out
}

fn heap_recurse(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_recurse(k - 1, items, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Packs the upper triangle of a labeled graph into a single word, in
/// column-major pair order (0,1), (0,2), (1,2), (0,3), ... with the first
/// pair as the most significant bit. Requires `n <= 11` (55 bits).
pub fn pack_upper_triangle(n: usize, rows: &[u64]) -> u64 {
    assert!(n <= 11);
    let mut bits = 0u64;
    let mut count = 0;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | ((rows[i] >> j) & 1);
            count += 1;
        }
    }
    let _ = count;
    bits
}

/// Canonical code of a labeled graph as the minimum packed upper triangle
/// over all vertex permutations. Factorial time; `n <= 8`.
pub fn min_code_all_perms(n: usize, rows: &[u64]) -> u64 {
    assert!(n <= 8, "all-permutations scan is factorial; keep n small");
    let mut best = u64::MAX;
    for perm in permutations(n) {
        // perm[pos] = original vertex placed at pos
        let mut relabeled = vec![0u64; n];
        for (pi, &vi) in perm.iter().enumerate() {
            for (pj, &vj) in perm.iter().enumerate() {
                if pi != pj && rows[vi] >> vj & 1 == 1 {
                    relabeled[pi] |= 1u64 << pj;
                }
            }
        }
        best = best.min(pack_upper_triangle(n, &relabeled));
    }
    best
}

/// Number of isomorphism classes of simple graphs on `n` vertices, by
/// enumerating all `2^(n choose 2)` labeled graphs and deduplicating by
/// the all-permutations canonical code. `n <= 6`.
pub fn count_graph_classes(n: usize) -> usize {
    assert!(n <= 6, "labeled-graph scan explodes quickly; keep n small");
    if n == 0 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rows = vec![0u64; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        let mut best = u64::MAX;
        for perm in &perms {
            let mut relabeled = vec![0u64; n];
            for (pi, &vi) in perm.iter().enumerate() {
                for (pj, &vj) in perm.iter().enumerate() {
                    if pi != pj && rows[vi] >> vj & 1 == 1 {
                        relabeled[pi] |= 1u64 << pj;
                    }
                }
            }
            best = best.min(pack_upper_triangle(n, &relabeled));
        }
        seen.insert(best);
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }

    #[test]
    fn k4_basics() {
        let rows = from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(max_clique_subsets(4, &rows), 4);
        assert_eq!(max_independent_subsets(4, &rows), 1);
        assert_eq!(chromatic_subset_dp(4, &rows), 4);
    }

    #[test]
    fn c5_basics() {
        let rows = from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_clique_subsets(5, &rows), 2);
        assert_eq!(max_independent_subsets(5, &rows), 2);
        assert_eq!(chromatic_subset_dp(5, &rows), 3);
    }

    #[test]
    fn empty_graph() {
        let rows = vec![0u64; 7];
        assert_eq!(max_clique_subsets(7, &rows), 1);
        assert_eq!(max_independent_subsets(7, &rows), 7);
        assert_eq!(chromatic_subset_dp(7, &rows), 1);
        assert_eq!(chromatic_subset_dp(0, &[]), 0);
    }

    #[test]
    fn tiny_class_counts() {
        assert_eq!(count_graph_classes(0), 1);
        assert_eq!(count_graph_classes(1), 1);
        assert_eq!(count_graph_classes(2), 2);
        assert_eq!(count_graph_classes(3), 4);
        assert_eq!(count_graph_classes(4), 11);
    }
}
