//! The optimized solvers against deliberately naive reference
//! computations they share no code with.

use qcc_core::enumerate::{enumerate, EnumerationSpec};
use qcc_core::graph::{named, Graph};
use qcc_oracles as oracle;

#[test]
fn solvers_agree_with_subset_scans_on_small_catalogs() {
    for n in 1..=7 {
        for g in enumerate(&EnumerationSpec::new(n)).unwrap() {
            let rows = g.rows();
            assert_eq!(
                g.clique_number(),
                oracle::max_clique_subsets(n, rows),
                "clique mismatch on {g:?}"
            );
            assert_eq!(
                g.independence_number(),
                oracle::max_independent_subsets(n, rows),
                "independence mismatch on {g:?}"
            );
            assert_eq!(
                g.chromatic_number(),
                oracle::chromatic_subset_dp(n, rows),
                "chromatic mismatch on {g:?}"
            );
        }
    }
}

#[test]
fn solvers_agree_with_subset_scans_at_order_eight() {
    for g in enumerate(&EnumerationSpec::new(8)).unwrap() {
        let chi = g.chromatic_number();
        assert_eq!(chi, oracle::chromatic_subset_dp(8, g.rows()), "{g:?}");
        let omega = g.clique_number();
        assert_eq!(omega, oracle::max_clique_subsets(8, g.rows()), "{g:?}");
        // The invariant chain over the whole catalog.
        let alpha = g.independence_number();
        assert!(omega <= chi && chi <= 8);
        assert!(alpha * chi >= 8);
    }
}

#[test]
fn solvers_agree_with_subset_scans_on_random_order_9_and_10() {
    // LCG-driven sample; the catalogs stop at 8 in the cheap tests.
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state
    };
    for n in [9usize, 10] {
        for _ in 0..40 {
            let mut edges = Vec::new();
            let mut bits = next();
            let mut left = 64;
            for j in 1..n {
                for i in 0..j {
                    if left == 0 {
                        bits = next();
                        left = 64;
                    }
                    if bits & 1 == 1 {
                        edges.push((i, j));
                    }
                    bits >>= 1;
                    left -= 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(g.clique_number(), oracle::max_clique_subsets(n, g.rows()));
            assert_eq!(
                g.independence_number(),
                oracle::max_independent_subsets(n, g.rows())
            );
            assert_eq!(g.chromatic_number(), oracle::chromatic_subset_dp(n, g.rows()));
        }
    }
}

#[test]
fn chromatic_oracle_holds_on_larger_structured_graphs() {
    // The DP oracle is trusted to n = 16; spot-check the solver there.
    let cases = [
        named::petersen(),                         // n = 10
        named::paley(13).unwrap(),                 // n = 13
        named::circulant(13, &[1, 5]).unwrap(),    // triangle-free
        named::circulant(14, &[1, 4, 7]).unwrap(),
        named::cycle(15).unwrap(),
        named::clique_blocks(16, 3).unwrap(),
        Graph::complete(6).unwrap().join(&Graph::empty(8).unwrap()).unwrap(),
    ];
    for g in cases {
        assert_eq!(
            g.chromatic_number(),
            oracle::chromatic_subset_dp(g.n(), g.rows()),
            "chromatic mismatch on {g:?}"
        );
    }
}

#[test]
fn petersen_invariants() {
    // Frozen from the subset-scan oracles on the 10-vertex graph.
    let p = named::petersen();
    assert_eq!(oracle::max_clique_subsets(10, p.rows()), 2);
    assert_eq!(oracle::max_independent_subsets(10, p.rows()), 4);
    assert_eq!(oracle::chromatic_subset_dp(10, p.rows()), 3);
    let inv = p.invariants();
    assert_eq!((inv.omega, inv.alpha, inv.chi), (2, 4, 3));
}

#[test]
fn paley_17_invariants() {
    let p = named::paley(17).unwrap();
    assert_eq!(p.clique_number(), 3);
    assert_eq!(p.independence_number(), 3);
    // Self-complementary: the complement has the same invariants.
    let c = p.complement();
    assert_eq!(c.clique_number(), 3);
    assert_eq!(c.independence_number(), 3);
}

#[test]
fn enumeration_matches_allperm_dedup_oracle() {
    for n in 1..=6 {
        let ours = enumerate(&EnumerationSpec::new(n)).unwrap().len();
        assert_eq!(ours, oracle::count_graph_classes(n), "class count at n = {n}");
    }
}

#[test]
fn catalog_has_no_isomorphic_pair() {
    // Pairwise-distinct all-permutation canonical codes at n <= 6.
    for n in 1..=6 {
        let graphs = enumerate(&EnumerationSpec::new(n)).unwrap();
        let mut codes: Vec<u64> = graphs
            .iter()
            .map(|g| oracle::min_code_all_perms(n, g.rows()))
            .collect();
        codes.sort_unstable();
        let before = codes.len();
        codes.dedup();
        assert_eq!(before, codes.len(), "isomorphic duplicates at n = {n}");
    }
}
