//! Invariant properties: randomized (proptest) and exhaustive where the
//! catalogs are small enough.

use proptest::prelude::*;
use qcc_core::canon;
use qcc_core::enumerate::{enumerate, EnumerationSpec};
use qcc_core::graph::Graph;

/// Random graph on up to `max_n` vertices from a seed mask over the
/// upper-triangle pairs.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> (bit % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("valid random graph")
    })
}

proptest! {
    #[test]
    fn invariant_chain(g in arb_graph(10)) {
        let inv = g.invariants();
        prop_assert!(inv.omega <= inv.chi);
        prop_assert!(inv.chi <= g.n());
        prop_assert!(inv.alpha * inv.chi >= g.n());
        prop_assert_eq!(inv.alpha, g.complement().clique_number());
    }

    #[test]
    fn join_identities(a in arb_graph(7), b in arb_graph(7)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.clique_number(), a.clique_number() + b.clique_number());
        prop_assert_eq!(j.chromatic_number(), a.chromatic_number() + b.chromatic_number());
        prop_assert_eq!(
            j.independence_number(),
            a.independence_number().max(b.independence_number())
        );
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(10)) {
        let s = g.to_graph6().unwrap();
        prop_assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_invariant(g in arb_graph(8), perm_seed in any::<u64>()) {
        let n = g.n();
        // Fisher-Yates from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = perm_seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let mut rows = vec![0u64; n];
        for (pi, &vi) in perm.iter().enumerate() {
            for (pj, &vj) in perm.iter().enumerate() {
                if pi != pj && g.rows()[vi] >> vj & 1 == 1 {
                    rows[pi] |= 1u64 << pj;
                }
            }
        }
        let relabeled = Graph::from_rows(n, rows).unwrap();
        prop_assert_eq!(canon::canonical_form(&g), canon::canonical_form(&relabeled));
    }

    #[test]
    fn coloring_is_proper_and_optimal_size(g in arb_graph(9)) {
        let (chi, coloring) = g.optimal_coloring();
        let used: std::collections::HashSet<u8> = coloring.iter().copied().collect();
        prop_assert_eq!(used.len(), chi);
        for (u, v) in g.edges() {
            prop_assert_ne!(coloring[u], coloring[v]);
        }
        if chi > 0 {
            prop_assert!(!g.colorable(chi - 1));
        }
    }
}

#[test]
fn removing_one_edge_drops_chromatic_by_at_most_one() {
    // Exhaustive over the catalogs up to order 7.
    for n in 2..=7 {
        for g in enumerate(&EnumerationSpec::new(n)).unwrap() {
            let chi = g.chromatic_number();
            for (u, v) in g.edges() {
                let h = g.remove_edge(u, v).unwrap();
                let hchi = h.chromatic_number();
                assert!(
                    hchi == chi || hchi + 1 == chi,
                    "chi {chi} -> {hchi} removing ({u},{v}) from {g:?}"
                );
            }
        }
    }
}

#[test]
fn graph6_roundtrip_identity_on_bytes_small_catalogs() {
    for n in 0..=6 {
        for g in enumerate(&EnumerationSpec::new(n).with_limit(9)).unwrap() {
            let s = g.to_graph6().unwrap();
            let h = Graph::from_graph6(&s).unwrap();
            assert_eq!(h.to_graph6().unwrap(), s);
            assert_eq!(h, g);
        }
    }
}

#[test]
fn alpha_filtered_catalog_consistency() {
    // inverse_ramsey table path is exact and matches brute force for
    // every (n, k) with n <= 7.
    for n in 1..=7usize {
        for k in 1..=n {
            let table = qcc_core::ramsey::inverse_ramsey(n, k);
            let (brute, rec) = qcc_core::ramsey::inverse_ramsey_bruteforce(n, k).unwrap();
            assert_eq!(
                table.exact_value(),
                Some(brute),
                "omega({n},{k}): table {table}, brute {brute}"
            );
            rec.certify().unwrap();
        }
    }
}
