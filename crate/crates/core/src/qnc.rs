//! Exact `Q(n,c)` — the minimum clique number over n-vertex graphs of
//! chromatic number exactly `c` — by isomorph-free exhaustive search,
//! together with the closed forms that predict it: the near-diagonal
//! formula `Q(n, n-k) = n - 2k + q(k)` for `n >= 2k + 3`, and the
//! partition-minimized sums `q(k)` and `q(beta, alpha)` of inverse
//! Ramsey numbers.

use crate::canon;
use crate::enumerate::{self, Partial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::ValueInterval;
use crate::ramsey::{inverse_ramsey, Method, WitnessKind, WitnessRecord};
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Outcome of minimizing a sum over integer partitions.
///
/// `value` is the componentwise minimum over all partitions (interval
/// arithmetic when a constituent inverse Ramsey number is inexact);
/// `partition` attains `value.hi` and ties are broken by the
/// lexicographically smallest nonincreasing part list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionResult {
    pub value: ValueInterval,
    pub partition: Vec<usize>,
}

/// `q(k) = min Σ (omega(2k_i + 1, 2) - 1)` over partitions
/// `k_1 + ... + k_s = k` into at most three positive parts.
pub fn q_small(k: usize) -> PartitionResult {
    assert!(k >= 1);
    let mut best: Option<(ValueInterval, Vec<usize>)> = None;
    let mut value: Option<ValueInterval> = None;
    for parts in partitions_max_parts(k, 3) {
        let mut sum = ValueInterval::exact(0);
        for &p in &parts {
            sum = sum.sum(&inverse_ramsey(2 * p + 1, 2).sub_const(1));
        }
        value = Some(match value {
            Some(v) => v.min_merge(&sum),
            None => sum,
        });
        if better_candidate(&best, &sum, &parts) {
            best = Some((sum, parts));
        }
    }
    let (_, partition) = best.expect("k >= 1 has at least the single-part partition");
    PartitionResult {
        value: value.expect("nonempty partition set"),
        partition,
    }
}

/// `q(beta, alpha) = min Σ omega(alpha * beta_i, alpha)` over all
/// partitions `Σ beta_i = beta` into positive parts (any count).
pub fn q_general(beta: usize, alpha: usize) -> PartitionResult {
    assert!(beta >= 1 && alpha >= 1);
    let mut best: Option<(ValueInterval, Vec<usize>)> = None;
    let mut value: Option<ValueInterval> = None;
    for parts in partitions_all(beta) {
        let mut sum = ValueInterval::exact(0);
        for &p in &parts {
            sum = sum.sum(&inverse_ramsey(alpha * p, alpha));
        }
        value = Some(match value {
            Some(v) => v.min_merge(&sum),
            None => sum,
        });
        if better_candidate(&best, &sum, &parts) {
            best = Some((sum, parts));
        }
    }
    let (_, partition) = best.expect("beta >= 1 has at least the single-part partition");
    PartitionResult {
        value: value.expect("nonempty partition set"),
        partition,
    }
}

/// Candidate order: smaller certified upper end, then smaller lower end,
/// then lexicographically smaller part list.
fn better_candidate(
    best: &Option<(ValueInterval, Vec<usize>)>,
    sum: &ValueInterval,
    parts: &[usize],
) -> bool {
    let Some((bv, bp)) = best else { return true };
    let key = (sum.hi.unwrap_or(usize::MAX), sum.lo);
    let bkey = (bv.hi.unwrap_or(usize::MAX), bv.lo);
    key < bkey || (key == bkey && parts < bp.as_slice())
}

/// Nonincreasing partitions of `n` into at most `max_parts` positive
/// parts, in lexicographically increasing order.
fn partitions_max_parts(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut all = partitions_all(n);
    all.retain(|p| p.len() <= max_parts);
    all
}

/// All nonincreasing partitions of `n`, in lexicographically increasing
/// order of the part list.
fn partitions_all(n: usize) -> Vec<Vec<usize>> {
    fn recurse(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=rest.min(max_part) {
            prefix.push(part);
            recurse(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    recurse(n, n, &mut Vec::new(), &mut out);
    // The recursion descends first parts in increasing order, and within a
    // first part the remainder recursively likewise, which is exactly
    // lexicographic order on the nonincreasing lists.
    out
}

/// The near-diagonal closed form `Q(n, n-k) = n - 2k + q(k)`, asserted
/// only for `n >= 2k + 3`.
pub fn qnc_formula(n: usize, k: usize) -> Result<ValueInterval> {
    assert!(k >= 1);
    if n < 2 * k + 3 {
        return Err(Error::Domain {
            what: "the closed form for Q(n, n-k)",
            min_n: 2 * k + 3,
            n,
        });
    }
    Ok(q_small(k).value.add_const(n - 2 * k))
}

/// One row of the ground-truth table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QncRow {
    pub n: usize,
    pub c: usize,
    pub q: usize,
    pub witness_g6: String,
    pub method: Method,
}

/// Exact `Q(n,c)` with a minimizing witness (lexicographically smallest
/// canonical graph6 string among the minimizers), by orderly traversal
/// restricted to chromatic number `c`.
///
/// Subtrees whose running clique number already exceeds the best value
/// are pruned; the strict inequality keeps every minimizer reachable, so
/// the witness does not depend on thread scheduling.
pub fn qnc_bruteforce(n: usize, c: usize, limit: usize) -> Result<(usize, WitnessRecord)> {
    assert!(c >= 1 && c <= n, "Q(n,c) needs 1 <= c <= n");
    let limit = limit.min(enumerate::HARD_LIMIT);
    if n > limit {
        return Err(Error::Capacity {
            requested: n,
            limit,
        });
    }

    let best_omega = AtomicUsize::new(usize::MAX);
    let best: Mutex<Option<(usize, String)>> = Mutex::new(None);

    let prune = |rows: &[u64], m: usize| -> bool {
        let g = Graph::from_rows(m, rows.to_vec()).expect("generator rows are valid");
        if g.chromatic_number() > c {
            return true;
        }
        // Clique number never decreases under vertex addition; a subtree
        // at or above the current best can still contain minimizers only
        // when it is strictly below, so prune on strictly-greater.
        g.clique_number() > best_omega.load(Ordering::Relaxed)
    };
    let visit = |p: &Partial| {
        let g = p.to_graph();
        if g.chromatic_number() != c {
            return;
        }
        let omega = g.clique_number();
        if omega > best_omega.load(Ordering::Relaxed) {
            return;
        }
        best_omega.fetch_min(omega, Ordering::Relaxed);
        let g6 = canon::canonical_g6(&g).expect("catalog graphs fit graph6");
        let mut guard = best.lock().expect("qnc best lock");
        let replace = match guard.as_ref() {
            None => true,
            Some((bo, bg6)) => omega < *bo || (omega == *bo && g6 < *bg6),
        };
        if replace {
            *guard = Some((omega, g6));
        }
    };
    enumerate::traverse(n, &prune, &visit);

    let (q, g6) = best
        .into_inner()
        .expect("qnc best lock")
        .expect("K_c plus isolated vertices has chromatic number c, so the row is never empty");
    let record = WitnessRecord {
        kind: WitnessKind::Qnc,
        params: vec![n, c],
        value: ValueInterval::exact(q),
        witness_g6: Some(g6),
        method: Method::BruteForce,
    };
    record.certify()?;
    Ok((q, record))
}

/// Everything one full traversal of the order-n catalog can certify:
/// the `Q(n, 1..=n)` rows and the brute-force inverse Ramsey values.
#[derive(Clone, Debug)]
pub struct GroundTruth {
    pub n: usize,
    pub qnc: Vec<QncRow>,
    /// `omega[k]` for `k = 1..=n`: minimum clique number over graphs
    /// with independence number at most `k` (index 0 unused).
    pub omega: Vec<usize>,
}

/// One pass over the catalog of order `n`, aggregating minima per
/// chromatic number (with lexicographic witness tie-break) and per
/// independence bound.
pub fn ground_truth(n: usize, limit: usize) -> Result<GroundTruth> {
    assert!(n >= 1);
    let limit = limit.min(enumerate::HARD_LIMIT);
    if n > limit {
        return Err(Error::Capacity {
            requested: n,
            limit,
        });
    }
    let rows: Mutex<Vec<Option<(usize, String)>>> = Mutex::new(vec![None; n + 1]);
    let omega_by_alpha: Mutex<Vec<usize>> = Mutex::new(vec![usize::MAX; n + 1]);
    let visit = |p: &Partial| {
        let g = p.to_graph();
        let chi = g.chromatic_number();
        let omega = g.clique_number();
        let alpha = g.independence_number();
        debug_assert!((1..=n).contains(&chi));
        {
            let mut guard = omega_by_alpha.lock().expect("omega lock");
            guard[alpha] = guard[alpha].min(omega);
        }
        {
            // Cheap pre-check without the canonical string.
            let guard = rows.lock().expect("table lock");
            if let Some((bo, _)) = &guard[chi] {
                if omega > *bo {
                    return;
                }
            }
        }
        let g6 = canon::canonical_g6(&g).expect("catalog graphs fit graph6");
        let mut guard = rows.lock().expect("table lock");
        let replace = match &guard[chi] {
            None => true,
            Some((bo, bg6)) => omega < *bo || (omega == *bo && g6 < *bg6),
        };
        if replace {
            guard[chi] = Some((omega, g6));
        }
    };
    enumerate::traverse(n, &|_, _| false, &visit);

    let rows = rows.into_inner().expect("table lock");
    let mut qnc = Vec::with_capacity(n);
    for (c, entry) in rows.into_iter().enumerate().skip(1) {
        let (q, witness_g6) = entry.expect("every chromatic number 1..=n is attained");
        qnc.push(QncRow {
            n,
            c,
            q,
            witness_g6,
            method: Method::BruteForce,
        });
    }
    // omega(n,k) = min over alpha <= k; the empty graph pins alpha = n.
    let per_alpha = omega_by_alpha.into_inner().expect("omega lock");
    let mut omega = vec![usize::MAX; n + 1];
    let mut running = usize::MAX;
    for k in 1..=n {
        running = running.min(per_alpha[k]);
        omega[k] = running;
    }
    debug_assert!(omega[1..=n].iter().all(|&w| w != usize::MAX));
    Ok(GroundTruth { n, qnc, omega })
}

/// The full ground-truth row set `Q(n, 1..=n)` from one traversal of the
/// order-n catalog.
pub fn qnc_table(n: usize, limit: usize) -> Result<Vec<QncRow>> {
    Ok(ground_truth(n, limit)?.qnc)
}
