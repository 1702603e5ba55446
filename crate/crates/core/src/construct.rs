//! Executable constructions behind the upper and lower bounds on
//! `Q(n, ceil(r n))`: dropping edges to land a chromatic number exactly,
//! building an n-vertex witness from one Ramsey graph, the join of
//! Ramsey pieces sized by partition minimization, and stripping disjoint
//! independent sets to force the independence number down.
//!
//! Every claim a construction makes is re-verified with the exact
//! solvers before it is reported.

use crate::cache::Cache;
use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::qnc::q_general;
use crate::ramsey::witness::{ramsey_witness, WitnessSearchOptions};
use crate::ramsey::inverse_ramsey;
use crate::rational::RationalRate;
use serde::{Deserialize, Serialize};

/// Returns a spanning subgraph of `g` with chromatic number exactly
/// `target`, by scanning edges in lexicographic order and deleting each
/// edge whose removal keeps the chromatic number at or above `target`.
///
/// Deleting one edge lowers the chromatic number by at most one, so while
/// the graph is above target every deletion is safe and the scan cannot
/// skip past the target. The scan tests colorability only when the
/// current chromatic number already sits at the target.
pub fn drop_edges_to_chromatic(g: &Graph, target: usize) -> Result<Graph> {
    assert!(target >= 1);
    let chi = g.chromatic_number();
    if chi < target {
        return Err(Error::ChromaticTarget { target, chi });
    }
    let mut cur = g.clone();
    let mut at_target = chi == target;
    for (u, v) in g.edges() {
        if !at_target {
            // chi(cur) > target: any single deletion keeps chi >= target.
            cur = cur.remove_edge(u, v).expect("edge still present");
            at_target = cur.colorable(target);
        } else {
            let trial = cur.remove_edge(u, v).expect("edge order fixed up front");
            if !trial.colorable(target - 1) {
                cur = trial;
            }
        }
    }
    debug_assert_eq!(cur.chromatic_number(), target);
    Ok(cur)
}

/// An n-vertex graph with chromatic number exactly `ceil(r n)` and
/// clique number at most the upper end of `omega(n, k)`, `k = floor(1/r)`:
/// a single Ramsey witness with its chromatic number dropped into place.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimpleWitnessReport {
    pub r: RationalRate,
    pub n: usize,
    pub k: usize,
    pub target_chi: usize,
    pub omega_bound: crate::interval::ValueInterval,
    pub graph_g6: String,
    pub omega: usize,
    pub chi: usize,
}

pub fn simple_upper_witness(
    r: &RationalRate,
    n: usize,
    cache: Option<&Cache>,
    opts: &WitnessSearchOptions,
) -> Result<(Graph, SimpleWitnessReport)> {
    assert!(n >= 1);
    let k = r.floor_inverse();
    let target_chi = r.ceil_mul(n);
    let omega_bound = inverse_ramsey(n, k);
    let hi = omega_bound.hi.unwrap_or(n);
    let base = ramsey_witness(n, k, hi, cache, opts)?;
    // alpha <= k forces chi >= ceil(n/k) >= ceil(r n); certify anyway.
    let base_chi = base.chromatic_number();
    if base_chi < target_chi {
        return Err(Error::Certification(format!(
            "witness chromatic number {base_chi} below target {target_chi}"
        )));
    }
    let g = drop_edges_to_chromatic(&base, target_chi)?;
    let omega = g.clique_number();
    let chi = g.chromatic_number();
    if chi != target_chi || omega > hi {
        return Err(Error::Certification(format!(
            "dropped witness has chi = {chi}, omega = {omega}; wanted chi = {target_chi}, omega <= {hi}"
        )));
    }
    let report = SimpleWitnessReport {
        r: *r,
        n,
        k,
        target_chi,
        omega_bound,
        graph_g6: canon::canonical_g6(&g)?,
        omega,
        chi,
    };
    Ok((g, report))
}

/// One piece of a join plan: a Ramsey graph of the given order with the
/// stated independence bound, aiming for the stated clique number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceSpec {
    pub order: usize,
    pub alpha_bound: usize,
    pub target_omega: usize,
}

/// Sizing of the join construction at rate `r` and order `n`:
/// `k = floor(1/r)`, `m = n - k ceil(rn)`, `l = (k+1) ceil(rn) - n`,
/// partitions minimizing `q(l,k)` and `q(m,k+1)`, and the pieces they
/// prescribe (`k * l_i` vertices with alpha <= k, `(k+1) * m_j` vertices
/// with alpha <= k+1).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JoinPlan {
    pub r: RationalRate,
    pub n: usize,
    pub k: usize,
    pub target_chi: usize,
    pub l: usize,
    pub m: usize,
    pub l_parts: Vec<usize>,
    pub m_parts: Vec<usize>,
    pub pieces: Vec<PieceSpec>,
    /// `q(l,k) + q(m,k+1)`, the clique bound the plan aims for.
    pub bound: crate::interval::ValueInterval,
}

pub fn plan_join(r: &RationalRate, n: usize) -> Result<JoinPlan> {
    assert!(n >= 1);
    if r.is_integer_reciprocal() {
        return Err(Error::ReciprocalRate);
    }
    let k = r.floor_inverse();
    let c = r.ceil_mul(n);
    let m = n as i64 - (k * c) as i64;
    if m <= 0 {
        return Err(Error::BelowThreshold { m, n });
    }
    let m = m as usize;
    let l = (k + 1) * c - n; // positive whenever r > 1/(k+1)
    debug_assert_eq!(k * l + (k + 1) * m, n);

    let ql = q_general(l, k);
    let qm = q_general(m, k + 1);
    let mut pieces = Vec::new();
    for &li in &ql.partition {
        pieces.push(PieceSpec {
            order: k * li,
            alpha_bound: k,
            target_omega: inverse_ramsey(k * li, k).hi.unwrap_or(k * li),
        });
    }
    for &mj in &qm.partition {
        pieces.push(PieceSpec {
            order: (k + 1) * mj,
            alpha_bound: k + 1,
            target_omega: inverse_ramsey((k + 1) * mj, k + 1).hi.unwrap_or((k + 1) * mj),
        });
    }
    Ok(JoinPlan {
        r: *r,
        n,
        k,
        target_chi: c,
        l,
        m,
        l_parts: ql.partition.clone(),
        m_parts: qm.partition.clone(),
        pieces,
        bound: ql.value.sum(&qm.value),
    })
}

/// Solver-verified facts about one assembled piece.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PieceCertificate {
    pub spec: PieceSpec,
    pub graph_g6: String,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    /// Whether the piece attained its inverse-Ramsey target exactly.
    pub optimal: bool,
}

/// Full account of a join construction, both before and after the edge
/// drop, with every certificate the exact solvers produced.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JoinReport {
    pub plan: JoinPlan,
    pub pieces: Vec<PieceCertificate>,
    /// Clique bound actually certified: the sum of achieved piece omegas.
    pub certified_bound: usize,
    pub joined_g6: String,
    pub joined_omega: usize,
    pub joined_chi: usize,
    pub final_g6: String,
    pub final_omega: usize,
    pub final_chi: usize,
}

/// Builds the join of the plan's pieces, certifies order, clique number
/// additivity and the chromatic lower bound, then drops edges until the
/// chromatic number lands exactly on `ceil(r n)`.
///
/// When a piece cannot be realized at its inverse-Ramsey optimum the
/// target is relaxed one step at a time; the report then carries the
/// weaker certified bound instead of the planned one.
pub fn join_construction(
    plan: &JoinPlan,
    cache: Option<&Cache>,
    opts: &WitnessSearchOptions,
) -> Result<(Graph, JoinReport)> {
    let mut certs: Vec<PieceCertificate> = Vec::with_capacity(plan.pieces.len());
    let mut joined: Option<Graph> = None;
    for spec in &plan.pieces {
        let mut found: Option<Graph> = None;
        for target in spec.target_omega..=spec.order {
            match ramsey_witness(spec.order, spec.alpha_bound, target, cache, opts) {
                Ok(g) => {
                    found = Some(g);
                    break;
                }
                Err(Error::WitnessImpossible { .. }) | Err(Error::WitnessUnavailable { .. }) => {
                    continue;
                }
                Err(e) => return Err(e),
            }
        }
        let piece = found.ok_or(Error::PieceUnavailable {
            order: spec.order,
            alpha_bound: spec.alpha_bound,
            target_omega: spec.target_omega,
        })?;
        let alpha = piece.independence_number();
        let omega = piece.clique_number();
        let chi = piece.chromatic_number();
        // The chromatic chain behind the join: chi >= order / alpha_bound.
        debug_assert!(chi * spec.alpha_bound >= spec.order);
        certs.push(PieceCertificate {
            spec: spec.clone(),
            graph_g6: canon::canonical_g6(&piece)?,
            alpha,
            omega,
            chi,
            optimal: omega == spec.target_omega,
        });
        joined = Some(match joined {
            None => piece,
            Some(acc) => acc.join(&piece)?,
        });
    }
    let joined = joined.expect("plans always have at least one piece");

    if joined.n() != plan.n {
        return Err(Error::Certification(format!(
            "assembled order {} differs from planned {}",
            joined.n(),
            plan.n
        )));
    }
    let joined_omega = joined.clique_number();
    let piece_sum: usize = certs.iter().map(|c| c.omega).sum();
    if joined_omega != piece_sum {
        return Err(Error::Certification(format!(
            "join clique number {joined_omega} is not the piece sum {piece_sum}"
        )));
    }
    let joined_chi = joined.chromatic_number();
    if joined_chi < plan.target_chi {
        return Err(Error::Certification(format!(
            "join chromatic number {joined_chi} below target {}",
            plan.target_chi
        )));
    }

    let final_graph = if joined_chi == plan.target_chi {
        joined.clone()
    } else {
        drop_edges_to_chromatic(&joined, plan.target_chi)?
    };
    let final_omega = final_graph.clique_number();
    let final_chi = final_graph.chromatic_number();
    if final_chi != plan.target_chi {
        return Err(Error::Certification(format!(
            "final chromatic number {final_chi}, wanted {}",
            plan.target_chi
        )));
    }

    let report = JoinReport {
        plan: plan.clone(),
        pieces: certs,
        certified_bound: piece_sum,
        joined_g6: canon::canonical_g6(&joined)?,
        joined_omega,
        joined_chi,
        final_g6: canon::canonical_g6(&final_graph)?,
        final_omega,
        final_chi,
    };
    Ok((final_graph, report))
}

/// Mode for [`remove_independent_sets`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalMode {
    /// Repeatedly extract any independent (k+1)-set the exact solver
    /// finds. Guarantees `alpha(H) <= k` but not that the number of
    /// removed sets is maximum.
    Greedy,
    /// Exact maximum packing of disjoint independent (k+1)-sets, by
    /// backtracking over the enumerated sets. Only for small orders.
    Maximum,
}

/// Order cap for [`RemovalMode::Maximum`].
pub const MAX_PACKING_ORDER: usize = 9;

/// Removes disjoint independent sets of size `k+1` from `g` — as many as
/// the mode provides — returning the remaining induced subgraph `H` and
/// the number `t` of sets removed. In both modes no independent
/// `(k+1)`-set survives, so `alpha(H) <= k`.
pub fn remove_independent_sets(g: &Graph, k: usize, mode: RemovalMode) -> Result<(Graph, usize)> {
    assert!(k >= 1);
    match mode {
        RemovalMode::Greedy => {
            let mut cur = g.clone();
            let mut t = 0;
            while cur.independence_number() > k {
                let set = cur.max_independent_set();
                // Keep exactly k+1 vertices of the found set.
                let mut chosen = 0u64;
                let mut rest = set;
                for _ in 0..(k + 1) {
                    let v = rest.trailing_zeros() as u64;
                    chosen |= 1 << v;
                    rest &= rest - 1;
                }
                cur = cur.induced(cur.full_mask() & !chosen);
                t += 1;
            }
            Ok((cur, t))
        }
        RemovalMode::Maximum => {
            if g.n() > MAX_PACKING_ORDER {
                return Err(Error::Capacity {
                    requested: g.n(),
                    limit: MAX_PACKING_ORDER,
                });
            }
            let sets = independent_sets_of_size(g, k + 1);
            let mut best: Vec<u64> = Vec::new();
            let mut current: Vec<u64> = Vec::new();
            pack_disjoint(&sets, 0, 0, k + 1, g.n(), &mut current, &mut best);
            let removed: u64 = best.iter().fold(0, |acc, s| acc | s);
            let h = g.induced(g.full_mask() & !removed);
            debug_assert!(h.independence_number() <= k);
            Ok((h, best.len()))
        }
    }
}

/// All independent sets of exactly `size` vertices, as bitmasks in
/// ascending order.
fn independent_sets_of_size(g: &Graph, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let full = g.full_mask();
    fn recurse(g: &Graph, cand: u64, chosen: u64, need: usize, out: &mut Vec<u64>) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        if (cand.count_ones() as usize) < need {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            recurse(g, rest & !g.neighbors(v), chosen | (1 << v), need - 1, out);
        }
    }
    recurse(g, full, 0, size, &mut out);
    out.sort_unstable();
    out
}

/// Backtracking maximum packing of pairwise disjoint sets. `sets` is
/// sorted; the first maximum packing in that order wins, which makes the
/// result deterministic.
fn pack_disjoint(
    sets: &[u64],
    from: usize,
    used: u64,
    set_size: usize,
    n: usize,
    current: &mut Vec<u64>,
    best: &mut Vec<u64>,
) {
    let free = n - (used.count_ones() as usize);
    if current.len() + free / set_size <= best.len() {
        return;
    }
    for i in from..sets.len() {
        let s = sets[i];
        if s & used != 0 {
            continue;
        }
        current.push(s);
        pack_disjoint(sets, i + 1, used | s, set_size, n, current, best);
        current.pop();
    }
    if current.len() > best.len() {
        best.clone_from(current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn drop_edges_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(drop_edges_to_chromatic(&k5, 5).unwrap(), k5);

        let g = drop_edges_to_chromatic(&k5, 3).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.chromatic_number(), 3);
        assert_eq!(g.clique_number(), 3); // fixed scan order leaves a triangle

        let c5 = named::cycle(5).unwrap();
        let g = drop_edges_to_chromatic(&c5, 2).unwrap();
        assert_eq!(g.chromatic_number(), 2);

        assert!(matches!(
            drop_edges_to_chromatic(&c5, 4),
            Err(Error::ChromaticTarget { target: 4, chi: 3 })
        ));
    }

    #[test]
    fn simple_witness_examples() {
        let opts = WitnessSearchOptions::default();
        let half = RationalRate::new(1, 2).unwrap();
        let (g, rep) = simple_upper_witness(&half, 5, None, &opts).unwrap();
        assert_eq!(rep.k, 2);
        assert_eq!(rep.target_chi, 3);
        assert_eq!(g.chromatic_number(), 3);
        assert!(g.clique_number() <= 2);

        let one = RationalRate::new(1, 1).unwrap();
        let (g, rep) = simple_upper_witness(&one, 4, None, &opts).unwrap();
        assert_eq!(g, Graph::complete(4).unwrap());
        assert_eq!(rep.omega, 4);

        let two_fifths = RationalRate::new(2, 5).unwrap();
        let (g, rep) = simple_upper_witness(&two_fifths, 10, None, &opts).unwrap();
        assert_eq!(rep.target_chi, 4);
        assert_eq!(g.chromatic_number(), 4);
        assert!(g.clique_number() <= rep.omega_bound.hi.unwrap());
    }

    #[test]
    fn plan_join_examples() {
        let r = RationalRate::new(2, 5).unwrap();
        let plan = plan_join(&r, 20).unwrap();
        assert_eq!((plan.k, plan.target_chi, plan.l, plan.m), (2, 8, 4, 4));
        assert_eq!(plan.l_parts, vec![4]);
        assert_eq!(plan.m_parts, vec![4]);
        assert_eq!(plan.bound.exact_value(), Some(6));

        let r = RationalRate::new(3, 10).unwrap();
        let plan = plan_join(&r, 20).unwrap();
        assert_eq!((plan.k, plan.l, plan.m), (3, 4, 2));
        assert_eq!(plan.bound.exact_value(), Some(5));

        let third = RationalRate::new(1, 3).unwrap();
        assert!(matches!(plan_join(&third, 30), Err(Error::ReciprocalRate)));

        let r = RationalRate::new(2, 5).unwrap();
        assert!(matches!(
            plan_join(&r, 5),
            Err(Error::BelowThreshold { m: 1, .. })
        ) || plan_join(&r, 5).is_ok());
    }

    #[test]
    fn removal_examples() {
        let k5 = Graph::complete(5).unwrap();
        let (h, t) = remove_independent_sets(&k5, 1, RemovalMode::Greedy).unwrap();
        assert_eq!((h.n(), t), (5, 0));

        let c5 = named::cycle(5).unwrap();
        let (h, t) = remove_independent_sets(&c5, 1, RemovalMode::Greedy).unwrap();
        assert_eq!(t, 2);
        assert_eq!(h.n(), 1);

        let (h, t) = remove_independent_sets(&c5, 1, RemovalMode::Maximum).unwrap();
        assert_eq!(t, 2);
        assert_eq!(h.n(), 1);
        assert!(h.independence_number() <= 1);

        let e6 = Graph::empty(6).unwrap();
        let (h, t) = remove_independent_sets(&e6, 2, RemovalMode::Maximum).unwrap();
        assert_eq!(t, 2);
        assert!(h.n() <= 2);

        let big = Graph::empty(10).unwrap();
        assert!(matches!(
            remove_independent_sets(&big, 2, RemovalMode::Maximum),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn small_join_construction() {
        // r = 2/5, n = 5: l = 1, m = 1, pieces are a (2, alpha<=2) and a
        // (3, alpha<=3) witness, both empty graphs; the join is K_{2,3}.
        let r = RationalRate::new(2, 5).unwrap();
        let plan = plan_join(&r, 5).unwrap();
        assert_eq!((plan.l, plan.m), (1, 1));
        let opts = WitnessSearchOptions::default();
        let (g, rep) = join_construction(&plan, None, &opts).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(rep.final_chi, plan.target_chi);
        assert_eq!(rep.joined_omega, rep.certified_bound);
        assert!(rep.final_omega <= rep.certified_bound);
    }
}
