//! Search for Ramsey-type witness graphs: `n` vertices, independence
//! number at most `k`, clique number at most a target.
//!
//! Strategy order: cache lookup, seeded classical constructions (prefix
//! subgraphs of Paley and circulant Ramsey graphs, clique blocks, a seed
//! joined with a clique), brute force over the catalog when `n` is small,
//! then tabu local search over edge flips. Every result is re-certified
//! with the exact solvers before it is returned.

use crate::cache::Cache;
use crate::canon;
use crate::enumerate::{self, EnumerationSpec};
use crate::error::{Error, Result};
use crate::graph::{named, Graph};
use crate::interval::ValueInterval;
use crate::ramsey::{inverse_ramsey, Method, WitnessKind, WitnessRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

/// Knobs for the witness search. The defaults are deterministic; runs
/// differ only through `seed`, and `time_limit` (when set) may truncate
/// the restart schedule.
#[derive(Clone, Debug)]
pub struct WitnessSearchOptions {
    pub seed: u64,
    pub restarts: usize,
    pub tabu_tenure: usize,
    /// Abandon a restart after this many non-improving flips, as a
    /// multiple of n^2.
    pub restart_patience_factor: usize,
    pub time_limit: Option<Duration>,
    /// Upper bound on generation order for the brute-force strategy.
    pub enum_limit: usize,
    /// Skip the local-search phase entirely (used where only cheap,
    /// certain strategies make sense).
    pub skip_local_search: bool,
}

impl Default for WitnessSearchOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            restarts: 16,
            tabu_tenure: 8,
            restart_patience_factor: 10,
            time_limit: None,
            enum_limit: enumerate::DEFAULT_LIMIT,
            skip_local_search: false,
        }
    }
}

/// A witness graph with `|G| = n`, `alpha(G) <= k`, `omega(G) <= target`.
///
/// `Err(WitnessImpossible)` means the target is below the proven lower
/// end of `omega(n,k)`; `Err(WitnessUnavailable)` means the search was
/// exhausted without a certificate, which is weaker than impossibility.
pub fn ramsey_witness(
    n: usize,
    k: usize,
    target: usize,
    cache: Option<&Cache>,
    opts: &WitnessSearchOptions,
) -> Result<Graph> {
    assert!(n >= 1 && k >= 1);
    let lo = inverse_ramsey(n, k).lo;
    if target < lo {
        return Err(Error::WitnessImpossible { target, lo });
    }

    if let Some(cache) = cache {
        if let Some(rec) = cache.get(WitnessKind::RamseyWitness, &[n, k, target]) {
            if let Some(g6) = rec.witness_g6.as_deref() {
                // Entries are certified on read; decode and double-check.
                if let Ok(g) = Graph::from_graph6(g6) {
                    if certify(&g, n, k, target).is_ok() {
                        return Ok(g);
                    }
                }
            }
        }
    }

    let found = seeded_witness(n, k, target)
        .or_else(|| brute_force_witness(n, k, target, opts.enum_limit))
        .or_else(|| {
            if opts.skip_local_search {
                None
            } else {
                local_search_witness(n, k, target, opts)
            }
        });

    match found {
        Some(g) => {
            certify(&g, n, k, target)?;
            if let Some(cache) = cache {
                let record = WitnessRecord {
                    kind: WitnessKind::RamseyWitness,
                    params: vec![n, k, target],
                    value: ValueInterval::exact(g.clique_number()),
                    witness_g6: Some(canon::canonical_g6(&g)?),
                    method: Method::Construction,
                };
                cache.put(&record)?;
            }
            Ok(g)
        }
        None => Err(Error::WitnessUnavailable { n, k, target }),
    }
}

fn certify(g: &Graph, n: usize, k: usize, target: usize) -> Result<()> {
    if g.n() != n {
        return Err(Error::Certification(format!(
            "witness has {} vertices, wanted {n}",
            g.n()
        )));
    }
    let alpha = g.independence_number();
    if alpha > k {
        return Err(Error::Certification(format!(
            "witness has alpha = {alpha} > {k}"
        )));
    }
    let omega = g.clique_number();
    if omega > target {
        return Err(Error::Certification(format!(
            "witness has omega = {omega} > {target}"
        )));
    }
    Ok(())
}

/// Seed graphs with small independence and clique numbers, certified
/// once at first use. Prefix-induced subgraphs inherit both bounds.
fn seed_graphs() -> &'static Vec<(Graph, usize, usize)> {
    static SEEDS: OnceLock<Vec<(Graph, usize, usize)>> = OnceLock::new();
    SEEDS.get_or_init(|| {
        let mut seeds = Vec::new();
        let mut push = |g: Graph| {
            let alpha = g.independence_number();
            let omega = g.clique_number();
            seeds.push((g, alpha, omega));
        };
        push(named::cycle(5).expect("C5"));
        // Triangle-free circulants with small independence number, and
        // their complements: cyclic Ramsey colorings.
        let wagner = named::circulant(8, &[1, 4]).expect("C8(1,4)");
        push(wagner.complement());
        push(wagner);
        let c13 = named::circulant(13, &[1, 5]).expect("C13(1,5)");
        push(c13.complement());
        push(c13);
        push(named::paley(13).expect("Paley(13)"));
        push(named::paley(17).expect("Paley(17)"));
        seeds
    })
}

fn seeded_witness(n: usize, k: usize, target: usize) -> Option<Graph> {
    // Degenerate families first.
    if k >= n && target >= 1 {
        return Some(Graph::empty(n).expect("n within capacity"));
    }
    if target >= n {
        return Some(Graph::complete(n).expect("n within capacity"));
    }
    // Balanced clique blocks: alpha = k, omega = ceil(n/k).
    if n.div_ceil(k) <= target {
        return Some(named::clique_blocks(n, k).expect("n within capacity"));
    }
    // Prefix-induced subgraphs keep alpha and omega bounds.
    for (seed, alpha, omega) in seed_graphs() {
        if *alpha <= k && *omega <= target && seed.n() >= n {
            let g = seed.induced_prefix(n);
            if g.independence_number() <= k && g.clique_number() <= target {
                return Some(g);
            }
        }
    }
    // A seed prefix joined with a clique: the join adds its order to
    // omega and keeps alpha at the maximum of the two sides.
    for (seed, alpha, omega) in seed_graphs() {
        if *alpha <= k && seed.n() < n {
            let extra = n - seed.n();
            if omega + extra <= target && n <= crate::graph::MAX_VERTICES {
                let k_extra = Graph::complete(extra).expect("within capacity");
                let g = seed.join(&k_extra).expect("within capacity");
                if g.independence_number() <= k && g.clique_number() <= target {
                    return Some(g);
                }
            }
        }
    }
    None
}

fn brute_force_witness(n: usize, k: usize, target: usize, limit: usize) -> Option<Graph> {
    if n > limit.min(enumerate::HARD_LIMIT) {
        return None;
    }
    let spec = EnumerationSpec::new(n)
        .with_max_independence(k)
        .with_limit(limit);
    let graphs = enumerate::enumerate(&spec).ok()?;
    graphs.into_iter().find(|g| g.clique_number() <= target)
}

// ---- tabu local search over edge flips ---------------------------------

/// Number of violations capped at this during counting; the energy only
/// needs to order states, not to be exact on terrible ones.
const COUNT_CAP: usize = 2_000;

fn local_search_witness(
    n: usize,
    k: usize,
    target: usize,
    opts: &WitnessSearchOptions,
) -> Option<Graph> {
    if !(2..=crate::graph::MAX_VERTICES).contains(&n) {
        return None;
    }
    let deadline = opts.time_limit.map(|d| Instant::now() + d);
    let results: Vec<Option<Vec<u64>>> = (0..opts.restarts)
        .into_par_iter()
        .map(|restart| run_restart(n, k, target, opts, restart as u64, deadline))
        .collect();
    let mut best: Option<(String, Graph)> = None;
    for rows in results.into_iter().flatten() {
        let g = Graph::from_rows(n, rows).expect("search state is a valid graph");
        if certify(&g, n, k, target).is_err() {
            continue;
        }
        let g6 = canon::canonical_g6(&g).expect("witness within graph6 range");
        if best.as_ref().is_none_or(|(b, _)| g6 < *b) {
            best = Some((g6, g));
        }
    }
    best.map(|(_, g)| g)
}

fn run_restart(
    n: usize,
    k: usize,
    target: usize,
    opts: &WitnessSearchOptions,
    restart: u64,
    deadline: Option<Instant>,
) -> Option<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(opts.seed ^ (restart.wrapping_mul(0x9E37))));
    // Start near the density where neither constraint dominates.
    let p = 0.4 + 0.2 * rng.random::<f64>();
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
    }
    let patience = opts.restart_patience_factor * n * n;
    let max_iters = patience.saturating_mul(4).max(2_000);
    let mut tabu: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, expires)
    let mut energy = energy_of(&rows, n, k, target);
    let mut best_energy = energy;
    let mut since_best = 0usize;

    for iter in 0..max_iters {
        if energy == 0 {
            return Some(rows);
        }
        if since_best > patience {
            return None;
        }
        if let Some(d) = deadline {
            if iter % 64 == 0 && Instant::now() > d {
                return None;
            }
        }
        // Candidate flips: a random sample, best non-tabu wins.
        let mut best_flip: Option<(usize, usize, usize)> = None;
        for _ in 0..24 {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n);
            while v == u {
                v = rng.random_range(0..n);
            }
            let (u, v) = (u.min(v), u.max(v));
            let is_tabu = tabu.iter().any(|&(a, b, exp)| a == u && b == v && exp > iter);
            flip(&mut rows, u, v);
            let e = energy_of(&rows, n, k, target);
            flip(&mut rows, u, v);
            let aspiration = e < best_energy;
            if is_tabu && !aspiration {
                continue;
            }
            if best_flip.is_none_or(|(_, _, be)| e < be) {
                best_flip = Some((u, v, e));
            }
        }
        let Some((u, v, e)) = best_flip else {
            continue;
        };
        flip(&mut rows, u, v);
        energy = e;
        tabu.push((u, v, iter + opts.tabu_tenure));
        tabu.retain(|&(_, _, exp)| exp > iter);
        if energy < best_energy {
            best_energy = energy;
            since_best = 0;
        } else {
            since_best += 1;
        }
    }
    None
}

fn flip(rows: &mut [u64], u: usize, v: usize) {
    rows[u] ^= 1 << v;
    rows[v] ^= 1 << u;
}

/// Energy: number of independent (k+1)-sets plus number of
/// (target+1)-cliques, both capped. Zero iff the state is a witness.
fn energy_of(rows: &[u64], n: usize, k: usize, target: usize) -> usize {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let comp: Vec<u64> = (0..n).map(|v| full & !rows[v] & !(1u64 << v)).collect();
    let independents = count_cliques_capped(&comp, n, k + 1, COUNT_CAP);
    let cliques = count_cliques_capped(rows, n, target + 1, COUNT_CAP);
    independents + cliques
}

/// Counts cliques of exactly `size`, stopping at `cap`.
fn count_cliques_capped(rows: &[u64], n: usize, size: usize, cap: usize) -> usize {
    if size == 0 {
        return 1;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut count = 0;
    extend_cliques(rows, full, size, cap, &mut count);
    count
}

fn extend_cliques(rows: &[u64], cand: u64, need: usize, cap: usize, count: &mut usize) {
    if *count >= cap {
        return;
    }
    if need == 0 {
        *count += 1;
        return;
    }
    if (cand.count_ones() as usize) < need {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        extend_cliques(rows, rest & rows[v], need - 1, cap, count);
        if *count >= cap {
            return;
        }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
