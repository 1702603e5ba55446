//! Isomorph-free exhaustive generation of simple graphs by orderly
//! (canonical-augmentation) search.
//!
//! Graphs are grown one vertex at a time: a parent on `m` vertices is
//! extended by a new last vertex with every possible neighborhood, and a
//! child is kept iff its labeling is its own canonical form (see
//! [`crate::canon`]). Since deleting the last vertex of a canonical
//! labeling yields a canonical labeling, every isomorphism class is
//! produced from exactly one parent, exactly once — no global seen-set
//! is needed and subtrees are independent work units.

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;

/// Hard upper limit on generation order; beyond 10 the class counts are
/// in the billions.
pub const HARD_LIMIT: usize = 10;

/// Default safety cap on generation order.
pub const DEFAULT_LIMIT: usize = 9;

/// What to generate. `limit` guards against accidentally huge runs and
/// must be raised explicitly to go past [`DEFAULT_LIMIT`].
#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub n: usize,
    /// Keep only graphs with independence number at most this.
    pub max_independence: Option<usize>,
    /// Keep only graphs with exactly this chromatic number.
    pub exact_chromatic: Option<usize>,
    pub limit: usize,
}

impl EnumerationSpec {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            max_independence: None,
            exact_chromatic: None,
            limit: DEFAULT_LIMIT,
        }
    }

    pub fn with_max_independence(mut self, k: usize) -> Self {
        self.max_independence = Some(k);
        self
    }

    pub fn with_exact_chromatic(mut self, c: usize) -> Self {
        self.exact_chromatic = Some(c);
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit.min(HARD_LIMIT);
        self
    }

    fn check(&self) -> Result<()> {
        let limit = self.limit.min(HARD_LIMIT);
        if self.n > limit {
            return Err(Error::Capacity {
                requested: self.n,
                limit,
            });
        }
        Ok(())
    }
}

/// Working representation during generation: fixed-size rows, no heap.
#[derive(Clone, Copy)]
pub(crate) struct Partial {
    pub rows: [u64; HARD_LIMIT],
    pub n: usize,
}

impl Partial {
    fn single() -> Self {
        Partial {
            rows: [0; HARD_LIMIT],
            n: 1,
        }
    }

    fn child(&self, subset: u64) -> Self {
        let mut rows = self.rows;
        let m = self.n;
        rows[m] = subset;
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rows[v] |= 1u64 << m;
        }
        Partial { rows, n: m + 1 }
    }

    pub fn to_graph(self) -> Graph {
        Graph::from_rows(self.n, self.rows[..self.n].to_vec()).expect("generator output is valid")
    }
}

/// Depth-first orderly traversal. `prune(rows, m)` may cut a whole
/// subtree at any intermediate order `m < n`; `visit` receives every
/// canonical graph of order `n` that survives. Subtrees below
/// `frontier_depth` run in parallel; `visit` must be thread-safe and
/// order-independent.
pub(crate) fn traverse<P, V>(n: usize, prune: &P, visit: &V)
where
    P: Fn(&[u64], usize) -> bool + Sync,
    V: Fn(&Partial) + Sync,
{
    assert!((1..=HARD_LIMIT).contains(&n));
    let frontier_depth = n.min(8).saturating_sub(1).max(1);
    // Serially expand to the frontier, then fan out.
    let mut frontier = vec![Partial::single()];
    let mut depth = 1;
    while depth < frontier_depth {
        let mut next = Vec::with_capacity(frontier.len() * 8);
        for p in &frontier {
            expand_once(p, n, prune, visit, &mut next);
        }
        frontier = next;
        depth += 1;
    }
    if depth == n {
        // n == 1: the frontier already holds the single output.
        for p in &frontier {
            if !prune(&p.rows[..p.n], p.n) {
                visit(p);
            }
        }
        return;
    }
    frontier.par_iter().for_each(|p| {
        let mut stack = Vec::with_capacity(64);
        expand_once(p, n, prune, visit, &mut stack);
        while let Some(q) = stack.pop() {
            expand_once(&q, n, prune, visit, &mut stack);
        }
    });
}

/// Expands one parent: children at order `n` are visited, children at
/// lower orders are pushed for further expansion (subject to `prune`).
fn expand_once<P, V>(parent: &Partial, n: usize, prune: &P, visit: &V, out: &mut Vec<Partial>)
where
    P: Fn(&[u64], usize) -> bool + Sync,
    V: Fn(&Partial) + Sync,
{
    let m = parent.n;
    debug_assert!(m < n);
    for subset in 0..(1u64 << m) {
        let child = parent.child(subset);
        if !canon::is_canonical(&child.rows[..child.n], child.n) {
            continue;
        }
        if child.n == n {
            if !prune(&child.rows[..child.n], child.n) {
                visit(&child);
            }
        } else if !prune(&child.rows[..child.n], child.n) {
            out.push(child);
        }
    }
}

/// Exactly one representative per isomorphism class matching the spec,
/// sorted ascending by canonical code.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<Graph>> {
    spec.check()?;
    if spec.n == 0 {
        let g = Graph::empty(0).expect("zero order");
        let keep = !matches!(spec.exact_chromatic, Some(c) if c != 0);
        return Ok(if keep { vec![g] } else { Vec::new() });
    }

    let alpha_cap = spec.max_independence;
    let chi_cap = spec.exact_chromatic;
    // Independence and chromatic numbers never decrease when a vertex is
    // added, so both filters admit subtree pruning.
    let prune = move |rows: &[u64], m: usize| -> bool {
        if let Some(k) = alpha_cap {
            if crate::graph::Graph::from_rows(m, rows.to_vec())
                .expect("generator rows are valid")
                .independence_number()
                > k
            {
                return true;
            }
        }
        if let Some(c) = chi_cap {
            if crate::graph::Graph::from_rows(m, rows.to_vec())
                .expect("generator rows are valid")
                .chromatic_number()
                > c
            {
                return true;
            }
        }
        false
    };

    let collected = std::sync::Mutex::new(Vec::new());
    traverse(spec.n, &prune, &|p: &Partial| {
        let g = p.to_graph();
        if let Some(c) = chi_cap {
            if g.chromatic_number() != c {
                return;
            }
        }
        collected.lock().expect("collector lock").push(g);
    });
    let mut graphs = collected.into_inner().expect("collector lock");
    graphs.sort_by_cached_key(|g| canon::pack_code(g.rows(), g.n()));
    Ok(graphs)
}
