//! Constructors for the named graph families used as witness seeds and
//! test fixtures.

use super::Graph;
use crate::error::{Error, Result};

/// Cycle `C_n` (`n >= 3`).
pub fn cycle(n: usize) -> Result<Graph> {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Circulant graph: `i ~ j` iff `|i - j| mod n` or its negation is in
/// `dists`. Distances outside `1..n` are rejected.
pub fn circulant(n: usize, dists: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    for &d in dists {
        if d == 0 || d >= n {
            return Err(Error::VertexRange { vertex: d, n });
        }
        for i in 0..n {
            let j = (i + d) % n;
            if i < j {
                edges.push((i, j));
            } else {
                edges.push((j, i));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

/// Paley graph on `q` vertices: `q` a prime with `q ≡ 1 (mod 4)`,
/// `i ~ j` iff `i - j` is a nonzero quadratic residue mod `q`.
pub fn paley(q: usize) -> Result<Graph> {
    if q > super::MAX_VERTICES {
        return Err(Error::Capacity {
            requested: q,
            limit: super::MAX_VERTICES,
        });
    }
    assert!(is_prime(q) && q % 4 == 1, "Paley graph needs a prime q ≡ 1 mod 4");
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    let mut edges = Vec::new();
    for i in 0..q {
        for j in (i + 1)..q {
            if residue[(j - i) % q] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(q, &edges)
}

/// Disjoint union of `parts` cliques with near-equal sizes summing to `n`.
/// Independence number is `parts` (one vertex per clique), clique number
/// is `ceil(n / parts)`.
pub fn clique_blocks(n: usize, parts: usize) -> Result<Graph> {
    assert!(parts >= 1 && parts <= n.max(1), "need 1 <= parts <= n");
    let mut edges = Vec::new();
    let base = n / parts;
    let extra = n % parts;
    let mut start = 0;
    for p in 0..parts {
        let size = base + usize::from(p < extra);
        for i in start..start + size {
            for j in (i + 1)..start + size {
                edges.push((i, j));
            }
        }
        start += size;
    }
    Graph::from_edges(n, &edges)
}

/// The Petersen graph.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spokes
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    Graph::from_edges(10, &edges).expect("fixed construction")
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
