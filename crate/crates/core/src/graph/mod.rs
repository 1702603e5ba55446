//! Immutable simple graphs on at most 64 vertices with one adjacency
//! word per vertex, plus exact solvers for the three invariants the rest
//! of the crate is built on: clique number, independence number, and
//! chromatic number.

mod clique;
mod color;
mod graph6;
pub mod named;

pub use graph6::{from_graph6, to_graph6};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard vertex capacity: one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

/// An immutable simple graph. Vertices are `0..n`, adjacency is a
/// symmetric bit matrix with one `u64` row per vertex and no self-loops.
///
/// All operations that "modify" a graph return a new value; a `Graph` can
/// be shared and sent between threads freely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// The three invariants computed by the exact solvers.
///
/// For the graph with no vertices all three are zero. Otherwise
/// `omega <= chi <= n` and `alpha * chi >= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Self {
            n,
            rows: vec![0; n],
        })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.rows[v] = g.full_mask() & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::VertexRange { vertex: u, n });
            }
            g.rows[u] |= 1u64 << v;
            g.rows[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Validates symmetry,
    /// absence of self-loops, and that no bits fall outside `0..n`.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        assert_eq!(rows.len(), n, "row count must equal vertex count");
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (v, &row) in rows.iter().enumerate() {
            assert_eq!(row & !full, 0, "adjacency bits outside vertex range");
            assert_eq!(row >> v & 1, 0, "self-loop at vertex {v}");
        }
        for v in 0..n {
            for u in 0..v {
                assert_eq!(
                    rows[u] >> v & 1,
                    rows[v] >> u & 1,
                    "adjacency not symmetric at ({u},{v})"
                );
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Bitmask with one bit per vertex.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.rows[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    // ---- graph algebra -------------------------------------------------

    pub fn complement(&self) -> Self {
        let full = self.full_mask();
        let rows = (0..self.n)
            .map(|v| full & !self.rows[v] & !(1u64 << v))
            .collect();
        Self { n: self.n, rows }
    }

    /// Disjoint union: vertices of `other` are relabeled to follow ours.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        let mut rows = Vec::with_capacity(n);
        rows.extend_from_slice(&self.rows);
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Self { n, rows })
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    /// Clique and chromatic numbers add under join; independence number
    /// is the maximum of the two sides.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        let left = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let right = g.full_mask() & !left;
        for v in 0..self.n {
            g.rows[v] |= right;
        }
        for v in self.n..g.n {
            g.rows[v] |= left;
        }
        Ok(g)
    }

    /// Subgraph induced by the vertices in `mask`, relabeled densely in
    /// increasing order of original label.
    pub fn induced(&self, mask: u64) -> Self {
        let mask = mask & self.full_mask();
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        let n = verts.len();
        let mut rows = vec![0u64; n];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && self.rows[u] >> v & 1 == 1 {
                    rows[i] |= 1u64 << j;
                }
            }
        }
        Self { n, rows }
    }

    /// Subgraph induced by vertices `0..m`.
    pub fn induced_prefix(&self, m: usize) -> Self {
        assert!(m <= self.n);
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        self.induced(mask)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        let mut g = self.clone();
        g.rows[u] &= !(1u64 << v);
        g.rows[v] &= !(1u64 << u);
        Ok(g)
    }

    // ---- exact invariants ----------------------------------------------

    /// Exact clique number.
    pub fn clique_number(&self) -> usize {
        clique::max_clique(&self.rows, self.n).1
    }

    /// One maximum clique as a vertex bitmask.
    pub fn max_clique(&self) -> u64 {
        clique::max_clique(&self.rows, self.n).0
    }

    /// Exact independence number (clique number of the complement).
    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }

    /// One maximum independent set as a vertex bitmask.
    pub fn max_independent_set(&self) -> u64 {
        self.complement().max_clique()
    }

    /// Exact chromatic number.
    pub fn chromatic_number(&self) -> usize {
        color::chromatic(&self.rows, self.n).0
    }

    /// Exact chromatic number together with an optimal proper coloring
    /// (`coloring[v]` in `0..chi`).
    pub fn optimal_coloring(&self) -> (usize, Vec<u8>) {
        color::chromatic(&self.rows, self.n)
    }

    /// Whether the graph admits a proper coloring with at most `k` colors.
    pub fn colorable(&self, k: usize) -> bool {
        color::k_colorable(&self.rows, self.n, k).is_some()
    }

    /// All three invariants at once.
    pub fn invariants(&self) -> Invariants {
        Invariants {
            omega: self.clique_number(),
            alpha: self.independence_number(),
            chi: self.chromatic_number(),
        }
    }

    // ---- graph6 ----------------------------------------------------------

    /// Encodes into graph6 (printable ASCII, `n <= 62`).
    pub fn to_graph6(&self) -> Result<String> {
        graph6::to_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        graph6::from_graph6(text)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
