//! Classical Ramsey numbers as provenance-tagged intervals, inverse
//! Ramsey numbers, and certified witness graphs.
//!
//! The inverse Ramsey number `omega(n,k)` is the minimum clique number
//! over n-vertex graphs with independence number at most `k`. It reduces
//! to classical Ramsey numbers through
//!
//! ```text
//! omega(n,k) <= t  <=>  n < R(t+1, k+1)
//! ```
//!
//! because a graph on `n` vertices with `omega <= t` and `alpha <= k`
//! exists exactly when `n` is below the Ramsey threshold for forcing a
//! `(t+1)`-clique or a `(k+1)`-independent set. See `docs/math-notes.md`
//! for the full derivation. Applied to a table of intervals: the upper
//! end of `omega(n,k)` comes from published lower bounds on `R`, the
//! lower end from published upper bounds, and the result is exact when
//! the governing Ramsey numbers are.

mod table;
pub mod witness;

pub use table::{RamseyTable, TableEntry};
pub use witness::{ramsey_witness, WitnessSearchOptions};

use crate::canon;
use crate::enumerate::{self, EnumerationSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::ValueInterval;
use serde::{Deserialize, Serialize};

/// `R(s,t)` from the bundled table (value interval plus source).
pub fn ramsey_number(s: usize, t: usize) -> (ValueInterval, String) {
    RamseyTable::bundled().ramsey_number(s, t)
}

/// Inverse Ramsey number `omega(n,k)` as an interval, derived from the
/// bundled Ramsey table.
pub fn inverse_ramsey(n: usize, k: usize) -> ValueInterval {
    inverse_ramsey_with(RamseyTable::bundled(), n, k)
}

pub fn inverse_ramsey_with(table: &RamseyTable, n: usize, k: usize) -> ValueInterval {
    assert!(n >= 1 && k >= 1, "inverse Ramsey needs n,k >= 1");
    let mut lo = None;
    let mut hi = None;
    for t in 1..=n {
        let (r, _) = table.ramsey_number(t + 1, k + 1);
        // lo: smallest t for which n < R is still possible (n < hi side).
        if lo.is_none() {
            let below_hi = match r.hi {
                Some(h) => n < h,
                None => true,
            };
            if below_hi {
                lo = Some(t);
            }
        }
        // hi: smallest t for which n < R is certain (n < lo side).
        if hi.is_none() && n < r.lo {
            hi = Some(t);
        }
        if lo.is_some() && hi.is_some() {
            break;
        }
    }
    // t = n always terminates both scans: R(n+1, k+1) >= n+1 > n.
    let lo = lo.expect("lower scan terminates by t = n");
    let hi = hi.expect("upper scan terminates by t = n");
    ValueInterval::new(lo, hi)
}

/// How a cached or reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    Table,
    Construction,
    LocalSearch,
}

/// Which quantity a [`WitnessRecord`] certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// params `[n, k]`: inverse Ramsey number.
    OmegaNk,
    /// params `[n, c]`: minimum clique number at fixed chromatic number.
    Qnc,
    /// params `[n, k, target_omega]`: a Ramsey-type witness graph.
    RamseyWitness,
}

/// A value claim bundled with the graph that certifies it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub params: Vec<usize>,
    pub value: ValueInterval,
    pub witness_g6: Option<String>,
    pub method: Method,
}

impl WitnessRecord {
    /// Re-derives the claim from the witness graph with the exact
    /// solvers. Checks the direction each kind is able to certify:
    ///
    /// * `omega_nk [n,k]`: `|G| = n`, `alpha <= k`, `omega = value.hi`
    ///   (the witness proves the upper end);
    /// * `qnc [n,c]`: `|G| = n`, `chi = c`, `omega = value.hi`;
    /// * `ramsey_witness [n,k,target]`: `|G| = n`, `alpha <= k`,
    ///   `omega <= target` and `omega = value.hi`.
    pub fn certify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Certification(msg));
        let Some(g6) = &self.witness_g6 else {
            return Ok(()); // nothing to certify
        };
        let g = Graph::from_graph6(g6)?;
        let hi = match self.value.hi {
            Some(h) => h,
            None => return fail("witness with an open-ended value claim".into()),
        };
        match self.kind {
            WitnessKind::OmegaNk => {
                let &[n, k] = self.params.as_slice() else {
                    return fail(format!("omega_nk expects params [n,k], got {:?}", self.params));
                };
                if g.n() != n {
                    return fail(format!("witness has {} vertices, claimed {n}", g.n()));
                }
                let alpha = g.independence_number();
                if alpha > k {
                    return fail(format!("witness has alpha = {alpha} > {k}"));
                }
                let omega = g.clique_number();
                if omega != hi {
                    return fail(format!("witness has omega = {omega}, claimed {hi}"));
                }
            }
            WitnessKind::Qnc => {
                let &[n, c] = self.params.as_slice() else {
                    return fail(format!("qnc expects params [n,c], got {:?}", self.params));
                };
                if g.n() != n {
                    return fail(format!("witness has {} vertices, claimed {n}", g.n()));
                }
                let chi = g.chromatic_number();
                if chi != c {
                    return fail(format!("witness has chi = {chi}, claimed {c}"));
                }
                let omega = g.clique_number();
                if omega != hi {
                    return fail(format!("witness has omega = {omega}, claimed {hi}"));
                }
            }
            WitnessKind::RamseyWitness => {
                let &[n, k, target] = self.params.as_slice() else {
                    return fail(format!(
                        "ramsey_witness expects params [n,k,target], got {:?}",
                        self.params
                    ));
                };
                if g.n() != n {
                    return fail(format!("witness has {} vertices, claimed {n}", g.n()));
                }
                let alpha = g.independence_number();
                if alpha > k {
                    return fail(format!("witness has alpha = {alpha} > {k}"));
                }
                let omega = g.clique_number();
                if omega > target {
                    return fail(format!("witness has omega = {omega} > target {target}"));
                }
                if omega != hi {
                    return fail(format!("witness has omega = {omega}, claimed {hi}"));
                }
            }
        }
        Ok(())
    }
}

/// Exact `omega(n,k)` with a minimizing witness, by scanning the
/// isomorph-free catalog restricted to `alpha <= k`. Ties are broken by
/// the lexicographically smallest canonical graph6 string.
pub fn inverse_ramsey_bruteforce(n: usize, k: usize) -> Result<(usize, WitnessRecord)> {
    inverse_ramsey_bruteforce_limited(n, k, enumerate::DEFAULT_LIMIT)
}

pub fn inverse_ramsey_bruteforce_limited(
    n: usize,
    k: usize,
    limit: usize,
) -> Result<(usize, WitnessRecord)> {
    assert!(n >= 1 && k >= 1);
    let spec = EnumerationSpec::new(n)
        .with_max_independence(k)
        .with_limit(limit);
    let graphs = enumerate::enumerate(&spec)?;
    let mut best: Option<(usize, String)> = None;
    for g in &graphs {
        let omega = g.clique_number();
        let g6 = canon::canonical_g6(g)?;
        let better = match &best {
            None => true,
            Some((bo, bg6)) => omega < *bo || (omega == *bo && g6 < *bg6),
        };
        if better {
            best = Some((omega, g6));
        }
    }
    let (omega, g6) = best.expect("clique blocks give alpha <= k for every k >= 1");
    let record = WitnessRecord {
        kind: WitnessKind::OmegaNk,
        params: vec![n, k],
        value: ValueInterval::exact(omega),
        witness_g6: Some(g6),
        method: Method::BruteForce,
    };
    record.certify()?;
    Ok((omega, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_ramsey(5, 2), ValueInterval::exact(2));
        assert_eq!(inverse_ramsey(7, 2), ValueInterval::exact(3));
        for n in 1..=12 {
            assert_eq!(inverse_ramsey(n, n), ValueInterval::exact(1));
        }
        assert_eq!(inverse_ramsey(6, 2), ValueInterval::exact(3));
        // Governing Ramsey number unknown: interval, not a point.
        // omega(44,4): R(t+1,5) row, 44 sits inside R(5,5) = [43,48].
        let w = inverse_ramsey(44, 4);
        assert!(!w.is_exact());
    }

    #[test]
    fn brute_force_matches_known_values() {
        let (v, rec) = inverse_ramsey_bruteforce(5, 2).unwrap();
        assert_eq!(v, 2);
        // The unique minimizer is the 5-cycle.
        let w = Graph::from_graph6(rec.witness_g6.as_deref().unwrap()).unwrap();
        assert_eq!(w.edge_count(), 5);
        assert_eq!(w.invariants(), named::cycle(5).unwrap().invariants());

        assert_eq!(inverse_ramsey_bruteforce(3, 2).unwrap().0, 2);
        assert_eq!(inverse_ramsey_bruteforce(4, 4).unwrap().0, 1);
    }

    #[test]
    fn certification_rejects_wrong_claims() {
        let c5 = canon::canonical_g6(&named::cycle(5).unwrap()).unwrap();
        let mut rec = WitnessRecord {
            kind: WitnessKind::OmegaNk,
            params: vec![5, 2],
            value: ValueInterval::exact(2),
            witness_g6: Some(c5),
            method: Method::BruteForce,
        };
        assert!(rec.certify().is_ok());
        rec.value = ValueInterval::exact(3);
        assert!(rec.certify().is_err());
        rec.value = ValueInterval::exact(2);
        rec.params = vec![5, 1];
        assert!(rec.certify().is_err());
    }
}
