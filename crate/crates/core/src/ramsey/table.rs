//! Bundled table of classical two-color Ramsey numbers as
//! provenance-tagged intervals.

use crate::error::{Error, Result};
use crate::interval::ValueInterval;
use std::collections::BTreeMap;
use std::sync::OnceLock;

const BUNDLED: &str = include_str!("data/ramsey_table.txt");

#[derive(Clone, Debug)]
pub struct TableEntry {
    pub value: ValueInterval,
    pub source: String,
}

/// Classical Ramsey numbers `R(s,t)` keyed by `(s,t)` with `s <= t`.
/// Symmetry and the trivial rows `R(1,t) = 1`, `R(2,t) = t` are applied
/// at lookup time; queries beyond the table fall back to the sound but
/// weak interval `[max(s,t), inf)`.
#[derive(Clone, Debug, Default)]
pub struct RamseyTable {
    entries: BTreeMap<(usize, usize), TableEntry>,
}

impl RamseyTable {
    /// The table shipped with the crate, parsed and validated once.
    pub fn bundled() -> &'static RamseyTable {
        static TABLE: OnceLock<RamseyTable> = OnceLock::new();
        TABLE.get_or_init(|| RamseyTable::parse(BUNDLED).expect("bundled table is valid"))
    }

    /// Parses the line format `s t lo hi source...`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| Error::Table {
                line: idx + 1,
                reason: reason.to_string(),
            };
            let mut parts = line.split_whitespace();
            let s: usize = parts
                .next()
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| bad("missing s"))?;
            let t: usize = parts
                .next()
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| bad("missing t"))?;
            let lo: usize = parts
                .next()
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| bad("missing lo"))?;
            let hi_raw = parts.next().ok_or_else(|| bad("missing hi"))?;
            let source: String = parts.collect::<Vec<_>>().join(" ");
            if source.is_empty() {
                return Err(bad("missing source"));
            }
            if s > t {
                return Err(bad("store entries with s <= t"));
            }
            if s < 3 {
                return Err(bad("rows with s <= 2 are generated, not stored"));
            }
            if lo < t {
                return Err(bad("lower bound below the trivial bound max(s,t)"));
            }
            let value = match hi_raw {
                "inf" | "*" => ValueInterval::at_least(lo),
                h => {
                    let hi: usize = h.parse().map_err(|_| bad("bad hi"))?;
                    if lo > hi {
                        return Err(bad("lo > hi"));
                    }
                    ValueInterval::new(lo, hi)
                }
            };
            if entries.insert((s, t), TableEntry { value, source }).is_some() {
                return Err(bad("duplicate entry"));
            }
        }
        let table = Self { entries };
        table.validate_monotone()?;
        Ok(table)
    }

    /// Published bounds only tighten over time, so within one table both
    /// ends must be nondecreasing in each argument wherever neighboring
    /// entries exist.
    fn validate_monotone(&self) -> Result<()> {
        for (&(s, t), entry) in &self.entries {
            for next in [(s + 1, t), (s, t + 1)] {
                if let Some(bigger) = self.entries.get(&next) {
                    let lo_ok = entry.value.lo <= bigger.value.lo;
                    let hi_ok = match (entry.value.hi, bigger.value.hi) {
                        (Some(a), Some(b)) => a <= b,
                        (Some(_), None) | (None, None) => true,
                        (None, Some(_)) => false,
                    };
                    if !lo_ok || !hi_ok {
                        return Err(Error::Table {
                            line: 0,
                            reason: format!("entries {:?} and {next:?} not monotone", (s, t)),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `R(s,t)` with its source. Never invents exactness: beyond the
    /// table the result is `[max(s,t), inf)` tagged "trivial".
    pub fn ramsey_number(&self, s: usize, t: usize) -> (ValueInterval, String) {
        assert!(s >= 1 && t >= 1, "Ramsey numbers need s,t >= 1");
        let (s, t) = (s.min(t), s.max(t));
        if s == 1 {
            return (ValueInterval::exact(1), "trivial".into());
        }
        if s == 2 {
            return (ValueInterval::exact(t), "trivial".into());
        }
        match self.entries.get(&(s, t)) {
            Some(e) => (e.value, e.source.clone()),
            None => (ValueInterval::at_least(s.max(t)), "trivial".into()),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &TableEntry)> {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_parses_and_answers() {
        let t = RamseyTable::bundled();
        assert_eq!(t.ramsey_number(3, 3).0, ValueInterval::exact(6));
        assert_eq!(t.ramsey_number(4, 3).0, ValueInterval::exact(9));
        assert_eq!(t.ramsey_number(5, 5).0, ValueInterval::new(43, 48));
        assert_eq!(t.ramsey_number(2, 6).0, ValueInterval::exact(6));
        assert_eq!(t.ramsey_number(1, 9).0, ValueInterval::exact(1));
        // Symmetry.
        assert_eq!(t.ramsey_number(7, 3).0, t.ramsey_number(3, 7).0);
        // Beyond the table: conservative trivial interval.
        assert_eq!(t.ramsey_number(9, 9).0, ValueInterval::at_least(9));
        assert_eq!(t.ramsey_number(3, 11).0, ValueInterval::at_least(11));
    }

    #[test]
    fn parser_rejects_bad_rows() {
        assert!(RamseyTable::parse("3 3 6").is_err());
        assert!(RamseyTable::parse("3 3 6 5 src").is_err());
        assert!(RamseyTable::parse("4 3 9 9 src").is_err());
        assert!(RamseyTable::parse("2 4 4 4 src").is_err());
        assert!(RamseyTable::parse("3 3 2 6 src").is_err());
        assert!(RamseyTable::parse("3 3 6 6 src\n3 3 6 6 src").is_err());
        // Non-monotone pair.
        assert!(RamseyTable::parse("3 3 6 6 a\n3 4 5 5 b").is_err());
        // Open upper end.
        let t = RamseyTable::parse("3 3 6 6 a\n3 4 9 inf b").unwrap();
        assert_eq!(t.ramsey_number(3, 4).0, ValueInterval::at_least(9));
    }
}
