//! Persistent result/witness cache: one JSON-lines file per record kind,
//! append-only, entries re-certified on every read.
//!
//! A record that fails certification is quarantined for the process
//! lifetime and treated as a miss, so a corrupted or stale entry can
//! never surface as a result; the caller recomputes and appends a fresh
//! record. An unwritable cache directory degrades to in-memory operation
//! with a warning, never an error.

use crate::error::Result;
use crate::ramsey::{WitnessKind, WitnessRecord};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

/// Environment variable consulted when no cache directory is given
/// explicitly.
pub const CACHE_DIR_ENV: &str = "QCC_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: WitnessKind,
    pub params: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub record: WitnessRecord,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    pub tool_version: String,
}

pub struct Cache {
    dir: Option<PathBuf>,
    state: Mutex<CacheState>,
}

#[derive(Default)]
struct CacheState {
    /// In-memory store, also the fallback when the directory is unusable.
    mem: HashMap<CacheKey, WitnessRecord>,
    quarantined: HashSet<CacheKey>,
}

impl Cache {
    /// Opens a cache at `dir`, falling back to `QCC_CACHE_DIR`, falling
    /// back to memory-only. An unusable directory prints a warning to
    /// stderr and degrades to memory-only.
    pub fn open(dir: Option<PathBuf>) -> Cache {
        let dir = dir.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
        let dir = match dir {
            Some(d) => {
                if let Err(e) = std::fs::create_dir_all(&d) {
                    eprintln!(
                        "warning: cache directory {} unusable ({e}); continuing in memory only",
                        d.display()
                    );
                    None
                } else {
                    Some(d)
                }
            }
            None => None,
        };
        Cache {
            dir,
            state: Mutex::new(CacheState::default()),
        }
    }

    pub fn memory_only() -> Cache {
        Cache {
            dir: None,
            state: Mutex::new(CacheState::default()),
        }
    }

    pub fn directory(&self) -> Option<&PathBuf> {
        self.dir.as_ref()
    }

    fn file_for(&self, kind: WitnessKind) -> Option<PathBuf> {
        let name = match kind {
            WitnessKind::OmegaNk => "omega_nk.jsonl",
            WitnessKind::Qnc => "qnc.jsonl",
            WitnessKind::RamseyWitness => "ramsey_witness.jsonl",
        };
        self.dir.as_ref().map(|d| d.join(name))
    }

    /// Looks up a record; the most recent certified entry wins. Partial
    /// or corrupt lines (an interrupted writer's tail) are skipped.
    pub fn get(&self, kind: WitnessKind, params: &[usize]) -> Option<WitnessRecord> {
        let key = CacheKey {
            kind,
            params: params.to_vec(),
        };
        let mut state = self.state.lock().expect("cache lock");
        if state.quarantined.contains(&key) {
            return None;
        }
        if let Some(path) = self.file_for(kind) {
            if let Ok(text) = std::fs::read_to_string(&path) {
                let mut last: Option<WitnessRecord> = None;
                for line in text.lines() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<CacheEntry>(line) {
                        Ok(entry) if entry.key == key => last = Some(entry.record),
                        _ => {} // tolerate foreign or truncated lines
                    }
                }
                if let Some(record) = last {
                    if record.certify().is_ok() {
                        return Some(record);
                    }
                    state.quarantined.insert(key);
                    return None;
                }
            }
        }
        match state.mem.get(&key) {
            Some(record) if record.certify().is_ok() => Some(record.clone()),
            Some(_) => {
                state.quarantined.insert(key);
                None
            }
            None => None,
        }
    }

    /// Appends a record. Writers serialize through the cache lock and
    /// each record is a single write of one full line.
    pub fn put(&self, record: &WitnessRecord) -> Result<()> {
        let key = CacheKey {
            kind: record.kind,
            params: record.params.clone(),
        };
        let mut state = self.state.lock().expect("cache lock");
        state.quarantined.remove(&key);
        state.mem.insert(key.clone(), record.clone());
        if let Some(path) = self.file_for(record.kind) {
            let entry = CacheEntry {
                key,
                record: record.clone(),
                created_at: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            };
            let mut line = serde_json::to_string(&entry)?;
            line.push('\n');
            match OpenOptions::new().create(true).append(true).open(&path) {
                Ok(mut f) => {
                    f.write_all(line.as_bytes())?;
                    f.flush()?;
                }
                Err(e) => {
                    eprintln!(
                        "warning: cache file {} unwritable ({e}); entry kept in memory",
                        path.display()
                    );
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon;
    use crate::graph::named;
    use crate::interval::ValueInterval;
    use crate::ramsey::Method;

    fn c5_record() -> WitnessRecord {
        WitnessRecord {
            kind: WitnessKind::OmegaNk,
            params: vec![5, 2],
            value: ValueInterval::exact(2),
            witness_g6: Some(canon::canonical_g6(&named::cycle(5).unwrap()).unwrap()),
            method: Method::BruteForce,
        }
    }

    #[test]
    fn roundtrip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(Some(dir.path().to_path_buf()));
        assert!(cache.get(WitnessKind::OmegaNk, &[5, 2]).is_none());
        let rec = c5_record();
        cache.put(&rec).unwrap();
        assert_eq!(cache.get(WitnessKind::OmegaNk, &[5, 2]), Some(rec.clone()));
        // A second cache over the same directory sees the entry.
        let cache2 = Cache::open(Some(dir.path().to_path_buf()));
        assert_eq!(cache2.get(WitnessKind::OmegaNk, &[5, 2]), Some(rec));
    }

    #[test]
    fn corrupt_trailing_line_is_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(Some(dir.path().to_path_buf()));
        let rec = c5_record();
        cache.put(&rec).unwrap();
        let path = dir.path().join("omega_nk.jsonl");
        let mut text = std::fs::read_to_string(&path).unwrap();
        text.push_str("{\"key\":{\"kind\":\"omega_nk\",\"params\":[9,9]"); // torn write
        std::fs::write(&path, text).unwrap();
        assert_eq!(cache.get(WitnessKind::OmegaNk, &[5, 2]), Some(rec));
        assert!(cache.get(WitnessKind::OmegaNk, &[9, 9]).is_none());
    }

    #[test]
    fn failing_certification_quarantines() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(Some(dir.path().to_path_buf()));
        let mut rec = c5_record();
        rec.value = ValueInterval::exact(4); // wrong claim
        cache.put(&rec).unwrap();
        assert!(cache.get(WitnessKind::OmegaNk, &[5, 2]).is_none());
        // A corrected record written afterwards is served again.
        cache.put(&c5_record()).unwrap();
        assert!(cache.get(WitnessKind::OmegaNk, &[5, 2]).is_some());
    }

    #[test]
    fn unwritable_directory_degrades() {
        let cache = Cache::open(Some(PathBuf::from("/dev/null/not-a-dir")));
        assert!(cache.directory().is_none());
        let rec = c5_record();
        cache.put(&rec).unwrap();
        assert_eq!(cache.get(WitnessKind::OmegaNk, &[5, 2]), Some(rec));
    }
}
