//! File-backed polynomial cache keyed by canonical form. One record per
//! line: `key TAB comma-separated decimal coefficients`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use indpoly_core::engine::PolyEngine;
use indpoly_core::graph::{canonical_form, CanonicalKey, MAX_CANONICAL_ORDER};
use indpoly_core::{Graph, IntPolynomial};

use crate::{HarnessError, Result};

pub struct PolyCache {
    path: PathBuf,
    entries: RwLock<HashMap<CanonicalKey, IntPolynomial>>,
    writer: Mutex<File>,
    corrupt_lines: usize,
}

fn io_error(path: &Path, source: std::io::Error) -> HarnessError {
    HarnessError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn parse_line(line: &str) -> Option<(CanonicalKey, IntPolynomial)> {
    let (key, coeffs) = line.split_once('\t')?;
    let key = key.parse().ok()?;
    let items: Vec<&str> = coeffs.split(',').collect();
    Some((key, IntPolynomial::from_decimal_strings(&items)?))
}

impl PolyCache {
    /// Opens or creates the cache file. Unreadable records are logged and
    /// skipped; their graphs will simply be recomputed.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        let mut corrupt_lines = 0;
        match std::fs::read(&path) {
            Ok(bytes) => {
                for (i, line) in String::from_utf8_lossy(&bytes).lines().enumerate() {
                    if line.is_empty() {
                        continue;
                    }
                    match parse_line(line) {
                        Some((k, p)) => {
                            entries.insert(k, p);
                        }
                        None => {
                            corrupt_lines += 1;
                            log::warn!("{}:{}: ignoring corrupt cache record", path.display(), i + 1);
                        }
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(io_error(&path, e)),
        }
        let writer = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(|e| io_error(&path, e))?;
        Ok(PolyCache {
            path,
            entries: RwLock::new(entries),
            writer: Mutex::new(writer),
            corrupt_lines,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn corrupt_lines(&self) -> usize {
        self.corrupt_lines
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<IntPolynomial> {
        self.entries.read().unwrap().get(key).cloned()
    }

    pub fn put(&self, key: CanonicalKey, p: &IntPolynomial) -> Result<()> {
        let mut writer = self.writer.lock().unwrap();
        {
            let mut entries = self.entries.write().unwrap();
            if entries.get(&key) == Some(p) {
                return Ok(());
            }
            entries.insert(key, p.clone());
        }
        writeln!(writer, "{key}\t{}", p.to_decimal_strings().join(","))
            .and_then(|_| writer.flush())
            .map_err(|e| io_error(&self.path, e))
    }

    /// Cached polynomial of `g`, computing and storing it on a miss. Graphs
    /// beyond the canonical-form guard bypass the cache.
    pub fn indpoly(&self, engine: &dyn PolyEngine, g: &Graph) -> Result<IntPolynomial> {
        if g.order() > MAX_CANONICAL_ORDER {
            return Ok(engine.indpoly(g));
        }
        let key = canonical_form(g)?;
        if let Some(p) = self.get(&key) {
            return Ok(p);
        }
        let p = engine.indpoly(g);
        self.put(key, &p)?;
        Ok(p)
    }
}
