//! On-disk cache of projective character tables.
//!
//! Entries are keyed by the cocycle's content hash (which covers the group
//! table) and never rewritten. Reads are lock-free; writes go through a
//! process-wide mutex and an atomic rename.

use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::cochain::Cochain;
use crate::error::Result;
use crate::group::Group;
use crate::projrep::{irreducibles, CharacterTable};
use crate::C64;

pub const CACHE_ENV: &str = "ORBITWIST_CACHE_DIR";

static WRITE_LOCK: Mutex<()> = Mutex::new(());

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    group: String,
    cocycle_hash: String,
    irreducibles: Vec<EntryIrrep>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EntryIrrep {
    dimension: usize,
    character: Vec<(f64, f64)>,
}

/// `$ORBITWIST_CACHE_DIR`, else the user cache directory, else a temp dir.
pub fn default_dir() -> PathBuf {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return PathBuf::from(d);
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(d).join("orbitwist");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("orbitwist");
    }
    std::env::temp_dir().join("orbitwist-cache")
}

#[derive(Debug, Clone)]
pub struct IrrepCache {
    dir: Option<PathBuf>,
}

impl IrrepCache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        IrrepCache { dir: Some(dir.into()) }
    }

    pub fn from_env() -> Self {
        IrrepCache::at(default_dir())
    }

    /// A cache that always recomputes and never touches the disk.
    pub fn disabled() -> Self {
        IrrepCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, hash: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("irreps-{hash}.json")))
    }

    /// Character table of the `alpha`-projective irreducibles of `group`.
    /// Unreadable or inconsistent entries are ignored and recomputed.
    pub fn character_table(&self, group: Arc<Group>, alpha: &Cochain, seed: u64) -> Result<CharacterTable> {
        let hash = alpha.content_hash();
        let path = self.path_for(&hash);
        if let Some(table) = path.as_deref().and_then(|p| read_entry(p, &group, &hash)) {
            return Ok(table);
        }
        let table = irreducibles(group.clone(), alpha, seed)?.character_table();
        if let Some(p) = path {
            // a failed write only costs a recomputation later
            let _ = write_entry(&p, &group, &hash, &table);
        }
        Ok(table)
    }

    /// Removes every cache entry; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let Some(dir) = &self.dir else { return Ok(0) };
        if !dir.exists() {
            return Ok(0);
        }
        let _guard = WRITE_LOCK.lock().unwrap_or_else(|e| e.into_inner());
        let mut removed = 0;
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            if name.starts_with("irreps-") && name.ends_with(".json") {
                std::fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

fn read_entry(path: &Path, group: &Group, hash: &str) -> Option<CharacterTable> {
    let text = std::fs::read_to_string(path).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    if entry.cocycle_hash != hash {
        return None;
    }
    let n = group.order();
    let ok = entry.irreducibles.iter().all(|i| i.character.len() == n)
        && entry.irreducibles.iter().map(|i| i.dimension * i.dimension).sum::<usize>() == n;
    if !ok {
        return None;
    }
    Some(CharacterTable {
        dims: entry.irreducibles.iter().map(|i| i.dimension).collect(),
        characters: entry
            .irreducibles
            .iter()
            .map(|i| i.character.iter().map(|&(re, im)| C64::new(re, im)).collect())
            .collect(),
    })
}

fn write_entry(path: &Path, group: &Group, hash: &str, table: &CharacterTable) -> Result<()> {
    let entry = Entry {
        group: group.name().to_string(),
        cocycle_hash: hash.to_string(),
        irreducibles: table
            .dims
            .iter()
            .zip(&table.characters)
            .map(|(&dimension, chi)| EntryIrrep {
                dimension,
                character: chi.iter().map(|z| (z.re, z.im)).collect(),
            })
            .collect(),
    };
    let _guard = WRITE_LOCK.lock().unwrap_or_else(|e| e.into_inner());
    if path.exists() {
        return Ok(());
    }
    let dir = path.parent().expect("cache entries live in a directory");
    std::fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&entry)?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
