//! On-disk cache of level-quotient stabilizer chains.
//!
//! Entries live in `$BRANCH_FORGE_CACHE/<sha256 of the serialized
//! definition>-L<level>.json` and are checked against the definition's
//! generators and the stored order before use.

use std::fs;
use std::path::{Path, PathBuf};

use branch_forge::catalog::serialize;
use branch_forge::completions::level_quotient;
use branch_forge::permgrp::{Bsgs, PermGroup};
use branch_forge::{GroupDef, Limits, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV: &str = "BRANCH_FORGE_CACHE";

#[derive(Serialize, Deserialize)]
struct Entry {
    v: u32,
    level: usize,
    order: String,
    chain: Bsgs,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Stats {
    pub hits: usize,
    pub misses: usize,
    pub discarded: usize,
}

pub struct Cache {
    dir: Option<PathBuf>,
    pub stats: Stats,
}

pub fn content_key(def: &GroupDef) -> String {
    hex::encode(Sha256::digest(serialize(def).as_bytes()))
}

impl Cache {
    pub fn from_env() -> Self {
        let dir = std::env::var_os(ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        Cache::new(dir)
    }

    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache {
            dir,
            stats: Stats::default(),
        }
    }

    fn path(&self, def: &GroupDef, level: usize) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{}-L{level}.json", content_key(def))))
    }

    /// `G_n`, from the cache when a valid entry exists.
    pub fn level_group(
        &mut self,
        def: &GroupDef,
        level: usize,
        limits: &Limits,
    ) -> Result<PermGroup> {
        let Some(path) = self.path(def, level) else {
            return level_quotient(def, level, limits);
        };
        if path.exists() {
            match load(&path, def, level, limits) {
                Some(g) => {
                    self.stats.hits += 1;
                    return Ok(g);
                }
                None => {
                    self.stats.discarded += 1;
                    let _ = fs::remove_file(&path);
                }
            }
        }
        self.stats.misses += 1;
        let g = level_quotient(def, level, limits)?;
        store(&path, level, &g);
        Ok(g)
    }
}

fn load(path: &Path, def: &GroupDef, level: usize, limits: &Limits) -> Option<PermGroup> {
    let entry: Entry = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if entry.v != 1 || entry.level != level {
        return None;
    }
    let gens = def.generator_level_perms(level, limits).ok()?;
    if entry.chain.generators != gens {
        return None;
    }
    let g = PermGroup::from_bsgs(&entry.chain).ok()?;
    (g.order().to_string() == entry.order).then_some(g)
}

// write failures only cost a recomputation next time
fn store(path: &Path, level: usize, g: &PermGroup) {
    let entry = Entry {
        v: 1,
        level,
        order: g.order().to_string(),
        chain: g.to_bsgs(),
    };
    let Ok(text) = serde_json::to_string(&entry) else {
        return;
    };
    if let Some(dir) = path.parent() {
        let _ = fs::create_dir_all(dir);
    }
    let tmp = path.with_extension("tmp");
    if fs::write(&tmp, text).is_ok() {
        let _ = fs::rename(&tmp, path);
    }
}
