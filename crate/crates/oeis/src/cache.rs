use std::fs;
use std::path::{Path, PathBuf};

use crate::fixture::{SeqFixture, Source};
use crate::{OeisError, Result};

/// Overrides the cache directory.
pub const CACHE_ENV: &str = "LBP_OEIS_CACHE";

/// A directory holding one `<id>.json` file per sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

fn cache_error(path: &Path, e: impl ToString) -> OeisError {
    OeisError::Cache {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$LBP_OEIS_CACHE`, else `$XDG_CACHE_HOME/lbp-oeis`, else
    /// `$HOME/.cache/lbp-oeis`.
    pub fn from_env() -> Option<Self> {
        let non_empty = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty());
        if let Some(dir) = non_empty(CACHE_ENV) {
            return Some(Cache::new(dir));
        }
        if let Some(xdg) = non_empty("XDG_CACHE_HOME") {
            return Some(Cache::new(PathBuf::from(xdg).join("lbp-oeis")));
        }
        non_empty("HOME").map(|home| Cache::new(PathBuf::from(home).join(".cache").join("lbp-oeis")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, id: &str) -> PathBuf {
        self.dir.join(format!("{id}.json"))
    }

    /// Every cached entry, marked as [`Source::Cached`]. A missing directory
    /// is an empty cache.
    pub fn load_all(&self) -> Result<Vec<SeqFixture>> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(cache_error(&self.dir, e)),
        };
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        paths
            .iter()
            .map(|p| {
                let text = fs::read_to_string(p).map_err(|e| cache_error(p, e))?;
                let mut fx = SeqFixture::from_json(&text).map_err(|e| cache_error(p, e))?;
                fx.source = Source::Cached;
                Ok(fx)
            })
            .collect()
    }

    pub fn load(&self, id: &str) -> Result<Option<SeqFixture>> {
        let path = self.path_for(id);
        match fs::read_to_string(&path) {
            Ok(text) => {
                let mut fx = SeqFixture::from_json(&text).map_err(|e| cache_error(&path, e))?;
                fx.source = Source::Cached;
                Ok(Some(fx))
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(cache_error(&path, e)),
        }
    }

    /// Writes the entry unless one with the same id already exists. The file
    /// is written under a temporary name and renamed into place.
    pub fn store(&self, fx: &SeqFixture) -> Result<()> {
        let path = self.path_for(&fx.id);
        if path.exists() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir).map_err(|e| cache_error(&self.dir, e))?;
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", fx.id, std::process::id()));
        fs::write(&tmp, fx.to_json()).map_err(|e| cache_error(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| cache_error(&path, e))
    }
}
