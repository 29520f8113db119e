//! Content-addressed cache of JSON results.
//!
//! An entry lives in `<dir>/<sha256>.json` where the hash covers the
//! operation name, its canonical parameters and the code version, so a
//! version bump simply misses. Corrupt entries are reported and recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "FREEJORD_CACHE_DIR";

pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    version: String,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None, version: CODE_VERSION.into() }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()), version: CODE_VERSION.into() }
    }

    /// An explicit directory, else the environment variable, else none.
    pub fn from_env(explicit: Option<&Path>) -> Self {
        match explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) {
            Some(d) => Cache::at(d),
            None => Cache::disabled(),
        }
    }

    pub fn with_version(mut self, version: impl Into<String>) -> Self {
        self.version = version.into();
        self
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn key(&self, op: &str, params: &Value) -> Value {
        json!({"op": op, "params": params, "version": self.version})
    }

    fn path(&self, key: &Value) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let digest = Sha256::digest(key.to_string().as_bytes());
        Some(dir.join(format!("{}.json", hex::encode(digest))))
    }

    pub fn get<T: DeserializeOwned>(&self, op: &str, params: &Value) -> Option<T> {
        let key = self.key(op, params);
        let path = self.path(&key)?;
        let text = fs::read_to_string(&path).ok()?;
        let parsed: Option<Value> = serde_json::from_str(&text).ok();
        match parsed {
            Some(entry) if entry.get("key") == Some(&key) => match serde_json::from_value(entry["value"].clone()) {
                Ok(v) => Some(v),
                Err(_) => {
                    eprintln!("warning: ignoring corrupt cache entry {}", path.display());
                    None
                }
            },
            _ => {
                eprintln!("warning: ignoring corrupt cache entry {}", path.display());
                None
            }
        }
    }

    pub fn put<T: Serialize>(&self, op: &str, params: &Value, value: &T) {
        let key = self.key(op, params);
        let Some(path) = self.path(&key) else { return };
        let entry = json!({"key": key, "value": value});
        let write = fs::create_dir_all(path.parent().unwrap()).and_then(|_| {
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, entry.to_string())?;
            fs::rename(tmp, &path)
        });
        if let Err(e) = write {
            eprintln!("warning: cannot write cache entry {}: {e}", path.display());
        }
    }

    /// Looks the value up, or computes and stores it.
    pub fn get_or<T, E>(&self, op: &str, params: &Value, compute: impl FnOnce() -> Result<T, E>) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(v) = self.get(op, params) {
            return Ok(v);
        }
        let v = compute()?;
        self.put(op, params, &v);
        Ok(v)
    }
}
