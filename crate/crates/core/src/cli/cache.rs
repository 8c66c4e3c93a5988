//! Content-addressed store: `<dir>/<key>.json` holding a payload and the
//! SHA-256 of its compact JSON. Entries failing the hash check are ignored.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::envelope::hash_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// An entry existed but failed its hash check.
    Corrupt,
    Disabled,
    NotUsed,
}

impl CacheStatus {
    pub fn name(self) -> &'static str {
        match self {
            CacheStatus::Hit => "hit",
            CacheStatus::Miss => "miss",
            CacheStatus::Corrupt => "corrupt",
            CacheStatus::Disabled => "disabled",
            CacheStatus::NotUsed => "not-used",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// Create the directory; on failure the cache is disabled and the
    /// returned warning explains why.
    pub fn open(dir: &Path) -> (Self, Option<String>) {
        match fs::create_dir_all(dir) {
            Ok(()) => (Cache { dir: Some(dir.to_path_buf()) }, None),
            Err(e) => (
                Cache::disabled(),
                Some(format!("cache directory {} is unusable ({e}); continuing without cache", dir.display())),
            ),
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    pub fn get(&self, key: &str) -> (Option<Value>, CacheStatus) {
        let Some(path) = self.path(key) else {
            return (None, CacheStatus::Disabled);
        };
        let Ok(text) = fs::read_to_string(&path) else {
            return (None, CacheStatus::Miss);
        };
        let entry: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(_) => return (None, CacheStatus::Corrupt),
        };
        let payload = &entry["payload"];
        if entry["sha256"].as_str() != Some(hash_value(payload).as_str()) {
            return (None, CacheStatus::Corrupt);
        }
        (Some(payload.clone()), CacheStatus::Hit)
    }

    /// Write failures only produce a warning.
    pub fn put(&self, key: &str, payload: &Value) -> Option<String> {
        let path = self.path(key)?;
        let entry = json!({ "sha256": hash_value(payload), "payload": payload });
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string_pretty(&entry).expect("JSON values serialize");
        fs::write(&tmp, text)
            .and_then(|_| fs::rename(&tmp, &path))
            .err()
            .map(|e| format!("could not write cache entry {}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let (cache, warn) = Cache::open(dir.path());
        assert!(warn.is_none());
        let v = json!({"a": [1, 2]});
        assert_eq!(cache.get("k").1, CacheStatus::Miss);
        assert!(cache.put("k", &v).is_none());
        assert_eq!(cache.get("k"), (Some(v), CacheStatus::Hit));
        let path = dir.path().join("k.json");
        let text = fs::read_to_string(&path).unwrap().replace('2', "3");
        fs::write(&path, text).unwrap();
        assert_eq!(cache.get("k").1, CacheStatus::Corrupt);
    }

    #[test]
    fn unwritable_directory_disables() {
        let file = tempfile::NamedTempFile::new().unwrap();
        let (cache, warn) = Cache::open(&file.path().join("sub"));
        assert!(!cache.is_enabled());
        assert!(warn.is_some());
        assert_eq!(cache.get("k").1, CacheStatus::Disabled);
    }
}
