//! Fetching b-files with a local file cache.
//!
//! Raw response bytes are stored verbatim under the cache root, one file
//! per sequence, next to a small metadata record (source URL, retrieval
//! time, size). Cache writes go through a temp file and an atomic rename,
//! so concurrent readers always see a complete file and concurrent writers
//! serialize per sequence at the filesystem level.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::bfile::{BFile, SeqId};
use crate::error::OeisError;

/// Environment variable overriding the cache root directory.
pub const CACHE_ENV: &str = "DYCK_OEIS_CACHE";

/// Default remote, overridable for tests and mirrors.
pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

const READ_LIMIT: u64 = 64 << 20;

/// Metadata stored beside each cached b-file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FetchMeta {
    pub id: String,
    pub url: String,
    pub retrieved_unix: u64,
    pub bytes: u64,
}

/// A b-file fetcher with a directory cache.
#[derive(Debug, Clone)]
pub struct Client {
    cache_dir: PathBuf,
    base_url: String,
    offline: bool,
}

/// Cache root resolution: the environment variable, then the conventional
/// per-user cache directory, then the system temp directory.
fn default_cache_dir() -> PathBuf {
    if let Ok(dir) = std::env::var(CACHE_ENV) {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        if !xdg.is_empty() {
            return Path::new(&xdg).join("dyck-oeis");
        }
    }
    if let Ok(home) = std::env::var("HOME") {
        if !home.is_empty() {
            return Path::new(&home).join(".cache").join("dyck-oeis");
        }
    }
    std::env::temp_dir().join("dyck-oeis")
}

impl Client {
    pub fn new() -> Result<Self, OeisError> {
        Self::with_cache_dir(default_cache_dir())
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Result<Self, OeisError> {
        let cache_dir = dir.into();
        fs::create_dir_all(&cache_dir)?;
        Ok(Client { cache_dir, base_url: DEFAULT_BASE_URL.to_string(), offline: false })
    }

    pub fn base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into();
        self
    }

    /// In offline mode only the cache is consulted; nothing touches the
    /// network.
    pub fn offline(mut self, offline: bool) -> Self {
        self.offline = offline;
        self
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    pub fn cache_path(&self, id: &SeqId) -> PathBuf {
        self.cache_dir.join(id.bfile_name())
    }

    fn meta_path(&self, id: &SeqId) -> PathBuf {
        self.cache_dir.join(format!("{}.meta.json", id.bfile_name()))
    }

    pub fn is_cached(&self, id: &SeqId) -> bool {
        self.cache_path(id).is_file()
    }

    /// Metadata for a cached sequence, when present and readable.
    pub fn meta(&self, id: &SeqId) -> Option<FetchMeta> {
        let text = fs::read_to_string(self.meta_path(id)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Returns the b-file for `id`, downloading only on a cache miss (or
    /// when `refresh` forces it). A failed refresh falls back to the cache
    /// when one exists.
    pub fn fetch(&self, id: &SeqId, refresh: bool) -> Result<BFile, OeisError> {
        let cached = self.read_cache(id)?;
        if let (Some(text), false) = (&cached, refresh) {
            return BFile::parse(id.clone(), text);
        }
        if self.offline {
            return match cached {
                Some(text) => BFile::parse(id.clone(), &text),
                None => Err(OeisError::Unavailable { id: id.to_string() }),
            };
        }
        match self.download(id) {
            Ok(text) => {
                self.write_cache(id, &text)?;
                BFile::parse(id.clone(), &text)
            }
            Err(err) => match cached {
                Some(text) => BFile::parse(id.clone(), &text),
                None => Err(err),
            },
        }
    }

    fn read_cache(&self, id: &SeqId) -> Result<Option<String>, OeisError> {
        match fs::read_to_string(self.cache_path(id)) {
            Ok(text) => Ok(Some(text)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn write_cache(&self, id: &SeqId, text: &str) -> Result<(), OeisError> {
        let tmp = self.cache_dir.join(format!(".{}.tmp", id.bfile_name()));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, self.cache_path(id))?;
        let meta = FetchMeta {
            id: id.to_string(),
            url: id.bfile_url(&self.base_url),
            retrieved_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .unwrap_or(Duration::ZERO)
                .as_secs(),
            bytes: text.len() as u64,
        };
        let meta_tmp = self.cache_dir.join(format!(".{}.meta.tmp", id.bfile_name()));
        fs::write(&meta_tmp, serde_json::to_string_pretty(&meta).expect("meta serializes"))?;
        fs::rename(&meta_tmp, self.meta_path(id))?;
        Ok(())
    }

    fn download(&self, id: &SeqId) -> Result<String, OeisError> {
        let url = id.bfile_url(&self.base_url);
        let agent = ureq::AgentBuilder::new()
            .timeout_connect(Duration::from_secs(10))
            .timeout(Duration::from_secs(60))
            .build();
        let response = agent.get(&url).call().map_err(|e| OeisError::Http {
            url: url.clone(),
            reason: e.to_string(),
        })?;
        let mut text = String::new();
        response
            .into_reader()
            .take(READ_LIMIT)
            .read_to_string(&mut text)
            .map_err(|e| OeisError::Http { url, reason: e.to_string() })?;
        Ok(text)
    }
}
