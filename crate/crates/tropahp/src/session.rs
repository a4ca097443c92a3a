//! File-backed storage of problem sessions.
//!
//! Each session is a single `<id>.json` file in the data directory. Writes
//! go to a temporary file first and are renamed into place, so a crash never
//! leaves a half-written session behind.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use tropahp_core::Tolerance;

use crate::document::ProblemDocument;
use crate::error::{Error, Result};

/// Environment variable naming the default data directory.
pub const DATA_ENV: &str = "TROPAHP_DATA";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Session {
    pub id: String,
    /// RFC 3339 timestamp of the last write.
    pub updated_at: String,
    pub problem: ProblemDocument,
}

#[derive(Debug, Clone)]
pub struct SessionStore {
    dir: PathBuf,
    locks: Arc<Mutex<HashMap<String, Arc<Mutex<()>>>>>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.display().to_string(),
        source,
    }
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.len() <= 64 && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '-')
}

impl SessionStore {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        Ok(SessionStore {
            dir,
            locks: Arc::default(),
        })
    }

    /// Opens the directory named by `TROPAHP_DATA`, or `./tropahp-data`.
    pub fn from_env() -> Result<Self> {
        let dir = std::env::var_os(DATA_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("tropahp-data"));
        Self::open(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, id: &str) -> PathBuf {
        self.dir.join(format!("{id}.json"))
    }

    fn lock(&self, id: &str) -> Arc<Mutex<()>> {
        let mut locks = self.locks.lock().expect("lock table poisoned");
        locks.entry(id.to_string()).or_default().clone()
    }

    fn write(&self, session: &Session) -> Result<()> {
        let path = self.path(&session.id);
        let tmp = self.dir.join(format!(".{}.tmp", session.id));
        let mut text = serde_json::to_string_pretty(session).expect("session serializes");
        text.push('\n');
        fs::write(&tmp, text).map_err(io_err(&tmp))?;
        fs::rename(&tmp, &path).map_err(io_err(&path))
    }

    fn stamp() -> String {
        chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
    }

    /// Stores a new session at version 1 after completing missing mirrors.
    /// The document must describe a valid problem.
    pub fn create(&self, mut problem: ProblemDocument) -> Result<Session> {
        problem.complete_reciprocals()?;
        problem.to_problem(&Tolerance::default())?;
        problem.version = Some(1);
        let session = Session {
            id: uuid::Uuid::new_v4().simple().to_string(),
            updated_at: Self::stamp(),
            problem,
        };
        self.write(&session)?;
        Ok(session)
    }

    pub fn get(&self, id: &str) -> Result<Session> {
        if !valid_id(id) {
            return Err(Error::NotFound(id.to_string()));
        }
        let path = self.path(id);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Err(Error::NotFound(id.to_string()))
            }
            Err(e) => return Err(io_err(&path)(e)),
        };
        serde_json::from_str(&text).map_err(|e| Error::Parse {
            source_name: path.display().to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Replaces the problem of a session.
    ///
    /// When the new document carries a version it must equal the stored one.
    /// Cells edited relative to the stored document have their mirrors
    /// recomputed, the result is validated and the version incremented.
    pub fn update(&self, id: &str, mut problem: ProblemDocument) -> Result<Session> {
        let lock = self.lock(id);
        let _guard = lock.lock().expect("session lock poisoned");
        let current = self.get(id)?;
        let version = current.problem.version.unwrap_or(1);
        if let Some(requested) = problem.version {
            if requested != version {
                return Err(Error::Conflict {
                    current: version,
                    requested,
                });
            }
        }
        problem.follow_edits(&current.problem);
        problem.complete_reciprocals()?;
        problem.to_problem(&Tolerance::default())?;
        problem.version = Some(version + 1);
        let session = Session {
            id: id.to_string(),
            updated_at: Self::stamp(),
            problem,
        };
        self.write(&session)?;
        Ok(session)
    }

    /// Ids of all stored sessions, sorted.
    pub fn list(&self) -> Result<Vec<String>> {
        let mut ids: Vec<String> = fs::read_dir(&self.dir)
            .map_err(io_err(&self.dir))?
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                let id = name.strip_suffix(".json")?;
                valid_id(id).then(|| id.to_string())
            })
            .collect();
        ids.sort();
        Ok(ids)
    }
}
