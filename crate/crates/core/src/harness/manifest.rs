//! Run manifests: enough state to account for a run and resume it.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::HarnessError;

pub const MANIFEST_SCHEMA_VERSION: u32 = 1;

/// Ledger of one verification run, persisted beside the report.
///
/// `processed + skipped` equals the number of graph-bearing lines consumed;
/// `cursor` is the last physical input line consumed, so a resumed run
/// continues at `cursor + 1` and appends to the same report byte-for-byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub variant: String,
    pub format: String,
    pub strict: bool,
    pub workers: usize,
    /// Filter pipeline in execution order (hunt only).
    pub filters: Vec<String>,
    pub processed: u64,
    pub skipped: u64,
    pub violations: u64,
    pub sharp: u64,
    pub near_sharp: u64,
    pub wall_ms: u64,
    pub cursor: u64,
}

impl RunManifest {
    pub fn new(command: &str, input: &str) -> RunManifest {
        RunManifest {
            schema_version: MANIFEST_SCHEMA_VERSION,
            command: command.to_string(),
            input: input.to_string(),
            variant: String::new(),
            format: String::new(),
            strict: true,
            workers: 0,
            filters: Vec::new(),
            processed: 0,
            skipped: 0,
            violations: 0,
            sharp: 0,
            near_sharp: 0,
            wall_ms: 0,
            cursor: 0,
        }
    }

    /// `<report>.manifest`
    pub fn path_for(report: &Path) -> PathBuf {
        let mut s = report.as_os_str().to_os_string();
        s.push(".manifest");
        PathBuf::from(s)
    }

    pub fn save(&self, path: &Path) -> Result<(), HarnessError> {
        let text = toml::to_string(self).map_err(|e| HarnessError::Manifest {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<RunManifest, HarnessError> {
        let text = std::fs::read_to_string(path)?;
        let manifest: RunManifest = toml::from_str(&text).map_err(|e| HarnessError::Manifest {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        if manifest.schema_version != MANIFEST_SCHEMA_VERSION {
            return Err(HarnessError::Manifest {
                path: path.display().to_string(),
                detail: format!(
                    "schema version {} (expected {MANIFEST_SCHEMA_VERSION})",
                    manifest.schema_version
                ),
            });
        }
        Ok(manifest)
    }
}
