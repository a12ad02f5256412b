//! The JSON report written by every CLI command.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::verify::{recheck, CheckResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputFile {
    pub path: String,
    pub sha256: String,
}

impl InputFile {
    pub fn new(path: &Path, bytes: &[u8]) -> Self {
        let digest = Sha256::digest(bytes);
        InputFile { path: path.display().to_string(), sha256: digest.iter().map(|b| format!("{b:02x}")).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputFile>,
    pub results: serde_json::Value,
    #[serde(default)]
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), inputs: Vec::new(), results: serde_json::Value::Null, checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Re-evaluates every failing check on its witness. Returns the ids whose
    /// outcome differs from the recorded one (a passing witness, or an
    /// unknown id).
    pub fn recheck_witnesses(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .filter(|c| match &c.witness {
                Some(w) => recheck(&c.id, w) != Some(false),
                None => true,
            })
            .map(|c| c.id.clone())
            .collect()
    }
}
