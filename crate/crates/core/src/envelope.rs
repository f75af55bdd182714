// SPDX-License-Identifier: Apache-2.0

//! The JSON envelope shared by every command and by the golden corpus.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Envelope {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: String,
}

impl Envelope {
    pub fn new(command: impl Into<String>, inputs: Value, result: Value) -> Self {
        Self { command: command.into(), inputs, result, version: VERSION.to_string() }
    }

    /// Pretty JSON with sorted object keys.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let env: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if env.command.is_empty() || env.version.is_empty() {
            return Err(Error::Parse("empty command or version".into()));
        }
        Ok(env)
    }
}
