//! Flat TOML config file. Every key is optional; command-line flags win over
//! file values, which win over built-in defaults.
//!
//! ```toml
//! a_min = 0.0
//! a_max = 1.0
//! a_steps = 101
//! theta_steps = 181
//! alpha2 = [0.1, 1.0, 5.0]
//! family = "psi+"
//! out = "sweep.csv"
//! format = "csv"
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::CliError;
use crate::format::Format;

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub a_min: Option<f64>,
    pub a_max: Option<f64>,
    pub a_steps: Option<usize>,
    pub theta_steps: Option<usize>,
    pub alpha2: Option<Vec<f64>>,
    pub family: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl FileConfig {
    pub fn parse(text: &str, path: &Path) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config {
            path: path.to_path_buf(),
            message: e.message().to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text, path)
    }
}
