//! Plain-text `key = value` run configuration. Values from the file fill
//! options the command line left unset; explicit flags always win.

use std::collections::HashMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

/// Parsed configuration file: lowercase keys mapped to raw value strings.
/// Lines are `key = value`; blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    entries: HashMap<String, String>,
    origin: String,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("config {}: {e}", path.display())))?;
        let mut entries = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "config {}, line {}: expected `key = value`, got `{line}`",
                    path.display(),
                    lineno + 1
                ))
            })?;
            entries.insert(key.trim().to_ascii_lowercase(), value.trim().to_string());
        }
        Ok(Self { entries, origin: path.display().to_string() })
    }

    pub fn get<T>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        match self.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config {}: key `{key}`: {e}", self.origin))),
        }
    }

    /// Fills `slot` from the file when the command line left it empty.
    pub fn fill<T>(&self, slot: &mut Option<T>, key: &str) -> Result<(), CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        if slot.is_none() {
            *slot = self.get(key)?;
        }
        Ok(())
    }

    pub fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }
}

/// Loads the file when a path was given; otherwise an empty set of defaults.
pub fn load_optional(path: Option<&Path>) -> Result<ConfigFile, CliError> {
    match path {
        Some(p) => ConfigFile::load(p),
        None => Ok(ConfigFile::default()),
    }
}
