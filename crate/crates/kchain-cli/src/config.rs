//! Settings resolution: CLI flags > `KCHAIN_*` environment variables >
//! config file (`key=value` lines, `#` comments) > built-in defaults.
//!
//! The config file path comes from `--config` or `$KCHAIN_CONFIG`; when
//! neither is set no file is read. Recognized keys: `max_n`, `mode`,
//! `seed`, `jobs`, `sample_size`.

use std::collections::BTreeMap;
use std::path::Path;

use crate::{SweepMode, UsageError};

/// Defaults already merged with environment and config-file values;
/// command-line flags are applied on top by each subcommand.
#[derive(Debug, Clone)]
pub struct Settings {
    pub max_n: usize,
    pub mode: SweepMode,
    pub seed: u64,
    pub jobs: usize,
    pub sample_size: usize,
}

impl Settings {
    pub fn resolve(config_flag: Option<&Path>) -> Result<Settings, UsageError> {
        let file = match config_flag {
            Some(path) => Some(path.to_path_buf()),
            None => std::env::var_os("KCHAIN_CONFIG").map(Into::into),
        };
        let file_values = match file {
            Some(path) => parse_config_file(&path)?,
            None => BTreeMap::new(),
        };

        let lookup = |key: &str| -> Result<Option<String>, UsageError> {
            let env_key = format!("KCHAIN_{}", key.to_uppercase());
            if let Ok(v) = std::env::var(&env_key) {
                return Ok(Some(v));
            }
            Ok(file_values.get(key).cloned())
        };

        let default_jobs = std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1);

        Ok(Settings {
            max_n: parse_or("max_n", lookup("max_n")?, 8)?,
            mode: match lookup("mode")?.as_deref() {
                None => SweepMode::Exhaustive,
                Some("exhaustive") => SweepMode::Exhaustive,
                Some("sample") => SweepMode::Sample,
                Some(other) => {
                    return Err(UsageError(format!(
                        "invalid mode {other:?}: expected exhaustive or sample"
                    )))
                }
            },
            seed: parse_or("seed", lookup("seed")?, 0)?,
            jobs: parse_or("jobs", lookup("jobs")?, default_jobs)?,
            sample_size: parse_or("sample_size", lookup("sample_size")?, 64)?,
        })
    }
}

fn parse_or<T: std::str::FromStr>(
    key: &str,
    value: Option<String>,
    default: T,
) -> Result<T, UsageError> {
    match value {
        None => Ok(default),
        Some(raw) => raw
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("invalid value {raw:?} for setting {key}"))),
    }
}

fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config file {}: {e}", path.display())))?;
    let mut values = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(UsageError(format!(
                "config file {}:{}: expected key=value",
                path.display(),
                lineno + 1
            )));
        };
        values.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(values)
}
