//! `key=value` configuration files mirroring the command-line flags.

use std::collections::BTreeMap;
use std::path::Path;

use epstein_core::{Error, Result};

pub const KEYS: [&str; 12] =
    ["form", "s", "range", "step", "precision", "out", "resume", "seed", "V", "T", "workers", "table"];

/// Parsed configuration file. Later duplicate keys override earlier ones.
#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", i + 1)))?;
            let k = k.trim().trim_start_matches("--");
            if !KEYS.contains(&k) {
                return Err(Error::Parse(format!("config line {}: unknown key {k:?}", i + 1)));
            }
            values.insert(k.to_string(), v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// `flag` if given, else the parsed config value.
    pub fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Parse(format!("config value {v:?} for {key} is invalid"))),
        }
    }
}
