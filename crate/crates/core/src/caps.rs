//! Size limits for the exhaustive searches.

use crate::error::{Error, Result};

/// Environment variable overriding the default caps. Either a single
/// integer applied to every cap, or a comma-separated list such as
/// `general=5,acyclic=6,dk=7`.
pub const CAP_ENV: &str = "CCELAB_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for enumerating all (or all loopless) digraphs.
    pub general: usize,
    /// Largest `n` for enumerating acyclic digraphs.
    pub acyclic: usize,
    /// Largest `|V(G)| + k_max` for double competition number searches.
    pub dk: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { general: 6, acyclic: 7, dk: 7 }
    }
}

impl Caps {
    /// Defaults, overridden by `CCELAB_CAP` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(value) => Self::parse(&value),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse {CAP_ENV} value {text:?}"));
        let text = text.trim();
        if let Ok(all) = text.parse::<usize>() {
            return Ok(Self { general: all, acyclic: all, dk: all });
        }
        let mut caps = Self::default();
        for part in text.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "general" => caps.general = value,
                "acyclic" => caps.acyclic = value,
                "dk" => caps.dk = value,
                _ => return Err(bad()),
            }
        }
        Ok(caps)
    }
}
