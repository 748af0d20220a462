//! Run configuration, read from flat `key = value` text.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value `{value}` for `{key}`")]
    BadValue { key: String, value: String },
    #[error("`{0}` must be positive")]
    NotPositive(&'static str),
    #[error("cannot read config file: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub order_cap: usize,
    pub closure_budget: usize,
    pub search_budget: usize,
    pub seed: u64,
    pub lemma21_samples: usize,
    pub en_samples: usize,
    pub en_max_len: usize,
    pub record_timing: bool,
    pub output: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order_cap: crate::group::DEFAULT_ORDER_CAP,
            closure_budget: 200_000,
            search_budget: 1_000_000,
            seed: 20_240_601,
            lemma21_samples: 100,
            en_samples: 500,
            en_max_len: 3,
            record_timing: true,
            output: None,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.replace('_', "").parse().map_err(|_| ConfigError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
    })
}

impl RunConfig {
    pub const KEYS: &'static [&'static str] = &[
        "order_cap",
        "closure_budget",
        "search_budget",
        "seed",
        "lemma21_samples",
        "en_samples",
        "en_max_len",
        "record_timing",
        "output",
    ];

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let value = value.trim();
        match key.trim() {
            "order_cap" => self.order_cap = parse_num(key, value)?,
            "closure_budget" => self.closure_budget = parse_num(key, value)?,
            "search_budget" => self.search_budget = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "lemma21_samples" => self.lemma21_samples = parse_num(key, value)?,
            "en_samples" => self.en_samples = parse_num(key, value)?,
            "en_max_len" => self.en_max_len = parse_num(key, value)?,
            "record_timing" => {
                self.record_timing = match value {
                    "true" | "yes" | "1" => true,
                    "false" | "no" | "0" => false,
                    _ => {
                        return Err(ConfigError::BadValue {
                            key: key.to_string(),
                            value: value.to_string(),
                        })
                    }
                }
            }
            "output" => self.output = (!value.is_empty()).then(|| value.to_string()),
            other => return Err(ConfigError::UnknownKey(other.to_string())),
        }
        Ok(())
    }

    /// Apply `key = value` lines on top of `self`.
    pub fn merge_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
            self.set(k, v)?;
        }
        self.validate()
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        cfg.merge_text(text)?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(e.to_string()))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let positive = [
            ("order_cap", self.order_cap),
            ("closure_budget", self.closure_budget),
            ("search_budget", self.search_budget),
            ("en_max_len", self.en_max_len),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(ConfigError::NotPositive(name));
            }
        }
        Ok(())
    }

    /// Canonical `key = value` rendering.
    pub fn render(&self) -> String {
        format!(
            "order_cap = {}\nclosure_budget = {}\nsearch_budget = {}\nseed = {}\n\
             lemma21_samples = {}\nen_samples = {}\nen_max_len = {}\nrecord_timing = {}\noutput = {}\n",
            self.order_cap,
            self.closure_budget,
            self.search_budget,
            self.seed,
            self.lemma21_samples,
            self.en_samples,
            self.en_max_len,
            self.record_timing,
            self.output.as_deref().unwrap_or(""),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_roundtrip() {
        let cfg = RunConfig {
            seed: 99,
            output: Some("out.json".into()),
            record_timing: false,
            ..RunConfig::default()
        };
        assert_eq!(RunConfig::parse(&cfg.render()).unwrap(), cfg);
    }

    #[test]
    fn errors() {
        assert_eq!(
            RunConfig::parse("nonsense"),
            Err(ConfigError::Syntax { line: 1 })
        );
        assert_eq!(
            RunConfig::parse("colour = red"),
            Err(ConfigError::UnknownKey("colour".into()))
        );
        assert!(matches!(
            RunConfig::parse("seed = -4"),
            Err(ConfigError::BadValue { .. })
        ));
        assert_eq!(
            RunConfig::parse("order_cap = 0"),
            Err(ConfigError::NotPositive("order_cap"))
        );
        let cfg = RunConfig::parse("# comment\n\nclosure_budget = 300_000\n").unwrap();
        assert_eq!(cfg.closure_budget, 300_000);
    }
}
