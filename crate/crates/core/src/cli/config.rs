//! `key = value` configuration files describing one local datum and one
//! unramified representation.

use std::collections::BTreeMap;
use std::fmt;

use crate::repdata::{Extension, FourthRoot, LocalDatum, TauDatum, UnramifiedRep};
use crate::scalars::Scalar;

/// A configuration problem, tied to the key that caused it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub key: String,
    pub message: String,
}

impl ConfigError {
    fn new(key: &str, message: impl Into<String>) -> Self {
        ConfigError { key: key.to_string(), message: message.into() }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config key `{}`: {}", self.key, self.message)
    }
}

impl std::error::Error for ConfigError {}

const KEYS: [&str; 9] = ["q", "extension", "n", "satake", "satake2", "tau_valuation", "lambda_ef", "truncation", "seed"];

pub const DEFAULT_TRUNCATION: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub q: u64,
    pub extension: Extension,
    pub n: usize,
    pub satake: Vec<Scalar>,
    pub satake2: Option<Vec<Scalar>>,
    pub tau_valuation: u32,
    pub lambda_ef: FourthRoot,
    pub truncation: usize,
    pub seed: Option<u64>,
}

impl Config {
    /// Parses flat `key = value` lines; `#` starts a comment, lists are comma-separated.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut raw: BTreeMap<&str, &str> = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::new(line, format!("line {} is not `key = value`", lineno + 1)))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(ConfigError::new(key, "unknown key"));
            }
            if raw.insert(key, value.trim()).is_some() {
                return Err(ConfigError::new(key, "given more than once"));
            }
        }
        let required = |key: &str| raw.get(key).copied().ok_or_else(|| ConfigError::new(key, "missing"));
        fn number<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
            v.parse().map_err(|_| ConfigError::new(key, format!("cannot parse `{v}`")))
        }

        let q: u64 = number("q", required("q")?)?;
        let extension: Extension = required("extension")?
            .parse()
            .map_err(|_| ConfigError::new("extension", "expected split, inert_unramified or inert_ramified"))?;
        LocalDatum::new(q, extension).map_err(|e| ConfigError::new("q", e.to_string()))?;
        let n: usize = number("n", required("n")?)?;
        if n == 0 {
            return Err(ConfigError::new("n", "must be at least 1"));
        }
        let satake = parse_list("satake", required("satake")?, q, n)?;
        let satake2 = raw.get("satake2").map(|v| parse_list("satake2", v, q, n)).transpose()?;
        match (extension, &satake2) {
            (Extension::Split, None) => return Err(ConfigError::new("satake2", "required when extension = split")),
            (e, Some(_)) if e.is_inert() => return Err(ConfigError::new("satake2", "only allowed when extension = split")),
            _ => {}
        }
        let tau_valuation = match raw.get("tau_valuation") {
            Some(v) => number("tau_valuation", v)?,
            None => TauDatum::default_for(extension).d,
        };
        let lambda_ef = match raw.get("lambda_ef") {
            Some(v) => v.parse().map_err(|_| ConfigError::new("lambda_ef", "expected one of 1, i, -1, -i"))?,
            None => FourthRoot::One,
        };
        let truncation = match raw.get("truncation") {
            Some(v) => number("truncation", v)?,
            None => DEFAULT_TRUNCATION,
        };
        let seed = raw.get("seed").map(|v| number("seed", v)).transpose()?;
        Ok(Config { q, extension, n, satake, satake2, tau_valuation, lambda_ef, truncation, seed })
    }

    pub fn datum(&self) -> LocalDatum {
        LocalDatum::new(self.q, self.extension).expect("validated while parsing")
    }

    pub fn rep(&self) -> UnramifiedRep {
        UnramifiedRep::for_datum(&self.datum(), self.satake.clone(), self.satake2.clone()).expect("validated while parsing")
    }

    pub fn tau(&self) -> TauDatum {
        TauDatum::new(self.tau_valuation, self.lambda_ef)
    }
}

fn parse_list(key: &str, value: &str, q: u64, n: usize) -> Result<Vec<Scalar>, ConfigError> {
    let items: Vec<Scalar> = value
        .split(',')
        .map(|item| Scalar::parse(item.trim(), Some(q)).map_err(|e| ConfigError::new(key, e.to_string())))
        .collect::<Result<_, _>>()?;
    if items.len() != n {
        return Err(ConfigError::new(key, format!("has {} entries but n = {n}", items.len())));
    }
    if items.iter().any(Scalar::is_zero) {
        return Err(ConfigError::new(key, "entries must be nonzero"));
    }
    Ok(items)
}
