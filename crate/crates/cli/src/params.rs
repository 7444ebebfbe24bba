//! Parameter files: a JSON object with optional keys `a b c r s v T`.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use tripartite_discord::ParamSet;

#[derive(Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ParamFile {
    #[serde(default)]
    pub a: [f64; 3],
    #[serde(default)]
    pub b: [f64; 3],
    #[serde(default)]
    pub c: [f64; 3],
    #[serde(default)]
    pub r: [f64; 3],
    #[serde(default)]
    pub s: [f64; 3],
    #[serde(default)]
    pub v: [f64; 3],
    #[serde(default, rename = "T")]
    pub t: [f64; 3],
}

impl From<ParamFile> for ParamSet {
    fn from(f: ParamFile) -> Self {
        ParamSet { a: f.a, b: f.b, c: f.c, r: f.r, s: f.s, v: f.v, t: f.t }
    }
}

pub fn parse(text: &str) -> Result<ParamSet> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if !value.is_object() {
        bail!("expected a JSON object");
    }
    let file: ParamFile = serde_json::from_value(value)?;
    Ok(file.into())
}

pub fn load(path: &Path) -> Result<ParamSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}
