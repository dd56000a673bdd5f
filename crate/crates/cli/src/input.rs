//! Resolution of the α argument: a shipped fixture name, a file, or nine
//! inline entries.

use std::path::Path;

use cremona_core::exact::projective::ProjectiveLinearMap;
use cremona_core::exact::scalar::Field;
use cremona_core::fixtures;
use cremona_core::orbit::trace::{default_bound, parse_alpha};
use cremona_core::{Error, Result};
use serde_json::Value;

pub struct ResolvedAlpha {
    pub alpha: ProjectiveLinearMap,
    /// Bound recorded with a fixture, if the input was one.
    pub fixture_bound: Option<usize>,
}

impl ResolvedAlpha {
    pub fn bound(&self, flag: Option<usize>) -> usize {
        flag.or(self.fixture_bound).unwrap_or_else(|| default_bound(self.alpha.field()))
    }
}

fn field_or_default(flag: Option<&str>) -> Result<Field> {
    flag.map_or(Ok(Field::Rationals), str::parse)
}

/// Splits "1,0,0; 0,1,0; 0,0,1" or whitespace-separated text into entries.
fn split_entries(text: &str) -> Vec<String> {
    text.split(|c: char| c == ',' || c == ';' || c.is_whitespace() || c == '[' || c == ']')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim_matches('"').to_string())
        .collect()
}

/// A JSON file with `field` and a 3×3 `alpha` of strings (the fixture
/// format), or a plain text file with nine entries.
fn from_file(path: &Path, field_flag: Option<&str>) -> Result<ResolvedAlpha> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    if let Ok(json) = serde_json::from_str::<Value>(&text) {
        if json.is_object() {
            let field_tag = json.get("field").and_then(Value::as_str);
            let field = match (field_flag, field_tag) {
                (Some(flag), Some(tag)) if flag.parse::<Field>()? != tag.parse::<Field>()? => {
                    return Err(Error::FieldMismatch(flag.into(), tag.into()));
                }
                (flag, tag) => field_or_default(flag.or(tag))?,
            };
            let entries = json
                .get("alpha")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("missing `alpha` array".into()))?
                .iter()
                .flat_map(|row| row.as_array().cloned().unwrap_or_default())
                .map(|v| match v {
                    Value::String(s) => Ok(s),
                    Value::Number(n) => Ok(n.to_string()),
                    other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            let fixture_bound = json.get("bound").and_then(Value::as_u64).map(|b| b as usize);
            return Ok(ResolvedAlpha { alpha: parse_alpha(field, &entries)?, fixture_bound });
        }
    }
    let field = field_or_default(field_flag)?;
    Ok(ResolvedAlpha { alpha: parse_alpha(field, &split_entries(&text))?, fixture_bound: None })
}

pub fn resolve(alpha: &str, field_flag: Option<&str>) -> Result<ResolvedAlpha> {
    if let Ok(f) = fixtures::by_name(alpha) {
        if let Some(flag) = field_flag {
            if flag.parse::<Field>()? != f.field()? {
                return Err(Error::FieldMismatch(flag.into(), f.field.clone()));
            }
        }
        return Ok(ResolvedAlpha { alpha: f.alpha()?, fixture_bound: Some(f.bound) });
    }
    let path = Path::new(alpha);
    if path.is_file() {
        return from_file(path, field_flag);
    }
    let field = field_or_default(field_flag)?;
    Ok(ResolvedAlpha { alpha: parse_alpha(field, &split_entries(alpha))?, fixture_bound: None })
}
