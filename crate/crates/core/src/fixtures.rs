//! Frozen involutions shipped with the crate, each with the orbit data it
//! was selected for.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::projective::ProjectiveLinearMap;
use crate::exact::scalar::Field;
use crate::orbit::trace::parse_alpha;
use crate::picard::parabolic::ParabolicSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub shape: String,
    /// Arm lengths, sorted for trees.
    pub arms: Vec<usize>,
    #[serde(default)]
    pub cycle: Option<usize>,
    pub exact: bool,
    #[serde(default, rename = "type")]
    pub map_type: Option<String>,
    #[serde(default)]
    pub order: Option<u64>,
    #[serde(default)]
    pub degrees: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub field: String,
    pub alpha: Vec<Vec<String>>,
    pub bound: usize,
    pub expected: Expected,
}

impl Fixture {
    pub fn field(&self) -> Result<Field> {
        self.field.parse()
    }

    pub fn alpha(&self) -> Result<ProjectiveLinearMap> {
        let entries: Vec<String> = self.alpha.iter().flatten().cloned().collect();
        parse_alpha(self.field()?, &entries)
    }
}

const SOURCES: &[&str] = &[
    include_str!("../fixtures/identity-q.json"),
    include_str!("../fixtures/swap-xy-q.json"),
    include_str!("../fixtures/general-q.json"),
    include_str!("../fixtures/t134-f13.json"),
    include_str!("../fixtures/t236-f101.json"),
    include_str!("../fixtures/t333-f5.json"),
    include_str!("../fixtures/t257-f11.json"),
    include_str!("../fixtures/t345-f13.json"),
    include_str!("../fixtures/delta-6-3-f5.json"),
    include_str!("../fixtures/delta-10-4-f7.json"),
    include_str!("../fixtures/general-f1009.json"),
];

/// Every shipped fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    SOURCES.iter().map(|s| serde_json::from_str(s).expect("shipped fixtures parse")).collect()
}

pub fn by_name(name: &str) -> Result<Fixture> {
    all()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("no fixture named `{name}`")))
}

pub fn names() -> Vec<String> {
    all().into_iter().map(|f| f.name).collect()
}

const PARABOLIC: &[(&str, &str)] = &[
    ("parabolic-identity", include_str!("../fixtures/parabolic-identity.json")),
    ("parabolic-rank3", include_str!("../fixtures/parabolic-rank3.json")),
    ("parabolic-non-isometry", include_str!("../fixtures/parabolic-non-isometry.json")),
];

/// A shipped parabolic-form spec by name.
pub fn parabolic_spec(name: &str) -> Result<ParabolicSpec> {
    let (_, src) = PARABOLIC
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::InvalidInput(format!("no parabolic spec named `{name}`")))?;
    serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parabolic_names() -> Vec<&'static str> {
    PARABOLIC.iter().map(|(n, _)| *n).collect()
}
