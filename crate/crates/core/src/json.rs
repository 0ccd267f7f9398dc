//! JSON formats for spaces, maps, covers, families, posets and function
//! spaces. Sets are sorted point lists; families of sets are sorted by bit
//! pattern.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::compactness::{DirectedCover, IndexedFamily, Role};
use crate::domains::FinitePoset;
use crate::error::{Error, Result};
use crate::function_space::FunctionSpace;
use crate::maps::ContinuousMap;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub dom: SpaceJson,
    pub cod: SpaceJson,
    pub graph: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverJson {
    pub space: SpaceJson,
    pub members: Vec<Vec<usize>>,
    pub target: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub index: SpaceJson,
    pub target: SpaceJson,
    pub assign: Vec<Vec<usize>>,
    pub role: Role,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub elements: usize,
    pub leq: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpaceJson {
    pub dom: SpaceJson,
    pub cod: SpaceJson,
    pub maps: Vec<Vec<usize>>,
    pub opens: Vec<Vec<usize>>,
}

/// Converts a point list, rejecting indices outside `0..n`.
pub fn set_from_points(points: &[usize], n: usize) -> Result<PointSet> {
    for &p in points {
        if p >= n || p >= MAX_POINTS {
            return Err(Error::PointIndexOutOfRange {
                point: p,
                carrier: n,
            });
        }
    }
    Ok(PointSet::from_points(points.iter().copied()))
}

impl From<&FiniteSpace> for SpaceJson {
    fn from(x: &FiniteSpace) -> Self {
        SpaceJson {
            points: x.n(),
            opens: x.opens().iter().map(|u| u.to_vec()).collect(),
            labels: x.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<&SpaceJson> for FiniteSpace {
    type Error = Error;

    fn try_from(j: &SpaceJson) -> Result<Self> {
        crate::space::check_carrier(j.points)?;
        let opens = j
            .opens
            .iter()
            .map(|u| set_from_points(u, j.points))
            .collect::<Result<Vec<_>>>()?;
        let x = FiniteSpace::new(j.points, opens)?;
        match &j.labels {
            Some(l) => x.with_labels(l.clone()),
            None => Ok(x),
        }
    }
}

impl From<&ContinuousMap> for MapJson {
    fn from(f: &ContinuousMap) -> Self {
        MapJson {
            dom: f.dom().into(),
            cod: f.cod().into(),
            graph: f.graph().to_vec(),
        }
    }
}

impl TryFrom<&MapJson> for ContinuousMap {
    type Error = Error;

    fn try_from(j: &MapJson) -> Result<Self> {
        let dom = FiniteSpace::try_from(&j.dom)?;
        let cod = FiniteSpace::try_from(&j.cod)?;
        ContinuousMap::new(&dom, &cod, j.graph.clone())
    }
}

impl From<&DirectedCover> for CoverJson {
    fn from(c: &DirectedCover) -> Self {
        CoverJson {
            space: c.space().into(),
            members: c.members().iter().map(|u| u.to_vec()).collect(),
            target: c.target().to_vec(),
        }
    }
}

impl TryFrom<&CoverJson> for DirectedCover {
    type Error = Error;

    fn try_from(j: &CoverJson) -> Result<Self> {
        let x = FiniteSpace::try_from(&j.space)?;
        let members = j
            .members
            .iter()
            .map(|m| set_from_points(m, x.n()))
            .collect::<Result<Vec<_>>>()?;
        DirectedCover::new(&x, members, set_from_points(&j.target, x.n())?)
    }
}

impl From<&IndexedFamily> for FamilyJson {
    fn from(f: &IndexedFamily) -> Self {
        FamilyJson {
            index: f.index().into(),
            target: f.target().into(),
            assign: f.assign().iter().map(|u| u.to_vec()).collect(),
            role: f.role(),
        }
    }
}

impl TryFrom<&FamilyJson> for IndexedFamily {
    type Error = Error;

    fn try_from(j: &FamilyJson) -> Result<Self> {
        let index = FiniteSpace::try_from(&j.index)?;
        let target = FiniteSpace::try_from(&j.target)?;
        let assign = j
            .assign
            .iter()
            .map(|a| set_from_points(a, target.n()))
            .collect::<Result<Vec<_>>>()?;
        IndexedFamily::new(&index, &target, assign, j.role)
    }
}

impl From<&FinitePoset> for PosetJson {
    fn from(p: &FinitePoset) -> Self {
        PosetJson {
            elements: p.n(),
            leq: p.order().matrix(),
        }
    }
}

impl TryFrom<&PosetJson> for FinitePoset {
    type Error = Error;

    fn try_from(j: &PosetJson) -> Result<Self> {
        if j.leq.len() != j.elements {
            return Err(Error::Format(format!(
                "leq has {} rows for {} elements",
                j.leq.len(),
                j.elements
            )));
        }
        FinitePoset::from_matrix(&j.leq)
    }
}

impl From<&FunctionSpace> for FunctionSpaceJson {
    fn from(fs: &FunctionSpace) -> Self {
        FunctionSpaceJson {
            dom: fs.dom().into(),
            cod: fs.cod().into(),
            maps: fs.maps().to_vec(),
            opens: fs.space().opens().iter().map(|u| u.to_vec()).collect(),
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

/// Indented objects, one line per array element, innermost arrays inline.
pub fn pretty(value: &Value) -> String {
    let mut out = String::new();
    write_pretty(value, 0, &mut out);
    out
}

fn write_pretty(value: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_pretty(v, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                if v.is_object() {
                    write_pretty(v, depth + 1, out);
                } else {
                    out.push_str(&v.to_string());
                }
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        _ => out.push_str(&value.to_string()),
    }
}

fn render<T: Serialize>(value: &T) -> String {
    pretty(&serde_json::to_value(value).expect("plain data serializes"))
}

pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    FiniteSpace::try_from(&parse::<SpaceJson>(text)?)
}

pub fn parse_map(text: &str) -> Result<ContinuousMap> {
    ContinuousMap::try_from(&parse::<MapJson>(text)?)
}

pub fn parse_cover(text: &str) -> Result<DirectedCover> {
    DirectedCover::try_from(&parse::<CoverJson>(text)?)
}

pub fn parse_family(text: &str) -> Result<IndexedFamily> {
    IndexedFamily::try_from(&parse::<FamilyJson>(text)?)
}

pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    FinitePoset::try_from(&parse::<PosetJson>(text)?)
}

pub fn space_to_string(x: &FiniteSpace) -> String {
    render(&SpaceJson::from(x))
}

pub fn map_to_string(f: &ContinuousMap) -> String {
    render(&MapJson::from(f))
}

pub fn cover_to_string(c: &DirectedCover) -> String {
    render(&CoverJson::from(c))
}

pub fn family_to_string(f: &IndexedFamily) -> String {
    render(&FamilyJson::from(f))
}

pub fn poset_to_string(p: &FinitePoset) -> String {
    render(&PosetJson::from(p))
}

pub fn function_space_to_string(fs: &FunctionSpace) -> String {
    render(&FunctionSpaceJson::from(fs))
}

/// Compact JSON value of a space, for embedding in reports.
pub fn space_value(x: &FiniteSpace) -> serde_json::Value {
    serde_json::to_value(SpaceJson::from(x)).expect("plain data serializes")
}

pub fn set_value(s: PointSet) -> serde_json::Value {
    serde_json::Value::from(s.to_vec())
}
