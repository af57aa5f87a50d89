//! The JSON structure-file format and report rendering.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "field": "Q",
//!   "spaces": { "A": { "dim": 2, "labels": ["u", "e"] } },
//!   "maps": {
//!     "mA": {
//!       "signature": { "source": ["A", "A"], "target": ["A"] },
//!       "entries": [[0, 0, 0, "1"], [1, 0, 1, "1"]]
//!     }
//!   },
//!   "roles": { "product_A": "mA" }
//! }
//! ```
//!
//! `field` is `"Q"` or `{"prime": p}`. Each entry lists the target indices,
//! then the source indices, then the scalar in canonical form. Omitted
//! entries are zero. A map named by its role needs no `roles` binding.
//! An optional `presentation` block records which ambient coordinates
//! span `A`, for files holding a built extension.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::axioms::ViolationList;
use crate::env::{role_signature, StructureEnv};
use crate::equivalence::ExtensionPresentation;
use crate::error::{ForgeError, Result};
use crate::linmap::{flat_index, tuples, LinMap, SpaceDecl};
use crate::scalar::Field;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
enum FieldRepr {
    Named(String),
    Prime { prime: u32 },
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct SpaceRepr {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct Signature {
    source: Vec<String>,
    target: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct MapRepr {
    signature: Signature,
    #[serde(default)]
    entries: Vec<Vec<Value>>,
}

/// Which ambient coordinates span `A`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresentationRepr {
    pub ambient: String,
    pub embedding: Vec<usize>,
    pub projection: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    format_version: u32,
    field: FieldRepr,
    #[serde(default)]
    spaces: BTreeMap<String, SpaceRepr>,
    #[serde(default)]
    maps: BTreeMap<String, MapRepr>,
    #[serde(default)]
    roles: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    presentation: Option<PresentationRepr>,
}

/// A loaded file: the env and, for built extensions, the presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub env: StructureEnv,
    pub presentation: Option<PresentationRepr>,
}

impl Document {
    pub fn new(env: StructureEnv) -> Self {
        Document {
            env,
            presentation: None,
        }
    }

    /// The presentation of the ambient, if the file records one.
    pub fn extension(&self) -> Result<Option<ExtensionPresentation>> {
        let Some(p) = &self.presentation else {
            return Ok(None);
        };
        let mut env = self.env.clone();
        if p.ambient != "E" {
            env.bind("E", &p.ambient);
        }
        ExtensionPresentation::new(env, p.embedding.clone(), p.projection.clone()).map(Some)
    }
}

fn parse_field(f: &FieldRepr) -> Result<Field> {
    match f {
        FieldRepr::Named(s) if s == "Q" => Ok(Field::Rational),
        FieldRepr::Named(s) => Err(ForgeError::Format(format!("unknown field {s:?}"))),
        FieldRepr::Prime { prime } => Field::prime(*prime),
    }
}

fn field_repr(f: Field) -> FieldRepr {
    match f {
        Field::Rational => FieldRepr::Named("Q".into()),
        Field::Prime(p) => FieldRepr::Prime { prime: p },
    }
}

fn json_error(e: serde_json::Error) -> ForgeError {
    ForgeError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    }
}

fn build_map(name: &str, repr: &MapRepr, spaces: &BTreeMap<String, SpaceDecl>, field: Field) -> Result<LinMap> {
    let dims = |v: &[String]| -> Result<Vec<usize>> {
        v.iter()
            .map(|s| {
                spaces
                    .get(s)
                    .map(|d| d.dim)
                    .ok_or_else(|| ForgeError::UnknownSpace(format!("{s} (in map {name})")))
            })
            .collect()
    };
    let sd = dims(&repr.signature.source)?;
    let td = dims(&repr.signature.target)?;
    let all: Vec<usize> = td.iter().chain(&sd).copied().collect();
    let mut data = vec![field.zero(); all.iter().product()];
    let mut seen = vec![false; data.len()];
    for e in &repr.entries {
        if e.len() != all.len() + 1 {
            return Err(ForgeError::Format(format!(
                "entry {e:?} of {name} needs {} indices and a scalar",
                all.len()
            )));
        }
        let mut idx = Vec::with_capacity(all.len());
        for (v, &d) in e[..all.len()].iter().zip(&all) {
            let i = v
                .as_u64()
                .ok_or_else(|| ForgeError::Format(format!("index {v} of {name} is not a non-negative integer")))?
                as usize;
            if i >= d {
                return Err(ForgeError::IndexOutOfRange {
                    name: name.to_string(),
                    index: i,
                    dim: d,
                });
            }
            idx.push(i);
        }
        let s = e[all.len()]
            .as_str()
            .ok_or_else(|| ForgeError::Format(format!("scalar of {name} must be a string")))?;
        let flat = flat_index(&all, &idx);
        if seen[flat] {
            return Err(ForgeError::DuplicateEntry {
                map: name.to_string(),
                index: idx,
            });
        }
        seen[flat] = true;
        data[flat] = field.parse(s)?;
    }
    LinMap::new(
        repr.signature.source.clone(),
        repr.signature.target.clone(),
        sd,
        td,
        field,
        data,
    )
}

/// Parses a structure file and validates the shapes it declares.
pub fn parse_document(text: &str) -> Result<Document> {
    let repr: FileRepr = serde_json::from_str(text).map_err(json_error)?;
    if repr.format_version != FORMAT_VERSION {
        return Err(ForgeError::Format(format!(
            "format_version {} is not supported (expected {FORMAT_VERSION})",
            repr.format_version
        )));
    }
    let field = parse_field(&repr.field)?;
    let mut env = StructureEnv::new(field);
    for (name, s) in &repr.spaces {
        if let Some(l) = &s.labels {
            if l.len() != s.dim {
                return Err(ForgeError::Format(format!(
                    "space {name} has {} labels for dim {}",
                    l.len(),
                    s.dim
                )));
            }
        }
        env.spaces.insert(
            name.clone(),
            SpaceDecl {
                name: name.clone(),
                dim: s.dim,
                labels: s.labels.clone(),
            },
        );
    }
    for (name, m) in &repr.maps {
        let lm = build_map(name, m, &env.spaces, field)?;
        env.insert_map(name, lm);
    }
    for (role, name) in &repr.roles {
        let is_space = role.len() == 1 && role.chars().all(|c| c.is_ascii_uppercase());
        if !is_space && role_signature(role).is_none() {
            return Err(ForgeError::UnknownRole(role.clone()));
        }
        let target_exists = if is_space {
            env.spaces.contains_key(name)
        } else {
            env.maps.contains_key(name)
        };
        if !target_exists {
            return Err(ForgeError::Format(format!("role {role} is bound to missing {name:?}")));
        }
        env.bind(role, name);
    }
    if let Some(v) = env.validate().into_iter().next() {
        return Err(ForgeError::Format(v.to_string()));
    }
    Ok(Document {
        env,
        presentation: repr.presentation,
    })
}

/// Parses a structure file into an env.
pub fn parse_env(text: &str) -> Result<StructureEnv> {
    Ok(parse_document(text)?.env)
}

pub fn load(path: &std::path::Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| ForgeError::Io(format!("{}: {e}", path.display())))?;
    parse_document(&text)
}

fn map_repr(m: &LinMap) -> MapRepr {
    let all: Vec<usize> = m.target_dims().iter().chain(m.source_dims()).copied().collect();
    let nt = m.target_dims().len();
    let entries = tuples(&all)
        .filter_map(|idx| {
            let v = m.get(&idx[..nt], &idx[nt..]);
            if v.is_zero() {
                return None;
            }
            let mut row: Vec<Value> = idx.iter().map(|&i| Value::from(i)).collect();
            row.push(Value::from(v.to_canonical()));
            Some(row)
        })
        .collect();
    MapRepr {
        signature: Signature {
            source: m.source().to_vec(),
            target: m.target().to_vec(),
        },
        entries,
    }
}

/// Canonical text of a document: sorted keys, nonzero entries in
/// row-major order, canonical scalars.
pub fn emit_document(doc: &Document) -> String {
    let env = &doc.env;
    let repr = FileRepr {
        format_version: FORMAT_VERSION,
        field: field_repr(env.field),
        spaces: env
            .spaces
            .iter()
            .map(|(n, s)| {
                (
                    n.clone(),
                    SpaceRepr {
                        dim: s.dim,
                        labels: s.labels.clone(),
                    },
                )
            })
            .collect(),
        maps: env.maps.iter().map(|(n, m)| (n.clone(), map_repr(m))).collect(),
        roles: env.roles.clone(),
        presentation: doc.presentation.clone(),
    };
    let mut s = serde_json::to_string_pretty(&repr).expect("file representation serializes");
    s.push('\n');
    s
}

pub fn emit_env(env: &StructureEnv) -> String {
    emit_document(&Document::new(env.clone()))
}

/// One violation as it appears in a report.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ViolationRecord {
    pub condition: String,
    pub index: usize,
    pub law: String,
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    /// Nonzero entries of `lhs − rhs`: output indices and canonical scalar.
    pub difference: Vec<(Vec<usize>, String)>,
}

/// Verdict of one condition set.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SetVerdict {
    pub set: String,
    pub passed: bool,
    pub violations: Vec<ViolationRecord>,
}

/// Verdicts of every requested set.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct Report {
    pub sets: Vec<SetVerdict>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.sets.iter().all(|s| s.passed)
    }

    /// Adds the verdict for one set, labelling tuples with the env's basis
    /// labels where the law's spaces resolve.
    pub fn add(&mut self, set: &str, list: &ViolationList, env: &StructureEnv) {
        let violations: Vec<ViolationRecord> = list
            .iter()
            .map(|v| ViolationRecord {
                condition: v.condition.clone(),
                index: v.index,
                law: v.law.clone(),
                tuple: v.tuple.clone(),
                labels: v
                    .tuple
                    .iter()
                    .zip(&v.inputs)
                    .map(|(&i, sp)| match env.space(sp) {
                        Ok(d) => d.label(i),
                        Err(_) => format!("{sp}{i}"),
                    })
                    .collect(),
                difference: v
                    .difference
                    .nonzero()
                    .into_iter()
                    .map(|(i, s)| (i, s.to_canonical()))
                    .collect(),
            })
            .collect();
        self.sets.push(SetVerdict {
            set: set.to_string(),
            passed: violations.is_empty(),
            violations,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sets {
            let verdict = if s.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{}: {verdict}", s.set);
            for v in &s.violations {
                let _ = write!(out, "  {}", v.condition);
                if v.law != v.condition {
                    let _ = write!(out, " ({})", v.law);
                }
                let _ = write!(out, " at ({})", v.labels.join(", "));
                let diff: Vec<String> = v.difference.iter().map(|(i, c)| format!("{i:?}: {c}")).collect();
                let _ = writeln!(out, ": {}", diff.join(", "));
            }
        }
        out
    }
}
