//! Named bundles of spaces and maps, and role resolution.
//!
//! Condition sets refer to maps by *role* (`bracket_A`, `triangleright_HA_A`,
//! …). A role resolves to the map bound to it in `roles`, or else to the map
//! whose name equals the role. Space letters (`A`, `H`, `V`, `E`) resolve the
//! same way. Role names encode their signature: structure maps are
//! `bracket_X`, `product_X`, `cobracket_X`, `coproduct_X`; every other role is
//! `symbol_SOURCES_TARGETS` with one letter per tensor leg, optionally
//! followed by `'` for the second datum of a pair.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{ForgeError, Result};
use crate::linmap::{LinMap, SpaceDecl};
use crate::scalar::Field;

/// Expected (source, target) space letters of a role, if it follows the
/// naming convention.
pub fn role_signature(role: &str) -> Option<(Vec<String>, Vec<String>)> {
    let base = role.trim_end_matches('\'');
    let letters = |s: &str| -> Option<Vec<String>> {
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_uppercase()) {
            Some(s.chars().map(|c| c.to_string()).collect())
        } else {
            None
        }
    };
    let parts: Vec<&str> = base.split('_').collect();
    match parts.as_slice() {
        [kind, x] => {
            let x = letters(x)?;
            if x.len() != 1 {
                return None;
            }
            let xx = vec![x[0].clone(), x[0].clone()];
            match *kind {
                "bracket" | "product" => Some((xx, x)),
                "cobracket" | "coproduct" => Some((x, xx)),
                _ => None,
            }
        }
        [_, src, tgt] => Some((letters(src)?, letters(tgt)?)),
        _ => None,
    }
}

/// One shape problem found by [`StructureEnv::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeViolation {
    pub map: String,
    pub message: String,
}

impl fmt::Display for ShapeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.map, self.message)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureEnv {
    pub field: Field,
    pub spaces: BTreeMap<String, SpaceDecl>,
    pub maps: BTreeMap<String, LinMap>,
    pub roles: BTreeMap<String, String>,
}

impl StructureEnv {
    pub fn new(field: Field) -> Self {
        StructureEnv {
            field,
            spaces: BTreeMap::new(),
            maps: BTreeMap::new(),
            roles: BTreeMap::new(),
        }
    }

    pub fn add_space(&mut self, name: &str, dim: usize) -> Result<()> {
        if self.spaces.contains_key(name) {
            return Err(ForgeError::NameClash(name.to_string()));
        }
        self.spaces.insert(name.to_string(), SpaceDecl::new(name, dim));
        Ok(())
    }

    pub fn with_space(mut self, name: &str, dim: usize) -> Self {
        self.add_space(name, dim).expect("fresh space name");
        self
    }

    pub fn insert_map(&mut self, name: &str, map: LinMap) {
        self.maps.insert(name.to_string(), map);
    }

    pub fn bind(&mut self, role: &str, name: &str) {
        self.roles.insert(role.to_string(), name.to_string());
    }

    /// Name of the env object a role (map or space letter) refers to.
    pub fn resolve_name<'a>(&'a self, role: &'a str) -> &'a str {
        self.roles.get(role).map(String::as_str).unwrap_or(role)
    }

    pub fn map(&self, role: &str) -> Result<&LinMap> {
        self.maps
            .get(self.resolve_name(role))
            .ok_or_else(|| ForgeError::MissingRole(role.to_string()))
    }

    pub fn has_map(&self, role: &str) -> bool {
        self.maps.contains_key(self.resolve_name(role))
    }

    pub fn space(&self, letter: &str) -> Result<&SpaceDecl> {
        self.spaces
            .get(self.resolve_name(letter))
            .ok_or_else(|| ForgeError::UnknownSpace(letter.to_string()))
    }

    pub fn dim(&self, letter: &str) -> Result<usize> {
        Ok(self.space(letter)?.dim)
    }

    /// Zero map for `role` using the role's conventional signature.
    pub fn zero_role(&self, role: &str) -> Result<LinMap> {
        let (src, tgt) =
            role_signature(role).ok_or_else(|| ForgeError::UnknownRole(role.to_string()))?;
        let names = |v: &[String]| -> Result<(Vec<String>, Vec<usize>)> {
            let mut n = Vec::new();
            let mut d = Vec::new();
            for l in v {
                let sp = self.space(l)?;
                n.push(sp.name.clone());
                d.push(sp.dim);
            }
            Ok((n, d))
        };
        let (sn, sd) = names(&src)?;
        let (tn, td) = names(&tgt)?;
        Ok(LinMap::zeros(sn, tn, sd, td, self.field))
    }

    /// Inserts zero maps for every listed role that is not yet present.
    pub fn fill_zero_roles(&mut self, roles: &[&str]) -> Result<()> {
        for r in roles {
            if !self.has_map(r) {
                let z = self.zero_role(r)?;
                self.insert_map(r, z);
            }
        }
        Ok(())
    }

    /// Shape-only validation: every map must reference declared spaces with
    /// matching dimensions, live in the env's field, and every role binding
    /// must match the role's conventional signature.
    pub fn validate(&self) -> Vec<ShapeViolation> {
        let mut out = Vec::new();
        for (name, m) in &self.maps {
            if m.field() != self.field {
                out.push(ShapeViolation {
                    map: name.clone(),
                    message: format!("entries over {} in an env over {}", m.field(), self.field),
                });
            }
            let legs = m
                .source()
                .iter()
                .zip(m.source_dims())
                .chain(m.target().iter().zip(m.target_dims()));
            for (sp, &d) in legs {
                match self.spaces.get(sp) {
                    None => out.push(ShapeViolation {
                        map: name.clone(),
                        message: format!("references undeclared space {sp:?}"),
                    }),
                    Some(decl) if decl.dim != d => out.push(ShapeViolation {
                        map: name.clone(),
                        message: format!("leg over {sp:?} has dim {d}, space has dim {}", decl.dim),
                    }),
                    _ => {}
                }
            }
        }
        let mut role_names: Vec<(String, String)> = self
            .roles
            .iter()
            .filter(|(r, _)| !is_space_letter(r))
            .map(|(r, n)| (r.clone(), n.clone()))
            .collect();
        for name in self.maps.keys() {
            if role_signature(name).is_some() && !self.roles.contains_key(name) {
                role_names.push((name.clone(), name.clone()));
            }
        }
        for (role, name) in role_names {
            let Some((src, tgt)) = role_signature(&role) else {
                out.push(ShapeViolation {
                    map: name,
                    message: format!("bound to unknown role {role:?}"),
                });
                continue;
            };
            let Some(m) = self.maps.get(&name) else {
                out.push(ShapeViolation {
                    map: name,
                    message: format!("role {role:?} bound to a missing map"),
                });
                continue;
            };
            let resolve = |v: &[String]| -> Option<Vec<String>> {
                v.iter().map(|l| self.space(l).ok().map(|s| s.name.clone())).collect()
            };
            match (resolve(&src), resolve(&tgt)) {
                (Some(s), Some(t)) if s == m.source() && t == m.target() => {}
                (Some(s), Some(t)) => out.push(ShapeViolation {
                    map: name,
                    message: format!(
                        "role {role:?} expects {:?} -> {:?}, map is {:?} -> {:?}",
                        s,
                        t,
                        m.source(),
                        m.target()
                    ),
                }),
                _ => out.push(ShapeViolation {
                    map: name,
                    message: format!("role {role:?} needs spaces {src:?} -> {tgt:?} to be bound"),
                }),
            }
        }
        out.sort_by(|a, b| (&a.map, &a.message).cmp(&(&b.map, &b.message)));
        out.dedup();
        out
    }
}

fn is_space_letter(r: &str) -> bool {
    r.len() == 1 && r.chars().all(|c| c.is_ascii_uppercase())
}
