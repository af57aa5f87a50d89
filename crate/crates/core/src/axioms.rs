//! Evaluating condition sets against an env and reporting where they fail.

use std::fmt;

use rayon::prelude::*;

use crate::constructions::{build_generic, BuiltStructure, Sides};
use crate::env::StructureEnv;
use crate::error::Result;
use crate::registry::{compile_set, Check, ConditionSet, RegistryOptions};
use crate::structures::{PoissonAlgebraData, PoissonBialgebraData, PoissonCoalgebraData};
use crate::term::{IdentityDescriptor, Prepared, Tensor};

/// One failing basis tuple of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Condition set the identity belongs to.
    pub set: String,
    /// Label of the condition, such as `CDM17` or `A0`.
    pub condition: String,
    /// Position of the condition within its set.
    pub index: usize,
    /// The law that failed. Differs from `condition` only for conditions
    /// evaluated on a built extension, where it names the ambient law.
    pub law: String,
    /// Spaces of the tuple's legs, as named by the law.
    pub inputs: Vec<String>,
    pub tuple: Vec<usize>,
    /// `lhs − rhs` at the tuple, over the output legs.
    pub difference: Tensor,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.set, self.condition)?;
        if self.law != self.condition {
            write!(f, " ({})", self.law)?;
        }
        write!(f, " at {:?}:", self.tuple)?;
        for (idx, v) in self.difference.nonzero() {
            write!(f, " {idx:?}={v}")?;
        }
        Ok(())
    }
}

/// Violations in deterministic order: by set, condition index, then tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ViolationList(pub Vec<Violation>);

impl ViolationList {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Violation> {
        self.0.iter()
    }

    /// Distinct failing condition labels, in report order.
    pub fn conditions(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.0 {
            if out.last() != Some(&v.condition.as_str()) && !out.contains(&v.condition.as_str()) {
                out.push(&v.condition);
            }
        }
        out
    }

    pub fn extend(&mut self, other: ViolationList) {
        self.0.extend(other.0);
    }
}

impl IntoIterator for ViolationList {
    type Item = Violation;
    type IntoIter = std::vec::IntoIter<Violation>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Evaluation strategy: all violations, or stop at the first failing tuple
/// of each identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Depth {
    #[default]
    Exhaustive,
    FirstPerIdentity,
}

fn eval_law(
    set: &str,
    condition: &str,
    index: usize,
    d: &IdentityDescriptor,
    env: &StructureEnv,
    depth: Depth,
) -> Result<Vec<Violation>> {
    let p = Prepared::new(d, env)?;
    Ok(p
        .violations(depth == Depth::FirstPerIdentity)
        .into_iter()
        .map(|tv| Violation {
            set: set.to_string(),
            condition: condition.to_string(),
            index,
            law: d.id.clone(),
            inputs: d.input_spaces.clone(),
            tuple: tv.tuple,
            difference: tv.difference,
        })
        .collect())
}

/// The built extension `E` that conditions such as `A0` are evaluated on.
/// The complement is the set's complement letter.
pub fn ambient_for(env: &StructureEnv, complement: char) -> Result<BuiltStructure> {
    build_generic(env, complement, Sides::BOTH, "condition check")
}

/// Runs a compiled set. Identities are evaluated in parallel; the result
/// order does not depend on scheduling.
pub fn check_compiled(cs: &ConditionSet, env: &StructureEnv, depth: Depth) -> Result<ViolationList> {
    let ambient = if cs.has_composites() {
        let complement = crate::registry::set_spec(&cs.id)?.complement.chars().next().unwrap_or('V');
        Some(ambient_for(env, complement)?)
    } else {
        None
    };
    let jobs: Vec<(usize, &str, &IdentityDescriptor, &StructureEnv)> = cs
        .checks
        .iter()
        .enumerate()
        .flat_map(|(i, c)| -> Vec<(usize, &str, &IdentityDescriptor, &StructureEnv)> {
            match c {
                Check::Law(d) => vec![(i, d.id.as_str(), d, env)],
                Check::Ambient { label, laws } => {
                    let e = &ambient.as_ref().expect("ambient built for composites").env;
                    laws.iter().map(|d| (i, label.as_str(), d, e)).collect()
                }
            }
        })
        .collect();
    let parts = jobs
        .par_iter()
        .map(|&(i, label, d, e)| eval_law(&cs.id, label, i, d, e, depth))
        .collect::<Result<Vec<_>>>()?;
    Ok(ViolationList(parts.into_iter().flatten().collect()))
}

/// Exhaustive check of one registry set at the given options.
pub fn check_condition_set(id: &str, env: &StructureEnv, opts: &RegistryOptions) -> Result<ViolationList> {
    check_compiled(&compile_set(id, opts)?, env, Depth::Exhaustive)
}

/// Whether every identity of the set holds; stops early on failure.
pub fn set_holds(cs: &ConditionSet, env: &StructureEnv) -> Result<bool> {
    Ok(check_compiled(cs, env, Depth::FirstPerIdentity)?.is_empty())
}

/// Runs several sets and concatenates their reports.
pub fn check_sets(ids: &[&str], env: &StructureEnv, opts: &RegistryOptions) -> Result<ViolationList> {
    let mut out = ViolationList::default();
    for id in ids {
        out.extend(check_condition_set(id, env, opts)?);
    }
    Ok(out)
}

pub fn check_poisson_algebra(alg: &PoissonAlgebraData) -> Result<ViolationList> {
    check_condition_set("PA", &alg.to_env()?, &RegistryOptions::default())
}

pub fn check_poisson_coalgebra(co: &PoissonCoalgebraData) -> Result<ViolationList> {
    check_condition_set("PC", &co.to_env()?, &RegistryOptions::default())
}

/// Ids of the sets making up the bialgebra check under `opts`.
pub fn bialgebra_set_ids(opts: &RegistryOptions) -> Vec<&'static str> {
    let mut ids = vec!["PA", "PC", "PB"];
    if opts.liebi {
        ids.push("LIEBI");
    }
    if opts.asi {
        ids.push("ASI");
    }
    ids
}

/// PA, PC and PB, plus LIEBI and ASI when enabled.
pub fn check_poisson_bialgebra(b: &PoissonBialgebraData, opts: &RegistryOptions) -> Result<ViolationList> {
    check_sets(&bialgebra_set_ids(opts), &b.to_env()?, opts)
}

/// Whether a built structure satisfies every law of its built halves.
/// Algebra-only and coalgebra-only structures are checked against PA or PC.
pub fn check_built(b: &BuiltStructure, opts: &RegistryOptions, depth: Depth) -> Result<ViolationList> {
    let ids: Vec<&str> = match (b.sides.algebra, b.sides.coalgebra) {
        (true, true) => bialgebra_set_ids(opts),
        (true, false) => vec!["PA"],
        (false, true) => vec!["PC"],
        (false, false) => vec![],
    };
    let mut out = ViolationList::default();
    for id in ids {
        let cs = compile_set(id, opts)?;
        let renamed = ConditionSet {
            checks: cs
                .checks
                .iter()
                .map(|c| match c {
                    Check::Law(d) => Check::Law(d.with_space_renamed('A', 'E')),
                    other => other.clone(),
                })
                .collect(),
            ..cs
        };
        out.extend(check_compiled(&renamed, &b.env, depth)?);
    }
    Ok(out)
}

/// Result of checking a named set, with the constructive cross-check for
/// the matched-pair sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedReport {
    pub violations: ViolationList,
    pub cross_check: Option<CrossCheck>,
}

/// The stated conditions set against the laws of the built structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub builder: String,
    pub ambient: ViolationList,
}

impl NamedReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether the stated conditions and the built structure agree.
    pub fn consistent(&self) -> bool {
        self.cross_check
            .as_ref()
            .is_none_or(|c| c.ambient.is_empty() == self.violations.is_empty())
    }
}

const ALGEBRA_PAIR_ROLES: &[&str] = &[
    "bracket_A",
    "product_A",
    "bracket_H",
    "product_H",
    "triangleright_HA_A",
    "triangleleft_HA_H",
    "rightharpoonup_HA_A",
    "leftharpoonup_AH_A",
    "rightarrow_AH_H",
    "leftarrow_HA_H",
];

const COALGEBRA_PAIR_ROLES: &[&str] = &[
    "cobracket_A",
    "coproduct_A",
    "cobracket_H",
    "coproduct_H",
    "phi_A_HA",
    "psi_H_HA",
    "rho_A_HA",
    "gamma_A_AH",
    "alpha_H_AH",
    "beta_H_HA",
];

/// Copy of `env` keeping only the listed roles, under their role names.
pub fn restrict(env: &StructureEnv, roles: &[&str]) -> Result<StructureEnv> {
    let mut out = StructureEnv::new(env.field);
    for letter in ["A", "H", "V"] {
        if let Ok(sp) = env.space(letter) {
            let mut sp = sp.clone();
            sp.name = letter.to_string();
            out.spaces.insert(letter.to_string(), sp);
        }
    }
    for r in roles {
        if env.has_map(r) {
            let m = env.map(r)?;
            let (src, tgt) = crate::env::role_signature(r).expect("known role");
            out.insert_map(r, m.renamed(src, tgt)?);
        }
    }
    Ok(out)
}

/// A named set. MP_ALG and MP_COALG also build the bicrossed product or
/// coproduct and check PA or PC on it.
pub fn check_named(id: &str, env: &StructureEnv, opts: &RegistryOptions) -> Result<NamedReport> {
    let violations = check_condition_set(id, env, opts)?;
    let cross = match id {
        "MP_ALG" => Some(("bicrossed product", ALGEBRA_PAIR_ROLES, Sides::ALGEBRA)),
        "MP_COALG" => Some(("bicrossed coproduct", COALGEBRA_PAIR_ROLES, Sides::COALGEBRA)),
        _ => None,
    };
    let cross_check = match cross {
        Some((name, roles, sides)) => {
            let built = build_generic(&restrict(env, roles)?, 'H', sides, name)?;
            Some(CrossCheck {
                builder: name.to_string(),
                ambient: check_built(&built, opts, Depth::Exhaustive)?,
            })
        }
        None => None,
    };
    Ok(NamedReport {
        violations,
        cross_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmap::LinMap;
    use crate::scalar::Field;

    fn bracket_ee(f: Field) -> PoissonAlgebraData {
        let mut a = PoissonAlgebraData::zero("A", 1, f);
        a.bracket = LinMap::from_fn(
            vec!["A".into(), "A".into()],
            vec!["A".into()],
            vec![1, 1],
            vec![1],
            f,
            |_, _| f.one(),
        );
        a
    }

    #[test]
    fn zero_algebra_passes() {
        assert!(check_poisson_algebra(&PoissonAlgebraData::zero("A", 2, Field::Rational))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn self_bracket_fails_antisymmetry_and_jacobi() {
        let v = check_poisson_algebra(&bracket_ee(Field::Rational)).unwrap();
        let first = &v.0[0];
        assert_eq!(first.condition, "PA1");
        assert_eq!(first.tuple, vec![0, 0]);
        assert_eq!(first.difference.get(&[0]), &Field::Rational.from_i64(2));
        assert!(v.conditions().contains(&"PA2"));
    }

    #[test]
    fn dim_zero_is_vacuous() {
        let b = PoissonBialgebraData::zero("A", 0, Field::Rational);
        assert!(check_poisson_bialgebra(&b, &RegistryOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn parallel_order_is_stable() {
        let env = bracket_ee(Field::prime(3).unwrap()).to_env().unwrap();
        let a = check_condition_set("PA", &env, &RegistryOptions::default()).unwrap();
        let b = check_condition_set("PA", &env, &RegistryOptions::default()).unwrap();
        assert_eq!(a, b);
        let idx: Vec<usize> = a.iter().map(|v| v.index).collect();
        assert!(idx.windows(2).all(|w| w[0] <= w[1]));
    }
}
