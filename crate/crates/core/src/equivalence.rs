//! Splitting extensions back into data, morphism pairs `(r, s)` and the
//! equivalence relation they generate.
//!
//! A pair `(r, s)` with `r: V → A`, `s: V → V` acts on `E = A ⊕ V` by
//! `(a, x) ↦ (a + r(x), s(x))`. It fixes `A` pointwise and is invertible
//! exactly when `s` is. Two data are equivalent when such a map with `s`
//! invertible is a homomorphism between their built structures.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::axioms::{check_compiled, set_holds, Depth, ViolationList};
use crate::constructions::{build_unified, morphism_defect, BuiltStructure, Provenance, Sides};
use crate::env::{role_signature, StructureEnv};
use crate::error::{ForgeError, Result};
use crate::linmap::{tuples, LinMap, SpaceDecl};
use crate::registry::{compile_set, ConditionSet, RegistryOptions};
use crate::scalar::{Field, Scalar};
use crate::structures::{mixed_roles, structure_roles, ExtendingDatum, Kind, MorphismPair, PoissonBialgebraData};

/// Default cap on the number of candidates any search may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// A structure on `E` with a chosen copy of `A` inside it.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionPresentation {
    /// Space `E` and the maps `bracket_E`, `product_E`, `cobracket_E`,
    /// `coproduct_E` (a missing map marks a half that is absent).
    pub ambient: StructureEnv,
    /// Ambient index of each basis element of `A`.
    pub embedding: Vec<usize>,
    /// `A`-index of each ambient basis element, `None` on the complement.
    pub projection: Vec<Option<usize>>,
}

impl ExtensionPresentation {
    /// `A` spans the first `dim_a` coordinates of `E`.
    pub fn coordinate(ambient: StructureEnv, dim_a: usize) -> Result<Self> {
        let n = ambient.dim("E")?;
        if dim_a > n {
            return Err(ForgeError::IndexOutOfRange {
                name: "dim A".into(),
                index: dim_a,
                dim: n,
            });
        }
        Self::new(ambient, (0..dim_a).collect(), (0..n).map(|i| (i < dim_a).then_some(i)).collect())
    }

    /// Checks that the projection is a left inverse of the embedding.
    pub fn new(ambient: StructureEnv, embedding: Vec<usize>, projection: Vec<Option<usize>>) -> Result<Self> {
        let n = ambient.dim("E")?;
        if projection.len() != n {
            return Err(ForgeError::Arity(format!(
                "projection lists {} basis elements, E has {n}",
                projection.len()
            )));
        }
        for (i, &e) in embedding.iter().enumerate() {
            if e >= n || projection[e] != Some(i) {
                return Err(ForgeError::Precondition {
                    what: "projection is not a left inverse of the embedding".into(),
                    tuple: vec![i],
                });
            }
        }
        if let Some(j) = (0..n).find(|&j| projection[j].is_some() && !embedding.contains(&j)) {
            return Err(ForgeError::Precondition {
                what: "projection does not vanish on the complement".into(),
                tuple: vec![j],
            });
        }
        Ok(ExtensionPresentation {
            ambient,
            embedding,
            projection,
        })
    }

    pub fn from_built(b: &BuiltStructure) -> Self {
        ExtensionPresentation {
            ambient: b.env.clone(),
            embedding: b.embedding.clone(),
            projection: b.projection.clone(),
        }
    }

    pub fn dim_a(&self) -> usize {
        self.embedding.len()
    }

    fn sides(&self) -> Sides {
        Sides {
            algebra: self.ambient.has_map("bracket_E") || self.ambient.has_map("product_E"),
            coalgebra: self.ambient.has_map("cobracket_E") || self.ambient.has_map("coproduct_E"),
        }
    }

    /// The ambient in the basis `A` first, then the complement in
    /// increasing ambient order, with absent maps of a present half zero.
    fn normalized(&self) -> Result<BuiltStructure> {
        let n = self.ambient.dim("E")?;
        let da = self.dim_a();
        let mut order: Vec<usize> = self.embedding.clone();
        order.extend((0..n).filter(|j| self.projection[*j].is_none()));
        let sides = self.sides();
        let field = self.ambient.field;
        let old = self.ambient.space("E")?;
        let mut env = StructureEnv::new(field);
        env.spaces.insert(
            "E".into(),
            SpaceDecl {
                name: "E".into(),
                dim: n,
                labels: Some(order.iter().map(|&j| old.label(j)).collect()),
            },
        );
        let mut wanted = Vec::new();
        if sides.algebra {
            wanted.extend(["bracket_E", "product_E"]);
        }
        if sides.coalgebra {
            wanted.extend(["cobracket_E", "coproduct_E"]);
        }
        for role in wanted {
            let m = if self.ambient.has_map(role) {
                self.ambient.map(role)?.clone()
            } else {
                env.zero_role(role)?
            };
            let (src, tgt) = role_signature(role).expect("ambient roles follow the convention");
            let legs = src.len() + tgt.len();
            if m.source_dims().len() + m.target_dims().len() != legs
                || m.source_dims().iter().chain(m.target_dims()).any(|&d| d != n)
            {
                return Err(ForgeError::ShapeMismatch {
                    name: role.into(),
                    expected: vec![n; legs],
                    actual: m.target_dims().iter().chain(m.source_dims()).copied().collect(),
                });
            }
            let re = LinMap::from_fn(
                vec!["E".into(); src.len()],
                vec!["E".into(); tgt.len()],
                vec![n; src.len()],
                vec![n; tgt.len()],
                field,
                |t, s| {
                    let t: Vec<usize> = t.iter().map(|&i| order[i]).collect();
                    let s: Vec<usize> = s.iter().map(|&i| order[i]).collect();
                    m.get(&t, &s).clone()
                },
            );
            env.insert_map(role, re);
        }
        Ok(BuiltStructure {
            env,
            dim_a: da,
            dim_k: n - da,
            sides,
            embedding: (0..da).collect(),
            projection: (0..n).map(|i| (i < da).then_some(i)).collect(),
            provenance: Provenance {
                builder: "presentation".into(),
                input_hash: 0,
            },
        })
    }
}

/// The ambient map a role's block lives in.
fn ambient_role(role: &str) -> &'static str {
    let head = role.split('_').next().unwrap_or("");
    match head {
        "bracket" | "theta" | "triangleright" | "triangleleft" | "sigma" => "bracket_E",
        "product" | "nu" | "rightharpoonup" | "leftharpoonup" | "rightarrow" | "leftarrow" | "omega" => "product_E",
        "cobracket" | "phi" | "psi" | "p" | "q" => "cobracket_E",
        _ => "coproduct_E",
    }
}

/// Reads the block of `role` out of a normalized ambient.
fn block(b: &BuiltStructure, role: &str) -> Result<LinMap> {
    let m = b.env.map(ambient_role(role))?;
    let (src, tgt) = role_signature(role).ok_or_else(|| ForgeError::UnknownRole(role.into()))?;
    let dim = |l: &String| if l == "A" { b.dim_a } else { b.dim_k };
    let off = |l: &String| if l == "A" { 0 } else { b.dim_a };
    let (so, to): (Vec<usize>, Vec<usize>) = (src.iter().map(off).collect(), tgt.iter().map(off).collect());
    Ok(LinMap::from_fn(
        src.clone(),
        tgt.clone(),
        src.iter().map(dim).collect(),
        tgt.iter().map(dim).collect(),
        b.field(),
        |t, s| {
            let t: Vec<usize> = t.iter().zip(&to).map(|(i, o)| i + o).collect();
            let s: Vec<usize> = s.iter().zip(&so).map(|(i, o)| i + o).collect();
            m.get(&t, &s).clone()
        },
    ))
}

fn sides_of(kind: Kind) -> Sides {
    Sides {
        algebra: kind.has_algebra(),
        coalgebra: kind.has_coalgebra(),
    }
}

fn side_roles(sides: Sides) -> Vec<String> {
    let mut roles: Vec<String> = structure_roles('A');
    roles.extend(structure_roles('V'));
    roles.extend(mixed_roles('V'));
    roles
        .into_iter()
        .filter(|r| {
            let alg = matches!(ambient_role(r), "bracket_E" | "product_E");
            if alg {
                sides.algebra
            } else {
                sides.coalgebra
            }
        })
        .collect()
}

fn default_labels(decl: &SpaceDecl) -> bool {
    (0..decl.dim).all(|i| decl.label(i) == format!("{}{}", decl.name, i))
}

fn first_difference(built: &BuiltStructure, target: &BuiltStructure) -> Option<String> {
    for (role, m) in &target.env.maps {
        let Ok(got) = built.env.map(role) else {
            return Some(format!("{role} is missing from the rebuilt structure"));
        };
        let dims: Vec<usize> = m.target_dims().iter().chain(m.source_dims()).copied().collect();
        for idx in tuples(&dims) {
            let (t, s) = idx.split_at(m.target_dims().len());
            if m.get(t, s) != got.get(t, s) {
                return Some(format!(
                    "{role} at {idx:?}: ambient has {}, rebuilt has {}",
                    m.get(t, s),
                    got.get(t, s)
                ));
            }
        }
    }
    None
}

/// Recovers the extending datum of `kind` from a presentation and
/// verifies that building it reproduces the ambient exactly.
pub fn split_extension(pres: &ExtensionPresentation, kind: Kind) -> Result<ExtendingDatum> {
    let sides = sides_of(kind);
    let have = pres.sides();
    if (sides.algebra && !have.algebra) || (sides.coalgebra && !have.coalgebra) {
        return Err(ForgeError::KindMismatch(format!(
            "a {kind} datum needs the {} of E",
            if sides.algebra && !have.algebra { "algebra half" } else { "coalgebra half" }
        )));
    }
    let mut ambient = pres.normalized()?;
    ambient.env.maps.retain(|role, _| {
        let alg = matches!(role.as_str(), "bracket_E" | "product_E");
        if alg {
            sides.algebra
        } else {
            sides.coalgebra
        }
    });
    ambient.sides = sides;

    let e = ambient.env.space("E")?;
    let mut a = SpaceDecl {
        name: "A".into(),
        dim: ambient.dim_a,
        labels: Some((0..ambient.dim_a).map(|i| e.label(i)).collect()),
    };
    let mut v = SpaceDecl {
        name: "V".into(),
        dim: ambient.dim_k,
        labels: Some((0..ambient.dim_k).map(|i| e.label(ambient.dim_a + i)).collect()),
    };
    for d in [&mut a, &mut v] {
        if default_labels(d) {
            d.labels = None;
        }
    }
    let mut full = StructureEnv::new(ambient.field());
    full.spaces.insert("A".into(), a);
    full.spaces.insert("V".into(), v);
    for role in side_roles(sides) {
        full.insert_map(&role, block(&ambient, &role)?);
    }

    let base = crate::constructions::base_structure(&full, sides)?;
    let defect = if kind.projection_is_morphism() {
        morphism_defect(&crate::constructions::projection_map(&ambient), &ambient, &base)?
    } else {
        morphism_defect(&crate::constructions::embedding_map(&ambient), &base, &ambient)?
    };
    if let Some((role, tuple)) = defect {
        let which = if kind.projection_is_morphism() { "projection E → A" } else { "inclusion A → E" };
        return Err(ForgeError::Precondition {
            what: format!("the {which} does not preserve {role}"),
            tuple,
        });
    }

    let mut denv = StructureEnv::new(full.field);
    denv.spaces = full.spaces.clone();
    for role in kind.all_maps() {
        denv.insert_map(&role, full.map(&role)?.clone());
    }
    let datum = ExtendingDatum::new(kind, &denv)?;
    let rebuilt = build_unified(&datum)?;
    if let Some(diff) = first_difference(&rebuilt, &ambient) {
        return Err(ForgeError::Reconstruction(format!("not an extension of kind {kind}: {diff}")));
    }
    Ok(datum)
}

/// The env the morphism-pair conditions are evaluated in: `d`'s maps under
/// their role names, `d2`'s under primed names, and `r_V_A`, `s_V_V`.
pub fn morphism_env(w: &MorphismPair, d: &ExtendingDatum, d2: &ExtendingDatum) -> Result<StructureEnv> {
    if d.dim_a() != d2.dim_a() || d.dim_v() != d2.dim_v() {
        return Err(ForgeError::ShapeMismatch {
            name: "datum".into(),
            expected: vec![d.dim_a(), d.dim_v()],
            actual: vec![d2.dim_a(), d2.dim_v()],
        });
    }
    if d.field() != d2.field() {
        return Err(ForgeError::FieldMismatch(d.field(), d2.field()));
    }
    let mut env = d.full_env();
    for (role, m) in d2.full_env().maps {
        env.insert_map(&format!("{role}'"), m);
    }
    if w.r.source_dims() != [d.dim_v()] || w.r.target_dims() != [d.dim_a()] {
        return Err(ForgeError::ShapeMismatch {
            name: "r".into(),
            expected: vec![d.dim_a(), d.dim_v()],
            actual: w.r.target_dims().iter().chain(w.r.source_dims()).copied().collect(),
        });
    }
    env.insert_map("r_V_A", w.r.clone());
    env.insert_map("s_V_V", w.s_map.clone());
    Ok(env)
}

/// The morphism-pair sets of a kind, compiled once.
pub fn morphism_conditions(kind: Kind, opts: &RegistryOptions) -> Result<Vec<ConditionSet>> {
    kind.morphism_sets().iter().map(|id| compile_set(id, opts)).collect()
}

fn check_kinds(kind: Kind, d: &ExtendingDatum, d2: &ExtendingDatum) -> Result<()> {
    if d.kind() != kind || d2.kind() != kind {
        return Err(ForgeError::KindMismatch(format!(
            "expected two {kind} data, got {} and {}",
            d.kind(),
            d2.kind()
        )));
    }
    Ok(())
}

/// Every violated `(r, s)` condition of the kind.
pub fn check_morphism_pair(
    kind: Kind,
    w: &MorphismPair,
    d: &ExtendingDatum,
    d2: &ExtendingDatum,
    opts: &RegistryOptions,
) -> Result<ViolationList> {
    check_kinds(kind, d, d2)?;
    let env = morphism_env(w, d, d2)?;
    let mut out = ViolationList::default();
    for cs in morphism_conditions(kind, opts)? {
        out.extend(check_compiled(&cs, &env, Depth::Exhaustive)?);
    }
    Ok(out)
}

/// The map `(a, x) ↦ (a + r(x), s(x))` on `E`.
pub fn pair_map(w: &MorphismPair, dim_a: usize, dim_v: usize, field: Field) -> LinMap {
    let n = dim_a + dim_v;
    LinMap::from_fn(names(&["E"]), names(&["E"]), vec![n], vec![n], field, |t, s| {
        let (t, s) = (t[0], s[0]);
        match (t < dim_a, s < dim_a) {
            (_, true) => {
                if t == s {
                    field.one()
                } else {
                    field.zero()
                }
            }
            (true, false) => w.r.get(&[t], &[s - dim_a]).clone(),
            (false, false) => w.s_map.get(&[t - dim_a], &[s - dim_a]).clone(),
        }
    })
}

/// First ambient map and basis tuple where `(r, s)` fails to be a
/// homomorphism `build(d) → build(d2)`. It always fixes `A` pointwise.
pub fn pair_homomorphism_defect(
    w: &MorphismPair,
    d: &ExtendingDatum,
    d2: &ExtendingDatum,
) -> Result<Option<(String, Vec<usize>)>> {
    let (b, b2) = (build_unified(d)?, build_unified(d2)?);
    morphism_defect(&pair_map(w, d.dim_a(), d.dim_v(), d.field()), &b, &b2)
}

/// Inverse of a square matrix `X → X`, or `None` if it is singular.
pub fn invert(m: &LinMap) -> Option<LinMap> {
    let n = m.source_dims()[0];
    let f = m.field();
    let mut a: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..n).map(|j| m.get(&[i], &[j]).clone()).collect();
            row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        a[col] = a[col].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                a[r] = a[r].iter().zip(&a[col]).map(|(x, y)| x - &(&c * y)).collect();
            }
        }
    }
    Some(LinMap::from_fn(
        m.source().to_vec(),
        m.target().to_vec(),
        vec![n],
        vec![n],
        f,
        |t, s| a[t[0]][n + s[0]].clone(),
    ))
}

/// A morphism pair found or supplied for two data.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness {
    pub pair: MorphismPair,
    pub kind: Kind,
    /// Whether the constructive homomorphism check also passed.
    pub verified: bool,
}

impl MorphismPair {
    /// The pair of the inverse map: `(−r s⁻¹, s⁻¹)`.
    pub fn inverse(&self) -> Option<MorphismPair> {
        let si = invert(&self.s_map)?;
        let f = si.field();
        let (da, dv) = (self.r.target_dims()[0], self.r.source_dims()[0]);
        let r = LinMap::from_fn(names(&["V"]), names(&["A"]), vec![dv], vec![da], f, |t, s| {
            let mut acc = f.zero();
            for k in 0..dv {
                acc = &acc - &(self.r.get(t, &[k]) * si.get(&[k], s));
            }
            acc
        });
        Some(MorphismPair { r, s_map: si })
    }

    /// The pair of `other ∘ self`: `(r + r'·s, s'·s)`.
    pub fn then(&self, other: &MorphismPair) -> MorphismPair {
        let f = self.r.field();
        let (da, dv) = (self.r.target_dims()[0], self.r.source_dims()[0]);
        let r = LinMap::from_fn(names(&["V"]), names(&["A"]), vec![dv], vec![da], f, |t, s| {
            let mut acc = self.r.get(t, s).clone();
            for k in 0..dv {
                acc = &acc + &(other.r.get(t, &[k]) * self.s_map.get(&[k], s));
            }
            acc
        });
        let s_map = LinMap::from_fn(names(&["V"]), names(&["V"]), vec![dv], vec![dv], f, |t, s| {
            let mut acc = f.zero();
            for k in 0..dv {
                acc = &acc + &(other.s_map.get(t, &[k]) * self.s_map.get(&[k], s));
            }
            acc
        });
        MorphismPair { r, s_map }
    }
}

/// Outcome of an exhaustive equivalence search.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Decision {
    Equivalent(EquivalenceWitness),
    /// No pair passed; `searched` candidates were examined.
    Exhausted { searched: u128 },
}

fn prime_of(field: Field) -> Result<u32> {
    match field {
        Field::Prime(p) => Ok(p),
        Field::Rational => Err(ForgeError::InfiniteSearch(Field::Rational)),
    }
}

/// Number of pairs `(r, s)` over `F_p` at the given dims.
pub fn pair_space_size(p: u32, dim_a: usize, dim_v: usize) -> u128 {
    (p as u128).pow((dim_a * dim_v + dim_v * dim_v) as u32)
}

fn digits(mut k: u128, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (k % p as u128) as u32;
        k /= p as u128;
    }
    out
}

/// Every pair `(r, s)` with `s` invertible, in search order: `s` runs
/// over `id + offset` with the offset counting up from zero, and for each
/// `s` the map `r` counts up from zero.
pub fn invertible_pairs(field: Field, dim_a: usize, dim_v: usize) -> Result<Vec<MorphismPair>> {
    let p = prime_of(field)?;
    let el = |d: u32| field.from_i64(d as i64);
    let mut out = Vec::new();
    let ns = pair_space_size(p, 0, dim_v);
    let nr = pair_space_size(p, dim_a, dim_v) / ns.max(1);
    let nr = if dim_v == 0 { 1 } else { nr };
    for so in 0..ns {
        let sd = digits(so, p, dim_v * dim_v);
        let s_map = LinMap::from_fn(names(&["V"]), names(&["V"]), vec![dim_v], vec![dim_v], field, |t, s| {
            let base = if t == s { field.one() } else { field.zero() };
            &base + &el(sd[t[0] * dim_v + s[0]])
        });
        if invert(&s_map).is_none() {
            continue;
        }
        for ro in 0..nr {
            let rd = digits(ro, p, dim_a * dim_v);
            let r = LinMap::from_fn(names(&["V"]), names(&["A"]), vec![dim_v], vec![dim_a], field, |t, s| {
                el(rd[t[0] * dim_v + s[0]])
            });
            out.push(MorphismPair {
                r,
                s_map: s_map.clone(),
            });
        }
    }
    Ok(out)
}

/// Searches every pair `(r, s)` with `s` invertible for one passing the
/// kind's morphism-pair conditions from `d` to `d2`.
pub fn decide_equivalence(
    kind: Kind,
    d: &ExtendingDatum,
    d2: &ExtendingDatum,
    budget: u128,
    opts: &RegistryOptions,
) -> Result<Decision> {
    check_kinds(kind, d, d2)?;
    if d.field() != d2.field() {
        return Err(ForgeError::FieldMismatch(d.field(), d2.field()));
    }
    let p = prime_of(d.field())?;
    let size = pair_space_size(p, d.dim_a(), d.dim_v());
    if size > budget {
        return Err(ForgeError::BudgetExceeded { size, budget });
    }
    let sets = morphism_conditions(kind, opts)?;
    let pairs = invertible_pairs(d.field(), d.dim_a(), d.dim_v())?;
    let searched = pairs.len() as u128;
    let hit = pairs
        .par_iter()
        .map(|w| -> Result<bool> {
            let env = morphism_env(w, d, d2)?;
            for cs in &sets {
                if !set_holds(cs, &env)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .position(|ok| ok);
    match hit {
        Some(i) => {
            let pair = pairs[i].clone();
            let verified = pair_homomorphism_defect(&pair, d, d2)?.is_none();
            Ok(Decision::Equivalent(EquivalenceWitness { pair, kind, verified }))
        }
        None => Ok(Decision::Exhausted { searched }),
    }
}

fn transport_binary(m: &LinMap, f: &LinMap, g: &LinMap) -> LinMap {
    let n = f.source_dims()[0];
    let field = f.field();
    LinMap::from_fn(m.source().to_vec(), m.target().to_vec(), vec![n, n], vec![n], field, |t, s| {
        let mut acc = field.zero();
        for i in 0..n {
            let gi = g.get(&[i], &[s[0]]);
            if gi.is_zero() {
                continue;
            }
            for j in 0..n {
                let gj = g.get(&[j], &[s[1]]);
                if gj.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let c = m.get(&[k], &[i, j]);
                    if !c.is_zero() {
                        acc = &acc + &(&(&(f.get(&[t[0]], &[k]) * c) * gi) * gj);
                    }
                }
            }
        }
        acc
    })
}

fn transport_cobinary(m: &LinMap, f: &LinMap, g: &LinMap) -> LinMap {
    let n = f.source_dims()[0];
    let field = f.field();
    LinMap::from_fn(m.source().to_vec(), m.target().to_vec(), vec![n], vec![n, n], field, |t, s| {
        let mut acc = field.zero();
        for k in 0..n {
            let gk = g.get(&[k], &[s[0]]);
            if gk.is_zero() {
                continue;
            }
            for i in 0..n {
                let fi = f.get(&[t[0]], &[i]);
                if fi.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let c = m.get(&[i, j], &[k]);
                    if !c.is_zero() {
                        acc = &acc + &(&(&(fi * f.get(&[t[1]], &[j])) * c) * gk);
                    }
                }
            }
        }
        acc
    })
}

/// Transports `build(d)` along `(a, x) ↦ (a + r(x), s(x))` and splits the
/// result. `None` when `s` is singular or the transported structure is not
/// an extension of the same kind.
pub fn pushforward(d: &ExtendingDatum, w: &MorphismPair) -> Result<Option<ExtendingDatum>> {
    let Some(inv) = w.inverse() else {
        return Ok(None);
    };
    let (da, dv, field) = (d.dim_a(), d.dim_v(), d.field());
    let f = pair_map(w, da, dv, field);
    let g = pair_map(&inv, da, dv, field);
    let built = build_unified(d)?;
    let mut env = built.env.clone();
    for (role, m) in built.env.maps.iter() {
        let t = if m.source_dims().len() == 2 {
            transport_binary(m, &f, &g)
        } else {
            transport_cobinary(m, &f, &g)
        };
        env.insert_map(role, t);
    }
    let pres = ExtensionPresentation::coordinate(env, da)?;
    match split_extension(&pres, d.kind()) {
        Ok(x) => Ok(Some(x)),
        Err(ForgeError::Precondition { .. } | ForgeError::Reconstruction(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// One equivalence class of [`classify_small`].
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceClass {
    /// The member with lexicographically least free structure constants.
    pub representative: ExtendingDatum,
    pub size: usize,
}

/// The classes of all valid data of one kind over a fixed base.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub kind: Kind,
    pub candidates: u128,
    pub valid: usize,
    pub classes: Vec<EquivalenceClass>,
    /// Transported data that left the valid set, as `(representative
    /// index, transported index)`. Empty when the condition sets describe
    /// exactly the structures that transport preserves.
    pub anomalies: Vec<(u128, u128)>,
}

/// Free maps of a classification: the complement's structure maps and the
/// kind's mixed roster, each as role and entry count.
fn free_layout(kind: Kind, dim_a: usize, dim_v: usize) -> Vec<(String, usize)> {
    let env = StructureEnv::new(Field::Rational).with_space("A", dim_a).with_space("V", dim_v);
    kind.all_maps()
        .into_iter()
        .filter(|r| !matches!(r.as_str(), "bracket_A" | "product_A" | "cobracket_A" | "coproduct_A"))
        .map(|r| {
            let n = env.zero_role(&r).expect("layout roles are well-formed").entries().len();
            (r, n)
        })
        .collect()
}

fn datum_from_index(
    kind: Kind,
    template: &StructureEnv,
    layout: &[(String, usize)],
    p: u32,
    index: u128,
) -> Result<ExtendingDatum> {
    let field = template.field;
    let total: usize = layout.iter().map(|(_, n)| n).sum();
    let dg = digits(index, p, total);
    let mut env = template.clone();
    let mut at = 0;
    for (role, n) in layout {
        let z = env.zero_role(role)?;
        let entries: Vec<Scalar> = dg[at..at + n].iter().map(|&x| field.from_i64(x as i64)).collect();
        at += n;
        let m = LinMap::new(
            z.source().to_vec(),
            z.target().to_vec(),
            z.source_dims().to_vec(),
            z.target_dims().to_vec(),
            field,
            entries,
        )?;
        env.insert_map(role, m);
    }
    ExtendingDatum::new(kind, &env)
}

fn index_of(d: &ExtendingDatum, layout: &[(String, usize)], p: u32) -> Result<u128> {
    let mut k: u128 = 0;
    for (role, _) in layout {
        for e in d.map(role)?.entries() {
            k = k * p as u128 + e.residue().expect("prime-field datum") as u128;
        }
    }
    Ok(k)
}

fn same_base(d: &ExtendingDatum, template: &StructureEnv) -> Result<bool> {
    for role in ["bracket_A", "product_A", "cobracket_A", "coproduct_A"] {
        if d.env().has_map(role) && d.map(role)?.entries() != template.map(role)?.entries() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates every datum of `kind` over `F_p` with the given base on `A`
/// (zero if `None`), keeps those passing the kind's condition set, and
/// partitions them into equivalence classes.
pub fn classify_small(
    kind: Kind,
    dim_a: usize,
    dim_v: usize,
    field: Field,
    base: Option<&PoissonBialgebraData>,
    budget: u128,
    opts: &RegistryOptions,
) -> Result<Classification> {
    let p = prime_of(field)?;
    let layout = free_layout(kind, dim_a, dim_v);
    let total: usize = layout.iter().map(|(_, n)| n).sum();
    let candidates = (p as u128)
        .checked_pow(total as u32)
        .ok_or(ForgeError::BudgetExceeded { size: u128::MAX, budget })?;
    let group = pair_space_size(p, dim_a, dim_v);
    let size = candidates.saturating_mul(group.max(1));
    if size > budget {
        return Err(ForgeError::BudgetExceeded { size, budget });
    }

    let mut template = StructureEnv::new(field).with_space("A", dim_a).with_space("V", dim_v);
    match base {
        Some(b) => {
            if b.space().dim != dim_a || b.field() != field {
                return Err(ForgeError::KindMismatch("base does not match dim A and the field".into()));
            }
            b.insert_into(&mut template, "A")?;
        }
        None => {
            template.fill_zero_roles(&["bracket_A", "product_A", "cobracket_A", "coproduct_A"])?;
        }
    }
    for role in ["bracket_A", "product_A", "cobracket_A", "coproduct_A"] {
        let m = template.map(role)?.clone();
        let (src, tgt) = role_signature(role).expect("structure role");
        template.insert_map(role, m.renamed(src, tgt)?);
    }
    let keep: Vec<String> = kind.structure_maps().into_iter().filter(|r| r.ends_with("_A")).collect();
    template.maps.retain(|r, _| keep.contains(r));

    let cs = compile_set(kind.condition_set(), opts)?;
    let valid_flags = (0..candidates)
        .into_par_iter()
        .map(|i| -> Result<bool> {
            let d = datum_from_index(kind, &template, &layout, p, i)?;
            set_holds(&cs, &d.full_env())
        })
        .collect::<Result<Vec<bool>>>()?;
    let valid: Vec<u128> = (0..candidates).filter(|&i| valid_flags[i as usize]).collect();

    let pairs = invertible_pairs(field, dim_a, dim_v)?;
    let mut assigned: BTreeMap<u128, usize> = BTreeMap::new();
    let mut classes = Vec::new();
    let mut anomalies = Vec::new();
    for &i in &valid {
        if assigned.contains_key(&i) {
            continue;
        }
        let rep = datum_from_index(kind, &template, &layout, p, i)?;
        let images = pairs
            .par_iter()
            .map(|w| pushforward(&rep, w))
            .collect::<Result<Vec<_>>>()?;
        let id = classes.len();
        let mut members = std::collections::BTreeSet::new();
        members.insert(i);
        for img in images.into_iter().flatten() {
            if !same_base(&img, &template)? {
                continue;
            }
            let j = index_of(&img, &layout, p)?;
            if !valid_flags[j as usize] {
                anomalies.push((i, j));
                continue;
            }
            members.insert(j);
        }
        for &j in &members {
            assigned.insert(j, id);
        }
        classes.push(EquivalenceClass {
            representative: rep,
            size: members.len(),
        });
    }
    Ok(Classification {
        kind,
        candidates,
        valid: valid.len(),
        classes,
        anomalies,
    })
}
