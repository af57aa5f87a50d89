//! Structures on direct sums `A ⊕ K` built from component maps.
//!
//! One generic builder covers every construction. On basis elements `a, b`
//! of `A` and `x, y` of `K` it sets
//!
//! ```text
//! [a, b] = [a, b]_A + θ(a, b)      a · b = ab + ν(a, b)
//! [x, b] = x ⊳ b + x ⊲ b           x · b = x ⇀ b + x ← b
//! [a, y] = −(y ⊳ a) − (y ⊲ a)      a · y = a ↼ y + a → y
//! [x, y] = σ(x, y) + [x, y]_K      x · y = ω(x, y) + xy
//! δ(a) = δ_A(a) + φ(a) − τφ(a) + p(a)     Δ(a) = Δ_A(a) + ρ(a) + γ(a) + s(a)
//! δ(x) = δ_K(x) + ψ(x) − τψ(x) + q(x)     Δ(x) = Δ_K(x) + α(x) + β(x) + t(x)
//! ```
//!
//! Absent maps count as zero, so every named construction is a choice of
//! which maps to pass. The ambient basis lists `A` first, then `K`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::dsl::rename_role;
use crate::env::StructureEnv;
use crate::error::{ForgeError, Result};
use crate::linmap::{flat_index, unflatten, LinMap, SpaceDecl};
use crate::scalar::{Field, Scalar};
use crate::structures::{
    mixed_roles, ActionBundle, CoactionBundle, CocycleBundle, CycleBundle, ExtendingDatum, PairStructure,
    PoissonAlgebraData, PoissonBialgebraData, PoissonCoalgebraData,
};

/// Which halves of the ambient structure a builder produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sides {
    pub algebra: bool,
    pub coalgebra: bool,
}

impl Sides {
    pub const BOTH: Sides = Sides {
        algebra: true,
        coalgebra: true,
    };
    pub const ALGEBRA: Sides = Sides {
        algebra: true,
        coalgebra: false,
    };
    pub const COALGEBRA: Sides = Sides {
        algebra: false,
        coalgebra: true,
    };
}

/// Which builder produced a structure, and a hash of its inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub builder: String,
    pub input_hash: u64,
}

/// A structure on `E = A ⊕ K`, stored as `bracket_E`, `product_E`,
/// `cobracket_E`, `coproduct_E` over the space `E`.
#[derive(Clone, Debug, PartialEq)]
pub struct BuiltStructure {
    pub env: StructureEnv,
    pub dim_a: usize,
    pub dim_k: usize,
    pub sides: Sides,
    /// Ambient index of each basis element of `A`.
    pub embedding: Vec<usize>,
    /// Index in `A` of each ambient basis element, if it lies in `A`.
    pub projection: Vec<Option<usize>>,
    pub provenance: Provenance,
}

impl BuiltStructure {
    pub fn dim(&self) -> usize {
        self.dim_a + self.dim_k
    }

    pub fn field(&self) -> Field {
        self.env.field
    }

    pub fn map(&self, role: &str) -> Result<&LinMap> {
        self.env.map(role)
    }

    /// The ambient bialgebra; a half that was not built is zero.
    pub fn bialgebra(&self) -> PoissonBialgebraData {
        let space = self.env.spaces["E"].clone();
        let mut b = PoissonBialgebraData::zero("E", self.dim(), self.field());
        b.algebra.space = space.clone();
        b.coalgebra.space = space;
        if let Ok(m) = self.env.map("bracket_E") {
            b.algebra.bracket = m.clone();
        }
        if let Ok(m) = self.env.map("product_E") {
            b.algebra.product = m.clone();
        }
        if let Ok(m) = self.env.map("cobracket_E") {
            b.coalgebra.cobracket = m.clone();
        }
        if let Ok(m) = self.env.map("coproduct_E") {
            b.coalgebra.coproduct = m.clone();
        }
        b
    }

    /// Entrywise equality of the ambient maps, ignoring provenance.
    pub fn same_structure(&self, o: &BuiltStructure) -> bool {
        self.dim_a == o.dim_a && self.dim_k == o.dim_k && self.sides == o.sides && self.env.maps == o.env.maps
    }
}

/// One contribution to an ambient map: the component `m`, the ambient
/// offset of each of its legs, and which component leg feeds each ambient
/// leg (`None` keeps the order).
struct Block<'a> {
    m: &'a LinMap,
    src_off: &'a [usize],
    tgt_off: &'a [usize],
    src_perm: Option<&'a [usize]>,
    tgt_perm: Option<&'a [usize]>,
    negate: bool,
}

struct Dense {
    src_dims: Vec<usize>,
    tgt_dims: Vec<usize>,
    data: Vec<Scalar>,
}

impl Dense {
    fn new(src_legs: usize, tgt_legs: usize, n: usize, field: Field) -> Self {
        let size = n.pow((src_legs + tgt_legs) as u32);
        Dense {
            src_dims: vec![n; src_legs],
            tgt_dims: vec![n; tgt_legs],
            data: vec![field.zero(); size],
        }
    }

    fn add(&mut self, b: Block<'_>) {
        let m = b.m;
        let src_size: usize = self.src_dims.iter().product();
        let legs = |own: &[usize], off: &[usize], perm: Option<&[usize]>| -> Vec<usize> {
            let shifted: Vec<usize> = own.iter().zip(off).map(|(i, o)| i + o).collect();
            match perm {
                Some(p) => p.iter().map(|&k| shifted[k]).collect(),
                None => shifted,
            }
        };
        for s_flat in 0..m.source_size() {
            let own_s = unflatten(m.source_dims(), s_flat);
            let s = legs(&own_s, b.src_off, b.src_perm);
            let sf = flat_index(&self.src_dims, &s);
            for (tidx, v) in m.column(s_flat) {
                let own_t: Vec<usize> = tidx.iter().map(|&i| i as usize).collect();
                let t = legs(&own_t, b.tgt_off, b.tgt_perm);
                let cell = &mut self.data[flat_index(&self.tgt_dims, &t) * src_size + sf];
                *cell = if b.negate { &*cell - v } else { &*cell + v };
            }
        }
    }

    fn into_map(self, field: Field) -> LinMap {
        let e = |k: usize| vec!["E".to_string(); k];
        LinMap::new(
            e(self.src_dims.len()),
            e(self.tgt_dims.len()),
            self.src_dims,
            self.tgt_dims,
            field,
            self.data,
        )
        .expect("ambient map is well-shaped")
    }
}

fn input_hash(env: &StructureEnv, builder: &str) -> u64 {
    let mut h = DefaultHasher::new();
    builder.hash(&mut h);
    for (name, sp) in &env.spaces {
        (name, sp.dim).hash(&mut h);
    }
    for (name, m) in &env.maps {
        name.hash(&mut h);
        for e in m.entries() {
            e.to_canonical().hash(&mut h);
        }
    }
    h.finish()
}

/// Looks up `role` and checks its dimensions; absent roles are `None`.
fn component<'e>(env: &'e StructureEnv, role: &str, dims: &[usize], split: usize) -> Result<Option<&'e LinMap>> {
    if !env.has_map(role) {
        return Ok(None);
    }
    let m = env.map(role)?;
    let (src, tgt) = dims.split_at(split);
    if m.source_dims() != src || m.target_dims() != tgt {
        let mut expected = tgt.to_vec();
        expected.extend(src);
        let mut actual = m.target_dims().to_vec();
        actual.extend(m.source_dims());
        return Err(ForgeError::ShapeMismatch {
            name: role.to_string(),
            expected,
            actual,
        });
    }
    Ok(Some(m))
}

/// The generic builder over an env holding spaces `A` and `k`.
pub fn build_generic(env: &StructureEnv, k: char, sides: Sides, builder: &str) -> Result<BuiltStructure> {
    let kl = k.to_string();
    let da = env.dim("A")?;
    let dk = env.dim(&kl)?;
    let n = da + dk;
    let field = env.field;
    let r = |role: &str| rename_role(role, 'H', k);
    let dim_of = |c: char| if c == 'A' { da } else { dk };
    let off_of = |c: char| if c == 'A' { 0 } else { da };

    // Shape of a role from its signature letters: (source dims ++ target
    // dims, number of source legs, source offsets, target offsets).
    let shape = |role: &str| -> (Vec<usize>, usize, Vec<usize>, Vec<usize>) {
        let (s, t) = crate::env::role_signature(role).expect("builder roles follow the convention");
        let letters = |v: &[String]| -> Vec<char> {
            v.iter()
                .map(|l| if l == "A" { 'A' } else { 'K' })
                .collect()
        };
        let (s, t) = (letters(&s), letters(&t));
        let dims = s.iter().chain(&t).map(|&c| dim_of(c)).collect();
        (
            dims,
            s.len(),
            s.iter().map(|&c| off_of(c)).collect(),
            t.iter().map(|&c| off_of(c)).collect(),
        )
    };
    let swap: &[usize] = &[1, 0];

    let mut out = StructureEnv::new(field);
    let mut labels = Vec::with_capacity(n);
    let sa = env.space("A")?;
    let sk = env.space(&kl)?;
    labels.extend((0..da).map(|i| sa.label(i)));
    labels.extend((0..dk).map(|i| sk.label(i)));
    out.spaces.insert(
        "E".into(),
        SpaceDecl {
            name: "E".into(),
            dim: n,
            labels: Some(labels),
        },
    );

    // (role, source permutation, target permutation, negate)
    type Plan<'p> = &'p [(&'p str, Option<&'p [usize]>, Option<&'p [usize]>, bool)];
    let mut assemble = |name: &str, src_legs: usize, tgt_legs: usize, plan: Plan<'_>| -> Result<()> {
        let mut d = Dense::new(src_legs, tgt_legs, n, field);
        for &(role, sp, tp, neg) in plan {
            let role = r(role);
            let (dims, split, so, to) = shape(&role);
            if let Some(m) = component(env, &role, &dims, split)? {
                d.add(Block {
                    m,
                    src_off: &so,
                    tgt_off: &to,
                    src_perm: sp,
                    tgt_perm: tp,
                    negate: neg,
                });
            }
        }
        out.insert_map(name, d.into_map(field));
        Ok(())
    };

    if sides.algebra {
        assemble(
            "bracket_E",
            2,
            1,
            &[
                ("bracket_A", None, None, false),
                ("theta_AA_H", None, None, false),
                ("triangleright_HA_A", None, None, false),
                ("triangleleft_HA_H", None, None, false),
                ("triangleright_HA_A", Some(swap), None, true),
                ("triangleleft_HA_H", Some(swap), None, true),
                ("sigma_HH_A", None, None, false),
                ("bracket_H", None, None, false),
            ],
        )?;
        assemble(
            "product_E",
            2,
            1,
            &[
                ("product_A", None, None, false),
                ("nu_AA_H", None, None, false),
                ("rightharpoonup_HA_A", None, None, false),
                ("leftarrow_HA_H", None, None, false),
                ("leftharpoonup_AH_A", None, None, false),
                ("rightarrow_AH_H", None, None, false),
                ("omega_HH_A", None, None, false),
                ("product_H", None, None, false),
            ],
        )?;
    }
    if sides.coalgebra {
        assemble(
            "cobracket_E",
            1,
            2,
            &[
                ("cobracket_A", None, None, false),
                ("phi_A_HA", None, None, false),
                ("phi_A_HA", None, Some(swap), true),
                ("p_A_HH", None, None, false),
                ("cobracket_H", None, None, false),
                ("psi_H_HA", None, None, false),
                ("psi_H_HA", None, Some(swap), true),
                ("q_H_AA", None, None, false),
            ],
        )?;
        assemble(
            "coproduct_E",
            1,
            2,
            &[
                ("coproduct_A", None, None, false),
                ("rho_A_HA", None, None, false),
                ("gamma_A_AH", None, None, false),
                ("s_A_HH", None, None, false),
                ("coproduct_H", None, None, false),
                ("alpha_H_AH", None, None, false),
                ("beta_H_HA", None, None, false),
                ("t_H_AA", None, None, false),
            ],
        )?;
    }

    Ok(BuiltStructure {
        env: out,
        dim_a: da,
        dim_k: dk,
        sides,
        embedding: (0..da).collect(),
        projection: (0..n).map(|i| (i < da).then_some(i)).collect(),
        provenance: Provenance {
            builder: builder.to_string(),
            input_hash: input_hash(env, builder),
        },
    })
}

fn pair_env(a_dim: &SpaceDecl, h_dim: &SpaceDecl, field: Field) -> StructureEnv {
    let mut env = StructureEnv::new(field);
    let mut a = a_dim.clone();
    a.name = "A".into();
    let mut h = h_dim.clone();
    h.name = "H".into();
    env.spaces.insert("A".into(), a);
    env.spaces.insert("H".into(), h);
    env
}

/// Biproduct of `A` and `H`: `H` acts and coacts on `A`, and nothing
/// flows back.
pub fn build_biproduct(
    h: &PoissonBialgebraData,
    a: &PoissonBialgebraData,
    actions: &ActionBundle,
    coactions: &CoactionBundle,
) -> Result<BuiltStructure> {
    let mut env = pair_env(a.space(), h.space(), a.field());
    a.insert_into(&mut env, "A")?;
    h.insert_into(&mut env, "H")?;
    actions.insert_into(&mut env);
    coactions.insert_into(&mut env);
    build_generic(&env, 'H', Sides::BOTH, "biproduct")
}

/// Cocycle cross product: the algebra half only.
pub fn build_cocycle_cross_product(
    a: &PoissonAlgebraData,
    h: &PoissonAlgebraData,
    pair: &PairStructure,
    cocycles: &CocycleBundle,
) -> Result<BuiltStructure> {
    let mut env = pair_env(&a.space, &h.space, a.field());
    a.insert_into(&mut env, "A")?;
    h.insert_into(&mut env, "H")?;
    pair.insert_into(&mut env);
    cocycles.insert_into(&mut env);
    build_generic(&env, 'H', Sides::ALGEBRA, "cocycle cross product")
}

/// Cycle cross coproduct: the coalgebra half only.
pub fn build_cycle_cross_coproduct(
    a: &PoissonCoalgebraData,
    h: &PoissonCoalgebraData,
    pair: &PairStructure,
    cycles: &CycleBundle,
) -> Result<BuiltStructure> {
    let mut env = pair_env(&a.space, &h.space, a.field());
    a.insert_into(&mut env, "A")?;
    h.insert_into(&mut env, "H")?;
    pair.insert_into(&mut env);
    cycles.insert_into(&mut env);
    build_generic(&env, 'H', Sides::COALGEBRA, "cycle cross coproduct")
}

/// Cocycle bicrossproduct: both halves on one ambient space.
pub fn build_cocycle_bicrossproduct(
    a: &PoissonBialgebraData,
    h: &PoissonBialgebraData,
    pair: &PairStructure,
    cocycles: &CocycleBundle,
    cycles: &CycleBundle,
) -> Result<BuiltStructure> {
    let mut env = pair_env(a.space(), h.space(), a.field());
    a.insert_into(&mut env, "A")?;
    h.insert_into(&mut env, "H")?;
    pair.insert_into(&mut env);
    cocycles.insert_into(&mut env);
    cycles.insert_into(&mut env);
    build_generic(&env, 'H', Sides::BOTH, "cocycle bicrossproduct")
}

/// Double cross biproduct: the bicrossproduct with zero cocycles and cycles.
pub fn build_double_cross_biproduct(
    a: &PoissonBialgebraData,
    h: &PoissonBialgebraData,
    pair: &PairStructure,
) -> Result<BuiltStructure> {
    let env = pair_env(a.space(), h.space(), a.field());
    let mut b = build_cocycle_bicrossproduct(a, h, pair, &CocycleBundle::zero(&env)?, &CycleBundle::zero(&env)?)?;
    b.provenance.builder = "double cross biproduct".into();
    Ok(b)
}

/// Builds from a pair-level env with spaces `A`, `H` and any subset of the
/// structure, mixed, cocycle and cycle roles.
pub fn build_from_pair_env(env: &StructureEnv, sides: Sides) -> Result<BuiltStructure> {
    build_generic(env, 'H', sides, "pair env")
}

/// The unified product of an extending datum.
pub fn build_unified(datum: &ExtendingDatum) -> Result<BuiltStructure> {
    let k = datum.kind();
    let sides = Sides {
        algebra: k.has_algebra(),
        coalgebra: k.has_coalgebra(),
    };
    build_generic(datum.env(), 'V', sides, &format!("unified product ({k})"))
}

/// Every role the generic builder reads for complement `k`.
pub fn builder_roles(k: char) -> Vec<String> {
    let mut v: Vec<String> = ["bracket", "product", "cobracket", "coproduct"]
        .iter()
        .flat_map(|m| [format!("{m}_A"), format!("{m}_{k}")])
        .collect();
    v.extend(mixed_roles(k));
    v
}

/// First basis pair `(u, v)` where `f(m(u, v)) ≠ n(f u, f v)`, for a linear
/// map `f: X → Y` and binary maps `m` on `X`, `n` on `Y`.
pub fn binary_defect(f: &LinMap, m: &LinMap, n: &LinMap) -> Option<Vec<usize>> {
    let (dx, dy) = (f.source_dims()[0], f.target_dims()[0]);
    let zero = f.field().zero();
    for u in 0..dx {
        for v in 0..dx {
            for out in 0..dy {
                let mut lhs = zero.clone();
                for k in 0..dx {
                    let c = m.get(&[k], &[u, v]);
                    if !c.is_zero() {
                        lhs = &lhs + &(c * f.get(&[out], &[k]));
                    }
                }
                let mut rhs = zero.clone();
                for i in 0..dy {
                    let fi = f.get(&[i], &[u]);
                    if fi.is_zero() {
                        continue;
                    }
                    for j in 0..dy {
                        let fj = f.get(&[j], &[v]);
                        if !fj.is_zero() {
                            rhs = &rhs + &(&(fi * fj) * n.get(&[out], &[i, j]));
                        }
                    }
                }
                if lhs != rhs {
                    return Some(vec![u, v]);
                }
            }
        }
    }
    None
}

/// First basis element `u` where `(f ⊗ f)(d(u)) ≠ e(f u)`, for a linear map
/// `f: X → Y` and comultiplications `d` on `X`, `e` on `Y`.
pub fn cobinary_defect(f: &LinMap, d: &LinMap, e: &LinMap) -> Option<Vec<usize>> {
    let (dx, dy) = (f.source_dims()[0], f.target_dims()[0]);
    let zero = f.field().zero();
    for u in 0..dx {
        for o1 in 0..dy {
            for o2 in 0..dy {
                let mut lhs = zero.clone();
                for i in 0..dx {
                    let fi = f.get(&[o1], &[i]);
                    if fi.is_zero() {
                        continue;
                    }
                    for j in 0..dx {
                        let c = d.get(&[i, j], &[u]);
                        if !c.is_zero() {
                            lhs = &lhs + &(&(fi * f.get(&[o2], &[j])) * c);
                        }
                    }
                }
                let mut rhs = zero.clone();
                for k in 0..dy {
                    let fk = f.get(&[k], &[u]);
                    if !fk.is_zero() {
                        rhs = &rhs + &(fk * e.get(&[o1, o2], &[k]));
                    }
                }
                if lhs != rhs {
                    return Some(vec![u]);
                }
            }
        }
    }
    None
}

/// First failing basis tuple of `f` as a morphism between the built halves
/// both structures share.
pub fn morphism_defect(f: &LinMap, from: &BuiltStructure, to: &BuiltStructure) -> Result<Option<(String, Vec<usize>)>> {
    let mut roles = Vec::new();
    if from.sides.algebra && to.sides.algebra {
        roles.extend(["bracket_E", "product_E"]);
    }
    if from.sides.coalgebra && to.sides.coalgebra {
        roles.extend(["cobracket_E", "coproduct_E"]);
    }
    for role in roles {
        let (m, n) = (from.map(role)?, to.map(role)?);
        let d = if m.source_dims().len() == 2 {
            binary_defect(f, m, n)
        } else {
            cobinary_defect(f, m, n)
        };
        if let Some(t) = d {
            return Ok(Some((role.to_string(), t)));
        }
    }
    Ok(None)
}

/// Embedding `A → E` as a linear map.
pub fn embedding_map(b: &BuiltStructure) -> LinMap {
    let f = b.field();
    LinMap::from_fn(vec!["A".into()], vec!["E".into()], vec![b.dim_a], vec![b.dim()], f, |t, s| {
        if b.embedding[s[0]] == t[0] {
            f.one()
        } else {
            f.zero()
        }
    })
}

/// Projection `E → A` as a linear map.
pub fn projection_map(b: &BuiltStructure) -> LinMap {
    let f = b.field();
    LinMap::from_fn(vec!["E".into()], vec!["A".into()], vec![b.dim()], vec![b.dim_a], f, |t, s| {
        if b.projection[s[0]] == Some(t[0]) {
            f.one()
        } else {
            f.zero()
        }
    })
}

/// The built halves of `A` alone, read from a pair-level or datum env.
pub fn base_structure(env: &StructureEnv, sides: Sides) -> Result<BuiltStructure> {
    let mut only = StructureEnv::new(env.field);
    let sa = env.space("A")?.clone();
    only.spaces.insert("A".into(), sa.clone());
    only.spaces.insert(
        "K".into(),
        SpaceDecl {
            name: "K".into(),
            dim: 0,
            labels: None,
        },
    );
    for m in ["bracket_A", "product_A", "cobracket_A", "coproduct_A"] {
        if env.has_map(m) {
            only.insert_map(m, env.map(m)?.clone());
        }
    }
    build_generic(&only, 'K', sides, "base")
}

/// Failing tuple, if any, of the kind's homomorphism contract: the
/// projection `E → A` for kinds a1, c1, I and the inclusion for the rest.
pub fn homomorphism_contract_defect(datum: &ExtendingDatum, built: &BuiltStructure) -> Result<Option<(String, Vec<usize>)>> {
    let base = base_structure(datum.env(), built.sides)?;
    if datum.kind().projection_is_morphism() {
        morphism_defect(&projection_map(built), built, &base)
    } else {
        morphism_defect(&embedding_map(built), &base, built)
    }
}
