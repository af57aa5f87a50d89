//! Typed bundles of structure maps.
//!
//! Axioms are never constructor invariants here: every type accepts any
//! shape-valid data so that failing inputs can be loaded and diagnosed.
//! Map roles follow the naming convention of [`crate::env`]; the second space
//! is `H` for pair-level data and `V` for extending data.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::dsl::rename_role;
use crate::env::{role_signature, StructureEnv};
use crate::error::{ForgeError, Result};
use crate::linmap::{LinMap, SpaceDecl};
use crate::scalar::Field;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn expect_shape(role: &str, m: &LinMap, src: &[&SpaceDecl], tgt: &[&SpaceDecl]) -> Result<()> {
    let sd: Vec<usize> = src.iter().map(|s| s.dim).collect();
    let td: Vec<usize> = tgt.iter().map(|s| s.dim).collect();
    let sn: Vec<&str> = src.iter().map(|s| s.name.as_str()).collect();
    let tn: Vec<&str> = tgt.iter().map(|s| s.name.as_str()).collect();
    if m.source_dims() != sd.as_slice() || m.target_dims() != td.as_slice() {
        let mut expected = td.clone();
        expected.extend(&sd);
        let mut actual = m.target_dims().to_vec();
        actual.extend(m.source_dims());
        return Err(ForgeError::ShapeMismatch {
            name: role.to_string(),
            expected,
            actual,
        });
    }
    if m.source() != sn.as_slice() || m.target() != tn.as_slice() {
        return Err(ForgeError::UnknownSpace(format!(
            "{role} maps {:?} -> {:?}, expected {sn:?} -> {tn:?}",
            m.source(),
            m.target()
        )));
    }
    Ok(())
}

/// Zero map for a role whose signature letters are resolved through `spaces`.
pub fn zero_for_role(role: &str, spaces: &[&SpaceDecl], field: Field) -> Result<LinMap> {
    let (src, tgt) = role_signature(role).ok_or_else(|| ForgeError::UnknownRole(role.to_string()))?;
    let find = |l: &String| -> Result<&SpaceDecl> {
        spaces
            .iter()
            .find(|s| &s.name == l)
            .copied()
            .ok_or_else(|| ForgeError::UnknownSpace(l.clone()))
    };
    let s = src.iter().map(find).collect::<Result<Vec<_>>>()?;
    let t = tgt.iter().map(find).collect::<Result<Vec<_>>>()?;
    Ok(LinMap::zeros(
        s.iter().map(|d| d.name.clone()).collect(),
        t.iter().map(|d| d.name.clone()).collect(),
        s.iter().map(|d| d.dim).collect(),
        t.iter().map(|d| d.dim).collect(),
        field,
    ))
}

/// Bracket and product on one space.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonAlgebraData {
    pub space: SpaceDecl,
    pub bracket: LinMap,
    pub product: LinMap,
}

impl PoissonAlgebraData {
    pub fn new(space: SpaceDecl, bracket: LinMap, product: LinMap) -> Result<Self> {
        expect_shape("bracket", &bracket, &[&space, &space], &[&space])?;
        expect_shape("product", &product, &[&space, &space], &[&space])?;
        if bracket.field() != product.field() {
            return Err(ForgeError::FieldMismatch(bracket.field(), product.field()));
        }
        Ok(PoissonAlgebraData {
            space,
            bracket,
            product,
        })
    }

    pub fn zero(name: &str, dim: usize, field: Field) -> Self {
        let z = LinMap::zeros(names(&[name, name]), names(&[name]), vec![dim, dim], vec![dim], field);
        PoissonAlgebraData {
            space: SpaceDecl::new(name, dim),
            bracket: z.clone(),
            product: z,
        }
    }

    pub fn field(&self) -> Field {
        self.product.field()
    }

    /// Reads `bracket_X` and `product_X` from an env.
    pub fn from_env(env: &StructureEnv, letter: &str) -> Result<Self> {
        let space = env.space(letter)?.clone();
        Self::new(
            space,
            env.map(&format!("bracket_{letter}"))?.clone(),
            env.map(&format!("product_{letter}"))?.clone(),
        )
    }

    /// Inserts the maps under `bracket_X`, `product_X`, with the space
    /// renamed to `letter`.
    pub fn insert_into(&self, env: &mut StructureEnv, letter: &str) -> Result<()> {
        ensure_space(env, letter, &self.space)?;
        let l = letter.to_string();
        env.insert_map(
            &format!("bracket_{letter}"),
            self.bracket.renamed(vec![l.clone(), l.clone()], vec![l.clone()])?,
        );
        env.insert_map(
            &format!("product_{letter}"),
            self.product.renamed(vec![l.clone(), l.clone()], vec![l])?,
        );
        Ok(())
    }

    /// Env with this algebra on space `A`.
    pub fn to_env(&self) -> Result<StructureEnv> {
        let mut env = StructureEnv::new(self.field());
        self.insert_into(&mut env, "A")?;
        Ok(env)
    }

    /// The coalgebra with transposed structure constants.
    pub fn dual(&self) -> PoissonCoalgebraData {
        PoissonCoalgebraData {
            space: self.space.clone(),
            cobracket: transpose_binary(&self.bracket),
            coproduct: transpose_binary(&self.product),
        }
    }
}

/// Cobracket and coproduct on one space.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonCoalgebraData {
    pub space: SpaceDecl,
    pub cobracket: LinMap,
    pub coproduct: LinMap,
}

impl PoissonCoalgebraData {
    pub fn new(space: SpaceDecl, cobracket: LinMap, coproduct: LinMap) -> Result<Self> {
        expect_shape("cobracket", &cobracket, &[&space], &[&space, &space])?;
        expect_shape("coproduct", &coproduct, &[&space], &[&space, &space])?;
        if cobracket.field() != coproduct.field() {
            return Err(ForgeError::FieldMismatch(cobracket.field(), coproduct.field()));
        }
        Ok(PoissonCoalgebraData {
            space,
            cobracket,
            coproduct,
        })
    }

    pub fn zero(name: &str, dim: usize, field: Field) -> Self {
        let z = LinMap::zeros(names(&[name]), names(&[name, name]), vec![dim], vec![dim, dim], field);
        PoissonCoalgebraData {
            space: SpaceDecl::new(name, dim),
            cobracket: z.clone(),
            coproduct: z,
        }
    }

    pub fn field(&self) -> Field {
        self.coproduct.field()
    }

    pub fn from_env(env: &StructureEnv, letter: &str) -> Result<Self> {
        let space = env.space(letter)?.clone();
        Self::new(
            space,
            env.map(&format!("cobracket_{letter}"))?.clone(),
            env.map(&format!("coproduct_{letter}"))?.clone(),
        )
    }

    pub fn insert_into(&self, env: &mut StructureEnv, letter: &str) -> Result<()> {
        ensure_space(env, letter, &self.space)?;
        let l = letter.to_string();
        env.insert_map(
            &format!("cobracket_{letter}"),
            self.cobracket.renamed(vec![l.clone()], vec![l.clone(), l.clone()])?,
        );
        env.insert_map(
            &format!("coproduct_{letter}"),
            self.coproduct.renamed(vec![l.clone()], vec![l.clone(), l])?,
        );
        Ok(())
    }

    pub fn to_env(&self) -> Result<StructureEnv> {
        let mut env = StructureEnv::new(self.field());
        self.insert_into(&mut env, "A")?;
        Ok(env)
    }

    /// The algebra with transposed structure constants.
    pub fn dual(&self) -> PoissonAlgebraData {
        PoissonAlgebraData {
            space: self.space.clone(),
            bracket: transpose_binary(&self.cobracket),
            product: transpose_binary(&self.coproduct),
        }
    }
}

/// Transpose of a map `X⊗X → X` or `X → X⊗X`.
pub fn transpose_binary(m: &LinMap) -> LinMap {
    LinMap::from_fn(
        m.target().to_vec(),
        m.source().to_vec(),
        m.target_dims().to_vec(),
        m.source_dims().to_vec(),
        m.field(),
        |t, s| m.get(s, t).clone(),
    )
}

/// Algebra and coalgebra sharing one space.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonBialgebraData {
    pub algebra: PoissonAlgebraData,
    pub coalgebra: PoissonCoalgebraData,
}

impl PoissonBialgebraData {
    pub fn new(algebra: PoissonAlgebraData, coalgebra: PoissonCoalgebraData) -> Result<Self> {
        if algebra.space != coalgebra.space {
            return Err(ForgeError::NameClash(format!(
                "algebra on {:?} and coalgebra on {:?}",
                algebra.space.name, coalgebra.space.name
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(ForgeError::FieldMismatch(algebra.field(), coalgebra.field()));
        }
        Ok(PoissonBialgebraData { algebra, coalgebra })
    }

    pub fn zero(name: &str, dim: usize, field: Field) -> Self {
        PoissonBialgebraData {
            algebra: PoissonAlgebraData::zero(name, dim, field),
            coalgebra: PoissonCoalgebraData::zero(name, dim, field),
        }
    }

    pub fn space(&self) -> &SpaceDecl {
        &self.algebra.space
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn from_env(env: &StructureEnv, letter: &str) -> Result<Self> {
        Self::new(
            PoissonAlgebraData::from_env(env, letter)?,
            PoissonCoalgebraData::from_env(env, letter)?,
        )
    }

    pub fn insert_into(&self, env: &mut StructureEnv, letter: &str) -> Result<()> {
        self.algebra.insert_into(env, letter)?;
        self.coalgebra.insert_into(env, letter)
    }

    pub fn to_env(&self) -> Result<StructureEnv> {
        let mut env = StructureEnv::new(self.field());
        self.insert_into(&mut env, "A")?;
        Ok(env)
    }
}

/// Adds `letter` as a space with the declared dimension and labels, or
/// checks an existing one agrees.
fn ensure_space(env: &mut StructureEnv, letter: &str, decl: &SpaceDecl) -> Result<()> {
    match env.spaces.get(letter) {
        Some(s) if s.dim == decl.dim => Ok(()),
        Some(s) => Err(ForgeError::ShapeMismatch {
            name: letter.to_string(),
            expected: vec![s.dim],
            actual: vec![decl.dim],
        }),
        None => {
            let mut d = decl.clone();
            d.name = letter.to_string();
            env.spaces.insert(letter.to_string(), d);
            Ok(())
        }
    }
}

/// Block-diagonal sum of two bialgebras on the space `a+b`.
pub fn direct_sum(a: &PoissonBialgebraData, b: &PoissonBialgebraData) -> Result<PoissonBialgebraData> {
    let (sa, sb) = (a.space(), b.space());
    if sa.name == sb.name {
        return Err(ForgeError::NameClash(sa.name.clone()));
    }
    if a.field() != b.field() {
        return Err(ForgeError::FieldMismatch(a.field(), b.field()));
    }
    let name = format!("{}+{}", sa.name, sb.name);
    let (da, db) = (sa.dim, sb.dim);
    let n = da + db;
    let labels = match (&sa.labels, &sb.labels) {
        (None, None) => None,
        _ => Some((0..da).map(|i| sa.label(i)).chain((0..db).map(|i| sb.label(i))).collect()),
    };
    let space = SpaceDecl {
        name: name.clone(),
        dim: n,
        labels,
    };
    let field = a.field();
    // Index `i` of the sum lies in the first summand iff `i < da`.
    let part = |i: usize| if i < da { (0, i) } else { (1, i - da) };
    let binary = |ma: &LinMap, mb: &LinMap| {
        LinMap::from_fn(names(&[&name, &name]), names(&[&name]), vec![n, n], vec![n], field, |t, s| {
            match (part(t[0]), part(s[0]), part(s[1])) {
                ((0, k), (0, i), (0, j)) => ma.get(&[k], &[i, j]).clone(),
                ((1, k), (1, i), (1, j)) => mb.get(&[k], &[i, j]).clone(),
                _ => field.zero(),
            }
        })
    };
    let co = |ma: &LinMap, mb: &LinMap| {
        LinMap::from_fn(names(&[&name]), names(&[&name, &name]), vec![n], vec![n, n], field, |t, s| {
            match (part(s[0]), part(t[0]), part(t[1])) {
                ((0, k), (0, i), (0, j)) => ma.get(&[i, j], &[k]).clone(),
                ((1, k), (1, i), (1, j)) => mb.get(&[i, j], &[k]).clone(),
                _ => field.zero(),
            }
        })
    };
    Ok(PoissonBialgebraData {
        algebra: PoissonAlgebraData {
            space: space.clone(),
            bracket: binary(&a.algebra.bracket, &b.algebra.bracket),
            product: binary(&a.algebra.product, &b.algebra.product),
        },
        coalgebra: PoissonCoalgebraData {
            space,
            cobracket: co(&a.coalgebra.cobracket, &b.coalgebra.cobracket),
            coproduct: co(&a.coalgebra.coproduct, &b.coalgebra.coproduct),
        },
    })
}

/// A fixed set of roles stored by name, with typed accessors generated for
/// each bundle below.
macro_rules! role_bundle {
    ($(#[$m:meta])* $name:ident { $($field:ident => $role:literal),* $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name {
            $(pub $field: LinMap,)*
        }

        impl $name {
            pub const ROLES: &'static [&'static str] = &[$($role),*];

            /// All maps zero, shaped by the env's spaces.
            pub fn zero(env: &StructureEnv) -> Result<Self> {
                Ok($name { $($field: env.zero_role($role)?,)* })
            }

            /// Reads every role, zero-filling the absent ones.
            pub fn from_env(env: &StructureEnv) -> Result<Self> {
                Ok($name {
                    $($field: if env.has_map($role) {
                        env.map($role)?.clone()
                    } else {
                        env.zero_role($role)?
                    },)*
                })
            }

            pub fn insert_into(&self, env: &mut StructureEnv) {
                $(env.insert_map($role, self.$field.clone());)*
            }
        }
    };
}

role_bundle!(
    /// Actions of `H` on a bimodule `A`.
    ActionBundle {
        lie_action => "triangleright_HA_A",
        left_assoc => "rightharpoonup_HA_A",
        right_assoc => "leftharpoonup_AH_A",
    }
);

role_bundle!(
    /// Coactions of `H` on a bicomodule `A`.
    CoactionBundle {
        lie_coaction => "phi_A_HA",
        left_coassoc => "rho_A_HA",
        right_coassoc => "gamma_A_AH",
    }
);

role_bundle!(
    /// Mutual actions and coactions of `A` and `H`.
    PairStructure {
        lie_action_on_a => "triangleright_HA_A",
        lie_action_on_h => "triangleleft_HA_H",
        left_action_on_a => "rightharpoonup_HA_A",
        right_action_on_a => "leftharpoonup_AH_A",
        left_action_on_h => "rightarrow_AH_H",
        right_action_on_h => "leftarrow_HA_H",
        lie_coaction_of_a => "phi_A_HA",
        lie_coaction_of_h => "psi_H_HA",
        left_coaction_of_a => "rho_A_HA",
        right_coaction_of_a => "gamma_A_AH",
        left_coaction_of_h => "alpha_H_AH",
        right_coaction_of_h => "beta_H_HA",
    }
);

role_bundle!(
    /// Cocycles twisting the bracket and product.
    CocycleBundle {
        bracket_on_h => "sigma_HH_A",
        product_on_h => "omega_HH_A",
        bracket_on_a => "theta_AA_H",
        product_on_a => "nu_AA_H",
    }
);

role_bundle!(
    /// Cycles twisting the cobracket and coproduct.
    CycleBundle {
        cobracket_of_a => "p_A_HH",
        coproduct_of_a => "s_A_HH",
        cobracket_of_h => "q_H_AA",
        coproduct_of_h => "t_H_AA",
    }
);

impl PairStructure {
    /// The one-sided data of a biproduct: `H` acts and coacts on `A` only.
    pub fn from_module_data(env: &StructureEnv, actions: &ActionBundle, coactions: &CoactionBundle) -> Result<Self> {
        let mut p = PairStructure::zero(env)?;
        p.lie_action_on_a = actions.lie_action.clone();
        p.left_action_on_a = actions.left_assoc.clone();
        p.right_action_on_a = actions.right_assoc.clone();
        p.lie_coaction_of_a = coactions.lie_coaction.clone();
        p.left_coaction_of_a = coactions.left_coassoc.clone();
        p.right_coaction_of_a = coactions.right_coassoc.clone();
        Ok(p)
    }
}

/// Every mixed role of a direct sum `A ⊕ K`, with `K` the given letter.
pub fn mixed_roles(k: char) -> Vec<String> {
    PairStructure::ROLES
        .iter()
        .chain(CocycleBundle::ROLES)
        .chain(CycleBundle::ROLES)
        .map(|r| rename_role(r, 'H', k))
        .collect()
}

/// Structure map roles of the space `letter`.
pub fn structure_roles(letter: char) -> Vec<String> {
    ["bracket", "product", "cobracket", "coproduct"]
        .iter()
        .map(|m| format!("{m}_{letter}"))
        .collect()
}

/// The six shapes of extending data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A1,
    A2,
    C1,
    C2,
    I,
    II,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::A1, Kind::A2, Kind::C1, Kind::C2, Kind::I, Kind::II];

    pub fn name(self) -> &'static str {
        match self {
            Kind::A1 => "a1",
            Kind::A2 => "a2",
            Kind::C1 => "c1",
            Kind::C2 => "c2",
            Kind::I => "I",
            Kind::II => "II",
        }
    }

    pub fn has_algebra(self) -> bool {
        !matches!(self, Kind::C1 | Kind::C2)
    }

    pub fn has_coalgebra(self) -> bool {
        !matches!(self, Kind::A1 | Kind::A2)
    }

    /// Kinds whose canonical projection `E → A` is a homomorphism; for the
    /// others the inclusion `A → E` is.
    pub fn projection_is_morphism(self) -> bool {
        matches!(self, Kind::A1 | Kind::C1 | Kind::I)
    }

    /// Mixed maps a datum of this kind carries (complement `V`).
    pub fn roster(self) -> &'static [&'static str] {
        const A1: &[&str] = &[
            "triangleleft_VA_V",
            "theta_AA_V",
            "leftarrow_VA_V",
            "rightarrow_AV_V",
            "nu_AA_V",
        ];
        const A2: &[&str] = &[
            "triangleright_VA_A",
            "triangleleft_VA_V",
            "rightharpoonup_VA_A",
            "leftharpoonup_AV_A",
            "rightarrow_AV_V",
            "leftarrow_VA_V",
            "sigma_VV_A",
            "omega_VV_A",
        ];
        const C1: &[&str] = &[
            "phi_A_VA",
            "psi_V_VA",
            "rho_A_VA",
            "gamma_A_AV",
            "alpha_V_AV",
            "beta_V_VA",
            "p_A_VV",
            "s_A_VV",
        ];
        const C2: &[&str] = &["psi_V_VA", "alpha_V_AV", "beta_V_VA", "q_V_AA", "t_V_AA"];
        const I: &[&str] = &[
            "triangleleft_VA_V",
            "theta_AA_V",
            "leftarrow_VA_V",
            "rightarrow_AV_V",
            "nu_AA_V",
            "phi_A_VA",
            "psi_V_VA",
            "rho_A_VA",
            "gamma_A_AV",
            "alpha_V_AV",
            "beta_V_VA",
            "p_A_VV",
            "s_A_VV",
        ];
        const II: &[&str] = &[
            "triangleright_VA_A",
            "triangleleft_VA_V",
            "rightharpoonup_VA_A",
            "leftharpoonup_AV_A",
            "rightarrow_AV_V",
            "leftarrow_VA_V",
            "sigma_VV_A",
            "omega_VV_A",
            "psi_V_VA",
            "alpha_V_AV",
            "beta_V_VA",
            "q_V_AA",
            "t_V_AA",
        ];
        match self {
            Kind::A1 => A1,
            Kind::A2 => A2,
            Kind::C1 => C1,
            Kind::C2 => C2,
            Kind::I => I,
            Kind::II => II,
        }
    }

    /// Structure maps on `A` and on `V` the kind uses.
    pub fn structure_maps(self) -> Vec<String> {
        let mut out = Vec::new();
        for l in ['A', 'V'] {
            if self.has_algebra() {
                out.push(format!("bracket_{l}"));
                out.push(format!("product_{l}"));
            }
            if self.has_coalgebra() {
                out.push(format!("cobracket_{l}"));
                out.push(format!("coproduct_{l}"));
            }
        }
        out
    }

    /// Every map a datum of this kind holds.
    pub fn all_maps(self) -> Vec<String> {
        let mut v = self.structure_maps();
        v.extend(self.roster().iter().map(|s| s.to_string()));
        v
    }

    pub fn condition_set(self) -> &'static str {
        match self {
            Kind::A1 => "EXT_A1",
            Kind::A2 => "EXT_A2",
            Kind::C1 => "EXT_C1",
            Kind::C2 => "EXT_C2",
            Kind::I => "EXT_I",
            Kind::II => "EXT_II",
        }
    }

    /// Morphism-pair condition sets; the bialgebra kinds use both sides.
    pub fn morphism_sets(self) -> &'static [&'static str] {
        match self {
            Kind::A1 => &["MOR_A1"],
            Kind::A2 => &["MOR_A2"],
            Kind::C1 => &["MOR_C1"],
            Kind::C2 => &["MOR_C2"],
            Kind::I => &["MOR_A1", "MOR_C1"],
            Kind::II => &["MOR_A2", "MOR_C2"],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = ForgeError;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ForgeError::KindMismatch(format!("unknown kind {s:?}")))
    }
}

/// An extending datum of `A` by `V`: structure on both spaces and exactly
/// the mixed maps of its kind. Maps are keyed by role.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendingDatum {
    kind: Kind,
    env: StructureEnv,
}

impl ExtendingDatum {
    /// Accepts an env over spaces `A` and `V`. Map names are normalized to
    /// roles, absent maps of the kind are zero-filled, and maps foreign to
    /// the kind are rejected.
    pub fn new(kind: Kind, env: &StructureEnv) -> Result<Self> {
        let mut out = StructureEnv::new(env.field);
        for l in ["A", "V"] {
            let d = env.space(l)?;
            let mut d = d.clone();
            d.name = l.to_string();
            out.spaces.insert(l.to_string(), d);
        }
        let allowed: BTreeSet<String> = kind.all_maps().into_iter().collect();
        let mut bound: BTreeSet<&str> = BTreeSet::new();
        for (role, name) in &env.roles {
            if role.len() == 1 {
                continue;
            }
            if !allowed.contains(role) {
                return Err(ForgeError::KindMismatch(format!(
                    "role {role} is not part of a {kind} datum"
                )));
            }
            bound.insert(name);
        }
        for (name, m) in &env.maps {
            let is_role = role_signature(name).is_some();
            if is_role && !allowed.contains(name) && !m.is_zero() {
                return Err(ForgeError::KindMismatch(format!(
                    "map {name} is not part of a {kind} datum"
                )));
            }
            if !is_role && !bound.contains(name.as_str()) {
                return Err(ForgeError::UnknownRole(name.clone()));
            }
        }
        for role in &allowed {
            let m = if env.has_map(role) {
                let m = env.map(role)?;
                let (src, tgt) = role_signature(role).expect("roster roles follow the convention");
                m.renamed(src, tgt)?
            } else {
                out.zero_role(role)?
            };
            out.insert_map(role, m);
        }
        let shape = out.validate();
        if let Some(v) = shape.first() {
            return Err(ForgeError::Format(v.to_string()));
        }
        Ok(ExtendingDatum { kind, env: out })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The datum's maps, keyed by role.
    pub fn env(&self) -> &StructureEnv {
        &self.env
    }

    pub fn field(&self) -> Field {
        self.env.field
    }

    pub fn dim_a(&self) -> usize {
        self.env.spaces["A"].dim
    }

    pub fn dim_v(&self) -> usize {
        self.env.spaces["V"].dim
    }

    pub fn map(&self, role: &str) -> Result<&LinMap> {
        self.env.map(role)
    }

    /// Replaces one map of the roster or structure.
    pub fn set_map(&mut self, role: &str, m: LinMap) -> Result<()> {
        if !self.kind.all_maps().iter().any(|r| r == role) {
            return Err(ForgeError::KindMismatch(format!(
                "role {role} is not part of a {} datum",
                self.kind
            )));
        }
        let old = self.env.map(role)?;
        if old.source_dims() != m.source_dims() || old.target_dims() != m.target_dims() {
            return Err(ForgeError::ShapeMismatch {
                name: role.to_string(),
                expected: old.target_dims().iter().chain(old.source_dims()).copied().collect(),
                actual: m.target_dims().iter().chain(m.source_dims()).copied().collect(),
            });
        }
        let (src, tgt) = role_signature(role).expect("roster roles follow the convention");
        self.env.insert_map(role, m.renamed(src, tgt)?);
        Ok(())
    }

    /// The env with every mixed and structure role of `A ⊕ V` present,
    /// those outside the kind as zero maps.
    pub fn full_env(&self) -> StructureEnv {
        let mut env = self.env.clone();
        let mut all = mixed_roles('V');
        all.extend(structure_roles('A'));
        all.extend(structure_roles('V'));
        let refs: Vec<&str> = all.iter().map(String::as_str).collect();
        env.fill_zero_roles(&refs).expect("spaces A and V are declared");
        env
    }
}

/// The datum with every map zero.
pub fn zero_datum(kind: Kind, dim_a: usize, dim_v: usize, field: Field) -> ExtendingDatum {
    let env = StructureEnv::new(field).with_space("A", dim_a).with_space("V", dim_v);
    ExtendingDatum::new(kind, &env).expect("zero datum is well-formed")
}

/// A candidate equivalence `(a, x) ↦ (a + r(x), s(x))`.
#[derive(Clone, Debug, PartialEq)]
pub struct MorphismPair {
    pub r: LinMap,
    pub s_map: LinMap,
}

impl MorphismPair {
    pub fn new(r: LinMap, s_map: LinMap) -> Result<Self> {
        if r.source_dims().len() != 1 || r.target_dims().len() != 1 {
            return Err(ForgeError::Arity("r must map V to A".into()));
        }
        if s_map.source_dims() != r.source_dims() || s_map.target_dims() != r.source_dims() {
            return Err(ForgeError::ShapeMismatch {
                name: "s".into(),
                expected: vec![r.source_dims()[0], r.source_dims()[0]],
                actual: s_map.target_dims().iter().chain(s_map.source_dims()).copied().collect(),
            });
        }
        let r = r.renamed(names(&["V"]), names(&["A"]))?;
        let s_map = s_map.renamed(names(&["V"]), names(&["V"]))?;
        Ok(MorphismPair { r, s_map })
    }

    /// `r = 0`, `s = id`.
    pub fn identity(dim_a: usize, dim_v: usize, field: Field) -> Self {
        MorphismPair {
            r: LinMap::zeros(names(&["V"]), names(&["A"]), vec![dim_v], vec![dim_a], field),
            s_map: LinMap::from_fn(names(&["V"]), names(&["V"]), vec![dim_v], vec![dim_v], field, |t, s| {
                if t == s {
                    field.one()
                } else {
                    field.zero()
                }
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_datum_holds_exactly_its_roster() {
        for k in Kind::ALL {
            let d = zero_datum(k, 2, 1, Field::Rational);
            let got: BTreeSet<&String> = d.env().maps.keys().collect();
            let want = k.all_maps();
            assert_eq!(got, want.iter().collect(), "{k}");
            assert!(d.env().validate().is_empty());
        }
    }

    #[test]
    fn foreign_maps_are_rejected() {
        let mut env = StructureEnv::new(Field::Rational).with_space("A", 1).with_space("V", 1);
        let z = env.zero_role("sigma_VV_A").unwrap();
        let one = z.add(&LinMap::from_fn(
            names(&["V", "V"]),
            names(&["A"]),
            vec![1, 1],
            vec![1],
            Field::Rational,
            |_, _| Field::Rational.one(),
        ))
        .unwrap();
        env.insert_map("sigma_VV_A", one);
        assert!(matches!(ExtendingDatum::new(Kind::A1, &env), Err(ForgeError::KindMismatch(_))));
        assert!(ExtendingDatum::new(Kind::A2, &env).is_ok());
    }

    #[test]
    fn direct_sum_of_idempotents_is_block_diagonal() {
        let f = Field::Rational;
        let mut a = PoissonBialgebraData::zero("U", 1, f);
        a.algebra.product = LinMap::from_fn(names(&["U", "U"]), names(&["U"]), vec![1, 1], vec![1], f, |_, _| f.one());
        let b = PoissonBialgebraData::zero("W", 1, f);
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.space().dim, 2);
        let nonzero: Vec<_> = crate::linmap::tuples(&[2, 2, 2])
            .filter(|i| !s.algebra.product.get(&i[..1], &i[1..]).is_zero())
            .collect();
        assert_eq!(nonzero, vec![vec![0, 0, 0]]);
        assert!(matches!(direct_sum(&a, &a), Err(ForgeError::NameClash(_))));
    }

    #[test]
    fn kind_parses_case_insensitively() {
        assert_eq!("ii".parse::<Kind>().unwrap(), Kind::II);
        assert_eq!("C1".parse::<Kind>().unwrap(), Kind::C1);
        assert!("b3".parse::<Kind>().is_err());
    }
}
