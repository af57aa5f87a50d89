//! Named fixtures: small structures with known verdicts.

use crate::env::StructureEnv;
use crate::equivalence::{morphism_env, pushforward};
use crate::error::{ForgeError, Result};
use crate::linmap::{LinMap, SpaceDecl};
use crate::scalar::Field;
use crate::structures::{
    direct_sum, zero_datum, ExtendingDatum, Kind, MorphismPair, PoissonAlgebraData, PoissonBialgebraData,
};

/// A catalog entry and what checking it should report.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// Kind of extending datum the env holds, if it is one.
    pub kind: Option<Kind>,
    /// Sets every violation list of which is empty.
    pub passes: &'static [&'static str],
    /// `(set, condition, first failing tuple)`.
    pub fails: &'static [(&'static str, &'static str, &'static [usize])],
}

const BIALGEBRA: &[&str] = &["PA", "PC", "PB", "LIEBI", "ASI"];

/// Every fixture. `zero_n` stands for `zero_0`, `zero_1`, and so on.
pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "zero_n",
        description: "all-zero bialgebra on an n-dimensional space",
        kind: None,
        passes: BIALGEBRA,
        fails: &[],
    },
    Fixture {
        name: "idem1",
        description: "one-dimensional algebra with u·u = u",
        kind: None,
        passes: BIALGEBRA,
        fails: &[],
    },
    Fixture {
        name: "dual_numbers",
        description: "u·u = u, u·e = e·u = e, e·e = 0",
        kind: None,
        passes: BIALGEBRA,
        fails: &[],
    },
    Fixture {
        name: "nonab_lie2",
        description: "[e1, e2] = e2 with zero product",
        kind: None,
        passes: BIALGEBRA,
        fails: &[],
    },
    Fixture {
        name: "direct_sum_demo",
        description: "dual_numbers ⊕ nonab_lie2",
        kind: None,
        passes: BIALGEBRA,
        fails: &[],
    },
    Fixture {
        name: "central_ext_a1",
        description: "a1 datum over one-dimensional A and V with only ν(a, a) = x",
        kind: Some(Kind::A1),
        passes: &["EXT_A1"],
        fails: &[],
    },
    Fixture {
        name: "planted_equiv_left_f2",
        description: "c2 datum over F2: Δ(x0) = x0⊗x0 on a two-dimensional V",
        kind: Some(Kind::C2),
        passes: &["EXT_C2"],
        fails: &[],
    },
    Fixture {
        name: "planted_equiv_right_f2",
        description: "planted_equiv_left_f2 transported along s = swap",
        kind: Some(Kind::C2),
        passes: &["EXT_C2"],
        fails: &[],
    },
    Fixture {
        name: "planted_equiv_pair_f2",
        description: "both planted data (the second primed) with the planted r and s",
        kind: None,
        passes: &["MOR_C2"],
        fails: &[],
    },
    Fixture {
        name: "datum_a1_demo",
        description: "a1 datum with every map nonzero (shape only)",
        kind: Some(Kind::A1),
        passes: &[],
        fails: &[],
    },
    Fixture {
        name: "datum_a2_demo",
        description: "a2 datum with every map nonzero (shape only)",
        kind: Some(Kind::A2),
        passes: &[],
        fails: &[],
    },
    Fixture {
        name: "datum_c1_demo",
        description: "c1 datum with every map nonzero (shape only)",
        kind: Some(Kind::C1),
        passes: &[],
        fails: &[],
    },
    Fixture {
        name: "datum_c2_demo",
        description: "c2 datum with every map nonzero (shape only)",
        kind: Some(Kind::C2),
        passes: &[],
        fails: &[],
    },
    Fixture {
        name: "datum_I_demo",
        description: "type I datum with every map nonzero (shape only)",
        kind: Some(Kind::I),
        passes: &[],
        fails: &[],
    },
    Fixture {
        name: "datum_II_demo",
        description: "type II datum with every map nonzero (shape only)",
        kind: Some(Kind::II),
        passes: &[],
        fails: &[],
    },
    Fixture {
        name: "bad_bracket",
        description: "one-dimensional bracket with [e, e] = e",
        kind: None,
        passes: &["PC"],
        fails: &[("PA", "PA1", &[0, 0])],
    },
    Fixture {
        name: "bad_cobracket",
        description: "one-dimensional cobracket with δ(e) = e⊗e",
        kind: None,
        passes: &["PA"],
        fails: &[("PC", "PC1", &[0])],
    },
    Fixture {
        name: "bad_assoc",
        description: "e0·e0 = e1, e1·e0 = e0, not associative",
        kind: None,
        passes: &["PC"],
        fails: &[("PA", "PA3", &[0, 0, 0])],
    },
];

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// A binary map `X ⊗ X → X` from its nonzero entries `(out, in1, in2, c)`.
fn binary(space: &str, dim: usize, field: Field, nz: &[(usize, usize, usize, i64)]) -> LinMap {
    LinMap::from_fn(names(&[space, space]), names(&[space]), vec![dim, dim], vec![dim], field, |t, s| {
        nz.iter()
            .find(|e| (e.0, e.1, e.2) == (t[0], s[0], s[1]))
            .map_or(field.zero(), |e| field.from_i64(e.3))
    })
}

/// A map `X → X ⊗ X` from its nonzero entries `(out1, out2, in, c)`.
fn cobinary(space: &str, dim: usize, field: Field, nz: &[(usize, usize, usize, i64)]) -> LinMap {
    LinMap::from_fn(names(&[space]), names(&[space, space]), vec![dim], vec![dim, dim], field, |t, s| {
        nz.iter()
            .find(|e| (e.0, e.1, e.2) == (t[0], t[1], s[0]))
            .map_or(field.zero(), |e| field.from_i64(e.3))
    })
}

fn algebra(dim: usize, labels: Option<&[&str]>, bracket: &[(usize, usize, usize, i64)], product: &[(usize, usize, usize, i64)]) -> PoissonBialgebraData {
    let f = Field::Rational;
    let mut b = PoissonBialgebraData::zero("A", dim, f);
    let space = SpaceDecl {
        name: "A".into(),
        dim,
        labels: labels.map(names),
    };
    b.algebra = PoissonAlgebraData {
        space: space.clone(),
        bracket: binary("A", dim, f, bracket),
        product: binary("A", dim, f, product),
    };
    b.coalgebra.space = space;
    b
}

pub fn idem1() -> PoissonBialgebraData {
    algebra(1, Some(&["u"]), &[], &[(0, 0, 0, 1)])
}

pub fn dual_numbers() -> PoissonBialgebraData {
    algebra(2, Some(&["u", "e"]), &[], &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)])
}

pub fn nonab_lie2() -> PoissonBialgebraData {
    algebra(2, Some(&["e1", "e2"]), &[(1, 0, 1, 1), (1, 1, 0, -1)], &[])
}

pub fn central_ext_a1() -> ExtendingDatum {
    let f = Field::Rational;
    let mut d = zero_datum(Kind::A1, 1, 1, f);
    let nu = LinMap::from_fn(names(&["A", "A"]), names(&["V"]), vec![1, 1], vec![1], f, |_, _| f.one());
    d.set_map("nu_AA_V", nu).expect("ν fits the a1 roster");
    d
}

/// The planted pair: a c2 datum, its transport along `s = swap`, and the pair.
pub fn planted_pair_f2() -> (ExtendingDatum, ExtendingDatum, MorphismPair) {
    let f = Field::Prime(2);
    let mut d = zero_datum(Kind::C2, 0, 2, f);
    d.set_map("coproduct_V", cobinary("V", 2, f, &[(0, 0, 0, 1)]))
        .expect("Δ fits the c2 datum");
    let swap = LinMap::from_fn(names(&["V"]), names(&["V"]), vec![2], vec![2], f, |t, s| {
        if t[0] != s[0] {
            f.one()
        } else {
            f.zero()
        }
    });
    let w = MorphismPair::new(LinMap::zeros(names(&["V"]), names(&["A"]), vec![2], vec![0], f), swap)
        .expect("pair shapes agree");
    let d2 = pushforward(&d, &w)
        .expect("transport of a valid datum")
        .expect("swap is invertible");
    (d, d2, w)
}

/// A datum of `kind` over `Q` at dims 1 and 1 where the `k`-th map has
/// the single entry `k + 1`. Shape-only: it need not satisfy any set.
pub fn demo_datum(kind: Kind) -> ExtendingDatum {
    let f = Field::Rational;
    let mut d = zero_datum(kind, 1, 1, f);
    for (k, role) in kind.all_maps().iter().enumerate() {
        let z = d.map(role).expect("roster map").clone();
        let c = f.from_i64(k as i64 + 1);
        let m = LinMap::from_fn(
            z.source().to_vec(),
            z.target().to_vec(),
            z.source_dims().to_vec(),
            z.target_dims().to_vec(),
            f,
            |_, _| c.clone(),
        );
        d.set_map(role, m).expect("same shape");
    }
    d
}

fn one_dim(field: Field) -> PoissonBialgebraData {
    PoissonBialgebraData::zero("A", 1, field)
}

/// The env of a fixture.
pub fn catalog(name: &str) -> Result<StructureEnv> {
    if let Some(n) = name.strip_prefix("zero_") {
        let n: usize = n.parse().map_err(|_| ForgeError::UnknownFixture(name.into()))?;
        return PoissonBialgebraData::zero("A", n, Field::Rational).to_env();
    }
    let demo = |k: Kind| Ok(demo_datum(k).env().clone());
    match name {
        "idem1" => idem1().to_env(),
        "dual_numbers" => dual_numbers().to_env(),
        "nonab_lie2" => nonab_lie2().to_env(),
        "direct_sum_demo" => {
            let mut a = dual_numbers();
            let mut b = nonab_lie2();
            rename(&mut a, "L");
            rename(&mut b, "R");
            let mut s = direct_sum(&a, &b)?;
            rename(&mut s, "A");
            s.to_env()
        }
        "central_ext_a1" => Ok(central_ext_a1().env().clone()),
        "planted_equiv_left_f2" => Ok(planted_pair_f2().0.env().clone()),
        "planted_equiv_right_f2" => Ok(planted_pair_f2().1.env().clone()),
        "planted_equiv_pair_f2" => {
            let (d, d2, w) = planted_pair_f2();
            morphism_env(&w, &d, &d2)
        }
        "datum_a1_demo" => demo(Kind::A1),
        "datum_a2_demo" => demo(Kind::A2),
        "datum_c1_demo" => demo(Kind::C1),
        "datum_c2_demo" => demo(Kind::C2),
        "datum_I_demo" => demo(Kind::I),
        "datum_II_demo" => demo(Kind::II),
        "bad_bracket" => {
            let mut b = one_dim(Field::Rational);
            b.algebra.bracket = binary("A", 1, Field::Rational, &[(0, 0, 0, 1)]);
            b.to_env()
        }
        "bad_cobracket" => {
            let mut b = one_dim(Field::Rational);
            b.coalgebra.cobracket = cobinary("A", 1, Field::Rational, &[(0, 0, 0, 1)]);
            b.to_env()
        }
        "bad_assoc" => algebra(2, None, &[], &[(1, 0, 0, 1), (0, 1, 0, 1)]).to_env(),
        _ => Err(ForgeError::UnknownFixture(name.into())),
    }
}

/// The fixture entry describing `name`.
pub fn fixture(name: &str) -> Result<&'static Fixture> {
    let key = if name.strip_prefix("zero_").is_some_and(|n| n.parse::<usize>().is_ok()) {
        "zero_n"
    } else {
        name
    };
    FIXTURES
        .iter()
        .find(|f| f.name == key)
        .ok_or_else(|| ForgeError::UnknownFixture(name.into()))
}

/// Concrete fixture names, with `zero_n` instantiated at `zero_3`.
pub fn names_concrete() -> Vec<String> {
    FIXTURES
        .iter()
        .map(|f| if f.name == "zero_n" { "zero_3".to_string() } else { f.name.to_string() })
        .collect()
}

/// Every fixture that is an extending datum.
pub fn catalog_datum(name: &str) -> Result<ExtendingDatum> {
    let kind = fixture(name)?
        .kind
        .ok_or_else(|| ForgeError::KindMismatch(format!("{name} is not an extending datum")))?;
    ExtendingDatum::new(kind, &catalog(name)?)
}

fn rename(b: &mut PoissonBialgebraData, to: &str) {
    let re = |m: &LinMap| {
        m.renamed(vec![to.to_string(); m.source().len()], vec![to.to_string(); m.target().len()])
            .expect("same arity")
    };
    b.algebra.space.name = to.to_string();
    b.coalgebra.space.name = to.to_string();
    b.algebra.bracket = re(&b.algebra.bracket);
    b.algebra.product = re(&b.algebra.product);
    b.coalgebra.cobracket = re(&b.coalgebra.cobracket);
    b.coalgebra.coproduct = re(&b.coalgebra.coproduct);
}
