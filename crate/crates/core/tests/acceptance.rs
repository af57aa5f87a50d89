//! One line per acceptance criterion, then a single assertion over all of
//! them. Each criterion runs isolated so a panic in one still lets the
//! others report.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use poisson_forge::axioms::{bialgebra_set_ids, set_holds};
use poisson_forge::catalog::{self, FIXTURES};
use poisson_forge::constructions::*;
use poisson_forge::equivalence::*;
use poisson_forge::io::{emit_env, parse_env};
use poisson_forge::registry::{compile_set, manifest, owned_labels, Check, ConditionSet, RegistryOptions, SETS};
use poisson_forge::structures::*;
use poisson_forge::{Field, LinMap, Scalar, StructureEnv};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Verdict = (bool, String);

fn amended() -> RegistryOptions {
    RegistryOptions {
        amended: true,
        ..RegistryOptions::default()
    }
}

fn compiled(ids: &[&str], opts: &RegistryOptions) -> Vec<ConditionSet> {
    ids.iter().map(|id| compile_set(id, opts).unwrap()).collect()
}

fn all_hold(sets: &[ConditionSet], env: &StructureEnv) -> bool {
    sets.iter().all(|cs| set_holds(cs, env).unwrap())
}

/// The bialgebra sets restated over the built space `E`.
fn built_sets(opts: &RegistryOptions) -> Vec<ConditionSet> {
    bialgebra_set_ids(opts)
        .into_iter()
        .map(|id| {
            let cs = compile_set(id, opts).unwrap();
            ConditionSet {
                checks: cs
                    .checks
                    .iter()
                    .map(|c| match c {
                        Check::Law(d) => Check::Law(d.with_space_renamed('A', 'E')),
                        other => other.clone(),
                    })
                    .collect(),
                ..cs
            }
        })
        .collect()
}

fn failing_labels(sets: &[ConditionSet], env: &StructureEnv) -> Vec<String> {
    let mut out = Vec::new();
    for cs in sets {
        for v in poisson_forge::axioms::check_compiled(cs, env, poisson_forge::axioms::Depth::FirstPerIdentity)
            .unwrap()
            .iter()
        {
            out.push(v.condition.clone());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Spaces `A` and `H` with the structure of `a` and `h` inserted.
fn pair_env(a: &PoissonBialgebraData, h: &PoissonBialgebraData) -> StructureEnv {
    let mut env = StructureEnv::new(a.field())
        .with_space("A", a.space().dim)
        .with_space("H", h.space().dim);
    a.insert_into(&mut env, "A").unwrap();
    h.insert_into(&mut env, "H").unwrap();
    env
}

/// Every bialgebra on a one-dimensional space over `F_p` passing `keep`,
/// placed on space `letter`.
fn one_dim_structures(p: u32, letter: &str, keep: &[ConditionSet]) -> Vec<PoissonBialgebraData> {
    let field = Field::prime(p).unwrap();
    let zero = PoissonBialgebraData::zero("A", 1, field);
    all_vectors(p, 4)
        .map(|v| {
            let s = scalars(field, &v);
            let mut b = zero.clone();
            b.algebra.bracket = with_entries(&zero.algebra.bracket, &s[0..1]);
            b.algebra.product = with_entries(&zero.algebra.product, &s[1..2]);
            b.coalgebra.cobracket = with_entries(&zero.coalgebra.cobracket, &s[2..3]);
            b.coalgebra.coproduct = with_entries(&zero.coalgebra.coproduct, &s[3..4]);
            b
        })
        .filter(|b| all_hold(keep, &b.to_env().unwrap()))
        .map(|b| rename_bialgebra(&b, letter))
        .collect()
}

/// Fills the listed roles of `env` from `values`, one role after another.
fn fill_roles(env: &mut StructureEnv, roles: &[&str], values: &[Scalar]) {
    let mut at = 0;
    for r in roles {
        let like = env.zero_role(r).unwrap();
        let n = like.entries().len();
        env.insert_map(r, with_entries(&like, &values[at..at + n]));
        at += n;
    }
    assert_eq!(at, values.len());
}

fn rows_of(m: &LinMap) -> Vec<Vec<Scalar>> {
    let (t, s) = (m.target_dims()[0], m.source_dims()[0]);
    (0..t).map(|i| (0..s).map(|j| m.get(&[i], &[j]).clone()).collect()).collect()
}

// ---------------------------------------------------------------------------

fn registry_completeness() -> Verdict {
    let start = Instant::now();
    let m = manifest();
    let expected: usize = m.iter().map(|(_, l)| l.len()).sum();
    let mut actual = 0;
    let mut mismatched = Vec::new();
    for (entry, (id, labels)) in SETS.iter().zip(&m) {
        let owned = owned_labels(entry);
        actual += owned.len();
        if entry.id != *id || owned != *labels {
            mismatched.push(entry.id);
        }
    }
    for opts in [RegistryOptions::default(), amended(), RegistryOptions::stated_only()] {
        for s in SETS {
            compile_set(s.id, &opts).unwrap();
        }
    }
    let t = start.elapsed();
    (
        mismatched.is_empty() && m.len() == SETS.len() && actual == expected && t < Duration::from_secs(1),
        format!(
            "{} sets, {actual} descriptors against {expected} in the manifest, mismatched {mismatched:?}, self-test {:.3} s",
            SETS.len(),
            t.as_secs_f64()
        ),
    )
}

fn oracle_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = 0;
    let mut violations_seen = 0;
    for _ in 0..200 {
        let dim = rng.gen_range(0..=3);
        let density = rng.gen_range(0.05..0.8);
        let env = random_env(&mut rng, dim, Field::Rational, density);
        let k = Consts::from_env(&env, "A");
        for (set, naive) in [("PA", naive_pa(&k)), ("PC", naive_pc(&k)), ("PB", naive_pb(&k))] {
            let engine = engine_report(set, &env);
            violations_seen += engine.len();
            if engine != naive {
                failures += 1;
            }
        }
    }
    (
        failures == 0,
        format!("200 random rational envs, {failures} disagreements, {violations_seen} failing tuples compared"),
    )
}

#[derive(Default)]
struct IffTally {
    candidates: usize,
    conditions_hold: usize,
    built_passes: usize,
    only_conditions: usize,
    only_built: usize,
    stated_only_discrepancies: usize,
    /// Printed and amended proof conditions against LB01/LB02 on `E`.
    proof_discrepancies: Option<(usize, usize)>,
    witness: Option<String>,
    missed: BTreeMap<String, usize>,
}

impl IffTally {
    fn merge(mut self, o: IffTally) -> IffTally {
        self.candidates += o.candidates;
        self.conditions_hold += o.conditions_hold;
        self.built_passes += o.built_passes;
        self.only_conditions += o.only_conditions;
        self.only_built += o.only_built;
        self.stated_only_discrepancies += o.stated_only_discrepancies;
        self.proof_discrepancies = match (self.proof_discrepancies, o.proof_discrepancies) {
            (Some(x), Some(y)) => Some((x.0 + y.0, x.1 + y.1)),
            (x, y) => x.or(y),
        };
        self.witness = self.witness.or(o.witness);
        for (k, v) in o.missed {
            *self.missed.entry(k).or_insert(0) += v;
        }
        self
    }

    /// `proof`, when tracked, is whether the printed and the amended
    /// componentwise proof conditions hold, and whether `E` satisfies the
    /// two compatibilities they encode.
    fn record(
        &mut self,
        cond: bool,
        proof: Option<(bool, bool, bool)>,
        built: &[ConditionSet],
        stated: &[ConditionSet],
        b: &BuiltStructure,
        label: impl Fn() -> String,
    ) {
        let full = all_hold(built, &b.env);
        let weak = all_hold(stated, &b.env);
        if let Some((printed, amended, compatible)) = proof {
            let d = self.proof_discrepancies.get_or_insert((0, 0));
            d.0 += (printed != compatible) as usize;
            d.1 += (amended != compatible) as usize;
        }
        self.candidates += 1;
        self.conditions_hold += cond as usize;
        self.built_passes += full as usize;
        if cond != weak {
            self.stated_only_discrepancies += 1;
        }
        if cond && !full {
            self.only_conditions += 1;
            for l in failing_labels(built, &b.env) {
                *self.missed.entry(l).or_insert(0) += 1;
            }
            if self.witness.is_none() {
                self.witness = Some(label());
            }
        }
        if full && !cond {
            self.only_built += 1;
            if self.witness.is_none() {
                self.witness = Some(label());
            }
        }
    }

    fn summary(&self) -> String {
        format!(
            "{} candidates, conditions hold on {}, built passes on {}, conditions-only {}, built-only {}, \
             with LIEBI/ASI off {} discrepancies{}, laws missed {:?}, first witness {}",
            self.candidates,
            self.conditions_hold,
            self.built_passes,
            self.only_conditions,
            self.only_built,
            self.stated_only_discrepancies,
            self.proof_discrepancies
                .map(|(p, a)| format!(
                    ", proof conditions vs LB01/LB02 on E: {p} discrepancies as printed, {a} amended"
                ))
                .unwrap_or_default(),
            self.missed,
            self.witness.as_deref().unwrap_or("none")
        )
    }
}

fn describe(env: &StructureEnv) -> String {
    let nz: Vec<String> = env
        .maps
        .iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(k, m)| format!("{k}={:?}", m.entries()))
        .collect();
    nz.join(" ")
}

/// Rational bialgebras of dimension 2 used as fixed inputs for sampling.
fn dim2_pool() -> Vec<PoissonBialgebraData> {
    let mut pool = vec![
        PoissonBialgebraData::zero("A", 2, Field::Rational),
        catalog::dual_numbers(),
        catalog::nonab_lie2(),
    ];
    // Coproduct e0 ↦ e1 ⊗ e1 with zero multiplications.
    let mut co = PoissonBialgebraData::zero("A", 2, Field::Rational);
    co.coalgebra.coproduct = LinMap::from_fn(
        vec!["A".into()],
        vec!["A".into(), "A".into()],
        vec![2],
        vec![2, 2],
        Field::Rational,
        |t, s| Field::Rational.from_i64((s[0] == 0 && t == [1, 1]) as i64),
    );
    pool.push(co);
    pool
}

fn rename_bialgebra(b: &PoissonBialgebraData, to: &str) -> PoissonBialgebraData {
    let re = |m: &LinMap| m.renamed(vec![to.into(); m.source().len()], vec![to.into(); m.target().len()]).unwrap();
    let mut out = PoissonBialgebraData::zero(to, b.space().dim, b.field());
    out.algebra.bracket = re(&b.algebra.bracket);
    out.algebra.product = re(&b.algebra.product);
    out.coalgebra.cobracket = re(&b.coalgebra.cobracket);
    out.coalgebra.coproduct = re(&b.coalgebra.coproduct);
    out
}

fn biproduct_iff() -> Verdict {
    let opts = RegistryOptions::default();
    let conds = compiled(&["HOPF_H", "BRAIDED_A", "MODALG", "COMODCOALG", "BIMOD", "BICOMOD"], &opts);
    let proof = compiled(&["BIPROD18"], &opts);
    let proof_amended = compiled(&["BIPROD18"], &amended());
    let compat: Vec<ConditionSet> = built_sets(&opts).into_iter().filter(|c| c.id == "PB").collect();
    let built = built_sets(&opts);
    let stated = built_sets(&RegistryOptions::stated_only());
    let bialg = compiled(&bialgebra_set_ids(&opts), &opts);
    let alg_coalg = compiled(&["PA", "PC"], &opts);

    // The hypotheses: H a bialgebra, A an algebra and a coalgebra.
    let hs = one_dim_structures(3, "H", &bialg);
    let as_ = one_dim_structures(3, "A", &alg_coalg);
    let mixed: Vec<&str> = ActionBundle::ROLES.iter().chain(CoactionBundle::ROLES).copied().collect();
    let field = Field::prime(3).unwrap();
    let mut jobs = Vec::new();
    for h in &hs {
        for a in &as_ {
            jobs.push((a, h));
        }
    }
    let exhaustive = jobs
        .par_iter()
        .map(|(a, h)| {
            let mut t = IffTally::default();
            for v in all_vectors(3, mixed.len()) {
                let mut env = pair_env(a, h);
                fill_roles(&mut env, &mixed, &scalars(field, &v));
                let cond = all_hold(&conds, &env);
                let b = build_biproduct(
                    h,
                    a,
                    &ActionBundle::from_env(&env).unwrap(),
                    &CoactionBundle::from_env(&env).unwrap(),
                )
                .unwrap();
                let p = (
                    all_hold(&proof, &env),
                    all_hold(&proof_amended, &env),
                    all_hold(&compat, &b.env),
                );
                t.record(cond, Some(p), &built, &stated, &b, || describe(&env));
            }
            t
        })
        .reduce(IffTally::default, IffTally::merge);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pool = dim2_pool();
    let mut sampled = IffTally::default();
    for _ in 0..120 {
        let a = rename_bialgebra(pool.choose(&mut rng).unwrap(), "A");
        let h = rename_bialgebra(pool.choose(&mut rng).unwrap(), "H");
        let mut env = pair_env(&a, &h);
        let density = [0.0, 0.1, 0.25][rng.gen_range(0..3)];
        for r in &mixed {
            let like = env.zero_role(r).unwrap();
            env.insert_map(r, random_like(&mut rng, &like, density));
        }
        let cond = all_hold(&conds, &env);
        let b = build_biproduct(
            &h,
            &a,
            &ActionBundle::from_env(&env).unwrap(),
            &CoactionBundle::from_env(&env).unwrap(),
        )
        .unwrap();
        let p = (
            all_hold(&proof, &env),
            all_hold(&proof_amended, &env),
            all_hold(&compat, &b.env),
        );
        sampled.record(cond, Some(p), &built, &stated, &b, || describe(&env));
    }
    let ok = exhaustive.only_conditions + exhaustive.only_built + sampled.only_conditions + sampled.only_built == 0;
    (
        ok,
        format!(
            "F3 dim 1 ({} H, {} A): {}; dim-2 rational samples: {}",
            hs.len(),
            as_.len(),
            exhaustive.summary(),
            sampled.summary()
        ),
    )
}

/// Antisymmetry, Jacobi and (co)associativity on `E`, which the cocycle
/// lists assume rather than state.
fn hypothesis_sets(opts: &RegistryOptions) -> Vec<ConditionSet> {
    const KEEP: &[&str] = &["PA1", "PA2", "PA3", "PC1", "PC2", "PC3"];
    built_sets(opts)
        .into_iter()
        .map(|cs| ConditionSet {
            checks: cs.checks.iter().filter(|c| KEEP.contains(&c.label())).cloned().collect(),
            ..cs
        })
        .filter(|cs| !cs.checks.is_empty())
        .collect()
}

/// Assignments of `n` slots over `F_p` with at most `support` nonzero.
fn sparse_vectors(p: u32, n: usize, support: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; n]];
    let mut frontier = vec![(vec![0u32; n], 0usize)];
    for _ in 0..support {
        let mut next = Vec::new();
        for (v, from) in &frontier {
            for i in *from..n {
                for x in 1..p {
                    let mut w = v.clone();
                    w[i] = x;
                    out.push(w.clone());
                    next.push((w, i + 1));
                }
            }
        }
        frontier = next;
    }
    out
}

fn bicrossproduct_iff() -> Verdict {
    let opts = RegistryOptions::default();
    let conds = compiled(&["CP", "CCP", "CDM", "CBB"], &opts);
    let built = built_sets(&opts);
    let stated = built_sets(&RegistryOptions::stated_only());
    let bialg = compiled(&bialgebra_set_ids(&opts), &opts);
    let hs = one_dim_structures(3, "H", &bialg);
    let as_ = one_dim_structures(3, "A", &bialg);
    let mixed: Vec<&str> = PairStructure::ROLES
        .iter()
        .chain(CocycleBundle::ROLES)
        .chain(CycleBundle::ROLES)
        .copied()
        .collect();
    let field = Field::prime(3).unwrap();
    const SUPPORT: usize = 2;
    let assignments = sparse_vectors(3, mixed.len(), SUPPORT);
    let mut jobs = Vec::new();
    for h in &hs {
        for a in &as_ {
            for v in &assignments {
                jobs.push((a, h, v));
            }
        }
    }
    let build = |env: &StructureEnv, a: &PoissonBialgebraData, h: &PoissonBialgebraData| {
        build_cocycle_bicrossproduct(
            a,
            h,
            &PairStructure::from_env(env).unwrap(),
            &CocycleBundle::from_env(env).unwrap(),
            &CycleBundle::from_env(env).unwrap(),
        )
        .unwrap()
    };
    let hyp = hypothesis_sets(&opts);
    let (exhaustive, under_hyp) = jobs
        .par_iter()
        .map(|(a, h, v)| {
            let (mut t, mut u) = (IffTally::default(), IffTally::default());
            let mut env = pair_env(a, h);
            fill_roles(&mut env, &mixed, &scalars(field, v));
            let cond = all_hold(&conds, &env);
            let b = build(&env, a, h);
            t.record(cond, None, &built, &stated, &b, || describe(&env));
            if all_hold(&hyp, &b.env) {
                u.record(cond, None, &built, &stated, &b, || describe(&env));
            }
            (t, u)
        })
        .reduce(
            || (IffTally::default(), IffTally::default()),
            |x, y| (x.0.merge(y.0), x.1.merge(y.1)),
        );

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pool = dim2_pool();
    let mut sampled = IffTally::default();
    for _ in 0..100 {
        let a = rename_bialgebra(pool.choose(&mut rng).unwrap(), "A");
        let h = rename_bialgebra(pool.choose(&mut rng).unwrap(), "H");
        let mut env = pair_env(&a, &h);
        let density = [0.0, 0.05, 0.15][rng.gen_range(0..3)];
        for r in &mixed {
            let like = env.zero_role(r).unwrap();
            env.insert_map(r, random_like(&mut rng, &like, density));
        }
        let cond = all_hold(&conds, &env);
        let b = build(&env, &a, &h);
        sampled.record(cond, None, &built, &stated, &b, || describe(&env));
    }
    let ok = exhaustive.only_conditions + exhaustive.only_built + sampled.only_conditions + sampled.only_built == 0;
    (
        ok,
        format!(
            "F3 dim 1 ({} H, {} A, mixed support <= {SUPPORT}): {}; restricted to E antisymmetric, Jacobi and (co)associative: {}; dim-2 rational samples: {}",
            hs.len(),
            as_.len(),
            exhaustive.summary(),
            under_hyp.summary(),
            sampled.summary()
        ),
    )
}

/// The datum's env with `V` renamed to `H`, as a pair-level env.
fn as_pair_env(d: &ExtendingDatum) -> StructureEnv {
    let mut env = StructureEnv::new(d.field())
        .with_space("A", d.dim_a())
        .with_space("H", d.dim_v());
    for (role, m) in &d.env().maps {
        let (head, tail) = role.split_once('_').unwrap();
        let new = format!("{head}_{}", tail.replace('V', "H"));
        let src: Vec<String> = m.source().iter().map(|s| s.replace('V', "H")).collect();
        let tgt: Vec<String> = m.target().iter().map(|s| s.replace('V', "H")).collect();
        env.insert_map(&new, m.renamed(src, tgt).unwrap());
    }
    env
}

fn specialization_lattice() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    // Each unified kind against its documented pair-level slice.
    for f in FIXTURES.iter().filter(|f| f.kind.is_some()) {
        let d = catalog::catalog_datum(f.name).unwrap();
        let u = build_unified(&d).unwrap();
        let env = as_pair_env(&d);
        let slice = match (d.kind().has_algebra(), d.kind().has_coalgebra()) {
            (true, false) => build_cocycle_cross_product(
                &PoissonAlgebraData::from_env(&env, "A").unwrap(),
                &PoissonAlgebraData::from_env(&env, "H").unwrap(),
                &PairStructure::from_env(&env).unwrap(),
                &CocycleBundle::from_env(&env).unwrap(),
            ),
            (false, true) => build_cycle_cross_coproduct(
                &PoissonCoalgebraData::from_env(&env, "A").unwrap(),
                &PoissonCoalgebraData::from_env(&env, "H").unwrap(),
                &PairStructure::from_env(&env).unwrap(),
                &CycleBundle::from_env(&env).unwrap(),
            ),
            _ => build_cocycle_bicrossproduct(
                &PoissonBialgebraData::from_env(&env, "A").unwrap(),
                &PoissonBialgebraData::from_env(&env, "H").unwrap(),
                &PairStructure::from_env(&env).unwrap(),
                &CocycleBundle::from_env(&env).unwrap(),
                &CycleBundle::from_env(&env).unwrap(),
            ),
        }
        .unwrap();
        checked += 1;
        if !u.same_structure(&slice) {
            bad.push(f.name.to_string());
        }
    }
    // Zero cocycles and cycles against the double cross biproduct, and
    // zero module data against the direct sum.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let bases: Vec<PoissonBialgebraData> = ["zero_2", "idem1", "dual_numbers", "nonab_lie2", "direct_sum_demo"]
        .iter()
        .map(|n| PoissonBialgebraData::from_env(&catalog::catalog(n).unwrap(), "A").unwrap())
        .collect();
    for a in &bases {
        for h in &bases {
            let (a, h) = (rename_bialgebra(a, "A"), rename_bialgebra(h, "H"));
            let env = pair_env(&a, &h);
            let mut pair = PairStructure::zero(&env).unwrap();
            let mut penv = env.clone();
            for r in PairStructure::ROLES {
                penv.insert_map(r, random_like(&mut rng, &env.zero_role(r).unwrap(), 0.3));
            }
            pair = PairStructure::from_env(&penv).unwrap_or(pair);
            let zc = CocycleBundle::zero(&env).unwrap();
            let zy = CycleBundle::zero(&env).unwrap();
            let x = build_cocycle_bicrossproduct(&a, &h, &pair, &zc, &zy).unwrap();
            let y = build_double_cross_biproduct(&a, &h, &pair).unwrap();
            checked += 1;
            if !x.same_structure(&y) {
                bad.push(format!("double cross {}x{}", a.space().dim, h.space().dim));
            }
            let bp = build_biproduct(&h, &a, &ActionBundle::zero(&env).unwrap(), &CoactionBundle::zero(&env).unwrap())
                .unwrap()
                .bialgebra();
            let mut ds = direct_sum(&a, &h).unwrap();
            ds = rename_bialgebra(&ds, "E");
            checked += 1;
            let same = bp.algebra.bracket == ds.algebra.bracket
                && bp.algebra.product == ds.algebra.product
                && bp.coalgebra.cobracket == ds.coalgebra.cobracket
                && bp.coalgebra.coproduct == ds.coalgebra.coproduct;
            if !same {
                bad.push(format!("direct sum {}x{}", a.space().dim, h.space().dim));
            }
        }
    }
    let t = start.elapsed();
    (
        bad.is_empty() && t < Duration::from_secs(10),
        format!("{checked} comparisons, mismatches {bad:?}, {:.2} s", t.as_secs_f64()),
    )
}

fn round_trip() -> Verdict {
    let start = Instant::now();
    let mut data: Vec<(String, ExtendingDatum)> = FIXTURES
        .iter()
        .filter(|f| f.kind.is_some())
        .map(|f| (f.name.to_string(), catalog::catalog_datum(f.name).unwrap()))
        .collect();
    let f2 = Field::prime(2).unwrap();
    for (kind, da, dv) in [(Kind::A1, 1, 1), (Kind::C2, 0, 2)] {
        let n = free_entry_count(kind, da, dv, f2);
        for v in all_vectors(2, n) {
            let d = datum_from_values(kind, da, dv, f2, None, &scalars(f2, &v));
            if naive_extension_valid(&d) {
                data.push((format!("{kind} {v:?}"), d));
            }
        }
    }
    let enumerated = start.elapsed();
    let start = Instant::now();
    let mut bad = Vec::new();
    for (name, d) in &data {
        let b = build_unified(d).unwrap();
        match split_extension(&ExtensionPresentation::from_built(&b), d.kind()) {
            Ok(back) if back == *d => {}
            Ok(_) => bad.push(format!("{name}: differs")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    let t = start.elapsed();
    (
        bad.is_empty() && t < Duration::from_secs(10),
        format!(
            "{} data (catalog and every valid F2 a1/c2 datum, enumerated in {:.1} s), failures {bad:?}, round trips {:.2} s",
            data.len(),
            enumerated.as_secs_f64(),
            t.as_secs_f64()
        ),
    )
}

fn morphism_bijection() -> Verdict {
    let start = Instant::now();
    let f2 = Field::prime(2).unwrap();
    let opts = RegistryOptions::default();
    let mut total = (0usize, 0usize);
    let mut bad = Vec::new();
    for kind in [Kind::A1, Kind::C2] {
        // Every base on the one-dimensional A, then every free assignment.
        let base_roles: Vec<String> = kind
            .structure_maps()
            .into_iter()
            .filter(|r| r.ends_with("_A"))
            .collect();
        let mut valid = Vec::new();
        for bv in all_vectors(2, base_roles.len()) {
            let mut base = StructureEnv::new(f2).with_space("A", 1);
            let refs: Vec<&str> = base_roles.iter().map(String::as_str).collect();
            fill_roles(&mut base, &refs, &scalars(f2, &bv));
            let n = free_entry_count(kind, 1, 1, f2);
            for v in all_vectors(2, n) {
                let d = datum_from_values(kind, 1, 1, f2, Some(&base), &scalars(f2, &v));
                if naive_extension_valid(&d) {
                    valid.push((bv.clone(), d));
                }
            }
        }
        let pairs: Vec<(&ExtendingDatum, &ExtendingDatum)> = valid
            .iter()
            .flat_map(|(b1, d1)| valid.iter().filter(move |(b2, _)| b1 == b2).map(move |(_, d2)| (d1, d2)))
            .collect();
        let results: Vec<(usize, Option<String>)> = pairs
            .par_iter()
            .map(|(d, d2)| {
                let mut agree = 0;
                for rv in all_vectors(2, 1) {
                    for sv in all_vectors(2, 1) {
                        let r = with_entries(&LinMap::zeros(vec!["V".into()], vec!["A".into()], vec![1], vec![1], f2), &scalars(f2, &rv));
                        let s = with_entries(&LinMap::zeros(vec!["V".into()], vec!["V".into()], vec![1], vec![1], f2), &scalars(f2, &sv));
                        let w = MorphismPair::new(r, s).unwrap();
                        let stated = check_morphism_pair(kind, &w, d, d2, &opts).unwrap().is_empty();
                        let naive = naive_pair_is_morphism(d, d2, &rows_of(&w.r), &rows_of(&w.s_map));
                        let library = pair_homomorphism_defect(&w, d, d2).unwrap().is_none();
                        if stated == naive && naive == library {
                            agree += 1;
                        } else {
                            return (agree, Some(format!("{kind} r={rv:?} s={sv:?} {} -> {}", describe(d.env()), describe(d2.env()))));
                        }
                    }
                }
                (agree, None)
            })
            .collect();
        for (a, b) in results {
            total.0 += a;
            total.1 += 1;
            if let Some(b) = b {
                bad.push(b);
            }
        }
    }
    let t = start.elapsed();
    (
        bad.is_empty() && t < Duration::from_secs(120),
        format!(
            "{} (r, s) checks over {} ordered pairs of valid a1 and c2 data, discrepancies {}{}, {:.1} s",
            total.0,
            total.1,
            bad.len(),
            bad.first().map(|b| format!(" (first: {b})")).unwrap_or_default(),
            t.as_secs_f64()
        ),
    )
}

fn random_valid_datum(rng: &mut ChaCha8Rng, kind: Kind, p: u32, da: usize, dv: usize) -> ExtendingDatum {
    let field = Field::prime(p).unwrap();
    let ext = compile_set(kind.condition_set(), &amended()).unwrap();
    let n = free_entry_count(kind, da, dv, field);
    for _ in 0..20_000 {
        let v: Vec<Scalar> = (0..n).map(|_| random_scalar(rng, field, 0.3)).collect();
        let d = datum_from_values(kind, da, dv, field, None, &v);
        if d.env().maps.values().all(|m| m.is_zero()) {
            continue;
        }
        if set_holds(&ext, &d.full_env()).unwrap() && naive_extension_valid(&d) {
            return d;
        }
    }
    panic!("no valid {kind} datum found");
}

fn plant_and_recover() -> Verdict {
    let start = Instant::now();
    let opts = amended();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let plan: &[(Kind, u32, usize, usize, usize)] = &[
        (Kind::A1, 3, 1, 1, 3),
        (Kind::A1, 2, 1, 2, 2),
        (Kind::A2, 2, 1, 1, 3),
        (Kind::C1, 2, 1, 1, 3),
        (Kind::C2, 2, 0, 2, 3),
        (Kind::C2, 3, 1, 1, 2),
        (Kind::I, 2, 1, 1, 2),
        (Kind::II, 2, 1, 1, 2),
    ];
    let mut planted = 0;
    let mut recovered = 0;
    let mut notes = Vec::new();
    for &(kind, p, da, dv, count) in plan {
        let field = Field::prime(p).unwrap();
        let group = invertible_pairs(field, da, dv).unwrap();
        let mut done = 0;
        let mut attempts = 0;
        while done < count && attempts < 200 {
            attempts += 1;
            let d = random_valid_datum(&mut rng, kind, p, da, dv);
            let w = group.choose(&mut rng).unwrap().clone();
            let Some(d2) = pushforward(&d, &w).unwrap() else { continue };
            done += 1;
            planted += 1;
            match decide_equivalence(kind, &d, &d2, DEFAULT_BUDGET, &opts).unwrap() {
                Decision::Equivalent(found) => {
                    let naive = naive_pair_is_morphism(&d, &d2, &rows_of(&found.pair.r), &rows_of(&found.pair.s_map));
                    // found followed by the planted inverse stabilizes d.
                    let back = found.pair.then(&w.inverse().unwrap());
                    let stabilizes = naive_pair_is_morphism(&d, &d, &rows_of(&back.r), &rows_of(&back.s_map));
                    if found.verified && naive && stabilizes {
                        recovered += 1;
                    } else {
                        notes.push(format!("{kind}: witness not confirmed"));
                    }
                }
                Decision::Exhausted { .. } => notes.push(format!("{kind} over F{p}: exhausted")),
            }
        }
        if done < count {
            notes.push(format!("{kind} over F{p}: only {done} plantings"));
        }
    }
    let f2 = Field::prime(2).unwrap();
    let zero = zero_datum(Kind::A1, 1, 1, f2);
    let mut central = zero.clone();
    let nu = central.map("nu_AA_V").unwrap().clone();
    central.set_map("nu_AA_V", with_entries(&nu, &[f2.one()])).unwrap();
    let separated = matches!(
        decide_equivalence(Kind::A1, &zero, &central, DEFAULT_BUDGET, &opts).unwrap(),
        Decision::Exhausted { .. }
    );
    let t = start.elapsed();
    (
        planted >= 20 && recovered == planted && separated && t < Duration::from_secs(300),
        format!(
            "recovered {recovered}/{planted} planted pushforwards, zero vs central extension exhausted: {separated}, notes {notes:?}, {:.1} s",
            t.as_secs_f64()
        ),
    )
}

/// Counts produced once by `naive_classification` and frozen here.
const FROZEN_A1: (usize, &[usize]) = (7, &[1, 1, 1, 1, 1, 1, 1]);
const FROZEN_C2: (usize, &[usize]) = (55, &[1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 6, 6, 6]);

fn classification_regression() -> Verdict {
    let start = Instant::now();
    let f2 = Field::prime(2).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (kind, da, dv, frozen) in [(Kind::A1, 1, 1, FROZEN_A1), (Kind::C2, 0, 2, FROZEN_C2)] {
        let oracle = naive_classification(kind, da, dv, 2);
        let c = classify_small(kind, da, dv, f2, None, DEFAULT_BUDGET, &amended()).unwrap();
        let mut sizes: Vec<usize> = c.classes.iter().map(|x| x.size).collect();
        sizes.sort();
        let stated = classify_small(kind, da, dv, f2, None, DEFAULT_BUDGET, &RegistryOptions::default()).unwrap();
        let this = oracle.0 == frozen.0
            && oracle.1 == frozen.1
            && c.valid as usize == frozen.0
            && sizes == frozen.1
            && c.anomalies.is_empty();
        ok &= this;
        parts.push(format!(
            "{kind}: {} valid in {} classes (frozen {} in {}), anomalies {}, stated lists admit {} in {} classes",
            c.valid,
            c.classes.len(),
            frozen.0,
            frozen.1.len(),
            c.anomalies.len(),
            stated.valid,
            stated.classes.len()
        ));
    }
    let t = start.elapsed();
    (ok && t < Duration::from_secs(300), format!("{}; {:.1} s", parts.join("; "), t.as_secs_f64()))
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut stdin: &[u8] = &[];
    let mut full = vec!["poisson-forge"];
    full.extend_from_slice(args);
    let code = poisson_forge::cli::run(full, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned() + &String::from_utf8_lossy(&err))
}

fn file_format_and_cli() -> Verdict {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let mut bad = Vec::new();
    let mut checks = 0;
    for name in catalog::names_concrete() {
        let env = catalog::catalog(&name).unwrap();
        let text = emit_env(&env);
        let back = parse_env(&text).unwrap();
        checks += 1;
        if back != env || emit_env(&back) != text {
            bad.push(format!("{name}: round trip"));
        }
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &text).unwrap();
        let p = path.to_str().unwrap();
        let fx = catalog::fixture(&name).unwrap();
        for set in fx.passes {
            checks += 1;
            let (code, out) = cli(&["verify", p, "--set", set]);
            if code != 0 {
                bad.push(format!("{name} {set}: exit {code}: {out}"));
            }
        }
        for (set, cond, _) in fx.fails {
            checks += 1;
            let (code, out) = cli(&["verify", p, "--set", set]);
            if code != 1 || !out.contains(cond) {
                bad.push(format!("{name} {set}: exit {code}"));
            }
        }
    }
    let p = |n: &str| dir.path().join(format!("{n}.json")).to_str().unwrap().to_string();
    let missing = dir.path().join("absent.json");
    let expectations: Vec<(Vec<String>, i32)> = vec![
        (vec!["verify".into(), p("idem1"), "--set".into(), "NOPE".into()], 2),
        (vec!["verify".into(), missing.to_str().unwrap().into(), "--set".into(), "PA".into()], 2),
        (vec!["frobnicate".into()], 2),
        (
            vec!["equiv".into(), p("planted_equiv_left_f2"), p("planted_equiv_right_f2"), "--kind".into(), "c2".into()],
            0,
        ),
        (
            vec!["classify".into(), "--kind".into(), "c2".into(), "--dimA".into(), "2".into(), "--dimV".into(), "2".into(), "--field".into(), "7".into()],
            3,
        ),
        (vec!["catalog".into(), "list".into()], 0),
    ];
    for (args, want) in &expectations {
        checks += 1;
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out) = cli(&refs);
        if code != *want {
            bad.push(format!("{args:?}: exit {code}, wanted {want}: {out}"));
        }
    }
    // build then split returns the input document.
    let built = dir.path().join("built.json");
    let split = dir.path().join("split.json");
    let (c1, _) = cli(&["build", &p("central_ext_a1"), "--kind", "a1", "-o", built.to_str().unwrap()]);
    let (c2, _) = cli(&["verify", built.to_str().unwrap(), "--set", "PA"]);
    let (c3, _) = cli(&["split", built.to_str().unwrap(), "--kind", "a1", "-o", split.to_str().unwrap()]);
    checks += 1;
    let same = std::fs::read_to_string(&split).ok() == std::fs::read_to_string(p("central_ext_a1")).ok();
    if (c1, c2, c3) != (0, 0, 0) || !same {
        bad.push(format!("build/verify/split: exits {c1} {c2} {c3}, identical {same}"));
    }
    let t = start.elapsed();
    (
        bad.is_empty() && t < Duration::from_secs(10),
        format!("{checks} checks over {} fixtures, failures {bad:?}, {:.2} s", catalog::names_concrete().len(), t.as_secs_f64()),
    )
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: Vec<Criterion> = vec![
        ("registry completeness", registry_completeness),
        ("oracle equivalence", oracle_equivalence),
        ("biproduct iff", biproduct_iff),
        ("cocycle bicrossproduct iff", bicrossproduct_iff),
        ("specialization lattice", specialization_lattice),
        ("split/build round trip", round_trip),
        ("morphism-pair bijection", morphism_bijection),
        ("plant and recover", plant_and_recover),
        ("classification regression", classification_regression),
        ("file format and CLI", file_format_and_cli),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(v) => v,
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, format!("panicked: {msg}"))
            }
        };
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.1} s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        if !ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
