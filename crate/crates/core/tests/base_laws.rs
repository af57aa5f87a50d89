mod common;

use common::*;
use poisson_forge::catalog;
use poisson_forge::{Field, StructureEnv};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field_for(rng: &mut ChaCha8Rng) -> Field {
    match rng.gen_range(0..3) {
        0 => Field::Rational,
        1 => Field::prime(3).unwrap(),
        _ => Field::prime(5).unwrap(),
    }
}

fn agree(env: &StructureEnv) {
    let k = Consts::from_env(env, "A");
    assert_eq!(engine_report("PA", env), naive_pa(&k), "PA");
    assert_eq!(engine_report("PC", env), naive_pc(&k), "PC");
    assert_eq!(engine_report("PB", env), naive_pb(&k), "PB");
    assert_eq!(engine_report("LIEBI", env), naive_liebi(&k), "LIEBI");
    assert_eq!(engine_report("ASI", env), naive_asi(&k), "ASI");
}

#[test]
fn random_environments_match_the_naive_evaluator() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..60 {
        let dim = rng.gen_range(0..=3);
        let field = field_for(&mut rng);
        let density = rng.gen_range(0.1..0.9);
        agree(&random_env(&mut rng, dim, field, density));
    }
}

#[test]
fn catalog_fixtures_match_the_naive_evaluator() {
    for name in ["zero_3", "idem1", "dual_numbers", "nonab_lie2", "bad_bracket", "bad_cobracket", "bad_assoc"] {
        let env = catalog::catalog(name).unwrap();
        agree(&env);
    }
}

#[test]
fn passing_fixtures_yield_no_failures_in_either_evaluator() {
    for name in ["idem1", "dual_numbers", "nonab_lie2"] {
        let env = catalog::catalog(name).unwrap();
        let k = Consts::from_env(&env, "A");
        assert!(naive_pa(&k).is_empty(), "{name}");
        assert!(naive_pc(&k).is_empty(), "{name}");
        assert!(naive_pb(&k).is_empty(), "{name}");
        assert!(naive_liebi(&k).is_empty(), "{name}");
        assert!(naive_asi(&k).is_empty(), "{name}");
    }
}

#[test]
fn antisymmetry_failure_names_the_tuple_and_difference() {
    let env = catalog::catalog("bad_bracket").unwrap();
    let r = engine_report("PA", &env);
    let (law, tuple, diff) = &r[0];
    assert_eq!(law, "PA1");
    assert_eq!(tuple, &vec![0, 0]);
    assert_eq!(diff.get(&vec![0]).unwrap(), &Field::Rational.from_i64(2));
}
