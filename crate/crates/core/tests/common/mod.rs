//! Shared test support: a naive evaluator written directly from the
//! defining formulas, random data, and small enumerations.
#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use std::collections::BTreeMap;

use poisson_forge::linmap::{tuples, LinMap};
use poisson_forge::constructions::build_unified;
use poisson_forge::structures::{zero_datum, ExtendingDatum, Kind};
use poisson_forge::{Field, Scalar, StructureEnv};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Structure constants of one space as plain nested lookups.
/// `b[k][i][j]` is the `k`-coefficient of `[e_i, e_j]`, `m` likewise for
/// the product; `d[i][j][k]` is the `e_i ⊗ e_j` coefficient of `δ(e_k)`,
/// `c` likewise for `Δ`.
pub struct Consts {
    pub n: usize,
    pub zero: Scalar,
    pub b: Vec<Vec<Vec<Scalar>>>,
    pub m: Vec<Vec<Vec<Scalar>>>,
    pub d: Vec<Vec<Vec<Scalar>>>,
    pub c: Vec<Vec<Vec<Scalar>>>,
}

fn cube(n: usize, zero: &Scalar, f: impl Fn(usize, usize, usize) -> Scalar) -> Vec<Vec<Vec<Scalar>>> {
    let _ = zero;
    (0..n)
        .map(|a| (0..n).map(|b| (0..n).map(|c| f(a, b, c)).collect()).collect())
        .collect()
}

impl Consts {
    /// Reads `bracket_X` etc. from an env; missing maps are zero.
    pub fn from_env(env: &StructureEnv, letter: &str) -> Self {
        let n = env.dim(letter).unwrap();
        let zero = env.field.zero();
        let get = |role: &str| env.map(&format!("{role}_{letter}")).ok().cloned();
        let bin = |m: Option<LinMap>| cube(n, &zero, |k, i, j| m.as_ref().map_or(zero.clone(), |m| m.get(&[k], &[i, j]).clone()));
        let co = |m: Option<LinMap>| cube(n, &zero, |i, j, k| m.as_ref().map_or(zero.clone(), |m| m.get(&[i, j], &[k]).clone()));
        Consts {
            n,
            zero: zero.clone(),
            b: bin(get("bracket")),
            m: bin(get("product")),
            d: co(get("cobracket")),
            c: co(get("coproduct")),
        }
    }
}

/// Nonzero entries of a difference, keyed by output index.
pub type Diff = BTreeMap<Vec<usize>, Scalar>;

/// `(law, input tuple, difference)` for every failing tuple, in law order
/// then row-major tuple order.
pub type NaiveReport = Vec<(String, Vec<usize>, Diff)>;

fn collect(out: &mut NaiveReport, law: &str, tuple: Vec<usize>, dims: &[usize], f: impl Fn(&[usize]) -> Scalar) {
    let mut diff = Diff::new();
    for idx in tuples(dims) {
        let v = f(&idx);
        if !v.is_zero() {
            diff.insert(idx, v);
        }
    }
    if !diff.is_empty() {
        out.push((law.to_string(), tuple, diff));
    }
}

fn sum(zero: &Scalar, n: usize, f: impl Fn(usize) -> Scalar) -> Scalar {
    (0..n).fold(zero.clone(), |acc, l| &acc + &f(l))
}

/// The algebra laws, evaluated by direct loops.
pub fn naive_pa(k: &Consts) -> NaiveReport {
    let (n, z) = (k.n, &k.zero);
    let (b, m) = (&k.b, &k.m);
    let mut out = Vec::new();
    for t in tuples(&[n, n]) {
        let (x, y) = (t[0], t[1]);
        collect(&mut out, "PA1", t.clone(), &[n], |o| &b[o[0]][x][y] + &b[o[0]][y][x]);
    }
    for t in tuples(&[n, n, n]) {
        let (x, y, zz) = (t[0], t[1], t[2]);
        collect(&mut out, "PA2", t.clone(), &[n], |o| {
            let o = o[0];
            let jac = |p: usize, q: usize, r: usize| sum(z, n, |l| &b[l][q][r] * &b[o][p][l]);
            &(&jac(x, y, zz) + &jac(y, zz, x)) + &jac(zz, x, y)
        });
    }
    for t in tuples(&[n, n, n]) {
        let (x, y, zz) = (t[0], t[1], t[2]);
        collect(&mut out, "PA3", t.clone(), &[n], |o| {
            let o = o[0];
            &sum(z, n, |l| &m[l][x][y] * &m[o][l][zz]) - &sum(z, n, |l| &m[l][y][zz] * &m[o][x][l])
        });
    }
    for t in tuples(&[n, n, n]) {
        let (x, y, zz) = (t[0], t[1], t[2]);
        collect(&mut out, "PA4", t.clone(), &[n], |o| {
            let o = o[0];
            let lhs = sum(z, n, |l| &m[l][y][zz] * &b[o][x][l]);
            let r1 = sum(z, n, |l| &b[l][x][y] * &m[o][l][zz]);
            let r2 = sum(z, n, |l| &b[l][x][zz] * &m[o][y][l]);
            &(&lhs - &r1) - &r2
        });
    }
    sort_report(out)
}

/// The coalgebra laws, evaluated by direct loops.
pub fn naive_pc(k: &Consts) -> NaiveReport {
    let (n, z) = (k.n, &k.zero);
    let (d, c) = (&k.d, &k.c);
    let mut out = Vec::new();
    for x in 0..n {
        collect(&mut out, "PC1", vec![x], &[n, n], |o| &d[o[0]][o[1]][x] + &d[o[1]][o[0]][x]);
    }
    for x in 0..n {
        collect(&mut out, "PC2", vec![x], &[n, n, n], |o| {
            let (i, j, kk) = (o[0], o[1], o[2]);
            let t1 = sum(z, n, |l| &d[l][kk][x] * &d[i][j][l]);
            let t2 = sum(z, n, |l| &d[l][j][x] * &d[kk][i][l]);
            let t3 = sum(z, n, |l| &d[l][i][x] * &d[j][kk][l]);
            &(&t1 + &t2) + &t3
        });
    }
    for x in 0..n {
        collect(&mut out, "PC3", vec![x], &[n, n, n], |o| {
            let (i, j, kk) = (o[0], o[1], o[2]);
            &sum(z, n, |l| &c[l][kk][x] * &c[i][j][l]) - &sum(z, n, |l| &c[i][l][x] * &c[j][kk][l])
        });
    }
    for x in 0..n {
        collect(&mut out, "PC4", vec![x], &[n, n, n], |o| {
            let (i, j, kk) = (o[0], o[1], o[2]);
            let lhs = sum(z, n, |l| &d[i][l][x] * &c[j][kk][l]);
            let r1 = sum(z, n, |l| &c[l][kk][x] * &d[i][j][l]);
            let r2 = sum(z, n, |l| &c[j][l][x] * &d[i][kk][l]);
            &(&lhs - &r1) - &r2
        });
    }
    sort_report(out)
}

/// The two compatibilities between the algebra and coalgebra halves.
pub fn naive_pb(k: &Consts) -> NaiveReport {
    let (n, z) = (k.n, &k.zero);
    let (b, m, d, c) = (&k.b, &k.m, &k.d, &k.c);
    let mut out = Vec::new();
    for t in tuples(&[n, n]) {
        let (x, y) = (t[0], t[1]);
        collect(&mut out, "LB01", t.clone(), &[n, n], |o| {
            let (i, j) = (o[0], o[1]);
            let lhs = sum(z, n, |l| &m[l][x][y] * &d[i][j][l]);
            let r1 = sum(z, n, |l| &d[l][j][y] * &m[i][x][l]);
            let r2 = sum(z, n, |l| &d[l][j][x] * &m[i][l][y]);
            let r3 = sum(z, n, |l| &c[i][l][y] * &b[j][x][l]);
            let r4 = sum(z, n, |l| &c[l][i][x] * &b[j][y][l]);
            &(&(&(&lhs - &r1) - &r2) - &r3) - &r4
        });
    }
    for t in tuples(&[n, n]) {
        let (x, y) = (t[0], t[1]);
        collect(&mut out, "LB02", t.clone(), &[n, n], |o| {
            let (i, j) = (o[0], o[1]);
            let lhs = sum(z, n, |l| &b[l][x][y] * &c[i][j][l]);
            let r1 = sum(z, n, |l| &c[l][j][y] * &b[i][x][l]);
            let r2 = sum(z, n, |l| &c[i][l][y] * &b[j][x][l]);
            let r3 = sum(z, n, |l| &d[l][j][x] * &m[i][l][y]);
            let r4 = sum(z, n, |l| &d[i][l][x] * &m[j][y][l]);
            &(&(&(&lhs - &r1) - &r2) - &r3) + &r4
        });
    }
    sort_report(out)
}

/// The Lie bialgebra compatibility.
pub fn naive_liebi(k: &Consts) -> NaiveReport {
    let (n, z) = (k.n, &k.zero);
    let (b, d) = (&k.b, &k.d);
    let mut out = Vec::new();
    for t in tuples(&[n, n]) {
        let (x, y) = (t[0], t[1]);
        collect(&mut out, "LIEBI1", t.clone(), &[n, n], |o| {
            let (i, j) = (o[0], o[1]);
            let lhs = sum(z, n, |l| &b[l][x][y] * &d[i][j][l]);
            let r1 = sum(z, n, |l| &d[l][j][y] * &b[i][x][l]);
            let r2 = sum(z, n, |l| &d[i][l][y] * &b[j][x][l]);
            let r3 = sum(z, n, |l| &d[l][j][x] * &b[i][y][l]);
            let r4 = sum(z, n, |l| &d[i][l][x] * &b[j][y][l]);
            &(&(&(&lhs - &r1) - &r2) + &r3) + &r4
        });
    }
    sort_report(out)
}

/// The associative bialgebra laws in the standard convention.
pub fn naive_asi(k: &Consts) -> NaiveReport {
    let (n, z) = (k.n, &k.zero);
    let (m, c) = (&k.m, &k.c);
    let mut out = Vec::new();
    for t in tuples(&[n, n]) {
        let (x, y) = (t[0], t[1]);
        collect(&mut out, "ASI1", t.clone(), &[n, n], |o| {
            let (i, j) = (o[0], o[1]);
            let lhs = sum(z, n, |l| &m[l][x][y] * &c[i][j][l]);
            let r1 = sum(z, n, |l| &c[l][j][y] * &m[i][x][l]);
            let r2 = sum(z, n, |l| &c[i][l][x] * &m[j][l][y]);
            &(&lhs - &r1) - &r2
        });
    }
    for t in tuples(&[n, n]) {
        let (x, y) = (t[0], t[1]);
        collect(&mut out, "ASI2", t.clone(), &[n, n], |o| {
            let (i, j) = (o[0], o[1]);
            let t1 = sum(z, n, |l| &c[l][j][x] * &m[i][y][l]);
            let t2 = sum(z, n, |l| &c[i][l][x] * &m[j][l][y]);
            let t3 = sum(z, n, |l| &c[l][i][y] * &m[j][x][l]);
            let t4 = sum(z, n, |l| &c[j][l][y] * &m[i][l][x]);
            &(&(&t1 - &t2) + &t3) - &t4
        });
    }
    sort_report(out)
}

fn sort_report(mut r: NaiveReport) -> NaiveReport {
    // Laws were pushed in order; tuples within a law are row-major already.
    r.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    r
}

/// The engine's report for a set in the same shape as [`NaiveReport`].
pub fn engine_report(set: &str, env: &StructureEnv) -> NaiveReport {
    let v = poisson_forge::axioms::check_condition_set(set, env, &Default::default()).unwrap();
    let mut r: NaiveReport = v
        .iter()
        .map(|x| {
            let diff: Diff = x.difference.nonzero().into_iter().collect();
            (x.law.clone(), x.tuple.clone(), diff)
        })
        .collect();
    r.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    r
}

/// A random scalar: zero with probability `1 − density`, otherwise a small
/// integer or simple fraction (over `Q`) or a random residue.
pub fn random_scalar(rng: &mut ChaCha8Rng, field: Field, density: f64) -> Scalar {
    if !rng.gen_bool(density) {
        return field.zero();
    }
    match field {
        Field::Rational => {
            let num = rng.gen_range(-3i64..=3);
            let den = if rng.gen_bool(0.2) { 2 } else { 1 };
            field.from_ratio(num, den).unwrap()
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

/// A random map with the given shape.
pub fn random_map(
    rng: &mut ChaCha8Rng,
    src: &[&str],
    tgt: &[&str],
    sd: &[usize],
    td: &[usize],
    field: Field,
    density: f64,
) -> LinMap {
    LinMap::from_fn(
        src.iter().map(|s| s.to_string()).collect(),
        tgt.iter().map(|s| s.to_string()).collect(),
        sd.to_vec(),
        td.to_vec(),
        field,
        |_, _| random_scalar(rng, field, density),
    )
}

/// Random structure constants for all four maps on one space `A`.
pub fn random_env(rng: &mut ChaCha8Rng, dim: usize, field: Field, density: f64) -> StructureEnv {
    let mut env = StructureEnv::new(field).with_space("A", dim);
    let d = [dim, dim];
    let one = [dim];
    env.insert_map("bracket_A", random_map(rng, &["A", "A"], &["A"], &d, &one, field, density));
    env.insert_map("product_A", random_map(rng, &["A", "A"], &["A"], &d, &one, field, density));
    env.insert_map("cobracket_A", random_map(rng, &["A"], &["A", "A"], &one, &d, field, density));
    env.insert_map("coproduct_A", random_map(rng, &["A"], &["A", "A"], &one, &d, field, density));
    env
}

/// A random map with the shape of `like`.
pub fn random_like(rng: &mut ChaCha8Rng, like: &LinMap, density: f64) -> LinMap {
    let f = like.field();
    LinMap::from_fn(
        like.source().to_vec(),
        like.target().to_vec(),
        like.source_dims().to_vec(),
        like.target_dims().to_vec(),
        f,
        |_, _| random_scalar(rng, f, density),
    )
}

/// `like` with its entries replaced by `values` (row-major).
pub fn with_entries(like: &LinMap, values: &[Scalar]) -> LinMap {
    LinMap::new(
        like.source().to_vec(),
        like.target().to_vec(),
        like.source_dims().to_vec(),
        like.target_dims().to_vec(),
        like.field(),
        values.to_vec(),
    )
    .unwrap()
}

/// Every vector of `len` elements of `F_p`, as residues, in lex order.
pub fn all_vectors(p: u32, len: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(len as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0u32; len];
        for slot in v.iter_mut().rev() {
            *slot = (k % p as u64) as u32;
            k /= p as u64;
        }
        v
    })
}

pub fn scalars(field: Field, v: &[u32]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_i64(x as i64)).collect()
}

/// Naive check that the linear map `f` (as a matrix `f[out][in]`) carries
/// the binary map `m` on the source to `n` on the target.
pub fn naive_preserves_binary(f: &[Vec<Scalar>], m: &LinMap, n: &LinMap, zero: &Scalar) -> bool {
    let dy = f.len();
    let dx = if dy == 0 { m.source_dims()[0] } else { f[0].len() };
    for u in 0..dx {
        for v in 0..dx {
            for o in 0..dy {
                let lhs = sum(zero, dx, |k| &m.get(&[k], &[u, v]).clone() * &f[o][k]);
                let mut rhs = zero.clone();
                for i in 0..dy {
                    for j in 0..dy {
                        rhs = &rhs + &(&(&f[i][u] * &f[j][v]) * n.get(&[o], &[i, j]));
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Naive check that `(f ⊗ f) ∘ d = e ∘ f`.
pub fn naive_preserves_cobinary(f: &[Vec<Scalar>], d: &LinMap, e: &LinMap, zero: &Scalar) -> bool {
    let dy = f.len();
    let dx = if dy == 0 { d.source_dims()[0] } else { f[0].len() };
    for u in 0..dx {
        for o1 in 0..dy {
            for o2 in 0..dy {
                let mut lhs = zero.clone();
                for i in 0..dx {
                    for j in 0..dx {
                        lhs = &lhs + &(&(&f[o1][i] * &f[o2][j]) * d.get(&[i, j], &[u]));
                    }
                }
                let rhs = sum(zero, dy, |k| &f[k][u] * e.get(&[o1, o2], &[k]));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// A datum of `kind` with every free map (the `V` structure and the
/// roster) filled from `values`, in `kind.all_maps()` order; the `A`
/// structure comes from `base` or is zero.
pub fn datum_from_values(
    kind: Kind,
    dim_a: usize,
    dim_v: usize,
    field: Field,
    base: Option<&StructureEnv>,
    values: &[Scalar],
) -> ExtendingDatum {
    let mut d = zero_datum(kind, dim_a, dim_v, field);
    let mut at = 0;
    for role in kind.all_maps() {
        let like = d.map(&role).unwrap().clone();
        if role.ends_with("_A") && role.split('_').count() == 2 {
            if let Some(b) = base {
                if b.has_map(&role) {
                    d.set_map(&role, b.map(&role).unwrap().clone()).unwrap();
                }
            }
            continue;
        }
        let n = like.entries().len();
        d.set_map(&role, with_entries(&like, &values[at..at + n])).unwrap();
        at += n;
    }
    assert_eq!(at, values.len(), "value count matches the free maps");
    d
}

/// Number of scalars the free maps of a datum hold.
pub fn free_entry_count(kind: Kind, dim_a: usize, dim_v: usize, field: Field) -> usize {
    let d = zero_datum(kind, dim_a, dim_v, field);
    kind.all_maps()
        .iter()
        .filter(|r| !(r.ends_with("_A") && r.split('_').count() == 2))
        .map(|r| d.map(r).unwrap().entries().len())
        .sum()
}

fn identity_rows(n: usize, field: Field) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

/// Validity judged on the built space alone: `E` satisfies the base laws
/// of its sides and the canonical map is a homomorphism.
pub fn naive_extension_valid(d: &ExtendingDatum) -> bool {
    let kind = d.kind();
    let b = build_unified(d).unwrap();
    let k = Consts::from_env(&b.env, "E");
    if kind.has_algebra() && !naive_pa(&k).is_empty() {
        return false;
    }
    if kind.has_coalgebra() && !naive_pc(&k).is_empty() {
        return false;
    }
    if kind.has_algebra()
        && kind.has_coalgebra()
        && (!naive_pb(&k).is_empty() || !naive_liebi(&k).is_empty() || !naive_asi(&k).is_empty())
    {
        return false;
    }
    let (da, de, field) = (d.dim_a(), b.env.dim("E").unwrap(), d.field());
    let zero = field.zero();
    let env = d.env();
    let proj: Vec<Vec<Scalar>> = (0..da)
        .map(|i| (0..de).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    let incl: Vec<Vec<Scalar>> = (0..de)
        .map(|i| (0..da).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    let pairs = |alg: bool| -> Vec<(&'static str, &'static str)> {
        if alg {
            vec![("bracket_A", "bracket_E"), ("product_A", "product_E")]
        } else {
            vec![("cobracket_A", "cobracket_E"), ("coproduct_A", "coproduct_E")]
        }
    };
    let mut sides = Vec::new();
    if kind.has_algebra() {
        sides.push(true);
    }
    if kind.has_coalgebra() {
        sides.push(false);
    }
    for alg in sides {
        for (ra, re) in pairs(alg) {
            let (ma, me) = (env.map(ra).unwrap(), b.env.map(re).unwrap());
            let ok = match (kind.projection_is_morphism(), alg) {
                (true, true) => naive_preserves_binary(&proj, me, ma, &zero),
                (true, false) => naive_preserves_cobinary(&proj, me, ma, &zero),
                (false, true) => naive_preserves_binary(&incl, ma, me, &zero),
                (false, false) => naive_preserves_cobinary(&incl, ma, me, &zero),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Whether `(a, x) ↦ (a + r(x), s(x))` is a homomorphism between the built
/// spaces, checked map by map with the naive loops. `r` is `dim_a × dim_v`
/// and `s` is `dim_v × dim_v`, both as rows.
pub fn naive_pair_is_morphism(d: &ExtendingDatum, d2: &ExtendingDatum, r: &[Vec<Scalar>], s: &[Vec<Scalar>]) -> bool {
    let (da, dv, field) = (d.dim_a(), d.dim_v(), d.field());
    let zero = field.zero();
    let mut f = identity_rows(da + dv, field);
    for i in 0..dv {
        f[da + i][da + i] = field.zero();
    }
    for a in 0..da {
        for x in 0..dv {
            f[a][da + x] = r[a][x].clone();
        }
    }
    for v in 0..dv {
        for x in 0..dv {
            f[da + v][da + x] = s[v][x].clone();
        }
    }
    let (b1, b2) = (build_unified(d).unwrap(), build_unified(d2).unwrap());
    let kind = d.kind();
    let mut ok = true;
    if kind.has_algebra() {
        for role in ["bracket_E", "product_E"] {
            ok &= naive_preserves_binary(&f, b1.env.map(role).unwrap(), b2.env.map(role).unwrap(), &zero);
        }
    }
    if kind.has_coalgebra() {
        for role in ["cobracket_E", "coproduct_E"] {
            ok &= naive_preserves_cobinary(&f, b1.env.map(role).unwrap(), b2.env.map(role).unwrap(), &zero);
        }
    }
    ok
}

fn rows(field: Field, v: &[u32], nrows: usize, ncols: usize) -> Vec<Vec<Scalar>> {
    (0..nrows)
        .map(|i| (0..ncols).map(|j| field.from_i64(v[i * ncols + j] as i64)).collect())
        .collect()
}

fn det_nonzero(m: &[Vec<Scalar>], field: Field) -> bool {
    // Gaussian elimination on a copy.
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return false;
        };
        a.swap(col, p);
        let inv = a[col][col].inv().unwrap();
        for r in col + 1..n {
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    let _ = field;
    true
}

/// Every `(r, s)` with `s` invertible, as row matrices.
pub fn naive_invertible_pairs(p: u32, da: usize, dv: usize) -> Vec<(Vec<Vec<Scalar>>, Vec<Vec<Scalar>>)> {
    let field = Field::prime(p).unwrap();
    let ss: Vec<_> = all_vectors(p, dv * dv)
        .map(|v| rows(field, &v, dv, dv))
        .filter(|s| det_nonzero(s, field))
        .collect();
    let rs: Vec<_> = all_vectors(p, da * dv).map(|v| rows(field, &v, da, dv)).collect();
    let mut out = Vec::new();
    for s in &ss {
        for r in &rs {
            out.push((r.clone(), s.clone()));
        }
    }
    out
}

/// Exhaustive classification with the naive checks: every datum over
/// `F_p` with zero `A` structure, validity on the built space, classes by
/// union of naively verified equivalences. Returns the valid count and the
/// sorted class sizes.
pub fn naive_classification(kind: Kind, da: usize, dv: usize, p: u32) -> (usize, Vec<usize>) {
    let field = Field::prime(p).unwrap();
    let n = free_entry_count(kind, da, dv, field);
    let valid: Vec<ExtendingDatum> = all_vectors(p, n)
        .map(|v| datum_from_values(kind, da, dv, field, None, &scalars(field, &v)))
        .filter(naive_extension_valid)
        .collect();
    let group = naive_invertible_pairs(p, da, dv);
    let mut parent: Vec<usize> = (0..valid.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..valid.len() {
        for j in i + 1..valid.len() {
            if find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if group.iter().any(|(r, s)| naive_pair_is_morphism(&valid[i], &valid[j], r, s)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut sizes = std::collections::BTreeMap::new();
    for i in 0..valid.len() {
        *sizes.entry(find(&mut parent, i)).or_insert(0usize) += 1;
    }
    let mut v: Vec<usize> = sizes.into_values().collect();
    v.sort();
    (valid.len(), v)
}
