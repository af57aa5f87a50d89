//! The `poisson-forge` command line.
//!
//! Exit codes: 0 pass, 1 violations found (or no equivalence), 2 usage or
//! input error, 3 search budget exceeded.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::axioms::{check_named, restrict};
use crate::catalog::{catalog, fixture, FIXTURES};
use crate::constructions::{build_generic, build_unified, Sides};
use crate::env::StructureEnv;
use crate::equivalence::{
    check_morphism_pair, classify_small, decide_equivalence, pair_homomorphism_defect, split_extension, Decision,
    ExtensionPresentation, DEFAULT_BUDGET,
};
use crate::error::{ForgeError, Result};
use crate::io::{emit_document, emit_env, parse_document, Document, PresentationRepr, Report};
use crate::registry::{AsiConvention, RegistryOptions};
use crate::scalar::Field;
use crate::structures::{
    mixed_roles, structure_roles, ActionBundle, CoactionBundle, CocycleBundle, CycleBundle, ExtendingDatum, Kind,
    MorphismPair,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "poisson-forge", version, about = "Exact checks and constructions for noncommutative Poisson structures")]
struct Cli {
    /// Render reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct AxiomFlags {
    /// Leave out the Lie bialgebra and associative bialgebra axioms.
    #[arg(long)]
    stated_only: bool,
    /// Use the swapped convention for the associative bialgebra axioms.
    #[arg(long)]
    asi_swapped: bool,
    /// Use the amended variants of conditions known to be misprinted.
    #[arg(long)]
    amended: bool,
}

impl AxiomFlags {
    fn options(self) -> RegistryOptions {
        let mut o = if self.stated_only {
            RegistryOptions::stated_only()
        } else {
            RegistryOptions::default()
        };
        if self.asi_swapped {
            o.asi_convention = AsiConvention::Swapped;
        }
        o.amended = self.amended;
        o
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check condition sets against a structure file (stdin if omitted).
    Verify {
        file: Option<PathBuf>,
        #[arg(long = "set", required = true, value_delimiter = ',')]
        sets: Vec<String>,
        #[command(flatten)]
        axioms: AxiomFlags,
    },
    /// Build the structure on the direct sum.
    Build {
        file: PathBuf,
        /// Kind of the extending datum in the file.
        #[arg(long, conflicts_with = "construction")]
        kind: Option<Kind>,
        /// Construction over a file with spaces A and H.
        #[arg(long, value_enum)]
        construction: Option<Construction>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover the extending datum of a built extension.
    Split {
        file: PathBuf,
        #[arg(long)]
        kind: Kind,
        /// Dimension of A when the file has no presentation block; A then
        /// spans the first coordinates of E.
        #[arg(long)]
        dim_a: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide or verify equivalence of two extending data.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        kind: Kind,
        /// Require both data to live over F_p.
        #[arg(long)]
        field: Option<u32>,
        /// File binding r_V_A and s_V_V; verified instead of searched.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[command(flatten)]
        axioms: AxiomFlags,
    },
    /// Enumerate and classify every datum over a zero base on A.
    Classify {
        #[arg(long)]
        kind: Kind,
        #[arg(long = "dimA", alias = "dim-a")]
        dim_a: usize,
        #[arg(long = "dimV", alias = "dim-v")]
        dim_v: usize,
        #[arg(long)]
        field: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[command(flatten)]
        axioms: AxiomFlags,
    },
    /// List or emit fixtures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Emit {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    Biproduct,
    BicrossedProduct,
    BicrossedCoproduct,
    CocycleCrossProduct,
    CycleCrossCoproduct,
    DoubleCrossBiproduct,
    CocycleBicrossproduct,
}

impl Construction {
    fn roles_and_sides(self) -> (Vec<String>, Sides) {
        let mut structure: Vec<String> = structure_roles('A');
        structure.extend(structure_roles('H'));
        let strs = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let alg_pair = strs(&[
            "triangleright_HA_A",
            "triangleleft_HA_H",
            "rightharpoonup_HA_A",
            "leftharpoonup_AH_A",
            "rightarrow_AH_H",
            "leftarrow_HA_H",
        ]);
        let co_pair = strs(&["phi_A_HA", "psi_H_HA", "rho_A_HA", "gamma_A_AH", "alpha_H_AH", "beta_H_HA"]);
        let mut roles = structure;
        let sides = match self {
            Construction::Biproduct => {
                roles.extend(strs(ActionBundle::ROLES));
                roles.extend(strs(CoactionBundle::ROLES));
                Sides::BOTH
            }
            Construction::BicrossedProduct => {
                roles.extend(alg_pair);
                Sides::ALGEBRA
            }
            Construction::BicrossedCoproduct => {
                roles.extend(co_pair);
                Sides::COALGEBRA
            }
            Construction::CocycleCrossProduct => {
                roles.extend(alg_pair);
                roles.extend(strs(CocycleBundle::ROLES));
                Sides::ALGEBRA
            }
            Construction::CycleCrossCoproduct => {
                roles.extend(co_pair);
                roles.extend(strs(CycleBundle::ROLES));
                Sides::COALGEBRA
            }
            Construction::DoubleCrossBiproduct => {
                roles.extend(alg_pair);
                roles.extend(co_pair);
                Sides::BOTH
            }
            Construction::CocycleBicrossproduct => {
                roles.extend(mixed_roles('H'));
                Sides::BOTH
            }
        };
        (roles, sides)
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_doc(&mut self, file: Option<&Path>) -> Result<Document> {
        match file {
            Some(p) => crate::io::load(p),
            None => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| ForgeError::Io(format!("stdin: {e}")))?;
                parse_document(&s)
            }
        }
    }

    fn write(&mut self, output: Option<&Path>, text: &str) -> Result<()> {
        match output {
            Some(p) => std::fs::write(p, text).map_err(|e| ForgeError::Io(format!("{}: {e}", p.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| ForgeError::Io(format!("stdout: {e}"))),
        }
    }

    fn say(&mut self, text: &str) -> Result<()> {
        self.write(None, text)
    }
}

/// Emits a built structure with `A` bound to `E`, so algebra-level sets
/// can be checked on the ambient directly.
fn built_document(b: &crate::constructions::BuiltStructure) -> Document {
    let mut env = b.env.clone();
    env.bind("A", "E");
    for role in ["bracket", "product", "cobracket", "coproduct"] {
        let e = format!("{role}_E");
        if env.maps.contains_key(&e) {
            env.bind(&format!("{role}_A"), &e);
        }
    }
    Document {
        env,
        presentation: Some(PresentationRepr {
            ambient: "E".into(),
            embedding: b.embedding.clone(),
            projection: b.projection.clone(),
        }),
    }
}

fn run_verify(io: &mut Io<'_>, json: bool, file: Option<&Path>, sets: &[String], opts: &RegistryOptions) -> Result<i32> {
    let doc = io.read_doc(file)?;
    let mut report = Report::default();
    for id in sets {
        let named = check_named(id, &doc.env, opts)?;
        report.add(id, &named.violations, &doc.env);
        if let Some(c) = &named.cross_check {
            report.add(&format!("{id} ({})", c.builder), &c.ambient, &doc.env);
        }
    }
    let text = if json { report.to_json() + "\n" } else { report.to_text() };
    io.say(&text)?;
    Ok(if report.passed() { EXIT_PASS } else { EXIT_VIOLATIONS })
}

fn run_build(
    io: &mut Io<'_>,
    file: &Path,
    kind: Option<Kind>,
    construction: Option<Construction>,
    output: Option<&Path>,
) -> Result<i32> {
    let doc = io.read_doc(Some(file))?;
    let built = match (kind, construction) {
        (Some(k), _) => build_unified(&ExtendingDatum::new(k, &doc.env)?)?,
        (None, Some(c)) => {
            let (roles, sides) = c.roles_and_sides();
            let refs: Vec<&str> = roles.iter().map(String::as_str).collect();
            let env = restrict(&doc.env, &refs)?;
            let name = format!("{c:?}");
            build_generic(&env, 'H', sides, &name)?
        }
        (None, None) => return Err(ForgeError::Format("build needs --kind or --construction".into())),
    };
    io.write(output, &emit_document(&built_document(&built)))?;
    Ok(EXIT_PASS)
}

fn run_split(io: &mut Io<'_>, file: &Path, kind: Kind, dim_a: Option<usize>, output: Option<&Path>) -> Result<i32> {
    let doc = io.read_doc(Some(file))?;
    let pres = match (doc.extension()?, dim_a) {
        (_, Some(n)) => ExtensionPresentation::coordinate(doc.env.clone(), n)?,
        (Some(p), None) => p,
        (None, None) => {
            return Err(ForgeError::Format(
                "file has no presentation block; pass --dim-a".into(),
            ))
        }
    };
    let d = split_extension(&pres, kind)?;
    io.write(output, &emit_env(d.env()))?;
    Ok(EXIT_PASS)
}

fn pair_json(w: &MorphismPair) -> serde_json::Value {
    let mut env = StructureEnv::new(w.r.field());
    env.spaces.insert("A".into(), crate::linmap::SpaceDecl::new("A", w.r.target_dims()[0]));
    env.spaces.insert("V".into(), crate::linmap::SpaceDecl::new("V", w.r.source_dims()[0]));
    env.insert_map("r_V_A", w.r.clone());
    env.insert_map("s_V_V", w.s_map.clone());
    serde_json::from_str(&emit_env(&env)).expect("emitted env is JSON")
}

#[allow(clippy::too_many_arguments)]
fn run_equiv(
    io: &mut Io<'_>,
    json: bool,
    first: &Path,
    second: &Path,
    kind: Kind,
    field: Option<u32>,
    witness: Option<&Path>,
    budget: u128,
    opts: &RegistryOptions,
) -> Result<i32> {
    let d = ExtendingDatum::new(kind, &io.read_doc(Some(first))?.env)?;
    let d2 = ExtendingDatum::new(kind, &io.read_doc(Some(second))?.env)?;
    if let Some(p) = field {
        let want = Field::prime(p)?;
        for x in [&d, &d2] {
            if x.field() != want {
                return Err(ForgeError::FieldMismatch(x.field(), want));
            }
        }
    }
    if let Some(wpath) = witness {
        let wenv = io.read_doc(Some(wpath))?.env;
        let w = MorphismPair::new(wenv.map("r_V_A")?.clone(), wenv.map("s_V_V")?.clone())?;
        let v = check_morphism_pair(kind, &w, &d, &d2, opts)?;
        let constructive = pair_homomorphism_defect(&w, &d, &d2)?;
        let invertible = w.inverse().is_some();
        let ok = v.is_empty() && invertible;
        let mut env = d.full_env();
        env.insert_map("r_V_A", w.r.clone());
        env.insert_map("s_V_V", w.s_map.clone());
        let mut report = Report::default();
        for id in kind.morphism_sets() {
            let part = crate::axioms::ViolationList(v.iter().filter(|x| x.set == *id).cloned().collect());
            report.add(id, &part, &env);
        }
        if json {
            let out = json!({
                "equivalent": ok,
                "s_invertible": invertible,
                "homomorphism": constructive.is_none(),
                "report": report,
            });
            io.say(&(serde_json::to_string_pretty(&out).expect("json") + "\n"))?;
        } else {
            io.say(&report.to_text())?;
            io.say(&format!(
                "s invertible: {invertible}\nhomomorphism of built structures: {}\n",
                match &constructive {
                    None => "yes".to_string(),
                    Some((m, t)) => format!("no ({m} at {t:?})"),
                }
            ))?;
        }
        return Ok(if ok { EXIT_PASS } else { EXIT_VIOLATIONS });
    }
    match decide_equivalence(kind, &d, &d2, budget, opts)? {
        Decision::Equivalent(w) => {
            if json {
                let out = json!({"equivalent": true, "verified": w.verified, "witness": pair_json(&w.pair)});
                io.say(&(serde_json::to_string_pretty(&out).expect("json") + "\n"))?;
            } else {
                io.say(&format!(
                    "equivalent (homomorphism {})\nr = {:?}\ns = {:?}\n",
                    if w.verified { "verified" } else { "NOT verified" },
                    w.pair.r.entries().iter().map(|x| x.to_canonical()).collect::<Vec<_>>(),
                    w.pair.s_map.entries().iter().map(|x| x.to_canonical()).collect::<Vec<_>>(),
                ))?;
            }
            Ok(EXIT_PASS)
        }
        Decision::Exhausted { searched } => {
            if json {
                io.say(&format!("{}\n", json!({"equivalent": false, "searched": searched.to_string()})))?;
            } else {
                io.say(&format!("not equivalent: {searched} pairs searched\n"))?;
            }
            Ok(EXIT_VIOLATIONS)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_classify(
    io: &mut Io<'_>,
    json: bool,
    kind: Kind,
    dim_a: usize,
    dim_v: usize,
    p: u32,
    budget: u128,
    opts: &RegistryOptions,
) -> Result<i32> {
    let c = classify_small(kind, dim_a, dim_v, Field::prime(p)?, None, budget, opts)?;
    if json {
        let classes: Vec<serde_json::Value> = c
            .classes
            .iter()
            .map(|k| {
                json!({
                    "size": k.size,
                    "representative": serde_json::from_str::<serde_json::Value>(&emit_env(k.representative.env()))
                        .expect("emitted env is JSON"),
                })
            })
            .collect();
        let out = json!({
            "kind": kind.name(),
            "candidates": c.candidates.to_string(),
            "valid": c.valid,
            "classes": classes,
            "anomalies": c.anomalies.len(),
        });
        io.say(&(serde_json::to_string_pretty(&out).expect("json") + "\n"))?;
    } else {
        io.say(&format!(
            "kind {kind}, dim A {dim_a}, dim V {dim_v}, F{p}: {} candidates, {} valid, {} classes\n",
            c.candidates,
            c.valid,
            c.classes.len()
        ))?;
        for (i, k) in c.classes.iter().enumerate() {
            let nz: Vec<String> = k
                .representative
                .env()
                .maps
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(n, _)| n.clone())
                .collect();
            io.say(&format!("  class {i}: size {}, nonzero maps [{}]\n", k.size, nz.join(", ")))?;
        }
        if !c.anomalies.is_empty() {
            io.say(&format!("  {} transported data left the valid set\n", c.anomalies.len()))?;
        }
    }
    Ok(EXIT_PASS)
}

fn dispatch(cli: Cli, io: &mut Io<'_>) -> Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Verify { file, sets, axioms } => run_verify(io, json, file.as_deref(), &sets, &axioms.options()),
        Command::Build {
            file,
            kind,
            construction,
            output,
        } => run_build(io, &file, kind, construction, output.as_deref()),
        Command::Split {
            file,
            kind,
            dim_a,
            output,
        } => run_split(io, &file, kind, dim_a, output.as_deref()),
        Command::Equiv {
            first,
            second,
            kind,
            field,
            witness,
            budget,
            axioms,
        } => run_equiv(io, json, &first, &second, kind, field, witness.as_deref(), budget, &axioms.options()),
        Command::Classify {
            kind,
            dim_a,
            dim_v,
            field,
            budget,
            axioms,
        } => run_classify(io, json, kind, dim_a, dim_v, field, budget, &axioms.options()),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for f in FIXTURES {
                    io.say(&format!("{:<24} {}\n", f.name, f.description))?;
                }
                Ok(EXIT_PASS)
            }
            CatalogAction::Emit { name, output } => {
                fixture(&name)?;
                io.write(output.as_deref(), &emit_env(&catalog(&name)?))?;
                Ok(EXIT_PASS)
            }
        },
    }
}

/// Runs the command line with explicit streams; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match dispatch(cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                ForgeError::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// Entry point used by the binary. Honors `POISSON_FORGE_THREADS`.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    if let Some(n) = std::env::var("POISSON_FORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}
