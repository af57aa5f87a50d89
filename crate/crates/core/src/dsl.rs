//! A small Sweedler-style formula language compiled into tensor terms.
//!
//! ```text
//! φ(x ⊳ v) = [x, φ(v)#1] ⊗ φ(v)#2 + φ(v)#1 ⊗ (x ⊳ φ(v)#2) - τ(β(x))
//! ```
//!
//! * Variables are declared per identity with their space letter.
//! * `[u, v]` is the bracket and `u · v` the product of the space of `u`.
//! * `⊳ ⊲ ⇀ ↼ → ←` are the mixed actions; the role is chosen from the
//!   spaces of both operands.
//! * `δ Δ φ ψ ρ γ α β σ ω θ ν p s q t r` are map applications; `F#k` is the
//!   k-th Sweedler leg of the multi-leg value `F`. Equal `F` inside one term
//!   denote one shared Sweedler sum.
//! * `τ(F)` swaps the two legs of `F`; `τij(F)` swaps legs `i` and `j`.
//! * A trailing `'` on any operator selects the primed (second) datum.
//! * `@role(args)` applies a role by name.
//! * A term may start with an integer coefficient `k *`; `0` is the empty sum.

use std::collections::HashMap;

use crate::env::role_signature;
use crate::error::{ForgeError, Result};
use crate::term::{IdentityDescriptor, Step, TensorTerm};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
}

fn tokenize(s: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Int(t.parse().map_err(|_| format!("bad integer {t}"))?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "()[],⊗+-=#'·⊳⊲⇀↼→←@*".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Expr {
    Var(String),
    Tensor(Vec<Expr>),
    Apply {
        sym: String,
        primed: bool,
        args: Vec<Expr>,
    },
    Leg(Box<Expr>, usize),
    Swap(Box<Expr>, usize, usize),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

const INFIX: &str = "·⊳⊲⇀↼→←";

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), String> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(format!("expected {c:?} at token {} ({:?})", self.pos, self.peek()))
        }
    }

    fn side(&mut self) -> std::result::Result<Vec<(i64, Expr)>, String> {
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::Int(0))
            && matches!(self.toks.get(self.pos + 1), None | Some(Tok::Sym('=')))
        {
            self.pos += 1;
            return Ok(out);
        }
        let mut sign = 1;
        if self.eat_sym('-') {
            sign = -1;
        } else {
            self.eat_sym('+');
        }
        loop {
            let mut coeff = sign;
            if let Some(Tok::Int(k)) = self.peek().cloned() {
                if self.toks.get(self.pos + 1) == Some(&Tok::Sym('*')) {
                    self.pos += 2;
                    coeff *= k;
                }
            }
            out.push((coeff, self.tensor()?));
            if self.eat_sym('+') {
                sign = 1;
            } else if self.eat_sym('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn tensor(&mut self) -> std::result::Result<Expr, String> {
        let mut items = vec![self.infix()?];
        while self.eat_sym('⊗') {
            items.push(self.infix()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Tensor(items)
        })
    }

    fn infix(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Sym(c)) = self.peek().cloned() {
            if !INFIX.contains(c) {
                break;
            }
            self.pos += 1;
            let primed = self.eat_sym('\'');
            let rhs = self.unary()?;
            lhs = Expr::Apply {
                sym: c.to_string(),
                primed,
                args: vec![lhs, rhs],
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> std::result::Result<Expr, String> {
        let mut e = self.primary()?;
        while self.eat_sym('#') {
            match self.peek().cloned() {
                Some(Tok::Int(k)) if k >= 1 => {
                    self.pos += 1;
                    e = Expr::Leg(Box::new(e), k as usize);
                }
                t => return Err(format!("expected leg number after '#', found {t:?}")),
            }
        }
        Ok(e)
    }

    fn args(&mut self) -> std::result::Result<Vec<Expr>, String> {
        self.expect('(')?;
        let mut args = vec![self.tensor()?];
        while self.eat_sym(',') {
            args.push(self.tensor()?);
        }
        self.expect(')')?;
        Ok(args)
    }

    fn primary(&mut self) -> std::result::Result<Expr, String> {
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.tensor()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let l = self.tensor()?;
                self.expect(',')?;
                let r = self.tensor()?;
                self.expect(']')?;
                let primed = self.eat_sym('\'');
                Ok(Expr::Apply {
                    sym: "[]".into(),
                    primed,
                    args: vec![l, r],
                })
            }
            Some(Tok::Sym('@')) => {
                self.pos += 1;
                let Some(Tok::Ident(name)) = self.peek().cloned() else {
                    return Err("expected role name after '@'".into());
                };
                self.pos += 1;
                let primed = self.eat_sym('\'');
                let args = self.args()?;
                Ok(Expr::Apply {
                    sym: format!("@{name}"),
                    primed,
                    args,
                })
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(rest) = name.strip_prefix('τ') {
                    let (i, j) = match rest {
                        "" => (0, 1),
                        r if r.len() == 2 && r.chars().all(|c| c.is_ascii_digit()) => {
                            let d: Vec<usize> =
                                r.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
                            if d[0] == 0 || d[1] == 0 || d[0] == d[1] {
                                return Err(format!("bad swap {name}"));
                            }
                            (d[0] - 1, d[1] - 1)
                        }
                        _ => return Err(format!("bad swap {name}")),
                    };
                    self.expect('(')?;
                    let e = self.tensor()?;
                    self.expect(')')?;
                    return Ok(Expr::Swap(Box::new(e), i, j));
                }
                let primed = self.eat_sym('\'');
                if self.peek() == Some(&Tok::Sym('(')) {
                    let args = self.args()?;
                    Ok(Expr::Apply {
                        sym: name,
                        primed,
                        args,
                    })
                } else if primed {
                    Err(format!("primed variable {name}"))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            t => Err(format!("unexpected token {t:?} at {}", self.pos)),
        }
    }
}

/// Resolves an operator applied to legs over `args` into a role and its
/// output space letters. `k` is the complement letter (`H` or `V`).
fn resolve(sym: &str, primed: bool, args: &[String], k: &str) -> std::result::Result<(String, Vec<String>), String> {
    let a = "A";
    let want = |expect: &[&str]| -> std::result::Result<(), String> {
        if args.len() == expect.len() && args.iter().zip(expect).all(|(x, y)| x == y) {
            Ok(())
        } else {
            Err(format!("{sym} applied to {args:?}, expected {expect:?}"))
        }
    };
    let (role, out): (String, Vec<String>) = match sym {
        "[]" | "·" => {
            if args.len() != 2 || args[0] != args[1] {
                return Err(format!("{sym} applied to {args:?}"));
            }
            let kind = if sym == "[]" { "bracket" } else { "product" };
            (format!("{kind}_{}", args[0]), vec![args[0].clone()])
        }
        "⊳" | "⊲" | "⇀" | "↼" | "→" | "←" => {
            if args.len() != 2 {
                return Err(format!("{sym} needs two operands"));
            }
            let (name, tgt) = match sym {
                "⊳" => ("triangleright", 1),
                "⊲" => ("triangleleft", 0),
                "⇀" => ("rightharpoonup", 1),
                "↼" => ("leftharpoonup", 0),
                "→" => ("rightarrow", 1),
                _ => ("leftarrow", 0),
            };
            (
                format!("{name}_{}{}_{}", args[0], args[1], args[tgt]),
                vec![args[tgt].clone()],
            )
        }
        "δ" | "Δ" => {
            if args.len() != 1 {
                return Err(format!("{sym} needs one leg"));
            }
            let kind = if sym == "δ" { "cobracket" } else { "coproduct" };
            (format!("{kind}_{}", args[0]), vec![args[0].clone(), args[0].clone()])
        }
        "φ" | "ρ" => {
            want(&[a])?;
            let n = if sym == "φ" { "phi" } else { "rho" };
            (format!("{n}_A_{k}A"), vec![k.into(), a.into()])
        }
        "γ" => {
            want(&[a])?;
            (format!("gamma_A_A{k}"), vec![a.into(), k.into()])
        }
        "ψ" | "β" => {
            want(&[k])?;
            let n = if sym == "ψ" { "psi" } else { "beta" };
            (format!("{n}_{k}_{k}A"), vec![k.into(), a.into()])
        }
        "α" => {
            want(&[k])?;
            (format!("alpha_{k}_A{k}"), vec![a.into(), k.into()])
        }
        "σ" | "ω" => {
            want(&[k, k])?;
            let n = if sym == "σ" { "sigma" } else { "omega" };
            (format!("{n}_{k}{k}_A"), vec![a.into()])
        }
        "θ" | "ν" => {
            want(&[a, a])?;
            let n = if sym == "θ" { "theta" } else { "nu" };
            (format!("{n}_AA_{k}"), vec![k.into()])
        }
        "p" => {
            want(&[a])?;
            (format!("p_A_{k}{k}"), vec![k.into(), k.into()])
        }
        "s" if args.len() == 1 && args[0] == a => (format!("s_A_{k}{k}"), vec![k.into(), k.into()]),
        "s" => {
            want(&[k])?;
            (format!("s_{k}_{k}"), vec![k.into()])
        }
        "q" | "t" => {
            want(&[k])?;
            (format!("{sym}_{k}_AA"), vec![a.into(), a.into()])
        }
        "r" => {
            want(&[k])?;
            (format!("r_{k}_A"), vec![a.into()])
        }
        _ => {
            let Some(name) = sym.strip_prefix('@') else {
                return Err(format!("unknown operator {sym}"));
            };
            let (src, tgt) = role_signature(name).ok_or_else(|| format!("unknown role {name}"))?;
            if src.as_slice() != args {
                return Err(format!("{name} applied to {args:?}"));
            }
            (name.to_string(), tgt)
        }
    };
    Ok((if primed { format!("{role}'") } else { role }, out))
}

struct TermBuilder<'a> {
    k: &'a str,
    leg_spaces: Vec<String>,
    steps: Vec<Step>,
    vars: &'a [(String, String)],
    var_legs: Vec<usize>,
    var_uses: Vec<usize>,
    splits: HashMap<Expr, Vec<usize>>,
}

impl<'a> TermBuilder<'a> {
    fn new(vars: &'a [(String, String)], k: &'a str) -> Self {
        let leg_spaces: Vec<String> = vars.iter().map(|(_, s)| s.clone()).collect();
        TermBuilder {
            k,
            var_legs: (0..vars.len()).collect(),
            var_uses: vec![0; vars.len()],
            leg_spaces,
            steps: Vec::new(),
            vars,
            splits: HashMap::new(),
        }
    }

    fn fresh(&mut self, space: &str) -> usize {
        self.leg_spaces.push(space.to_string());
        self.leg_spaces.len() - 1
    }

    fn compile(&mut self, e: &Expr) -> std::result::Result<Vec<usize>, String> {
        match e {
            Expr::Var(v) => {
                let i = self
                    .vars
                    .iter()
                    .position(|(n, _)| n == v)
                    .ok_or_else(|| format!("undeclared variable {v}"))?;
                self.var_uses[i] += 1;
                Ok(vec![self.var_legs[i]])
            }
            Expr::Tensor(items) => {
                let mut legs = Vec::new();
                for it in items {
                    legs.extend(self.compile(it)?);
                }
                Ok(legs)
            }
            Expr::Swap(inner, i, j) => {
                let mut legs = self.compile(inner)?;
                if *i >= legs.len() || *j >= legs.len() {
                    return Err(format!("swap of legs {} and {} on {} legs", i + 1, j + 1, legs.len()));
                }
                legs.swap(*i, *j);
                Ok(legs)
            }
            Expr::Leg(inner, k) => {
                let legs = match self.splits.get(inner.as_ref()) {
                    Some(l) => l.clone(),
                    None => {
                        let l = self.compile(inner)?;
                        self.splits.insert(inner.as_ref().clone(), l.clone());
                        l
                    }
                };
                legs.get(k - 1)
                    .map(|&l| vec![l])
                    .ok_or_else(|| format!("leg #{k} of a {}-leg value", legs.len()))
            }
            Expr::Apply { sym, primed, args } => {
                let mut inputs = Vec::new();
                for a in args {
                    inputs.extend(self.compile(a)?);
                }
                let spaces: Vec<String> = inputs.iter().map(|&l| self.leg_spaces[l].clone()).collect();
                let (role, out) = resolve(sym, *primed, &spaces, self.k)?;
                let outputs: Vec<usize> = out.iter().map(|s| self.fresh(s)).collect();
                self.steps.push(Step {
                    map: role,
                    inputs,
                    outputs: outputs.clone(),
                });
                Ok(outputs)
            }
        }
    }
}

/// Declared argument of an identity: `"x:H"`.
fn parse_vars(vars: &str) -> std::result::Result<Vec<(String, String)>, String> {
    vars.split_whitespace()
        .map(|v| {
            let (n, s) = v.split_once(':').ok_or_else(|| format!("bad variable declaration {v}"))?;
            Ok((n.to_string(), s.to_string()))
        })
        .collect()
}

/// Compiles `lhs = rhs` over the declared variables into a descriptor.
/// `complement` is the letter of the second space (`H` or `V`).
pub fn compile_identity(id: &str, vars: &str, formula: &str, complement: &str) -> Result<IdentityDescriptor> {
    let err = |msg: String| ForgeError::Syntax {
        id: id.to_string(),
        msg,
    };
    let vars = parse_vars(vars).map_err(err)?;
    let toks = tokenize(formula).map_err(err)?;
    let mut p = Parser { toks, pos: 0 };
    let lhs = p.side().map_err(err)?;
    p.expect('=').map_err(err)?;
    let rhs = p.side().map_err(err)?;
    if p.pos != p.toks.len() {
        return Err(err(format!("trailing tokens from {}", p.pos)));
    }
    let build = |side: Vec<(i64, Expr)>| -> Result<Vec<TensorTerm>> {
        side.into_iter()
            .map(|(c, e)| {
                let mut b = TermBuilder::new(&vars, complement);
                let outputs = b.compile(&e).map_err(err)?;
                if let Some(i) = b.var_uses.iter().position(|&u| u != 1) {
                    return Err(err(format!(
                        "variable {} used {} times in a term",
                        vars[i].0, b.var_uses[i]
                    )));
                }
                let t = TensorTerm {
                    coefficient: c,
                    leg_spaces: b.leg_spaces,
                    inputs: b.var_legs,
                    steps: b.steps,
                    outputs,
                };
                t.check().map_err(|e| err(e.to_string()))?;
                Ok(t)
            })
            .collect()
    };
    let lhs = build(lhs)?;
    let rhs = build(rhs)?;
    let output_spaces = lhs
        .iter()
        .chain(&rhs)
        .next()
        .map(|t| t.output_spaces())
        .ok_or_else(|| err("both sides are zero".into()))?;
    for t in lhs.iter().chain(&rhs) {
        if t.output_spaces() != output_spaces {
            return Err(err(format!(
                "term outputs {:?} disagree with {:?}",
                t.output_spaces(),
                output_spaces
            )));
        }
    }
    Ok(IdentityDescriptor {
        id: id.to_string(),
        input_spaces: vars.into_iter().map(|(_, s)| s).collect(),
        output_spaces,
        lhs,
        rhs,
        source: formula.to_string(),
    })
}

/// Replaces space letter `from` by `to` in a role name's signature parts.
pub fn rename_role(role: &str, from: char, to: char) -> String {
    let (base, primes) = match role.find('\'') {
        Some(i) => role.split_at(i),
        None => (role, ""),
    };
    let mut parts: Vec<String> = base.split('_').map(str::to_string).collect();
    for p in parts.iter_mut().skip(1) {
        if p.chars().all(|c| c.is_ascii_uppercase()) {
            *p = p.chars().map(|c| if c == from { to } else { c }).collect();
        }
    }
    format!("{}{}", parts.join("_"), primes)
}

impl IdentityDescriptor {
    /// The same identity stated over space `to` instead of `from`.
    pub fn with_space_renamed(&self, from: char, to: char) -> IdentityDescriptor {
        let sp = |s: &String| -> String {
            if s.len() == 1 && s.starts_with(from) {
                to.to_string()
            } else {
                s.clone()
            }
        };
        let term = |t: &TensorTerm| TensorTerm {
            coefficient: t.coefficient,
            leg_spaces: t.leg_spaces.iter().map(sp).collect(),
            inputs: t.inputs.clone(),
            steps: t
                .steps
                .iter()
                .map(|s| Step {
                    map: rename_role(&s.map, from, to),
                    inputs: s.inputs.clone(),
                    outputs: s.outputs.clone(),
                })
                .collect(),
            outputs: t.outputs.clone(),
        };
        IdentityDescriptor {
            id: self.id.clone(),
            input_spaces: self.input_spaces.iter().map(sp).collect(),
            output_spaces: self.output_spaces.iter().map(sp).collect(),
            lhs: self.lhs.iter().map(term).collect(),
            rhs: self.rhs.iter().map(term).collect(),
            source: self.source.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compiles_sweedler_legs_once() {
        let d = compile_identity(
            "co-leibniz",
            "x:A",
            "δ(x)#1 ⊗ Δ(δ(x)#2) = δ(Δ(x)#1) ⊗ Δ(x)#2 + τ12(Δ(x)#1 ⊗ δ(Δ(x)#2))",
            "H",
        )
        .unwrap();
        assert_eq!(d.output_spaces, vec!["A", "A", "A"]);
        assert_eq!(d.lhs[0].steps.len(), 2);
        assert_eq!(d.rhs.len(), 2);
        assert_eq!(d.rhs[1].steps[0].map, "coproduct_A");
    }

    #[test]
    fn resolves_actions_by_operand_spaces() {
        let d = compile_identity("t", "x:H a:A", "x ⊳ a = x ⇀' a", "H").unwrap();
        assert_eq!(d.lhs[0].steps[0].map, "triangleright_HA_A");
        assert_eq!(d.rhs[0].steps[0].map, "rightharpoonup_HA_A'");
    }

    #[test]
    fn rejects_nonlinear_terms() {
        assert!(compile_identity("t", "x:A y:A", "[x, x] = 0", "H").is_err());
        assert!(compile_identity("t", "x:A", "δ(x)#1 = 0", "H").is_err());
        assert!(compile_identity("t", "x:A y:H", "[x, y] = 0", "H").is_err());
    }

    #[test]
    fn renames_roles() {
        assert_eq!(rename_role("triangleleft_HA_H'", 'H', 'V'), "triangleleft_VA_V'");
        assert_eq!(rename_role("bracket_A", 'A', 'E'), "bracket_E");
    }
}
