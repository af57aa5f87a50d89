//! Tensor-network terms and their exact evaluation on basis tuples.
//!
//! A term is a little dataflow graph over numbered *legs*: the input legs
//! carry the basis vectors of the identity's arguments, each step feeds some
//! live legs into a map and creates fresh legs for its outputs, and the
//! final output is an ordered list of legs. Leg bookkeeping replaces
//! Sweedler notation: `Δ(x) = x₁ ⊗ x₂` is one step producing two legs that
//! later steps may consume independently.

use std::collections::HashMap;
use std::fmt;

use crate::env::StructureEnv;
use crate::error::{ForgeError, Result};
use crate::linmap::{flat_index, tuples, unflatten, LinMap};
use crate::scalar::Scalar;

/// One map application inside a term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// Role of the applied map.
    pub map: String,
    /// Legs consumed, in the map's source order.
    pub inputs: Vec<usize>,
    /// Fresh legs created, in the map's target order.
    pub outputs: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub coefficient: i64,
    /// Space letter of every leg, indexed by leg id.
    pub leg_spaces: Vec<String>,
    /// Leg ids carrying the identity's arguments, in argument order.
    pub inputs: Vec<usize>,
    pub steps: Vec<Step>,
    /// Final output legs in order (this is the final permutation).
    pub outputs: Vec<usize>,
}

impl TensorTerm {
    /// Checks leg bookkeeping: each step consumes live legs, every created
    /// leg is used exactly once.
    pub fn check(&self) -> Result<()> {
        let n = self.leg_spaces.len();
        let mut live = vec![false; n];
        let mut born = vec![false; n];
        for &i in &self.inputs {
            if i >= n || born[i] {
                return Err(ForgeError::Arity(format!("bad input leg {i}")));
            }
            live[i] = true;
            born[i] = true;
        }
        for st in &self.steps {
            for &i in &st.inputs {
                if i >= n || !live[i] {
                    return Err(ForgeError::Arity(format!(
                        "step {} consumes dead leg {i}",
                        st.map
                    )));
                }
                live[i] = false;
            }
            for &o in &st.outputs {
                if o >= n || born[o] {
                    return Err(ForgeError::Arity(format!("step {} reuses leg {o}", st.map)));
                }
                born[o] = true;
                live[o] = true;
            }
        }
        for &o in &self.outputs {
            if o >= n || !live[o] {
                return Err(ForgeError::Arity(format!("output leg {o} is not live")));
            }
            live[o] = false;
        }
        if let Some(i) = live.iter().position(|&l| l) {
            return Err(ForgeError::Arity(format!("leg {i} is never used")));
        }
        Ok(())
    }

    pub fn output_spaces(&self) -> Vec<String> {
        self.outputs.iter().map(|&o| self.leg_spaces[o].clone()).collect()
    }

    pub fn input_spaces(&self) -> Vec<String> {
        self.inputs.iter().map(|&o| self.leg_spaces[o].clone()).collect()
    }

    pub fn roles(&self) -> impl Iterator<Item = &str> {
        self.steps.iter().map(|s| s.map.as_str())
    }
}

/// One identity `Σ lhs − Σ rhs = 0`, required on every basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityDescriptor {
    pub id: String,
    pub input_spaces: Vec<String>,
    pub output_spaces: Vec<String>,
    pub lhs: Vec<TensorTerm>,
    pub rhs: Vec<TensorTerm>,
    /// The formula the descriptor was compiled from.
    pub source: String,
}

impl IdentityDescriptor {
    pub fn terms(&self) -> impl Iterator<Item = (i64, &TensorTerm)> {
        self.lhs
            .iter()
            .map(|t| (1, t))
            .chain(self.rhs.iter().map(|t| (-1, t)))
    }

    pub fn roles(&self) -> Vec<String> {
        let mut r: Vec<String> = self
            .terms()
            .flat_map(|(_, t)| t.roles().map(str::to_string))
            .collect();
        r.sort();
        r.dedup();
        r
    }
}

/// A dense exact array over a list of legs.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    pub dims: Vec<usize>,
    pub data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dims: Vec<usize>, zero: &Scalar) -> Self {
        let n = dims.iter().product();
        Tensor {
            dims,
            data: vec![zero.clone(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[flat_index(&self.dims, idx)]
    }

    /// Nonzero entries as (index tuple, value), row-major.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(f, v)| (unflatten(&self.dims, f), v.clone()))
            .collect()
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero();
        if nz.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = nz.iter().map(|(i, v)| format!("{v}·{i:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A nonzero defect of one identity at one input basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleViolation {
    pub tuple: Vec<usize>,
    pub difference: Tensor,
}

struct PreparedStep<'e> {
    map: &'e LinMap,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

struct PreparedTerm<'e> {
    coefficient: Scalar,
    legs: usize,
    inputs: Vec<usize>,
    steps: Vec<PreparedStep<'e>>,
    outputs: Vec<usize>,
}

/// An identity with every role resolved against one env.
pub(crate) struct Prepared<'e> {
    input_dims: Vec<usize>,
    output_dims: Vec<usize>,
    terms: Vec<PreparedTerm<'e>>,
    zero: Scalar,
}

fn leg_dims(env: &StructureEnv, spaces: &[String]) -> Result<Vec<usize>> {
    spaces.iter().map(|s| env.dim(s)).collect()
}

fn prepare_term<'e>(term: &TensorTerm, sign: i64, env: &'e StructureEnv) -> Result<PreparedTerm<'e>> {
    let dims = leg_dims(env, &term.leg_spaces)?;
    let mut steps = Vec::with_capacity(term.steps.len());
    for st in &term.steps {
        let map = env.map(&st.map)?;
        let want_src: Vec<usize> = st.inputs.iter().map(|&l| dims[l]).collect();
        let want_tgt: Vec<usize> = st.outputs.iter().map(|&l| dims[l]).collect();
        if map.source_dims() != want_src.as_slice() || map.target_dims() != want_tgt.as_slice() {
            let mut expected = want_tgt.clone();
            expected.extend(&want_src);
            let mut actual = map.target_dims().to_vec();
            actual.extend(map.source_dims());
            return Err(ForgeError::ShapeMismatch {
                name: st.map.clone(),
                expected,
                actual,
            });
        }
        steps.push(PreparedStep {
            map,
            inputs: st.inputs.clone(),
            outputs: st.outputs.clone(),
        });
    }
    Ok(PreparedTerm {
        coefficient: env.field.from_i64(sign * term.coefficient),
        legs: term.leg_spaces.len(),
        inputs: term.inputs.clone(),
        steps,
        outputs: term.outputs.clone(),
    })
}

impl<'e> Prepared<'e> {
    pub(crate) fn new(desc: &IdentityDescriptor, env: &'e StructureEnv) -> Result<Self> {
        let terms = desc
            .terms()
            .map(|(sign, t)| prepare_term(t, sign, env))
            .collect::<Result<Vec<_>>>()?;
        Ok(Prepared {
            input_dims: leg_dims(env, &desc.input_spaces)?,
            output_dims: leg_dims(env, &desc.output_spaces)?,
            terms,
            zero: env.field.zero(),
        })
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<()> {
        if tuple.len() != self.input_dims.len() {
            return Err(ForgeError::Arity(format!(
                "basis tuple of length {} for {} inputs",
                tuple.len(),
                self.input_dims.len()
            )));
        }
        for (&i, &d) in tuple.iter().zip(&self.input_dims) {
            if i >= d {
                return Err(ForgeError::IndexOutOfRange {
                    name: "basis tuple".into(),
                    index: i,
                    dim: d,
                });
            }
        }
        Ok(())
    }

    /// Σ terms at one basis tuple.
    pub(crate) fn eval(&self, tuple: &[usize]) -> Tensor {
        let mut out = Tensor::zeros(self.output_dims.clone(), &self.zero);
        for t in &self.terms {
            eval_term_into(t, tuple, &mut out);
        }
        out
    }

    pub(crate) fn violations(&self, stop_at_first: bool) -> Vec<TupleViolation> {
        let mut v = Vec::new();
        for tuple in tuples(&self.input_dims) {
            let d = self.eval(&tuple);
            if !d.is_zero() {
                v.push(TupleViolation {
                    tuple,
                    difference: d,
                });
                if stop_at_first {
                    break;
                }
            }
        }
        v
    }
}

type Entry = (Vec<u8>, Scalar);

fn eval_term_into(t: &PreparedTerm<'_>, tuple: &[usize], out: &mut Tensor) {
    let mut start = vec![0u8; t.legs];
    for (&leg, &i) in t.inputs.iter().zip(tuple) {
        start[leg] = i as u8;
    }
    let mut entries: Vec<Entry> = vec![(start, t.coefficient.clone())];
    for st in &t.steps {
        let src_dims = st.map.source_dims();
        let mut next: Vec<Entry> = Vec::new();
        for (vals, c) in &entries {
            let mut flat = 0usize;
            for (&leg, &d) in st.inputs.iter().zip(src_dims) {
                flat = flat * d + vals[leg] as usize;
            }
            for (tidx, v) in st.map.column(flat) {
                let mut nv = vals.clone();
                for &leg in &st.inputs {
                    nv[leg] = 0;
                }
                for (&leg, &ti) in st.outputs.iter().zip(tidx) {
                    nv[leg] = ti;
                }
                next.push((nv, c * v));
            }
        }
        if next.len() > 48 {
            next = merge(next);
        }
        entries = next;
        if entries.is_empty() {
            return;
        }
    }
    for (vals, c) in entries {
        let mut flat = 0usize;
        for (&leg, &d) in t.outputs.iter().zip(&out.dims) {
            flat = flat * d + vals[leg] as usize;
        }
        let cell = &mut out.data[flat];
        *cell = &*cell + &c;
    }
}

fn merge(entries: Vec<Entry>) -> Vec<Entry> {
    let mut acc: HashMap<Vec<u8>, Scalar> = HashMap::with_capacity(entries.len());
    for (k, v) in entries {
        match acc.get_mut(&k) {
            Some(s) => *s = &*s + &v,
            None => {
                acc.insert(k, v);
            }
        }
    }
    let mut out: Vec<Entry> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Value of one term (coefficient included) at one basis tuple.
pub fn evaluate_term(term: &TensorTerm, env: &StructureEnv, basis_tuple: &[usize]) -> Result<Tensor> {
    term.check()?;
    let p = Prepared {
        input_dims: leg_dims(env, &term.input_spaces())?,
        output_dims: leg_dims(env, &term.output_spaces())?,
        terms: vec![prepare_term(term, 1, env)?],
        zero: env.field.zero(),
    };
    p.check_tuple(basis_tuple)?;
    Ok(p.eval(basis_tuple))
}

/// Every basis tuple (row-major) on which `lhs − rhs` is nonzero.
pub fn evaluate_identity(desc: &IdentityDescriptor, env: &StructureEnv) -> Result<Vec<TupleViolation>> {
    Ok(Prepared::new(desc, env)?.violations(false))
}

/// Whether the identity holds, stopping at the first failing tuple.
pub fn identity_holds(desc: &IdentityDescriptor, env: &StructureEnv) -> Result<bool> {
    Ok(Prepared::new(desc, env)?.violations(true).is_empty())
}

/// Value of `lhs − rhs` at one basis tuple.
pub fn evaluate_difference(
    desc: &IdentityDescriptor,
    env: &StructureEnv,
    basis_tuple: &[usize],
) -> Result<Tensor> {
    let p = Prepared::new(desc, env)?;
    p.check_tuple(basis_tuple)?;
    Ok(p.eval(basis_tuple))
}
