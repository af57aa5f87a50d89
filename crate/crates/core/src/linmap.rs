//! Dense structure constants of multilinear maps between tensor powers.

use crate::error::{ForgeError, Result};
use crate::scalar::{Field, Scalar};

/// A named vector space of fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: String,
    pub dim: usize,
    pub labels: Option<Vec<String>>,
}

impl SpaceDecl {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        SpaceDecl {
            name: name.into(),
            dim,
            labels: None,
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) if i < l.len() => l[i].clone(),
            _ => format!("{}{}", self.name, i),
        }
    }
}

/// Row-major flat index of `idx` within `dims`.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    dims.iter().zip(idx).fold(0, |acc, (d, i)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
    out
}

/// Every index tuple of `dims` in row-major order.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |f| unflatten(dims, f))
}

/// Nonzero entries of one column: target index tuple and coefficient.
pub type Column = Vec<(Vec<u8>, Scalar)>;

/// A multilinear map `source[0] ⊗ … → target[0] ⊗ …` stored densely,
/// indexed by (target indices…, source indices…) in row-major order.
#[derive(Clone, Debug)]
pub struct LinMap {
    source: Vec<String>,
    target: Vec<String>,
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    field: Field,
    entries: Vec<Scalar>,
    columns: Vec<Column>,
}

impl PartialEq for LinMap {
    fn eq(&self, o: &Self) -> bool {
        self.source == o.source
            && self.target == o.target
            && self.source_dims == o.source_dims
            && self.target_dims == o.target_dims
            && self.entries == o.entries
    }
}

impl LinMap {
    pub fn new(
        source: Vec<String>,
        target: Vec<String>,
        source_dims: Vec<usize>,
        target_dims: Vec<usize>,
        field: Field,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        if source.len() != source_dims.len() || target.len() != target_dims.len() {
            return Err(ForgeError::Arity(
                "space names and dimensions disagree in length".into(),
            ));
        }
        let expected: usize =
            target_dims.iter().product::<usize>() * source_dims.iter().product::<usize>();
        if entries.len() != expected {
            return Err(ForgeError::ShapeMismatch {
                name: format!("{:?}->{:?}", source, target),
                expected: vec![expected],
                actual: vec![entries.len()],
            });
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(ForgeError::FieldMismatch(field, bad.field()));
        }
        let src_size: usize = source_dims.iter().product();
        let tgt_size: usize = target_dims.iter().product();
        let mut columns = vec![Vec::new(); src_size];
        for (t, tidx) in (0..tgt_size).map(|t| (t, unflatten(&target_dims, t))) {
            for (s, col) in columns.iter_mut().enumerate() {
                let v = &entries[t * src_size + s];
                if !v.is_zero() {
                    col.push((tidx.iter().map(|&i| i as u8).collect(), v.clone()));
                }
            }
        }
        Ok(LinMap {
            source,
            target,
            source_dims,
            target_dims,
            field,
            entries,
            columns,
        })
    }

    pub fn zeros(
        source: Vec<String>,
        target: Vec<String>,
        source_dims: Vec<usize>,
        target_dims: Vec<usize>,
        field: Field,
    ) -> Self {
        let n = target_dims.iter().product::<usize>() * source_dims.iter().product::<usize>();
        Self::new(source, target, source_dims, target_dims, field, vec![field.zero(); n])
            .expect("zero map is well-shaped")
    }

    /// Builds a map from a function of (target tuple, source tuple).
    pub fn from_fn(
        source: Vec<String>,
        target: Vec<String>,
        source_dims: Vec<usize>,
        target_dims: Vec<usize>,
        field: Field,
        mut f: impl FnMut(&[usize], &[usize]) -> Scalar,
    ) -> Self {
        let mut entries = Vec::new();
        for t in tuples(&target_dims) {
            for s in tuples(&source_dims) {
                entries.push(f(&t, &s));
            }
        }
        Self::new(source, target, source_dims, target_dims, field, entries)
            .expect("from_fn produces a well-shaped map")
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }
    pub fn target(&self) -> &[String] {
        &self.target
    }
    pub fn source_dims(&self) -> &[usize] {
        &self.source_dims
    }
    pub fn target_dims(&self) -> &[usize] {
        &self.target_dims
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn source_size(&self) -> usize {
        self.source_dims.iter().product()
    }

    /// Nonzero image of the basis tuple with flat index `src_flat`.
    pub fn column(&self, src_flat: usize) -> &Column {
        &self.columns[src_flat]
    }

    pub fn get(&self, target: &[usize], source: &[usize]) -> &Scalar {
        let t = flat_index(&self.target_dims, target);
        let s = flat_index(&self.source_dims, source);
        &self.entries[t * self.source_size() + s]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Output leg `i` of the result is output leg `perm[i]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<LinMap> {
        let n = self.target.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(ForgeError::Arity(format!(
                "permutation {perm:?} does not permute {n} output legs"
            )));
        }
        let target: Vec<String> = perm.iter().map(|&p| self.target[p].clone()).collect();
        let target_dims: Vec<usize> = perm.iter().map(|&p| self.target_dims[p]).collect();
        let mut orig = vec![0; n];
        Ok(LinMap::from_fn(
            self.source.clone(),
            target,
            self.source_dims.clone(),
            target_dims,
            self.field,
            |t, s| {
                for (i, &p) in perm.iter().enumerate() {
                    orig[p] = t[i];
                }
                self.get(&orig, s).clone()
            },
        ))
    }

    /// Entrywise `self + other`; signatures must agree.
    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add_checked(b))
            .collect::<Result<Vec<_>>>()?;
        LinMap::new(
            self.source.clone(),
            self.target.clone(),
            self.source_dims.clone(),
            self.target_dims.clone(),
            self.field,
            entries,
        )
    }

    pub fn scale(&self, c: &Scalar) -> Result<LinMap> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.mul_checked(c))
            .collect::<Result<Vec<_>>>()?;
        LinMap::new(
            self.source.clone(),
            self.target.clone(),
            self.source_dims.clone(),
            self.target_dims.clone(),
            self.field,
            entries,
        )
    }

    /// Same constants under new space names (dimensions unchanged).
    pub fn renamed(&self, source: Vec<String>, target: Vec<String>) -> Result<LinMap> {
        LinMap::new(
            source,
            target,
            self.source_dims.clone(),
            self.target_dims.clone(),
            self.field,
            self.entries.clone(),
        )
    }

    fn same_shape(&self, o: &LinMap) -> Result<()> {
        if self.source_dims != o.source_dims || self.target_dims != o.target_dims {
            let mut e = self.target_dims.clone();
            e.extend(&self.source_dims);
            let mut a = o.target_dims.clone();
            a.extend(&o.source_dims);
            return Err(ForgeError::ShapeMismatch {
                name: "map sum".into(),
                expected: e,
                actual: a,
            });
        }
        Ok(())
    }
}
