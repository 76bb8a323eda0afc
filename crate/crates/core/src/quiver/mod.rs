//! Finite-dimensional representations of acyclic quivers over `F_p`.
//!
//! An arrow `a: s -> t` carries a matrix of shape `dim(t) × dim(s)` acting on
//! column vectors. Morphisms are families of matrices, one per vertex, that
//! intertwine the arrow matrices. Because the quiver is acyclic, every simple
//! representation is a vertex simple and the length of a representation is
//! its total dimension.

mod decompose;
mod enumerate;
mod hom;
mod kronecker;
mod ops;
mod text;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

pub use decompose::{decompose, find_nontrivial_idempotent, has_simple_summand, is_indecomposable};
pub use enumerate::{dimension_vectors, enumerate_indecomposables};
pub use hom::{exists_mono, find_mono, hom_basis, iso_test, Budget, HomSpace};
pub use kronecker::{kronecker_builtins, kronecker_rep, projective_line, KroneckerKind, KroneckerLabel};
pub use ops::{cokernel, image, kernel, socle};
pub use text::{parse_quiver_file, write_quiver_file, QuiverFile};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Fails on duplicate names, dangling arrows or directed cycles.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let n = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidRep(format!("duplicate vertex {v:?}")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidRep(format!("duplicate arrow {:?}", a.name)));
            }
            if a.source >= n || a.target >= n {
                return Err(Error::InvalidRep(format!("arrow {:?} has no endpoint", a.name)));
            }
        }
        let q = Quiver { vertices, arrows };
        if q.topological_order().is_none() {
            return Err(Error::InvalidRep("quiver has a directed cycle".into()));
        }
        Ok(q)
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indegree[a.target] -= 1;
                if indegree[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    fn build(vertices: &[&str], arrows: &[(&str, usize, usize)]) -> Arc<Quiver> {
        let vertices = vertices.iter().map(|s| s.to_string()).collect();
        let arrows = arrows
            .iter()
            .map(|&(name, source, target)| Arrow {
                name: name.to_string(),
                source,
                target,
            })
            .collect();
        Arc::new(Quiver::new(vertices, arrows).expect("built-in quiver is valid"))
    }

    /// `1 <- 2 -> 3`.
    pub fn a3_paper() -> Arc<Quiver> {
        Quiver::build(&["1", "2", "3"], &[("a", 1, 0), ("b", 1, 2)])
    }

    /// `1 -> 2 -> … -> n`.
    pub fn linear_a(n: usize) -> Arc<Quiver> {
        assert!(n >= 1, "linear quiver needs a vertex");
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| Arrow {
                name: format!("a{i}"),
                source: i - 1,
                target: i,
            })
            .collect();
        Arc::new(Quiver::new(vertices, arrows).expect("linear quiver is acyclic"))
    }

    /// Two arrows `a, b: 1 -> 2`.
    pub fn kronecker() -> Arc<Quiver> {
        Quiver::build(&["1", "2"], &[("a", 0, 1), ("b", 0, 1)])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows leaving `v`.
    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
    }

    /// Arrows entering `v`.
    pub fn incoming(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuiverRep {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl QuiverRep {
    pub fn new(
        quiver: Arc<Quiver>,
        field: PrimeField,
        dims: Vec<usize>,
        mats: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::InvalidRep(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::InvalidRep(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.arrows().len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&mats) {
            let want = (dims[a.target], dims[a.source]);
            if m.shape() != want {
                return Err(Error::InvalidRep(format!(
                    "arrow {:?} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
            if m.data().iter().any(|&e| e >= field.p()) {
                return Err(Error::InvalidRep(format!(
                    "arrow {:?} has entries outside {field}",
                    a.name
                )));
            }
        }
        Ok(QuiverRep {
            quiver,
            field,
            dims,
            mats,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let mats = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        QuiverRep {
            quiver,
            field,
            dims,
            mats,
        }
    }

    /// The simple representation at vertex `v`.
    pub fn simple(quiver: Arc<Quiver>, field: PrimeField, v: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[v] = 1;
        QuiverRep::with_zero_maps(quiver, field, dims)
    }

    /// The semisimple representation with the given dimensions.
    pub fn with_zero_maps(quiver: Arc<Quiver>, field: PrimeField, dims: Vec<usize>) -> Self {
        let mats = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        QuiverRep {
            quiver,
            field,
            dims,
            mats,
        }
    }

    /// Interval module on the linear quiver: identity maps on `lo..=hi`.
    pub fn interval(quiver: Arc<Quiver>, field: PrimeField, lo: usize, hi: usize) -> Result<Self> {
        let dims: Vec<usize> = (0..quiver.vertex_count())
            .map(|v| usize::from((lo..=hi).contains(&v)))
            .collect();
        let mats = quiver
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target], dims[a.source]);
                if r == 1 && c == 1 {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(r, c)
                }
            })
            .collect();
        QuiverRep::new(quiver, field, dims, mats)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    /// Composition length, equal to the total dimension.
    pub fn length(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.length() == 0
    }

    /// Compact dimension vector, e.g. `011`; comma separated when some entry
    /// has more than one digit.
    pub fn dims_label(&self) -> String {
        dims_label(&self.dims)
    }

    pub fn same_category(&self, other: &QuiverRep) -> bool {
        self.field == other.field && self.quiver == other.quiver
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> QuiverRep {
        assert!(self.same_category(other), "direct sum across categories");
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| Matrix::block_diag(a, b))
            .collect();
        QuiverRep {
            quiver: self.quiver.clone(),
            field: self.field,
            dims,
            mats,
        }
    }

    pub fn direct_sum_all<'a>(reps: impl IntoIterator<Item = &'a QuiverRep>) -> Option<QuiverRep> {
        let mut iter = reps.into_iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, r| acc.direct_sum(r)))
    }

    pub fn identity(&self) -> RepMorphism {
        RepMorphism {
            source: self.clone(),
            target: self.clone(),
            comps: self.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }
}

pub fn dims_label(dims: &[usize]) -> String {
    if dims.iter().all(|&d| d < 10) {
        dims.iter().map(|d| d.to_string()).collect()
    } else {
        let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for QuiverRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuiverRep")
            .field("field", &self.field.p())
            .field("dims", &self.dims)
            .field("mats", &self.mats)
            .finish()
    }
}

/// A family of matrices `comps[v]: X_v -> Y_v` commuting with every arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    source: QuiverRep,
    target: QuiverRep,
    comps: Vec<Matrix>,
}

impl RepMorphism {
    /// Checks shapes and the intertwining law.
    pub fn new(source: QuiverRep, target: QuiverRep, comps: Vec<Matrix>) -> Result<Self> {
        if !source.same_category(&target) {
            return Err(Error::InvalidRep("morphism between different categories".into()));
        }
        let m = RepMorphism {
            source,
            target,
            comps,
        };
        if m.comps.len() != m.source.dims.len()
            || m.comps
                .iter()
                .enumerate()
                .any(|(v, c)| c.shape() != (m.target.dims[v], m.source.dims[v]))
        {
            return Err(Error::InvalidRep("morphism components have wrong shapes".into()));
        }
        if !m.intertwines() {
            return Err(Error::InvalidRep("components do not commute with the arrows".into()));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: QuiverRep, target: QuiverRep, comps: Vec<Matrix>) -> Self {
        debug_assert!(comps.len() == source.dims.len());
        RepMorphism {
            source,
            target,
            comps,
        }
    }

    pub fn zero(source: &QuiverRep, target: &QuiverRep) -> Self {
        let comps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        RepMorphism::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn source(&self) -> &QuiverRep {
        &self.source
    }

    pub fn target(&self) -> &QuiverRep {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    pub fn comp(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    /// `comps[t] · X_a == Y_a · comps[s]` for every arrow `a: s -> t`.
    pub fn intertwines(&self) -> bool {
        intertwines(&self.source, &self.target, &self.comps)
    }

    pub fn is_mono(&self) -> bool {
        let f = self.source.field;
        self.comps.iter().all(|c| c.is_injective(f))
    }

    pub fn is_epi(&self) -> bool {
        let f = self.source.field;
        self.comps.iter().all(|c| c.rank(f) == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        let f = self.source.field;
        self.comps.iter().all(|c| c.is_invertible(f))
    }

    /// `self ∘ first`.
    pub fn compose_after(&self, first: &RepMorphism) -> RepMorphism {
        let f = self.source.field;
        let comps = self
            .comps
            .iter()
            .zip(&first.comps)
            .map(|(g, h)| g.mul(h, f))
            .collect();
        RepMorphism::new_unchecked(first.source.clone(), self.target.clone(), comps)
    }
}

pub(crate) fn intertwines(source: &QuiverRep, target: &QuiverRep, comps: &[Matrix]) -> bool {
    let f = source.field;
    source.quiver.arrows().iter().enumerate().all(|(i, a)| {
        comps[a.target].mul(&source.mats[i], f) == target.mats[i].mul(&comps[a.source], f)
    })
}
