//! Facets of the edge cone `C_G`: regular vertices, fundamental sets, their
//! supporting hyperplanes, cone membership and face data.
//!
//! For a connected graph with an odd cycle the cone is full-dimensional and
//! its facets are cut out by `x_v = 0` for each regular vertex `v` and by
//! `Σ_{N(T)} x = Σ_T x` for each fundamental set `T`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::lattice::{Lattice, LatticeError};
use crate::semigroup::LatticeVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FacetError {
    #[error("graph is bipartite; its edge cone is not full-dimensional")]
    Bipartite,
    #[error("vector of length {got} for a graph on {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn require_connected_nonbipartite(g: &Graph) -> Result<(), FacetError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.is_bipartite() {
        return Err(FacetError::Bipartite);
    }
    Ok(())
}

/// Whether every connected component of `G \ v` contains an odd cycle.
pub fn is_regular(g: &Graph, v: Vertex) -> bool {
    let rest = g.all_vertices().without(v);
    g.components_within(rest).into_iter().all(|c| g.has_odd_cycle_within(c))
}

pub fn regular_vertices(g: &Graph) -> Result<VertexSet, FacetError> {
    require_connected_nonbipartite(g)?;
    Ok((0..g.vertex_count()).filter(|&v| is_regular(g, v)).collect())
}

/// A fundamental set `T` together with `N_G(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalSet {
    pub vertices: VertexSet,
    pub neighborhood: VertexSet,
}

impl FundamentalSet {
    pub fn closed_neighborhood(&self) -> VertexSet {
        self.vertices.union(self.neighborhood)
    }
}

/// Checks the three defining conditions of a fundamental set directly.
pub fn is_fundamental(g: &Graph, set: VertexSet) -> bool {
    if set.is_empty() || !g.is_independent(set).unwrap_or(false) {
        return false;
    }
    if !g.bipartite_induced_connected(set).unwrap_or(false) {
        return false;
    }
    let rest = g.all_vertices().difference(set.union(g.neighbors_of_set(set)));
    g.components_within(rest).into_iter().all(|c| g.has_odd_cycle_within(c))
}

/// All fundamental sets, ordered by size and then lexicographically by
/// their sorted vertex lists.
pub fn fundamental_sets(g: &Graph) -> Result<Vec<FundamentalSet>, FacetError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let mut found = Vec::new();
    let mut stack = vec![(0usize, VertexSet::empty(), VertexSet::empty())];
    // Depth-first over independent sets; `blocked` holds chosen vertices and
    // their neighbors.
    while let Some((next, chosen, blocked)) = stack.pop() {
        if !chosen.is_empty() && is_fundamental(g, chosen) {
            found.push(chosen);
        }
        for v in next..g.vertex_count() {
            if !blocked.contains(v) {
                let blocked = blocked.with(v).union(g.neighbors(v));
                stack.push((v + 1, chosen.with(v), blocked));
            }
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    Ok(found
        .into_iter()
        .map(|vertices| FundamentalSet { vertices, neighborhood: g.neighbors_of_set(vertices) })
        .collect())
}

/// Where a supporting hyperplane comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperplaneSource {
    RegularVertex(Vertex),
    Fundamental(VertexSet),
}

/// An integer functional whose nonnegative half-space contains the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    coefficients: Vec<i32>,
    sources: Vec<HyperplaneSource>,
}

impl Hyperplane {
    /// The functional `x ↦ x_v`.
    pub fn regular_vertex(d: usize, v: Vertex) -> Self {
        let mut coefficients = vec![0; d];
        coefficients[v] = 1;
        Hyperplane { coefficients, sources: vec![HyperplaneSource::RegularVertex(v)] }
    }

    /// The functional `x ↦ Σ_{N(T)} x_j − Σ_T x_i`.
    pub fn fundamental(g: &Graph, set: VertexSet) -> Self {
        let mut coefficients = vec![0; g.vertex_count()];
        for v in g.neighbors_of_set(set).iter() {
            coefficients[v] += 1;
        }
        for v in set.iter() {
            coefficients[v] -= 1;
        }
        Hyperplane { coefficients, sources: vec![HyperplaneSource::Fundamental(set)] }
    }

    pub fn coefficients(&self) -> &[i32] {
        &self.coefficients
    }

    /// The primary source.
    pub fn kind(&self) -> HyperplaneSource {
        self.sources[0]
    }

    /// Every source producing this functional.
    pub fn sources(&self) -> &[HyperplaneSource] {
        &self.sources
    }

    pub fn evaluate(&self, x: &[i32]) -> i64 {
        self.coefficients.iter().zip(x).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    pub fn record(&self, g: &Graph) -> HyperplaneRecord {
        match self.kind() {
            HyperplaneSource::RegularVertex(v) => HyperplaneRecord::Regular { vertex: g.label(v).to_string() },
            HyperplaneSource::Fundamental(t) => HyperplaneRecord::Fundamental {
                set: g.set_labels(t).into_iter().map(String::from).collect(),
                coeffs: self.coefficients.clone(),
            },
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        match self.kind() {
            HyperplaneSource::RegularVertex(v) => format!("H_{}", g.label(v)),
            HyperplaneSource::Fundamental(t) => format!("H_{{{}}}", g.set_labels(t).join(",")),
        }
    }
}

/// Serialized form of a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HyperplaneRecord {
    Regular {
        vertex: String,
    },
    Fundamental {
        #[serde(rename = "T")]
        set: Vec<String>,
        coeffs: Vec<i32>,
    },
}

/// Regular-vertex hyperplanes first, then fundamental ones in
/// [`fundamental_sets`] order. Functionals that coincide are merged, keeping
/// every source.
pub fn supporting_hyperplanes(g: &Graph) -> Result<Vec<Hyperplane>, FacetError> {
    let d = g.vertex_count();
    let mut out: Vec<Hyperplane> = regular_vertices(g)?.iter().map(|v| Hyperplane::regular_vertex(d, v)).collect();
    for t in fundamental_sets(g)? {
        let h = Hyperplane::fundamental(g, t.vertices);
        match out.iter_mut().find(|o| o.coefficients == h.coefficients) {
            Some(existing) => existing.sources.extend(h.sources),
            None => out.push(h),
        }
    }
    Ok(out)
}

/// The edge cone as an intersection of half-spaces.
#[derive(Clone, Debug)]
pub struct Cone {
    dimension: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Cone {
    pub fn new(g: &Graph) -> Result<Self, FacetError> {
        Ok(Cone { dimension: g.vertex_count(), hyperplanes: supporting_hyperplanes(g)? })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn contains(&self, x: &LatticeVector) -> Result<bool, FacetError> {
        if x.len() != self.dimension {
            return Err(FacetError::DimensionMismatch { expected: self.dimension, got: x.len() });
        }
        Ok(self.hyperplanes.iter().all(|h| h.evaluate(x.coords()) >= 0))
    }
}

pub fn cone_contains(g: &Graph, x: &LatticeVector) -> Result<bool, FacetError> {
    Cone::new(g)?.contains(x)
}

/// Generators lying on a hyperplane and the rank of the lattice they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Indices into [`Graph::edges`].
    pub generators: Vec<usize>,
    pub dimension: usize,
}

impl Face {
    pub fn lattice(&self, g: &Graph) -> Result<Lattice, FacetError> {
        face_lattice(g, &self.generators)
    }
}

fn face_lattice(g: &Graph, generators: &[usize]) -> Result<Lattice, FacetError> {
    let d = g.vertex_count();
    let rows = generators.iter().map(|&i| LatticeVector::edge(d, g.edges()[i]).to_i64());
    Ok(Lattice::from_generators(d, rows)?)
}

pub fn face_of(g: &Graph, h: &Hyperplane) -> Result<Face, FacetError> {
    let d = g.vertex_count();
    if h.coefficients.len() != d {
        return Err(FacetError::DimensionMismatch { expected: d, got: h.coefficients.len() });
    }
    let generators: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &e)| h.evaluate(LatticeVector::edge(d, e).coords()) == 0)
        .map(|(i, _)| i)
        .collect();
    let dimension = face_lattice(g, &generators)?.rank();
    Ok(Face { generators, dimension })
}
