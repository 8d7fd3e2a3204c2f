//! Exceptional pairs of odd cycles, the odd cycle condition (equivalently,
//! normality of the edge ring), and closed-form membership rules for
//! diameter-4 triangular cacti.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Cycle, Edge, Graph, GraphError, Vertex, VertexSet};
use crate::semigroup::{member, LatticeVector, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("graph is not a triangular cactus of diameter 4")]
    NotTriangularCactusDiam4,
    #[error("no unique hub vertex of eccentricity 2")]
    AmbiguousCenter,
    #[error("`{0}`-`{1}` is not an edge")]
    NotAnEdge(String, String),
    #[error("cycle pair is not exceptional")]
    NotExceptional,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Two vertex-disjoint minimal odd cycles with no edge between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExceptionalPair {
    pub first: Cycle,
    pub second: Cycle,
}

impl ExceptionalPair {
    /// Orders the two cycles canonically. Exceptionality is not checked.
    pub fn new(a: Cycle, b: Cycle) -> Self {
        if a <= b {
            ExceptionalPair { first: a, second: b }
        } else {
            ExceptionalPair { first: b, second: a }
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.first.vertex_set().union(self.second.vertex_set())
    }

    /// `E_C + E_C'`.
    pub fn vector(&self, d: usize) -> LatticeVector {
        cycle_vector(d, &self.first).checked_add(&cycle_vector(d, &self.second)).expect("0/1 vectors")
    }

    pub fn cycles(&self) -> [&Cycle; 2] {
        [&self.first, &self.second]
    }

    pub fn labels(&self, g: &Graph) -> [Vec<String>; 2] {
        let f = |c: &Cycle| c.labels(g).into_iter().map(String::from).collect();
        [f(&self.first), f(&self.second)]
    }
}

/// `E_C`: the indicator vector of the cycle's vertices.
pub fn cycle_vector(d: usize, c: &Cycle) -> LatticeVector {
    LatticeVector::indicator(d, c.vertex_set())
}

/// Whether two cycles share a vertex or are joined by an edge.
pub fn meet_or_bridged(g: &Graph, a: &Cycle, b: &Cycle) -> bool {
    let (va, vb) = (a.vertex_set(), b.vertex_set());
    !va.is_disjoint(vb) || !g.neighbors_of_set(va).is_disjoint(vb)
}

/// Whether `(a, b)` is an exceptional pair, assuming both are minimal odd
/// cycles of `g`.
pub fn is_exceptional(g: &Graph, a: &Cycle, b: &Cycle) -> bool {
    !meet_or_bridged(g, a, b)
}

pub fn exceptional_pairs(g: &Graph) -> Result<Vec<ExceptionalPair>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let cycles = g.minimal_odd_cycles();
    let mut out = Vec::new();
    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            if is_exceptional(g, a, b) {
                out.push(ExceptionalPair::new(a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn odd_cycle_condition(g: &Graph) -> Result<bool, GraphError> {
    Ok(exceptional_pairs(g)?.is_empty())
}

/// Normality verdict for the edge ring; the same value as
/// [`odd_cycle_condition`].
pub fn is_normal(g: &Graph) -> Result<bool, GraphError> {
    odd_cycle_condition(g)
}

/// The hub `w` of a diameter-4 triangular cactus: its unique vertex of
/// eccentricity 2.
pub fn cactus_hub(g: &Graph) -> Result<Vertex, LemmaError> {
    if !g.is_connected() || !g.is_triangular_cactus()? || g.diameter()? != 4 {
        return Err(LemmaError::NotTriangularCactusDiam4);
    }
    let centers: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&v| g.distances_from(v).into_iter().all(|d| d.is_some_and(|d| d <= 2)))
        .collect();
    match centers.as_slice() {
        [w] => Ok(*w),
        _ => Err(LemmaError::AmbiguousCenter),
    }
}

fn require_exceptional(g: &Graph, p: &ExceptionalPair) -> Result<(), LemmaError> {
    let odd = g.minimal_odd_cycles();
    if !odd.contains(&p.first) || !odd.contains(&p.second) || !is_exceptional(g, &p.first, &p.second) {
        return Err(LemmaError::NotExceptional);
    }
    Ok(())
}

/// `V(C) ∪ V(C') ∪ N(V(C) ∪ V(C'))`.
pub fn pair_reach(g: &Graph, p: &ExceptionalPair) -> VertexSet {
    let v = p.vertex_set();
    v.union(g.neighbors_of_set(v))
}

/// `E_{C_i} + E_{C_i'} + E_{C_j} + E_{C_j'}`.
pub fn pair_sum_vector(d: usize, p1: &ExceptionalPair, p2: &ExceptionalPair) -> LatticeVector {
    p1.vector(d).checked_add(&p2.vector(d)).expect("small vectors")
}

/// Closed form for `E_{C_i} + E_{C_i'} + E_{C_j} + E_{C_j'} ∈ S_G`: true iff
/// the four cycles can be re-matched across the two pairs into two
/// non-exceptional pairs.
pub fn lemma_pair_sum(g: &Graph, p1: &ExceptionalPair, p2: &ExceptionalPair) -> Result<bool, LemmaError> {
    cactus_hub(g)?;
    require_exceptional(g, p1)?;
    require_exceptional(g, p2)?;
    let [a, a2] = p1.cycles();
    let [b, b2] = p2.cycles();
    let straight = meet_or_bridged(g, a, b) && meet_or_bridged(g, a2, b2);
    let crossed = meet_or_bridged(g, a, b2) && meet_or_bridged(g, a2, b);
    Ok(straight || crossed)
}

/// `E_C + E_C' + e_u + e_v`.
pub fn edge_augment_vector(d: usize, p: &ExceptionalPair, e: Edge) -> LatticeVector {
    p.vector(d).checked_add(&LatticeVector::edge(d, e)).expect("small vectors")
}

/// Closed form for `E_C + E_C' + e_u + e_v ∈ S_G` with `{u, v}` an edge:
/// true iff one endpoint is the hub and the other lies in
/// `V(C) ∪ V(C') ∪ N(V(C) ∪ V(C'))`.
pub fn lemma_edge_augment(g: &Graph, p: &ExceptionalPair, u: Vertex, v: Vertex) -> Result<bool, LemmaError> {
    let w = cactus_hub(g)?;
    require_exceptional(g, p)?;
    if !g.has_edge(u, v) {
        return Err(LemmaError::NotAnEdge(g.label(u).into(), g.label(v).into()));
    }
    let reach = pair_reach(g, p);
    Ok((u == w && reach.contains(v)) || (v == w && reach.contains(u)))
}

/// `E_C + E_C' + ρ({u,w}) + ρ({v,w})`.
pub fn double_hub_vector(d: usize, p: &ExceptionalPair, w: Vertex, u: Vertex, v: Vertex) -> LatticeVector {
    let mut x = p.vector(d);
    x.add_assign(&LatticeVector::edge(d, Edge::new(u, w)));
    x.add_assign(&LatticeVector::edge(d, Edge::new(v, w)));
    x
}

/// Closed form for `E_C + E_C' + ρ({u,w}) + ρ({v,w}) ∈ S_G` when `u` and
/// `v` are hub neighbors outside `V(C) ∪ V(C') ∪ N(V(C) ∪ V(C'))`: true iff
/// `{u, v}` is an edge.
pub fn lemma_double_w_edge(g: &Graph, p: &ExceptionalPair, u: Vertex, v: Vertex) -> Result<bool, LemmaError> {
    let w = cactus_hub(g)?;
    require_exceptional(g, p)?;
    for x in [u, v] {
        if !g.has_edge(x, w) {
            return Err(LemmaError::PreconditionViolated(format!("{} is not adjacent to the hub", g.label(x))));
        }
    }
    let reach = pair_reach(g, p);
    for x in [u, v] {
        if reach.contains(x) {
            return Err(LemmaError::PreconditionViolated(format!(
                "{} lies in or next to the cycles of the pair",
                g.label(x)
            )));
        }
    }
    Ok(g.has_edge(u, v))
}

/// Which closed-form rule a [`LemmaReport`] exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaKind {
    PairSum,
    EdgeAugment,
    DoubleHubEdge,
}

/// One closed-form evaluation next to the brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaKind,
    pub inputs: Vec<String>,
    pub vector: LatticeVector,
    pub closed_form: bool,
    pub oracle: bool,
    /// Edges of a decomposition when the oracle finds one.
    pub witness: Option<Vec<[String; 2]>>,
}

impl LemmaReport {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.oracle
    }
}

fn cycle_name(g: &Graph, c: &Cycle) -> String {
    format!("{{{}}}", c.labels(g).join(","))
}

fn pair_name(g: &Graph, p: &ExceptionalPair) -> String {
    format!("({},{})", cycle_name(g, &p.first), cycle_name(g, &p.second))
}

fn report(
    g: &Graph,
    lemma: LemmaKind,
    inputs: Vec<String>,
    vector: LatticeVector,
    closed_form: bool,
) -> Result<LemmaReport, LemmaError> {
    let witness = member(g, &vector)?.map(|w| {
        w.into_iter()
            .map(|i| {
                let e = g.edges()[i];
                [g.label(e.u).to_string(), g.label(e.v).to_string()]
            })
            .collect::<Vec<_>>()
    });
    Ok(LemmaReport { lemma, inputs, vector, closed_form, oracle: witness.is_some(), witness })
}

/// Evaluates every closed-form rule on every admissible input of `g` and
/// pairs it with the membership oracle.
///
/// Inputs: all ordered pairs of exceptional pairs; every exceptional pair
/// with every edge (both orientations are equivalent, one is used); every
/// exceptional pair with every ordered pair of admissible hub neighbors.
pub fn lemma_reports(g: &Graph) -> Result<Vec<LemmaReport>, LemmaError> {
    let w = cactus_hub(g)?;
    let d = g.vertex_count();
    let pairs = exceptional_pairs(g)?;
    let mut out = Vec::new();
    for p1 in &pairs {
        for p2 in &pairs {
            let closed = lemma_pair_sum(g, p1, p2)?;
            let inputs = vec![pair_name(g, p1), pair_name(g, p2)];
            out.push(report(g, LemmaKind::PairSum, inputs, pair_sum_vector(d, p1, p2), closed)?);
        }
    }
    for p in &pairs {
        for &e in g.edges() {
            let closed = lemma_edge_augment(g, p, e.u, e.v)?;
            let inputs = vec![pair_name(g, p), format!("{{{},{}}}", g.label(e.u), g.label(e.v))];
            out.push(report(g, LemmaKind::EdgeAugment, inputs, edge_augment_vector(d, p, e), closed)?);
        }
    }
    for p in &pairs {
        let free = g.neighbors(w).difference(pair_reach(g, p));
        for u in free.iter() {
            for v in free.iter() {
                let closed = lemma_double_w_edge(g, p, u, v)?;
                let inputs = vec![pair_name(g, p), g.label(u).to_string(), g.label(v).to_string()];
                out.push(report(g, LemmaKind::DoubleHubEdge, inputs, double_hub_vector(d, p, w, u, v), closed)?);
            }
        }
    }
    Ok(out)
}
