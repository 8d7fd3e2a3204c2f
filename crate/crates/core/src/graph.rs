//! Finite simple graphs and the graph-theoretic predicates used by the edge
//! ring machinery: distances, blocks and cutpoints, chordless odd cycles,
//! neighborhoods of vertex sets, and the parametric triangular cactus builder.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex index into [`Graph::labels`].
pub type Vertex = usize;

/// Graphs are limited to 64 vertices so that vertex sets fit in one word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("edge endpoint `{0}` is not a listed vertex")]
    UnknownEndpoint(String),
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("graph has no vertices")]
    NoVertices,
    #[error("cactus spec has n = 0")]
    EmptySpec,
    #[error("cactus spec with n = {n} needs {expected} entries in s, got {got}")]
    MalformedSpec { n: usize, expected: usize, got: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex set is empty")]
    EmptySet,
}

/// A set of vertices of one graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    /// The set `{0, .., d-1}`.
    pub fn full(d: usize) -> Self {
        if d >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << d) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::empty();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected edge with `0 <= u < v < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn vertices(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }
}

/// A finite simple undirected graph with a fixed vertex order.
///
/// The vertex order is the order of the labels passed at construction; every
/// lattice vector derived from the graph is indexed against it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: Vec<Edge>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from labels and labelled edges. Repeated edges collapse
    /// to one; loops and unknown endpoints are rejected.
    pub fn from_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NoVertices);
        }
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut index = HashMap::with_capacity(vertices.len());
        let mut labels = Vec::with_capacity(vertices.len());
        for (i, label) in vertices.iter().enumerate() {
            let label = label.as_ref().to_string();
            if index.insert(label.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(label));
            }
            labels.push(label);
        }
        let mut seen = HashSet::new();
        let mut edge_list = Vec::with_capacity(edges.len());
        let mut adjacency = vec![VertexSet::empty(); labels.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| GraphError::UnknownEndpoint(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| GraphError::UnknownEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(GraphError::LoopEdge(a.to_string()));
            }
            let e = Edge::new(ia, ib);
            if seen.insert(e) {
                edge_list.push(e);
                adjacency[ia].insert(ib);
                adjacency[ib].insert(ia);
            }
        }
        Ok(Graph { labels, index, edges: edge_list, adjacency })
    }

    /// Number of vertices `d`.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    /// Edges in construction order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adjacency[v]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.adjacency[a].contains(b)
    }

    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let e = Edge::new(a, b);
        self.edges.iter().position(|&f| f == e)
    }

    /// Resolves a list of labels into a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet, GraphError> {
        labels
            .iter()
            .map(|l| self.vertex(l.as_ref()).ok_or_else(|| GraphError::UnknownEndpoint(l.as_ref().to_string())))
            .collect()
    }

    pub fn set_labels(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.label(v)).collect()
    }

    /// `N_G(T)`: every vertex adjacent to some member of `set`.
    pub fn neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::empty(), |acc, v| acc.union(self.adjacency[v]))
    }

    /// Connected components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighbors_of_set(frontier).intersection(within).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.all_vertices()).len() == 1
    }

    /// Whether the subgraph induced on `within` has an odd cycle, i.e. is not
    /// bipartite.
    pub fn has_odd_cycle_within(&self, within: VertexSet) -> bool {
        let d = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; d];
        for start in within.iter() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for u in self.adjacency[v].intersection(within).iter() {
                    match color[u] {
                        None => {
                            color[u] = Some(!cv);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == cv => return true,
                        Some(_) => {}
                    }
                }
            }
        }
        false
    }

    pub fn is_bipartite(&self) -> bool {
        !self.has_odd_cycle_within(self.all_vertices())
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for u in self.adjacency[v].iter() {
                if dist[u].is_none() {
                    dist[u] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.distances_from(a)[b]
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.distances_from(v) {
                best = best.max(d.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Biconnected components (as vertex sets) and articulation vertices.
    ///
    /// Isolated vertices form singleton blocks. Blocks are returned sorted.
    pub fn blocks_and_cutpoints(&self) -> (Vec<VertexSet>, VertexSet) {
        let d = self.vertex_count();
        let mut state = BlockSearch {
            graph: self,
            disc: vec![usize::MAX; d],
            low: vec![0; d],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cutpoints: VertexSet::empty(),
        };
        for root in 0..d {
            if state.disc[root] != usize::MAX {
                continue;
            }
            if self.adjacency[root].is_empty() {
                state.disc[root] = state.time;
                state.time += 1;
                state.blocks.push(VertexSet::singleton(root));
                continue;
            }
            state.visit(root, None);
        }
        let mut blocks = state.blocks;
        blocks.sort();
        (blocks, state.cutpoints)
    }

    /// Whether every block is exactly a 3-cycle.
    pub fn is_triangular_cactus(&self) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let (blocks, _) = self.blocks_and_cutpoints();
        Ok(blocks.iter().all(|&b| {
            b.len() == 3 && b.iter().all(|v| self.adjacency[v].intersection(b).len() == 2)
        }))
    }

    /// Every chordless cycle, each reported once in canonical form.
    /// `max_len` bounds the cycle length when given.
    pub fn chordless_cycles(&self, max_len: Option<usize>) -> Vec<Cycle> {
        let limit = max_len.unwrap_or(usize::MAX);
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            let larger = VertexSet::from_bits(!VertexSet::full(s + 1).bits());
            for v1 in self.adjacency[s].intersection(larger).iter() {
                let mut path = vec![s, v1];
                // Vertices that may not join the path: members and neighbors
                // of interior path vertices.
                self.extend_chordless(&mut path, larger, limit, &mut out);
            }
        }
        out.sort();
        out
    }

    fn extend_chordless(&self, path: &mut Vec<Vertex>, allowed: VertexSet, limit: usize, out: &mut Vec<Cycle>) {
        let s = path[0];
        let last = *path.last().unwrap();
        let interior: VertexSet = path[1..path.len() - 1].iter().copied().collect();
        let on_path: VertexSet = path.iter().copied().collect();
        let blocked = on_path.union(self.neighbors_of_set(interior));
        for v in self.adjacency[last].intersection(allowed).difference(blocked).iter() {
            if self.adjacency[s].contains(v) {
                // Closing vertex; orient so the second vertex is below the last.
                if path[1] < v && path.len() < limit {
                    let mut vertices = path.clone();
                    vertices.push(v);
                    out.push(Cycle { vertices });
                }
            } else if path.len() + 1 < limit {
                path.push(v);
                self.extend_chordless(path, allowed, limit, out);
                path.pop();
            }
        }
    }

    /// Chordless cycles of odd length.
    pub fn minimal_odd_cycles(&self) -> Vec<Cycle> {
        self.chordless_cycles(None).into_iter().filter(|c| c.len() % 2 == 1).collect()
    }

    pub fn is_independent(&self, set: VertexSet) -> Result<bool, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        Ok(set.iter().all(|v| self.adjacency[v].is_disjoint(set)))
    }

    /// Connectivity of the bipartite graph on `T ∪ N(T)` whose edges join a
    /// member of `T` to a member of `N(T)`.
    pub fn bipartite_induced_connected(&self, set: VertexSet) -> Result<bool, GraphError> {
        let start = set.first().ok_or(GraphError::EmptySet)?;
        let nbhd = self.neighbors_of_set(set);
        let all = set.union(nbhd);
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let step = if set.contains(v) {
                self.adjacency[v].intersection(nbhd)
            } else {
                self.adjacency[v].intersection(set)
            };
            for u in step.difference(seen).iter() {
                seen.insert(u);
                queue.push_back(u);
            }
        }
        Ok(seen == all)
    }
}

struct BlockSearch<'a> {
    graph: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<VertexSet>,
    cutpoints: VertexSet,
}

impl BlockSearch<'_> {
    fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for u in self.graph.adjacency[v].iter() {
            if self.disc[u] == usize::MAX {
                children += 1;
                self.stack.push(Edge::new(v, u));
                self.visit(u, Some(v));
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cutpoints.insert(v);
                    }
                    let mut block = VertexSet::empty();
                    while let Some(e) = self.stack.pop() {
                        block = block.union(e.vertices());
                        if e == Edge::new(v, u) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(u) != parent && self.disc[u] < self.disc[v] {
                self.stack.push(Edge::new(v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cutpoints.insert(v);
        }
    }
}

/// A cycle given by its cyclically ordered vertices, in canonical form:
/// smallest vertex first, then the direction with the smaller second vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    /// Canonicalizes a cyclic vertex sequence. Adjacency in a host graph is
    /// not checked here.
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        let n = vertices.len();
        if n == 0 {
            return Cycle { vertices };
        }
        let pos = (0..n).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(pos);
        if n > 2 && vertices[n - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }
}

/// Parameters of a triangular cactus around a hub `w`: `n` triangles through
/// `w`, and `s[i]` pendant triangles at the spoke `x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusSpec {
    pub n: usize,
    pub s: Vec<usize>,
}

impl CactusSpec {
    pub fn new(n: usize, s: Vec<usize>) -> Self {
        CactusSpec { n, s }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptySpec);
        }
        if self.s.len() != 2 * self.n {
            return Err(GraphError::MalformedSpec { n: self.n, expected: 2 * self.n, got: self.s.len() });
        }
        Ok(())
    }

    /// Number of vertices of the built graph, `1 + 2n + 2 Σ s_i`.
    pub fn vertex_count(&self) -> usize {
        1 + 2 * self.n + 2 * self.s.iter().sum::<usize>()
    }
}

/// Label of the hub vertex.
pub const HUB: &str = "w";

/// Label of spoke `x_i`, 1-based.
pub fn spoke_label(i: usize) -> String {
    format!("x{i}")
}

/// Label of `y_{i,k}`, both 1-based.
pub fn pendant_label(i: usize, k: usize) -> String {
    format!("y{i}_{k}")
}

/// Builds the triangular cactus described by `spec`, in canonical vertex
/// order: `w`, then `x1..x2n`, then the `y` vertices grouped by spoke.
pub fn build_triangular_cactus(spec: &CactusSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let mut vertices = vec![HUB.to_string()];
    vertices.extend((1..=2 * spec.n).map(spoke_label));
    for (i, &si) in spec.s.iter().enumerate() {
        vertices.extend((1..=2 * si).map(|k| pendant_label(i + 1, k)));
    }
    let mut edges = Vec::new();
    for k in 1..=spec.n {
        let (a, b) = (spoke_label(2 * k - 1), spoke_label(2 * k));
        edges.push((HUB.to_string(), a.clone()));
        edges.push((HUB.to_string(), b.clone()));
        edges.push((a, b));
    }
    for (i, &si) in spec.s.iter().enumerate() {
        let x = spoke_label(i + 1);
        for t in 1..=si {
            let (a, b) = (pendant_label(i + 1, 2 * t - 1), pendant_label(i + 1, 2 * t));
            edges.push((x.clone(), a.clone()));
            edges.push((x.clone(), b.clone()));
            edges.push((a, b));
        }
    }
    Graph::from_edges(&vertices, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(
            &["v1", "v2", "v3", "v4", "v5"],
            &[("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v1", "v4"), ("v1", "v5"), ("v4", "v5")],
        )
        .unwrap()
    }

    fn t1min() -> Graph {
        build_triangular_cactus(&CactusSpec::new(2, vec![1, 0, 1, 0])).unwrap()
    }

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.vertex_set(labels).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let vs: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let es: Vec<(String, String)> = (0..n).map(|i| (vs[i].clone(), vs[(i + 1) % n].clone())).collect();
        Graph::from_edges(&vs, &es).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let vs: Vec<String> = (0..n).map(|i| format!("k{i}")).collect();
        let mut es = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                es.push((vs[i].clone(), vs[j].clone()));
            }
        }
        Graph::from_edges(&vs, &es).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::from_edges(&["a", "a"], &[]), Err(GraphError::DuplicateVertex("a".into())));
        assert_eq!(Graph::from_edges(&["a"], &[("a", "a")]), Err(GraphError::LoopEdge("a".into())));
        assert_eq!(Graph::from_edges(&["a"], &[("a", "b")]), Err(GraphError::UnknownEndpoint("b".into())));
    }

    #[test]
    fn build_small_graphs() {
        let g = bowtie();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        let single = Graph::from_edges::<&str>(&["a"], &[]).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let dup = Graph::from_edges(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn cactus_builder_shapes() {
        let g = t1min();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
        assert_eq!(
            g.labels(),
            ["w", "x1", "x2", "x3", "x4", "y1_1", "y1_2", "y3_1", "y3_2"].map(String::from)
        );
        let t2 = build_triangular_cactus(&CactusSpec::new(3, vec![1, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!((t2.vertex_count(), t2.edge_count()), (11, 15));
        let friend = build_triangular_cactus(&CactusSpec::new(3, vec![0; 6])).unwrap();
        assert_eq!((friend.vertex_count(), friend.diameter()), (7, Ok(2)));
        assert_eq!(build_triangular_cactus(&CactusSpec::new(0, vec![])), Err(GraphError::EmptySpec));
        assert!(matches!(
            build_triangular_cactus(&CactusSpec::new(2, vec![1])),
            Err(GraphError::MalformedSpec { .. })
        ));
    }

    #[test]
    fn diameters() {
        let g = t1min();
        assert_eq!(g.diameter(), Ok(4));
        assert_eq!(g.distance(g.vertex("y1_1").unwrap(), g.vertex("y3_1").unwrap()), Some(4));
        assert_eq!(complete(3).diameter(), Ok(1));
        let two = Graph::from_edges::<&str>(&["a", "b"], &[]).unwrap();
        assert_eq!(two.diameter(), Err(GraphError::Disconnected));
    }

    #[test]
    fn blocks_of_small_graphs() {
        let g = bowtie();
        let (blocks, cuts) = g.blocks_and_cutpoints();
        assert_eq!(blocks, vec![set(&g, &["v1", "v2", "v3"]), set(&g, &["v1", "v4", "v5"])]);
        assert_eq!(cuts, set(&g, &["v1"]));

        let t = t1min();
        assert_eq!(t.blocks_and_cutpoints().1, set(&t, &["w", "x1", "x3"]));

        let p = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let (blocks, cuts) = p.blocks_and_cutpoints();
        assert_eq!(blocks, vec![set(&p, &["a", "b"]), set(&p, &["b", "c"])]);
        assert_eq!(cuts, set(&p, &["b"]));
    }

    #[test]
    fn triangular_cactus_recognition() {
        let t2 = build_triangular_cactus(&CactusSpec::new(3, vec![1, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(t2.is_triangular_cactus(), Ok(true));
        assert_eq!(cycle(4).is_triangular_cactus(), Ok(false));
        assert_eq!(bowtie().is_triangular_cactus(), Ok(true));
        assert_eq!(complete(4).is_triangular_cactus(), Ok(false));
    }

    #[test]
    fn odd_cycles() {
        let g = t1min();
        let sets: Vec<VertexSet> = g.minimal_odd_cycles().iter().map(Cycle::vertex_set).collect();
        assert_eq!(sets.len(), 4);
        for tri in [["w", "x1", "x2"], ["w", "x3", "x4"], ["x1", "y1_1", "y1_2"], ["x3", "y3_1", "y3_2"]] {
            assert!(sets.contains(&set(&g, &tri)));
        }
        assert!(cycle(6).minimal_odd_cycles().is_empty());
        assert_eq!(cycle(6).chordless_cycles(None).len(), 1);
        assert_eq!(complete(4).minimal_odd_cycles().len(), 4);
        assert_eq!(cycle(5).minimal_odd_cycles().len(), 1);
        // C5 with a chord splits into a triangle and a 4-cycle.
        let mut c5 = vec![];
        for i in 0..5 {
            c5.push((format!("c{i}"), format!("c{}", (i + 1) % 5)));
        }
        c5.push(("c0".into(), "c2".into()));
        let labels: Vec<String> = (0..5).map(|i| format!("c{i}")).collect();
        let g = Graph::from_edges(&labels, &c5).unwrap();
        let cycles = g.chordless_cycles(None);
        assert_eq!(cycles.iter().map(Cycle::len).collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(g.chordless_cycles(Some(3)).len(), 1);
    }

    #[test]
    fn cycle_canonical_form() {
        assert_eq!(Cycle::new(vec![4, 2, 7]).vertices(), &[2, 4, 7]);
        assert_eq!(Cycle::new(vec![4, 7, 2]).vertices(), &[2, 4, 7]);
        assert_eq!(Cycle::new(vec![3, 1, 5, 0, 2]).vertices(), &[0, 2, 3, 1, 5]);
    }

    #[test]
    fn neighborhoods_and_independence() {
        let g = t1min();
        assert_eq!(g.neighbors_of_set(set(&g, &["w"])), set(&g, &["x1", "x2", "x3", "x4"]));
        assert_eq!(g.neighbors_of_set(VertexSet::empty()), VertexSet::empty());
        let b = bowtie();
        assert_eq!(b.neighbors_of_set(set(&b, &["v1"])), set(&b, &["v2", "v3", "v4", "v5"]));
        assert_eq!(b.is_independent(set(&b, &["v1"])), Ok(true));
        assert_eq!(b.bipartite_induced_connected(set(&b, &["v1"])), Ok(true));
        assert_eq!(g.is_independent(set(&g, &["x1", "x2"])), Ok(false));
        let t = set(&g, &["x2", "y1_1"]);
        assert_eq!(g.is_independent(t), Ok(true));
        assert_eq!(g.bipartite_induced_connected(t), Ok(true));
        assert_eq!(g.bipartite_induced_connected(set(&g, &["y1_1", "y3_1"])), Ok(false));
        assert_eq!(g.is_independent(VertexSet::empty()), Err(GraphError::EmptySet));
        assert_eq!(g.bipartite_induced_connected(VertexSet::empty()), Err(GraphError::EmptySet));
    }

    #[test]
    fn odd_cycle_within_components() {
        let g = t1min();
        assert!(!g.has_odd_cycle_within(set(&g, &["y1_1", "y1_2"])));
        assert!(g.has_odd_cycle_within(set(&g, &["x3", "x4", "y3_1", "y3_2"])));
        assert!(cycle(4).is_bipartite());
    }
}
