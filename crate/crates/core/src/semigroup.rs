//! The edge semigroup `S_G` generated by the vectors `e_i + e_j` over edges,
//! its lattice, a brute-force membership oracle, and degree-truncated
//! enumerations of `S_G`, of its normalization and of its holes.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exceptional::{exceptional_pairs, ExceptionalPair};
use crate::facets::{Cone, FacetError};
use crate::graph::{Edge, Graph, GraphError, Vertex, VertexSet};
use crate::lattice::{Lattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("vector of length {got} for a graph on {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degree bound {0} is negative or odd")]
    BadDegree(i64),
    #[error("normalization cross-check failed: {only_a} elements only in the cone/lattice filter, {only_b} only in the closure")]
    MethodMismatch { only_a: usize, only_b: usize },
    #[error("coordinate overflow")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Facet(#[from] FacetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A vector of `Z^d` indexed by the vertices of a graph.
///
/// Ordered graded-lexicographically: by degree (coordinate sum), then by
/// coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i32>", into = "Vec<i32>")]
pub struct LatticeVector {
    coords: Vec<i32>,
    degree: i32,
}

impl LatticeVector {
    pub fn new(coords: Vec<i32>) -> Self {
        let degree = coords.iter().sum();
        LatticeVector { coords, degree }
    }

    pub fn zero(d: usize) -> Self {
        LatticeVector { coords: vec![0; d], degree: 0 }
    }

    /// The unit vector `e_v`.
    pub fn unit(d: usize, v: Vertex) -> Self {
        let mut coords = vec![0; d];
        coords[v] = 1;
        LatticeVector { coords, degree: 1 }
    }

    /// `ρ(e) = e_u + e_v`.
    pub fn edge(d: usize, e: Edge) -> Self {
        let mut coords = vec![0; d];
        coords[e.u] += 1;
        coords[e.v] += 1;
        LatticeVector { coords, degree: 2 }
    }

    /// The 0/1 indicator of a vertex set.
    pub fn indicator(d: usize, set: VertexSet) -> Self {
        let mut coords = vec![0; d];
        for v in set.iter() {
            coords[v] = 1;
        }
        LatticeVector::new(coords)
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| c as i64).collect()
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(LatticeVector { coords, degree: self.degree.checked_add(other.degree)? })
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(LatticeVector { coords, degree: self.degree.checked_sub(other.degree)? })
    }

    pub fn checked_scale(&self, k: i32) -> Option<Self> {
        let coords = self.coords.iter().map(|c| c.checked_mul(k)).collect::<Option<Vec<_>>>()?;
        Some(LatticeVector { coords, degree: self.degree.checked_mul(k)? })
    }

    /// Adds `other` in place.
    ///
    /// # Panics
    /// On length mismatch or overflow.
    pub fn add_assign(&mut self, other: &Self) {
        *self = self.checked_add(other).expect("lattice vector addition overflowed or mismatched");
    }
}

impl From<Vec<i32>> for LatticeVector {
    fn from(coords: Vec<i32>) -> Self {
        LatticeVector::new(coords)
    }
}

impl From<LatticeVector> for Vec<i32> {
    fn from(v: LatticeVector) -> Self {
        v.coords
    }
}

impl Ord for LatticeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for LatticeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// Generators of `S_G` (one per edge, in edge order) and the lattice they
/// span.
#[derive(Clone, Debug)]
pub struct SemigroupData {
    pub generators: Vec<LatticeVector>,
    pub lattice: Lattice,
    pub dimension: usize,
}

impl SemigroupData {
    pub fn new(g: &Graph) -> Result<Self, SemigroupError> {
        let d = g.vertex_count();
        let generators: Vec<LatticeVector> = g.edges().iter().map(|&e| LatticeVector::edge(d, e)).collect();
        let lattice = Lattice::from_generators(d, generators.iter().map(LatticeVector::to_i64))?;
        let dimension = lattice.rank();
        Ok(SemigroupData { generators, lattice, dimension })
    }

    /// Whether `x` lies in the group `Z S_G`.
    pub fn lattice_member(&self, x: &LatticeVector) -> Result<bool, SemigroupError> {
        Ok(self.lattice.contains(&x.to_i64())?)
    }
}

pub fn generators(g: &Graph) -> Result<SemigroupData, SemigroupError> {
    SemigroupData::new(g)
}

pub fn lattice_member(g: &Graph, x: &LatticeVector) -> Result<bool, SemigroupError> {
    check_len(g, x)?;
    SemigroupData::new(g)?.lattice_member(x)
}

fn check_len(g: &Graph, x: &LatticeVector) -> Result<(), SemigroupError> {
    if x.len() != g.vertex_count() {
        return Err(SemigroupError::DimensionMismatch { expected: g.vertex_count(), got: x.len() });
    }
    Ok(())
}

/// Decides `x ∈ S_G` by exhaustive search, returning a witness multiset of
/// edge indices (into [`Graph::edges`]) whose generators sum to `x`.
///
/// The search always covers the lowest-index positive coordinate with an
/// edge at that vertex, memoizing failed residuals. This is the reference
/// oracle the closed-form results are checked against.
pub fn member(g: &Graph, x: &LatticeVector) -> Result<Option<Vec<usize>>, SemigroupError> {
    check_len(g, x)?;
    if !x.is_nonnegative() || x.degree() % 2 != 0 {
        return Ok(None);
    }
    let incident: Vec<Vec<(usize, Vertex)>> = (0..g.vertex_count())
        .map(|v| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(v))
                .map(|(i, e)| (i, if e.u == v { e.v } else { e.u }))
                .collect()
        })
        .collect();
    let mut failed = HashSet::new();
    let mut residual = x.coords().to_vec();
    let mut witness = Vec::new();
    if search_member(&incident, &mut residual, &mut witness, &mut failed) {
        witness.sort_unstable();
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

fn search_member(
    incident: &[Vec<(usize, Vertex)>],
    residual: &mut Vec<i32>,
    witness: &mut Vec<usize>,
    failed: &mut HashSet<Vec<i32>>,
) -> bool {
    let Some(v) = residual.iter().position(|&c| c > 0) else {
        return true;
    };
    if failed.contains(residual) {
        return false;
    }
    for &(edge, other) in &incident[v] {
        if residual[other] == 0 {
            continue;
        }
        residual[v] -= 1;
        residual[other] -= 1;
        witness.push(edge);
        let ok = search_member(incident, residual, witness, failed);
        residual[v] += 1;
        residual[other] += 1;
        if ok {
            return true;
        }
        witness.pop();
    }
    failed.insert(residual.clone());
    false
}

/// Sum of the generators named by a witness.
pub fn witness_sum(g: &Graph, witness: &[usize]) -> LatticeVector {
    let d = g.vertex_count();
    let mut acc = LatticeVector::zero(d);
    for &i in witness {
        acc.add_assign(&LatticeVector::edge(d, g.edges()[i]));
    }
    acc
}

fn check_degree(max_degree: i64) -> Result<i32, SemigroupError> {
    if max_degree < 0 || max_degree % 2 != 0 || max_degree > i32::MAX as i64 {
        return Err(SemigroupError::BadDegree(max_degree));
    }
    Ok(max_degree as i32)
}

/// Every element of the monoid generated by `generators` with degree at most
/// `max_degree`, in graded-lex order. Generators must have positive degree.
pub fn closure(d: usize, generators: &[LatticeVector], max_degree: i32) -> BTreeSet<LatticeVector> {
    assert!(generators.iter().all(|g| g.degree() > 0 && g.len() == d));
    let mut seen: HashSet<LatticeVector> = HashSet::new();
    let zero = LatticeVector::zero(d);
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in generators {
                if x.degree() + g.degree() > max_degree {
                    continue;
                }
                let y = x.checked_add(g).expect("closure overflow");
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// `S_G` truncated at degree `max_degree`.
pub fn enumerate_semigroup(g: &Graph, max_degree: i64) -> Result<BTreeSet<LatticeVector>, SemigroupError> {
    let max_degree = check_degree(max_degree)?;
    let sg = SemigroupData::new(g)?;
    Ok(closure(g.vertex_count(), &sg.generators, max_degree))
}

/// Normalization elements up to a degree bound, computed by two
/// independent routes.
#[derive(Clone, Debug)]
pub struct NormalizationEnumeration {
    pub max_degree: i32,
    /// Route A: nonnegative vectors filtered through the cone and lattice.
    pub by_cone_filter: BTreeSet<LatticeVector>,
    /// Route B: closure under edge generators and `E_C + E_C'` vectors.
    pub by_closure: BTreeSet<LatticeVector>,
}

impl NormalizationEnumeration {
    pub fn agrees(&self) -> bool {
        self.by_cone_filter == self.by_closure
    }

    pub fn mismatch(&self) -> SemigroupError {
        SemigroupError::MethodMismatch {
            only_a: self.by_cone_filter.difference(&self.by_closure).count(),
            only_b: self.by_closure.difference(&self.by_cone_filter).count(),
        }
    }
}

/// Route A: every nonnegative integer vector of even degree at most
/// `max_degree` that lies in the cone and in `Z S_G`.
pub fn normalization_by_cone_filter(
    cone: &Cone,
    lattice: &Lattice,
    max_degree: i32,
) -> Result<BTreeSet<LatticeVector>, SemigroupError> {
    let d = cone.dimension();
    let hyperplanes: Vec<&[i32]> = cone.hyperplanes().iter().map(|h| h.coefficients()).collect();
    // A functional can only lose value once its last positive coordinate has
    // been assigned, so it may be tested from that point on.
    let mut checks_at: Vec<Vec<usize>> = vec![Vec::new(); d];
    for (k, coeffs) in hyperplanes.iter().enumerate() {
        let last_positive = coeffs.iter().rposition(|&c| c > 0).unwrap_or(0);
        checks_at[last_positive].push(k);
    }
    let mut active: Vec<Vec<usize>> = vec![Vec::new(); d];
    let mut acc = Vec::new();
    for (i, slot) in active.iter_mut().enumerate() {
        acc.extend(checks_at[i].iter().copied());
        *slot = acc.clone();
    }
    let mut out = BTreeSet::new();
    let mut coords = vec![0i32; d];
    let mut values = vec![0i64; hyperplanes.len()];
    let mut walker = ConeWalker { hyperplanes: &hyperplanes, active: &active, lattice, max_degree, out: &mut out };
    walker.walk(0, 0, &mut coords, &mut values)?;
    Ok(out)
}

struct ConeWalker<'a> {
    hyperplanes: &'a [&'a [i32]],
    active: &'a [Vec<usize>],
    lattice: &'a Lattice,
    max_degree: i32,
    out: &'a mut BTreeSet<LatticeVector>,
}

impl ConeWalker<'_> {
    fn walk(&mut self, i: usize, degree: i32, coords: &mut [i32], values: &mut [i64]) -> Result<(), SemigroupError> {
        let d = coords.len();
        if i == d {
            if degree % 2 == 0 {
                let v: Vec<i64> = coords.iter().map(|&c| c as i64).collect();
                if self.lattice.contains(&v)? {
                    self.out.insert(LatticeVector::new(coords.to_vec()));
                }
            }
            return Ok(());
        }
        let mut last = 0;
        for c in 0..=(self.max_degree - degree) {
            coords[i] = c;
            last = c;
            if c > 0 {
                for (k, h) in self.hyperplanes.iter().enumerate() {
                    values[k] += h[i] as i64;
                }
            }
            let mut violated = self.active[i].iter().filter(|&&k| values[k] < 0).peekable();
            if violated.peek().is_none() {
                self.walk(i + 1, degree + c, coords, values)?;
            } else if violated.all(|&k| self.hyperplanes[k][i] <= 0) {
                // Raising this coordinate further cannot repair the violation.
                break;
            }
        }
        for (k, h) in self.hyperplanes.iter().enumerate() {
            values[k] -= (h[i] as i64) * last as i64;
        }
        coords[i] = 0;
        Ok(())
    }
}

/// Generators of the normalization as a monoid: the edge generators plus
/// `E_C + E_C'` for every exceptional pair.
pub fn normalization_generators(g: &Graph, pairs: &[ExceptionalPair]) -> Vec<LatticeVector> {
    let d = g.vertex_count();
    let mut gens: Vec<LatticeVector> = g.edges().iter().map(|&e| LatticeVector::edge(d, e)).collect();
    gens.extend(pairs.iter().map(|p| p.vector(d)));
    gens
}

/// Normalization of `S_G` truncated at `max_degree`, computed by both routes.
pub fn normalization_routes(g: &Graph, max_degree: i64) -> Result<NormalizationEnumeration, SemigroupError> {
    let max_degree = check_degree(max_degree)?;
    let cone = Cone::new(g)?;
    let sg = SemigroupData::new(g)?;
    let by_cone_filter = normalization_by_cone_filter(&cone, &sg.lattice, max_degree)?;
    let pairs = exceptional_pairs(g)?;
    let by_closure = closure(g.vertex_count(), &normalization_generators(g, &pairs), max_degree);
    Ok(NormalizationEnumeration { max_degree, by_cone_filter, by_closure })
}

/// Normalization of `S_G` truncated at `max_degree`; fails with
/// [`SemigroupError::MethodMismatch`] when the two routes disagree.
pub fn enumerate_normalization(g: &Graph, max_degree: i64) -> Result<BTreeSet<LatticeVector>, SemigroupError> {
    let routes = normalization_routes(g, max_degree)?;
    if !routes.agrees() {
        return Err(routes.mismatch());
    }
    Ok(routes.by_closure)
}

/// Truncated normalization, truncated semigroup and their difference.
#[derive(Clone, Debug)]
pub struct HoleEnumeration {
    pub max_degree: i32,
    pub normalization: BTreeSet<LatticeVector>,
    pub semigroup: BTreeSet<LatticeVector>,
    pub holes: BTreeSet<LatticeVector>,
}

impl HoleEnumeration {
    pub fn new(g: &Graph, max_degree: i64) -> Result<Self, SemigroupError> {
        let normalization = enumerate_normalization(g, max_degree)?;
        let semigroup = enumerate_semigroup(g, max_degree)?;
        let holes = normalization.difference(&semigroup).cloned().collect();
        Ok(HoleEnumeration { max_degree: max_degree as i32, normalization, semigroup, holes })
    }

    /// Hole counts keyed by degree.
    pub fn holes_per_degree(&self) -> Vec<(i32, usize)> {
        let mut counts: HashMap<i32, usize> = HashMap::new();
        for h in &self.holes {
            *counts.entry(h.degree()).or_default() += 1;
        }
        let mut out: Vec<_> = counts.into_iter().collect();
        out.sort();
        out
    }
}

/// Holes of `S_G` up to `max_degree`: normalization elements that are not
/// sums of edge generators.
pub fn holes(g: &Graph, max_degree: i64) -> Result<BTreeSet<LatticeVector>, SemigroupError> {
    Ok(HoleEnumeration::new(g, max_degree)?.holes)
}

/// Per-hole record for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleRecord {
    pub degree: i32,
    pub vector: LatticeVector,
    pub in_cone: bool,
    pub in_lattice: bool,
    pub member: bool,
}
