//! Hole families of edge semigroups of diameter-4 triangular cacti.
//!
//! Such a graph has a hub `w` with `n` triangles through it; the spokes
//! `x_i` carry `s_i` pendant triangles each. When `w` is regular (Type 1)
//! the holes are the cone points of the cosets `q + Z F_w` and `q + Z F_T`;
//! otherwise (Type 2) only the `q + Z F_T` cosets occur. Here `q` ranges
//! over sums of `E_C + E_C'` for mutually exceptional collections of pairs
//! and `T` over fundamental sets adjacent to `w` that avoid those cycles.
//!
//! Every family is checked against the brute-force hole enumeration, and
//! when all families have dimension `d - 1` the semigroup ring satisfies
//! Serre's condition (S2).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exceptional::{cactus_hub, exceptional_pairs, is_exceptional, ExceptionalPair, LemmaError};
use crate::facets::{face_of, fundamental_sets, is_regular, FacetError, FundamentalSet, Hyperplane, HyperplaneRecord};
use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::io::GraphJson;
use crate::lattice::{Lattice, LatticeError};
use crate::semigroup::{HoleEnumeration, LatticeVector, SemigroupError};

/// Degree slabs checked before an (S2) verdict is emitted.
pub const DEGREE_SLABS: [i32; 4] = [6, 8, 10, 12];

#[derive(Debug, Clone, Error)]
pub enum HoleError {
    #[error("graph is not a triangular cactus of diameter 4")]
    NotDiameter4Cactus,
    #[error("exceptional family is empty")]
    EmptyFamily,
    #[error("hole decomposition mismatch: {} holes uncovered, {} family points not holes", .0.missing.len(), .0.extra.len())]
    DecompositionMismatch(Box<DecompositionReport>),
    #[error(transparent)]
    Lemma(#[from] LemmaError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Facet(#[from] FacetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeTag {
    Type1,
    Type2,
    NotDiameter4Cactus,
}

/// A neighbor of the hub with its triangle partner and pendant triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spoke {
    pub vertex: Vertex,
    pub partner: Vertex,
    /// Other two vertices of each triangle at this spoke avoiding the hub.
    pub pendants: Vec<(Vertex, Vertex)>,
}

/// Classification of a graph relative to the diameter-4 cactus taxonomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusType {
    pub tag: TypeTag,
    pub hub: Option<Vertex>,
    pub spokes: Vec<Spoke>,
    /// Spokes without pendant triangles.
    pub zeta: VertexSet,
    /// Hub triangles whose two spokes are both in `zeta`.
    pub omega_pairs: Vec<(Vertex, Vertex)>,
}

impl CactusType {
    fn not_cactus() -> Self {
        CactusType {
            tag: TypeTag::NotDiameter4Cactus,
            hub: None,
            spokes: Vec::new(),
            zeta: VertexSet::empty(),
            omega_pairs: Vec::new(),
        }
    }

    /// Number of triangles through the hub.
    pub fn n(&self) -> usize {
        self.spokes.len() / 2
    }

    pub fn is_cactus(&self) -> bool {
        self.tag != TypeTag::NotDiameter4Cactus
    }

    pub fn spoke(&self, v: Vertex) -> Option<&Spoke> {
        self.spokes.iter().find(|s| s.vertex == v)
    }
}

pub fn classify(g: &Graph) -> Result<CactusType, HoleError> {
    if !g.is_connected() || !g.is_triangular_cactus()? || g.diameter()? != 4 {
        return Ok(CactusType::not_cactus());
    }
    let w = match cactus_hub(g) {
        Ok(w) => w,
        Err(LemmaError::AmbiguousCenter) => return Err(LemmaError::AmbiguousCenter.into()),
        Err(_) => return Ok(CactusType::not_cactus()),
    };
    let (blocks, _) = g.blocks_and_cutpoints();
    let mut spokes = Vec::new();
    for x in g.neighbors(w).iter() {
        let partner = g.neighbors(x).intersection(g.neighbors(w)).first().ok_or(HoleError::NotDiameter4Cactus)?;
        let pendants = blocks
            .iter()
            .filter(|b| b.contains(x) && !b.contains(w))
            .map(|b| {
                let rest = b.without(x).to_vec();
                (rest[0], rest[1])
            })
            .collect();
        spokes.push(Spoke { vertex: x, partner, pendants });
    }
    let zeta: VertexSet = spokes.iter().filter(|s| s.pendants.is_empty()).map(|s| s.vertex).collect();
    let omega_pairs = spokes
        .iter()
        .filter(|s| s.vertex < s.partner && zeta.contains(s.vertex) && zeta.contains(s.partner))
        .map(|s| (s.vertex, s.partner))
        .collect();
    let tag = if is_regular(g, w) { TypeTag::Type1 } else { TypeTag::Type2 };
    Ok(CactusType { tag, hub: Some(w), spokes, zeta, omega_pairs })
}

fn require_cactus(ty: &CactusType) -> Result<Vertex, HoleError> {
    ty.hub.filter(|_| ty.is_cactus()).ok_or(HoleError::NotDiameter4Cactus)
}

/// Fundamental-set building blocks for a fundamental set avoiding the hub:
/// pendant transversals, spoke-plus-partner-transversal sets, and for
/// Type 2 the ω choices alone and joined to spoke sets.
pub fn building_blocks(ty: &CactusType, g: &Graph) -> Result<Vec<VertexSet>, HoleError> {
    require_cactus(ty)?;
    let transversals = |spoke: &Spoke| -> Vec<VertexSet> {
        spoke.pendants.iter().fold(vec![VertexSet::empty()], |acc, &(a, b)| {
            acc.into_iter().flat_map(|s| [s.with(a), s.with(b)]).collect()
        })
    };
    let mut pendant_blocks = Vec::new();
    let mut spoke_blocks = Vec::new();
    for spoke in &ty.spokes {
        if !spoke.pendants.is_empty() {
            pendant_blocks.extend(transversals(spoke));
        }
        let partner = ty.spoke(spoke.partner).expect("partner is a spoke");
        spoke_blocks.extend(transversals(partner).into_iter().map(|t| t.with(spoke.vertex)));
    }
    let mut out = pendant_blocks;
    match ty.tag {
        TypeTag::Type1 => out.extend(spoke_blocks),
        TypeTag::Type2 => {
            let omegas: Vec<VertexSet> = ty.omega_pairs.iter().fold(vec![VertexSet::empty()], |acc, &(a, b)| {
                acc.into_iter().flat_map(|s| [s.with(a), s.with(b)]).collect()
            });
            for &om in &omegas {
                out.push(om);
                for &sb in &spoke_blocks {
                    let joined = om.union(sb);
                    if g.is_independent(joined).unwrap_or(false) {
                        out.push(joined);
                    }
                }
            }
        }
        TypeTag::NotDiameter4Cactus => unreachable!(),
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A collection of exceptional pairs any two cycles of which, taken from
/// different pairs, again form an exceptional pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExceptionalFamily {
    pub pairs: Vec<ExceptionalPair>,
}

impl ExceptionalFamily {
    pub fn p(&self) -> usize {
        self.pairs.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.pairs.iter().fold(VertexSet::empty(), |acc, p| acc.union(p.vertex_set()))
    }

    pub fn labels(&self, g: &Graph) -> Vec<[Vec<String>; 2]> {
        self.pairs.iter().map(|p| p.labels(g)).collect()
    }
}

fn compatible(g: &Graph, a: &ExceptionalPair, b: &ExceptionalPair) -> bool {
    a.cycles().into_iter().all(|c| b.cycles().into_iter().all(|d| is_exceptional(g, c, d)))
}

/// Exceptional families with `1 <= p <= floor(n/2)`, and separately any
/// compatible collection larger than that bound.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyCatalog {
    pub families: Vec<ExceptionalFamily>,
    pub over_bound: Vec<ExceptionalFamily>,
}

pub fn exceptional_families(g: &Graph) -> Result<FamilyCatalog, HoleError> {
    let ty = classify(g)?;
    require_cactus(&ty)?;
    let pairs = exceptional_pairs(g)?;
    let bound = ty.n() / 2;
    let mut catalog = FamilyCatalog::default();
    let mut stack: Vec<(usize, Vec<usize>)> = (0..pairs.len()).map(|i| (i + 1, vec![i])).collect();
    while let Some((next, members)) = stack.pop() {
        for j in next..pairs.len() {
            if members.iter().all(|&i| compatible(g, &pairs[i], &pairs[j])) {
                let mut grown = members.clone();
                grown.push(j);
                stack.push((j + 1, grown));
            }
        }
        let family = ExceptionalFamily { pairs: members.iter().map(|&i| pairs[i].clone()).collect() };
        if family.p() <= bound {
            catalog.families.push(family);
        } else {
            catalog.over_bound.push(family);
        }
    }
    catalog.families.sort_by(|a, b| a.p().cmp(&b.p()).then_with(|| a.cmp(b)));
    catalog.over_bound.sort();
    Ok(catalog)
}

/// `q = Σ (E_C + E_C')` over the family.
pub fn q_vector(g: &Graph, family: &ExceptionalFamily) -> Result<LatticeVector, HoleError> {
    let d = g.vertex_count();
    let mut pairs = family.pairs.iter();
    let mut q = pairs.next().ok_or(HoleError::EmptyFamily)?.vector(d);
    for p in pairs {
        q = q.checked_add(&p.vector(d)).ok_or(SemigroupError::Overflow)?;
    }
    Ok(q)
}

/// Fundamental sets `T` with `w ∈ N(T)` whose closed neighborhood avoids
/// every cycle of the family.
pub fn admissible_fundamental_sets(
    g: &Graph,
    hub: Vertex,
    fundamentals: &[FundamentalSet],
    family: &ExceptionalFamily,
) -> Vec<FundamentalSet> {
    let cycles = family.vertex_set();
    fundamentals
        .iter()
        .filter(|t| t.neighborhood.contains(hub) && t.closed_neighborhood().is_disjoint(cycles))
        .copied()
        .filter(|t| t.neighborhood == g.neighbors_of_set(t.vertices))
        .collect()
}

/// Cone points of a coset `q + Z F`, truncated by degree.
#[derive(Clone, Debug)]
pub struct HoleFamily {
    pub shift: LatticeVector,
    pub facet: Hyperplane,
    pub dimension: usize,
    pub lattice: Lattice,
    /// Exceptional families producing this shift and facet.
    pub sources: Vec<ExceptionalFamily>,
    pub points: BTreeSet<LatticeVector>,
}

impl HoleFamily {
    /// Whether `x - shift` lies in the facet lattice.
    pub fn coset_contains(&self, x: &LatticeVector) -> Result<bool, HoleError> {
        let diff = x.checked_sub(&self.shift).ok_or(SemigroupError::Overflow)?;
        Ok(self.lattice.contains(&diff.to_i64())?)
    }

    pub fn points_per_degree(&self) -> Vec<DegreeCount> {
        count_by_degree(self.points.iter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: i32,
    pub count: usize,
}

fn count_by_degree<'a>(xs: impl Iterator<Item = &'a LatticeVector>) -> Vec<DegreeCount> {
    let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
    for x in xs {
        *counts.entry(x.degree()).or_default() += 1;
    }
    counts.into_iter().map(|(degree, count)| DegreeCount { degree, count }).collect()
}

/// Builds the hole families of a classified cactus, with points drawn from
/// `normalization`.
pub fn families_from(
    g: &Graph,
    ty: &CactusType,
    normalization: &BTreeSet<LatticeVector>,
) -> Result<Vec<HoleFamily>, HoleError> {
    let hub = require_cactus(ty)?;
    let d = g.vertex_count();
    let catalog = exceptional_families(g)?;
    let fundamentals = fundamental_sets(g)?;
    let mut facets: Vec<(LatticeVector, Hyperplane, ExceptionalFamily)> = Vec::new();
    for family in &catalog.families {
        let q = q_vector(g, family)?;
        for t in admissible_fundamental_sets(g, hub, &fundamentals, family) {
            facets.push((q.clone(), Hyperplane::fundamental(g, t.vertices), family.clone()));
        }
        if ty.tag == TypeTag::Type1 {
            facets.push((q.clone(), Hyperplane::regular_vertex(d, hub), family.clone()));
        }
    }
    let mut out: Vec<HoleFamily> = Vec::new();
    for (shift, facet, source) in facets {
        if let Some(existing) =
            out.iter_mut().find(|f| f.shift == shift && f.facet.coefficients() == facet.coefficients())
        {
            existing.sources.push(source);
            continue;
        }
        let face = face_of(g, &facet)?;
        let lattice = face.lattice(g)?;
        let mut family = HoleFamily {
            shift,
            facet,
            dimension: face.dimension,
            lattice,
            sources: vec![source],
            points: BTreeSet::new(),
        };
        let mut points = BTreeSet::new();
        for x in normalization {
            if family.coset_contains(x)? {
                points.insert(x.clone());
            }
        }
        family.points = points;
        out.push(family);
    }
    Ok(out)
}

/// The hole families of a diameter-4 triangular cactus, truncated at
/// `max_degree`.
pub fn hole_decomposition(g: &Graph, max_degree: i64) -> Result<Vec<HoleFamily>, HoleError> {
    let ty = classify(g)?;
    require_cactus(&ty)?;
    let enumeration = HoleEnumeration::new(g, max_degree)?;
    families_from(g, &ty, &enumeration.normalization)
}

/// Serializable description of one hole family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub shift: LatticeVector,
    pub shift_support: Vec<String>,
    pub facet: HyperplaneRecord,
    pub dimension: usize,
    pub sources: Vec<Vec<[Vec<String>; 2]>>,
    pub points_per_degree: Vec<DegreeCount>,
}

impl FamilySummary {
    pub fn new(g: &Graph, f: &HoleFamily) -> Self {
        let support = f.shift.coords().iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i);
        FamilySummary {
            shift: f.shift.clone(),
            shift_support: support.map(|v| g.label(v).to_string()).collect(),
            facet: f.facet.record(g),
            dimension: f.dimension,
            sources: f.sources.iter().map(|s| s.labels(g)).collect(),
            points_per_degree: f.points_per_degree(),
        }
    }
}

/// Hole count against family coverage up to one degree bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlabCheck {
    pub max_degree: i32,
    pub holes: usize,
    pub covered: usize,
    pub equal: bool,
}

/// Outcome of comparing the enumerated holes with the union of the family
/// point sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub max_degree: i32,
    pub type_tag: TypeTag,
    pub vertex_count: usize,
    pub families: Vec<FamilySummary>,
    pub holes_per_degree: Vec<DegreeCount>,
    pub hole_count: usize,
    pub union_count: usize,
    /// Holes not covered by any family.
    pub missing: Vec<LatticeVector>,
    /// Family points that are not holes.
    pub extra: Vec<LatticeVector>,
    pub slabs: Vec<SlabCheck>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.slabs.iter().all(|s| s.equal)
    }

    pub fn all_codimension_one(&self) -> bool {
        self.families.iter().all(|f| f.dimension + 1 == self.vertex_count)
    }
}

fn slab_bounds(max_degree: i32) -> Vec<i32> {
    let mut bounds: Vec<i32> = DEGREE_SLABS.iter().copied().filter(|&b| b < max_degree).collect();
    bounds.push(max_degree);
    bounds
}

/// Builds the families and the report without failing on a mismatch.
pub fn decomposition_report(g: &Graph, max_degree: i64) -> Result<(DecompositionReport, Vec<HoleFamily>), HoleError> {
    let ty = classify(g)?;
    require_cactus(&ty)?;
    let enumeration = HoleEnumeration::new(g, max_degree)?;
    let families = families_from(g, &ty, &enumeration.normalization)?;
    let union: BTreeSet<LatticeVector> = families.iter().flat_map(|f| f.points.iter().cloned()).collect();
    let holes = &enumeration.holes;
    let slabs = slab_bounds(enumeration.max_degree)
        .into_iter()
        .map(|b| {
            let h: BTreeSet<_> = holes.iter().filter(|x| x.degree() <= b).collect();
            let u: BTreeSet<_> = union.iter().filter(|x| x.degree() <= b).collect();
            SlabCheck { max_degree: b, holes: h.len(), covered: u.len(), equal: h == u }
        })
        .collect();
    let report = DecompositionReport {
        max_degree: enumeration.max_degree,
        type_tag: ty.tag,
        vertex_count: g.vertex_count(),
        families: families.iter().map(|f| FamilySummary::new(g, f)).collect(),
        holes_per_degree: count_by_degree(holes.iter()),
        hole_count: holes.len(),
        union_count: union.len(),
        missing: holes.difference(&union).cloned().collect(),
        extra: union.difference(holes).cloned().collect(),
        slabs,
    };
    Ok((report, families))
}

/// Checks that the enumerated holes equal the union of the family points at
/// every degree slab up to `max_degree`.
pub fn verify_decomposition(g: &Graph, max_degree: i64) -> Result<DecompositionReport, HoleError> {
    let (report, _) = decomposition_report(g, max_degree)?;
    if report.passed() {
        Ok(report)
    } else {
        Err(HoleError::DecompositionMismatch(Box::new(report)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum S2Status {
    /// Every hole family has dimension `d - 1` (or there are no holes).
    Holds,
    /// No certificate either way.
    Inconclusive,
}

/// Normality and (S2) verdicts with the evidence behind them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Verdict {
    pub graph: GraphJson,
    pub max_degree: i32,
    pub type_tag: TypeTag,
    pub exceptional_pairs: Vec<[Vec<String>; 2]>,
    pub normal: bool,
    pub s2: bool,
    pub s2_status: S2Status,
    pub hole_count: usize,
    pub holes_per_degree: Vec<DegreeCount>,
    /// Present when the graph is a diameter-4 triangular cactus.
    pub decomposition: Option<DecompositionReport>,
}

/// Decides normality and, where a certificate exists, Serre's (S2).
///
/// Normal rings satisfy (S2). A diameter-4 triangular cactus satisfies (S2)
/// when its hole families cover exactly the enumerated holes at every slab
/// and all have dimension `d - 1`; a lower-dimensional family, or a
/// non-normal graph outside this class, gives an inconclusive verdict.
pub fn s2_verdict(g: &Graph, max_degree: i64) -> Result<S2Verdict, HoleError> {
    let pairs = exceptional_pairs(g)?;
    let normal = pairs.is_empty();
    let ty = classify(g)?;
    let (enumeration_holes, decomposition) = if ty.is_cactus() {
        let report = verify_decomposition(g, max_degree)?;
        (report.holes_per_degree.clone(), Some(report))
    } else if g.is_bipartite() {
        // Bipartite edge rings are normal; the cone is not full-dimensional.
        (Vec::new(), None)
    } else {
        let enumeration = HoleEnumeration::new(g, max_degree)?;
        (count_by_degree(enumeration.holes.iter()), None)
    };
    let hole_count = enumeration_holes.iter().map(|c| c.count).sum();
    if normal && hole_count != 0 {
        return Err(SemigroupError::MethodMismatch { only_a: hole_count, only_b: 0 }.into());
    }
    let s2_status = match (&decomposition, normal) {
        (_, true) => S2Status::Holds,
        (Some(report), false) if report.all_codimension_one() => S2Status::Holds,
        _ => S2Status::Inconclusive,
    };
    Ok(S2Verdict {
        graph: GraphJson::from_graph(g),
        max_degree: max_degree as i32,
        type_tag: ty.tag,
        exceptional_pairs: pairs.iter().map(|p| p.labels(g)).collect(),
        normal,
        s2: s2_status == S2Status::Holds,
        s2_status,
        hole_count,
        holes_per_degree: enumeration_holes,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::is_fundamental;
    use crate::fixtures;
    use crate::graph::{build_triangular_cactus, CactusSpec};
    use crate::semigroup::member;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.vertex_set(labels).unwrap()
    }

    fn cactus(n: usize, s: &[usize]) -> Graph {
        build_triangular_cactus(&CactusSpec::new(n, s.to_vec())).unwrap()
    }

    #[test]
    fn classify_examples() {
        let t1 = fixtures::t1min();
        let ty = classify(&t1).unwrap();
        assert_eq!(ty.tag, TypeTag::Type1);
        assert_eq!(ty.zeta, set(&t1, &["x2", "x4"]));
        assert!(ty.zeta.len() <= ty.n());
        let t2 = fixtures::t2min();
        let ty = classify(&t2).unwrap();
        assert_eq!(ty.tag, TypeTag::Type2);
        assert_eq!(ty.zeta, set(&t2, &["x2", "x4", "x5", "x6"]));
        assert_eq!(ty.omega_pairs, vec![(t2.vertex("x5").unwrap(), t2.vertex("x6").unwrap())]);
        assert_eq!(classify(&fixtures::friend3()).unwrap().tag, TypeTag::NotDiameter4Cactus);
        assert_eq!(classify(&fixtures::cycle(4)).unwrap().tag, TypeTag::NotDiameter4Cactus);
    }

    #[test]
    fn family_examples() {
        let t1 = fixtures::t1min();
        let catalog = exceptional_families(&t1).unwrap();
        assert_eq!(catalog.families.len(), 1);
        assert_eq!(catalog.families[0].p(), 1);
        let q = q_vector(&t1, &catalog.families[0]).unwrap();
        assert_eq!(q, LatticeVector::indicator(9, set(&t1, &["x1", "y1_1", "y1_2", "x3", "y3_1", "y3_2"])));
        assert_eq!(member(&t1, &q).unwrap(), None);

        let g = fixtures::n4b();
        let catalog = exceptional_families(&g).unwrap();
        let two: Vec<_> = catalog.families.iter().filter(|f| f.p() == 2).collect();
        assert_eq!(two.len(), 3);
        assert!(catalog.over_bound.is_empty());
        let q2 = q_vector(&g, two[0]).unwrap();
        assert_eq!(q2.degree(), 12);
        assert_eq!(member(&g, &q2).unwrap(), None);

        // Pairs sharing spokes never combine.
        let g = cactus(4, &[1, 1, 1, 0, 0, 0, 0, 0]);
        let catalog = exceptional_families(&g).unwrap();
        assert!(catalog.families.iter().all(|f| f.p() == 1));
        assert_eq!(catalog.families.len(), exceptional_pairs(&g).unwrap().len());

        assert!(matches!(q_vector(&t1, &ExceptionalFamily { pairs: vec![] }), Err(HoleError::EmptyFamily)));
    }

    #[test]
    fn admissible_examples() {
        let t1 = fixtures::t1min();
        let fam = &exceptional_families(&t1).unwrap().families[0];
        let fs = fundamental_sets(&t1).unwrap();
        assert!(admissible_fundamental_sets(&t1, 0, &fs, fam).is_empty());

        let t2 = fixtures::t2min();
        let fam = &exceptional_families(&t2).unwrap().families[0];
        let fs = fundamental_sets(&t2).unwrap();
        let adm: Vec<VertexSet> = admissible_fundamental_sets(&t2, 0, &fs, fam).iter().map(|t| t.vertices).collect();
        assert_eq!(adm, vec![set(&t2, &["x5"]), set(&t2, &["x6"])]);
    }

    #[test]
    fn admissibility_is_hereditary() {
        let g = fixtures::n4b();
        let fs = fundamental_sets(&g).unwrap();
        let catalog = exceptional_families(&g).unwrap();
        for big in catalog.families.iter().filter(|f| f.p() == 2) {
            let adm_big = admissible_fundamental_sets(&g, 0, &fs, big);
            for p in &big.pairs {
                let small = ExceptionalFamily { pairs: vec![p.clone()] };
                let adm_small = admissible_fundamental_sets(&g, 0, &fs, &small);
                assert!(adm_big.iter().all(|t| adm_small.contains(t)));
            }
        }
    }

    #[test]
    fn decomposition_shapes() {
        let t1 = fixtures::t1min();
        let fams = hole_decomposition(&t1, 8).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].facet, Hyperplane::regular_vertex(9, 0));
        assert!(fams[0].points.contains(&fams[0].shift));

        let t2 = fixtures::t2min();
        let fams = hole_decomposition(&t2, 6).unwrap();
        let facets: Vec<_> = fams.iter().map(|f| f.facet.kind()).collect();
        use crate::facets::HyperplaneSource::Fundamental;
        assert_eq!(facets, vec![Fundamental(set(&t2, &["x5"])), Fundamental(set(&t2, &["x6"]))]);

        assert!(matches!(hole_decomposition(&fixtures::friend3(), 6), Err(HoleError::NotDiameter4Cactus)));
    }

    #[test]
    fn verify_examples() {
        let r = verify_decomposition(&fixtures::t1min(), 8).unwrap();
        assert_eq!(r.families.len(), 1);
        assert_eq!(r.families[0].dimension, 8);
        let r = verify_decomposition(&fixtures::t2min(), 8).unwrap();
        assert!(r.families.iter().all(|f| f.dimension == 10));
        let r = verify_decomposition(&fixtures::t1min(), 0).unwrap();
        assert_eq!((r.hole_count, r.union_count), (0, 0));
    }

    #[test]
    fn verdict_examples() {
        let v = s2_verdict(&fixtures::t1min(), 8).unwrap();
        assert!(!v.normal && v.s2);
        let v = s2_verdict(&fixtures::t2min(), 8).unwrap();
        assert!(!v.normal && v.s2);
        let v = s2_verdict(&fixtures::friend3(), 8).unwrap();
        assert!(v.normal && v.s2 && v.hole_count == 0 && v.decomposition.is_none());
        let v = s2_verdict(&fixtures::cycle(6), 8).unwrap();
        assert!(v.normal && v.s2 && v.hole_count == 0);
    }

    #[test]
    fn building_block_closure() {
        for g in [fixtures::t1min(), fixtures::t2min()] {
            let ty = classify(&g).unwrap();
            let w = ty.hub.unwrap();
            let blocks = building_blocks(&ty, &g).unwrap();
            for &b in &blocks {
                assert!(is_fundamental(&g, b), "{:?}", g.set_labels(b));
            }
            for t in fundamental_sets(&g).unwrap() {
                if t.vertices.contains(w) {
                    continue;
                }
                let union = blocks.iter().filter(|b| b.is_subset(t.vertices)).fold(VertexSet::empty(), |a, &b| a.union(b));
                assert_eq!(union, t.vertices, "{:?}", g.set_labels(t.vertices));
            }
        }
    }

    #[test]
    fn spoke_blocks_touch_the_hub() {
        for g in [fixtures::t1min(), fixtures::t2min()] {
            let ty = classify(&g).unwrap();
            let w = ty.hub.unwrap();
            for b in building_blocks(&ty, &g).unwrap() {
                let has_spoke = b.iter().any(|v| g.has_edge(v, w));
                assert_eq!(has_spoke, g.neighbors_of_set(b).contains(w));
            }
        }
    }

    #[test]
    fn zeta_edge_law() {
        let t1 = fixtures::t1min();
        let ty = classify(&t1).unwrap();
        assert!(ty.spokes.iter().all(|s| !(ty.zeta.contains(s.vertex) && ty.zeta.contains(s.partner))));
        let t2 = fixtures::t2min();
        assert!(!classify(&t2).unwrap().omega_pairs.is_empty());
    }
}
