//! Full analysis of one graph, as printed and serialized by the CLI.

use serde::{Deserialize, Serialize};

use crate::exceptional::exceptional_pairs;
use crate::facets::{fundamental_sets, regular_vertices, supporting_hyperplanes, HyperplaneRecord};
use crate::graph::Graph;
use crate::holes::{classify, s2_verdict, DegreeCount, FamilySummary, HoleError, S2Status, TypeTag};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: Option<usize>,
    pub triangular_cactus: bool,
    pub type_tag: TypeTag,
    pub hub: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalitySection {
    pub normal: bool,
    pub exceptional_pairs: Vec<[Vec<String>; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetSection {
    pub regular_vertices: Vec<String>,
    pub fundamental_sets: Vec<Vec<String>>,
    pub hyperplanes: Vec<HyperplaneRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleSection {
    pub max_degree: i32,
    pub total: usize,
    pub per_degree: Vec<DegreeCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub normal: bool,
    pub s2: bool,
    pub s2_status: S2Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub normality: NormalitySection,
    /// Absent for bipartite graphs, whose cone is not full-dimensional.
    pub facets: Option<FacetSection>,
    /// Absent for normal graphs.
    pub holes: Option<HoleSection>,
    pub families: Vec<FamilySummary>,
    pub verdict: Verdicts,
}

/// Runs normality, facet, hole and (S2) analysis up to `max_degree`.
pub fn analyze(g: &Graph, max_degree: i64) -> Result<AnalysisReport, HoleError> {
    let ty = classify(g)?;
    let pairs = exceptional_pairs(g)?;
    let verdict = s2_verdict(g, max_degree)?;
    let labels = |s| g.set_labels(s).into_iter().map(String::from).collect::<Vec<_>>();
    let graph = GraphSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        diameter: g.diameter().ok(),
        triangular_cactus: g.is_triangular_cactus()?,
        type_tag: ty.tag,
        hub: ty.hub.map(|w| g.label(w).to_string()),
    };
    let facets = if g.is_bipartite() {
        None
    } else {
        Some(FacetSection {
            regular_vertices: labels(regular_vertices(g)?),
            fundamental_sets: fundamental_sets(g)?.into_iter().map(|t| labels(t.vertices)).collect(),
            hyperplanes: supporting_hyperplanes(g)?.iter().map(|h| h.record(g)).collect(),
        })
    };
    let holes = (!verdict.normal).then(|| HoleSection {
        max_degree: verdict.max_degree,
        total: verdict.hole_count,
        per_degree: verdict.holes_per_degree.clone(),
    });
    Ok(AnalysisReport {
        graph,
        normality: NormalitySection {
            normal: verdict.normal,
            exceptional_pairs: pairs.iter().map(|p| p.labels(g)).collect(),
        },
        facets,
        holes,
        families: verdict.decomposition.as_ref().map(|r| r.families.clone()).unwrap_or_default(),
        verdict: Verdicts { normal: verdict.normal, s2: verdict.s2, s2_status: verdict.s2_status },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn t1min_report() {
        let r = analyze(&fixtures::t1min(), 8).unwrap();
        assert!(!r.verdict.normal && r.verdict.s2);
        assert_eq!(r.families.len(), 1);
        assert_eq!(r.families[0].dimension, 8);
        assert_eq!(r.graph.diameter, Some(4));
        assert_eq!(r.graph.hub.as_deref(), Some("w"));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<AnalysisReport>(&json).unwrap(), r);
    }

    #[test]
    fn bowtie_has_no_hole_section() {
        let r = analyze(&fixtures::bowtie(), 8).unwrap();
        assert!(r.verdict.normal && r.verdict.s2);
        assert!(r.holes.is_none() && r.families.is_empty());
        assert_eq!(r.graph.type_tag, TypeTag::NotDiameter4Cactus);
    }

    #[test]
    fn bipartite_graph() {
        let r = analyze(&fixtures::cycle(4), 8).unwrap();
        assert!(r.verdict.normal && r.verdict.s2);
        assert!(r.facets.is_none() && r.holes.is_none());
    }

    #[test]
    fn non_cactus_non_normal_is_inconclusive() {
        // Two triangles joined by a path of length 2.
        let g = Graph::from_edges(
            &["a", "b", "c", "m", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "m"), ("m", "d"), ("d", "e"), ("e", "f"), ("d", "f")],
        )
        .unwrap();
        let r = analyze(&g, 8).unwrap();
        assert!(!r.verdict.normal);
        assert_eq!(r.verdict.s2_status, S2Status::Inconclusive);
        assert!(r.holes.unwrap().total > 0);
    }
}
