//! Exact combinatorics of edge rings of finite simple graphs.
//!
//! The edge ring `K[G]` is the semigroup ring of `S_G`, the affine semigroup
//! generated by `e_i + e_j` over the edges `{i, j}` of `G`. This crate
//! decides normality through exceptional pairs of odd cycles, lists the
//! facets of the edge cone, enumerates the normalization and the holes of
//! `S_G` up to a degree bound, and for triangular cacti of diameter 4 builds
//! and checks a decomposition of the holes into families whose dimensions
//! decide Serre's condition (S2).

pub mod checks;
pub mod exceptional;
pub mod facets;
pub mod fixtures;
pub mod graph;
pub mod holes;
pub mod io;
pub mod lattice;
pub mod report;
pub mod semigroup;

pub use exceptional::{exceptional_pairs, is_normal, odd_cycle_condition, ExceptionalPair};
pub use facets::{supporting_hyperplanes, Cone, FundamentalSet, Hyperplane};
pub use graph::{build_triangular_cactus, CactusSpec, Cycle, Edge, Graph, GraphError, Vertex, VertexSet};
pub use holes::{classify, s2_verdict, verify_decomposition, CactusType, HoleFamily, S2Verdict};
pub use report::{analyze, AnalysisReport};
pub use semigroup::{LatticeVector, SemigroupData};
