//! Named graphs shipped with the crate.
//!
//! `BOWTIE` (two triangles sharing a vertex), `TRIANGLE` and `DIAM3` (a
//! diameter-3 triangular cactus) are stored as graph text files; the cactus
//! fixtures are stored as cactus specs and built on load.

use crate::graph::{build_triangular_cactus, CactusSpec, Graph};
use crate::io::{parse_cactus_spec, parse_graph_text};

pub const BOWTIE_TXT: &str = include_str!("../fixtures/bowtie.txt");
pub const TRIANGLE_TXT: &str = include_str!("../fixtures/triangle.txt");
pub const DIAM3_TXT: &str = include_str!("../fixtures/diam3.txt");
pub const T1MIN_JSON: &str = include_str!("../fixtures/t1min.json");
pub const T2MIN_JSON: &str = include_str!("../fixtures/t2min.json");
pub const FRIEND3_JSON: &str = include_str!("../fixtures/friend3.json");
pub const N4A_JSON: &str = include_str!("../fixtures/n4a.json");
pub const N4B_JSON: &str = include_str!("../fixtures/n4b.json");
pub const N4C_JSON: &str = include_str!("../fixtures/n4c.json");

fn text(src: &str) -> Graph {
    parse_graph_text(src).expect("bundled fixture parses")
}

fn cactus(src: &str) -> Graph {
    build_triangular_cactus(&spec(src)).expect("bundled fixture builds")
}

fn spec(src: &str) -> CactusSpec {
    parse_cactus_spec(src).expect("bundled spec parses")
}

pub fn bowtie() -> Graph {
    text(BOWTIE_TXT)
}

pub fn triangle() -> Graph {
    text(TRIANGLE_TXT)
}

pub fn diam3() -> Graph {
    text(DIAM3_TXT)
}

/// Type 1 diameter-4 cactus, `n = 2`, `s = [1,0,1,0]`, 9 vertices.
pub fn t1min() -> Graph {
    cactus(T1MIN_JSON)
}

/// Type 2 diameter-4 cactus, `n = 3`, `s = [1,0,1,0,0,0]`, 11 vertices.
pub fn t2min() -> Graph {
    cactus(T2MIN_JSON)
}

/// Friendship graph on three triangles.
pub fn friend3() -> Graph {
    cactus(FRIEND3_JSON)
}

pub fn n4a() -> Graph {
    cactus(N4A_JSON)
}

pub fn n4b() -> Graph {
    cactus(N4B_JSON)
}

pub fn n4c() -> Graph {
    cactus(N4C_JSON)
}

pub fn t1min_spec() -> CactusSpec {
    spec(T1MIN_JSON)
}

pub fn t2min_spec() -> CactusSpec {
    spec(T2MIN_JSON)
}

/// The cycle `C_n` on labels `c0..c{n-1}`.
pub fn cycle(n: usize) -> Graph {
    let vs: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let es: Vec<(String, String)> = (0..n).map(|i| (vs[i].clone(), vs[(i + 1) % n].clone())).collect();
    Graph::from_edges(&vs, &es).expect("cycle is simple")
}

/// Every named fixture, including the bipartite 4-cycle.
pub fn all() -> Vec<(&'static str, Graph)> {
    let mut out = non_bipartite();
    out.push(("C4", cycle(4)));
    out
}

/// Named fixtures that contain an odd cycle.
pub fn non_bipartite() -> Vec<(&'static str, Graph)> {
    vec![
        ("TRIANGLE", triangle()),
        ("BOWTIE", bowtie()),
        ("FRIEND3", friend3()),
        ("DIAM3", diam3()),
        ("T1MIN", t1min()),
        ("T2MIN", t2min()),
        ("N4A", n4a()),
        ("N4B", n4b()),
        ("N4C", n4c()),
    ]
}

/// Looks up a fixture by (case-insensitive) name.
pub fn by_name(name: &str) -> Option<Graph> {
    all().into_iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|(_, g)| g)
}
