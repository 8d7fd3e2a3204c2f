//! Graph and cactus-spec file formats.
//!
//! Text format: a header line `d m`, then `d` vertex labels one per line,
//! then `m` lines `u v`. Blank lines and lines starting with `#` are
//! ignored. JSON format: `{"vertices":[...],"edges":[[u,v],...]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build_triangular_cactus, CactusSpec, Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph_text(input: &str) -> Result<Graph, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| ParseError::Truncated("missing header".into()))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let parse_count = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| ParseError::Syntax { line, message: format!("expected a count, found `{s}`") })
    };
    let [d, m] = nums.as_slice() else {
        return Err(ParseError::Syntax { line, message: "header must be `d m`".into() });
    };
    let (d, m) = (parse_count(d)?, parse_count(m)?);
    let mut vertices = Vec::with_capacity(d);
    for k in 0..d {
        let (line, l) = lines.next().ok_or_else(|| ParseError::Truncated(format!("expected {d} vertices, got {k}")))?;
        if l.split_whitespace().count() != 1 {
            return Err(ParseError::Syntax { line, message: "vertex labels are single tokens".into() });
        }
        vertices.push(l.to_string());
    }
    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (line, l) = lines.next().ok_or_else(|| ParseError::Truncated(format!("expected {m} edges, got {k}")))?;
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = parts.as_slice() else {
            return Err(ParseError::Syntax { line, message: "edge lines are `u v`".into() });
        };
        edges.push((u.to_string(), v.to_string()));
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Syntax { line, message: "trailing content".into() });
    }
    Ok(Graph::from_edges(&vertices, &edges)?)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for l in g.labels() {
        out.push_str(l);
        out.push('\n');
    }
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(e.u), g.label(e.v)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edges().iter().map(|e| [g.label(e.u).to_string(), g.label(e.v).to_string()]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(String, String)> = self.edges.iter().map(|[u, v]| (u.clone(), v.clone())).collect();
        Graph::from_edges(&self.vertices, &edges)
    }
}

pub fn parse_graph_json(input: &str) -> Result<Graph, ParseError> {
    let parsed: GraphJson = serde_json::from_str(input)?;
    Ok(parsed.to_graph()?)
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("plain data serializes")
}

pub fn parse_cactus_spec(input: &str) -> Result<CactusSpec, ParseError> {
    let spec: CactusSpec = serde_json::from_str(input)?;
    spec.validate()?;
    Ok(spec)
}

/// Reads any supported graph input: the text format, a graph JSON object,
/// or a cactus spec JSON object.
pub fn parse_graph_any(input: &str) -> Result<Graph, ParseError> {
    let trimmed = input.trim_start();
    if !trimmed.starts_with('{') {
        return parse_graph_text(input);
    }
    let value: serde_json::Value = serde_json::from_str(input)?;
    if value.get("vertices").is_some() {
        Ok(serde_json::from_value::<GraphJson>(value)?.to_graph()?)
    } else {
        let spec: CactusSpec = serde_json::from_value(value)?;
        Ok(build_triangular_cactus(&spec)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn text_round_trip() {
        let g = fixtures::t2min();
        assert_eq!(parse_graph_text(&graph_to_text(&g)).unwrap(), g);
        assert_eq!(parse_graph_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(parse_graph_text(""), Err(ParseError::Truncated(_))));
        assert!(matches!(parse_graph_text("2 x\na\nb\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph_text("2 1\na\nb\n"), Err(ParseError::Truncated(_))));
        assert!(matches!(parse_graph_text("2 1\na\nb\na b c\n"), Err(ParseError::Syntax { line: 4, .. })));
        assert!(matches!(
            parse_graph_text("2 1\na\nb\na a\n"),
            Err(ParseError::Graph(GraphError::LoopEdge(_)))
        ));
        assert!(matches!(parse_graph_text("1 0\na\nextra\n"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_graph_text("# triangle\n3 3\na\nb\nc\n\na b\nb c\nc a\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    }

    #[test]
    fn cactus_spec_json() {
        let spec = parse_cactus_spec(r#"{"n":2,"s":[1,0,1,0]}"#).unwrap();
        assert_eq!(spec, CactusSpec::new(2, vec![1, 0, 1, 0]));
        assert!(matches!(parse_cactus_spec(r#"{"n":0,"s":[]}"#), Err(ParseError::Graph(GraphError::EmptySpec))));
        assert_eq!(parse_graph_any(r#"{"n":2,"s":[1,0,1,0]}"#).unwrap(), fixtures::t1min());
    }
}
