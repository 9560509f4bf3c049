//! Graph input and output: JSON, plain edge lists and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{BallInfo, Graph, Vertex};

/// Serialized form of a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ball: Option<BallInfo>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            edges: g.edges().to_vec(),
            ball: g.ball(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let g = Graph::from_edges(j.vertices, &j.edges)?;
        Ok(match j.ball {
            Some(ball) => {
                g.check_vertex(ball.center)?;
                g.with_ball(ball)
            }
            None => g,
        })
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    Graph::try_from(j)
}

/// Parses `u v` lines; `#` starts a comment. The vertex count is one more
/// than the largest id unless a `# vertices: n` header says otherwise.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut declared: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let (body, comment) = raw.split_once('#').unwrap_or((raw, ""));
        if let Some(n) = comment.trim().strip_prefix("vertices:") {
            let n = n
                .trim()
                .parse()
                .map_err(|_| GraphError::Parse(format!("line {}: bad vertex count", lineno + 1)))?;
            declared = Some(n);
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let parse = |s: &str| {
                    s.parse::<Vertex>()
                        .map_err(|_| GraphError::Parse(format!("line {}: bad vertex {s:?}", lineno + 1)))
                };
                edges.push((parse(u)?, parse(v)?));
            }
            _ => {
                return Err(GraphError::Parse(format!(
                    "line {}: expected two vertex ids",
                    lineno + 1
                )))
            }
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(declared.unwrap_or(inferred), &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices: {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("write to string");
    }
    out
}

/// Reads JSON when the text starts with `{`, an edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_edge_list(text)
    }
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

/// DOT export. With `edge_classes` (indexed like `g.edges()`), edges are
/// coloured and labelled by class.
pub fn to_dot(g: &Graph, edge_classes: Option<&[usize]>) -> String {
    to_dot_labelled(g, edge_classes, |_| None)
}

/// DOT export with an optional per-edge text label.
pub fn to_dot_labelled(
    g: &Graph,
    edge_classes: Option<&[usize]>,
    edge_label: impl Fn(usize) -> Option<String>,
) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").expect("write to string");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut attrs = Vec::new();
        if let Some(classes) = edge_classes {
            let c = classes[e];
            attrs.push(format!("color=\"{}\"", PALETTE[c % PALETTE.len()]));
            attrs.push(format!("class=\"h{c}\""));
        }
        if let Some(label) = edge_label(e) {
            attrs.push(format!("label=\"{}\"", label.replace('"', "\\\"")));
        }
        if attrs.is_empty() {
            writeln!(out, "  {u} -- {v};").expect("write to string");
        } else {
            writeln!(out, "  {u} -- {v} [{}];", attrs.join(", ")).expect("write to string");
        }
    }
    out.push_str("}\n");
    out
}
