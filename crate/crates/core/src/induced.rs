//! Search for small forbidden induced subgraphs.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    /// Two triangles glued along an edge.
    K4Minus,
    /// Two 4-cycles glued along two consecutive edges.
    K32,
}

/// Vertices inducing `pattern`, lexicographically first by construction.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<VertexSet> {
    match pattern {
        Pattern::K4Minus => find_k4_minus(g),
        Pattern::K32 => find_k32(g),
    }
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    g.neighbors(u)
        .iter()
        .copied()
        .filter(|&w| g.has_edge(v, w))
        .collect()
}

fn find_k4_minus(g: &Graph) -> Option<VertexSet> {
    g.edges().iter().find_map(|&(u, v)| {
        let common = common_neighbors(g, u, v);
        common.iter().enumerate().find_map(|(i, &a)| {
            common[i + 1..]
                .iter()
                .find(|&&b| !g.has_edge(a, b))
                .map(|&b| VertexSet::from([u, v, a, b]))
        })
    })
}

fn find_k32(g: &Graph) -> Option<VertexSet> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let common = common_neighbors(g, a, b);
            if common.len() < 3 {
                continue;
            }
            for (i, &x) in common.iter().enumerate() {
                for (j, &y) in common.iter().enumerate().skip(i + 1) {
                    if g.has_edge(x, y) {
                        continue;
                    }
                    if let Some(&z) = common[j + 1..]
                        .iter()
                        .find(|&&z| !g.has_edge(x, z) && !g.has_edge(y, z))
                    {
                        return Some(VertexSet::from([a, b, x, y, z]));
                    }
                }
            }
        }
    }
    None
}

/// Whether `set` induces `pattern` (used to replay witnesses).
pub fn induces(g: &Graph, set: &VertexSet, pattern: Pattern) -> bool {
    let h = g.induced(set);
    let mut degrees: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    degrees.sort_unstable();
    match pattern {
        Pattern::K4Minus => degrees == [2, 2, 3, 3],
        Pattern::K32 => degrees == [2, 2, 2, 3, 3] && h.is_bipartite(),
    }
}
