//! Enumeration of convex even cycles.
//!
//! If `C` is a convex cycle of length `2l` and `a, b` are antipodal on `C`,
//! both arcs are geodesics and convexity forces `I(a, b) = C`. So every convex
//! even cycle is an interval `I(a, b)` of size `2 d(a, b)` inducing a cycle.
//! The enumerator scans all pairs at distance `2..=max_len/2`, keeps the
//! intervals with that shape (with `a` the smallest vertex, so each cycle is
//! reported once), and filters with the full convexity test.

use std::collections::HashMap;

use crate::error::{GraphError, Result};
use crate::graph::{Cycle, Graph, Vertex, VertexSet, UNREACHABLE};
use crate::par;

/// Default cycle cap: twice the diameter, which covers every isometric cycle.
pub fn default_max_len(g: &Graph) -> usize {
    (2 * g.diameter().unwrap_or_else(|| {
        // disconnected: use the largest finite eccentricity
        g.vertices()
            .flat_map(|x| g.distances_from(x).into_owned())
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0) as usize
    }))
    .max(4)
}

/// Every convex cycle of even length in `4..=max_len`, each listed once in
/// canonical form, sorted.
pub fn convex_even_cycles(g: &Graph, max_len: Option<usize>) -> Result<Vec<Cycle>> {
    let max_len = match max_len {
        Some(m) if m < 4 => return Err(GraphError::CycleCapTooSmall(m)),
        Some(m) => m,
        None => default_max_len(g),
    };
    let half = (max_len / 2) as u32;
    let n = g.vertex_count();
    let mut cycles = par::flat_map_range(n, |a| {
        let da = g.distances_from(a);
        let mut found = Vec::new();
        for b in a + 1..n {
            let d = da[b];
            if d == UNREACHABLE || d < 2 || d > half {
                continue;
            }
            if let Some(c) = interval_cycle(g, &da, a, b, d) {
                found.push(c);
            }
        }
        found
    });
    cycles.sort();
    cycles.dedup();
    Ok(cycles)
}

fn interval_cycle(g: &Graph, da: &[u32], a: Vertex, b: Vertex, d: u32) -> Option<Cycle> {
    let db = g.distances_from(b);
    let size = 2 * d as usize;
    let mut members = Vec::with_capacity(size);
    for z in g.vertices() {
        if da[z] != UNREACHABLE && db[z] != UNREACHABLE && da[z] + db[z] == d {
            if z < a || members.len() == size {
                return None;
            }
            members.push(z);
        }
    }
    if members.len() != size {
        return None;
    }
    let set = VertexSet::from(members);
    let order = induced_cycle_order(g, &set)?;
    g.is_convex(&set).then(|| Cycle::new(order))
}

/// Traverses `set` as a cycle if its induced subgraph is one.
fn induced_cycle_order(g: &Graph, set: &VertexSet) -> Option<Vec<Vertex>> {
    let inner = |v: Vertex| -> Vec<Vertex> {
        g.neighbors(v).iter().copied().filter(|&w| set.contains(w)).collect()
    };
    let start = set.first()?;
    let mut order = vec![start];
    let mut prev = start;
    let first = inner(start);
    if first.len() != 2 {
        return None;
    }
    let mut cur = first[0];
    while cur != start {
        let nb = inner(cur);
        if nb.len() != 2 || order.len() > set.len() {
            return None;
        }
        order.push(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (order.len() == set.len()).then_some(order)
}

/// Index from corners `(z, {x, y})` to the convex even cycles turning there.
#[derive(Debug, Clone, Default)]
pub struct CornerIndex {
    corners: HashMap<(Vertex, Vertex, Vertex), Vec<usize>>,
}

impl CornerIndex {
    pub fn new(cycles: &[Cycle]) -> Self {
        let mut corners: HashMap<_, Vec<usize>> = HashMap::new();
        for (id, c) in cycles.iter().enumerate() {
            for i in 0..c.len() {
                let z = c.at(i);
                let (x, y) = (c.at(i + c.len() - 1), c.at(i + 1));
                corners.entry((z, x.min(y), x.max(y))).or_default().push(id);
            }
        }
        CornerIndex { corners }
    }

    /// Cycles containing both edges `[z, x]` and `[z, y]`.
    pub fn at(&self, z: Vertex, x: Vertex, y: Vertex) -> &[usize] {
        self.corners
            .get(&(z, x.min(y), x.max(y)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Graph {
        let edges: Vec<_> = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect();
        Graph::from_edges(8, &edges).unwrap()
    }

    /// Brute force: every induced cycle through DFS, filtered by convexity.
    fn brute_force(g: &Graph, max_len: usize) -> Vec<Cycle> {
        fn extend(g: &Graph, path: &mut Vec<Vertex>, max_len: usize, out: &mut Vec<Cycle>) {
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if w == path[0] && path.len() >= 4 && path.len() % 2 == 0 {
                    out.push(Cycle::new(path.clone()));
                }
                if w > path[0] && !path.contains(&w) && path.len() < max_len {
                    path.push(w);
                    extend(g, path, max_len, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in g.vertices() {
            extend(g, &mut vec![s], max_len, &mut out);
        }
        out.sort();
        out.dedup();
        out.retain(|c| {
            let set = c.vertex_set();
            // induced and convex
            g.induced(&set).edge_count() == c.len() && g.is_convex(&set)
        });
        out
    }

    #[test]
    fn cube_faces() {
        let cycles = convex_even_cycles(&cube(), Some(8)).unwrap();
        assert_eq!(cycles.len(), 6);
        assert!(cycles.iter().all(|c| c.len() == 4));
        assert_eq!(cycles, brute_force(&cube(), 8));
    }

    #[test]
    fn hexagon_and_complete() {
        assert_eq!(
            convex_even_cycles(&Graph::cycle(6), None).unwrap(),
            vec![Cycle::new((0..6).collect())]
        );
        assert!(convex_even_cycles(&Graph::complete(4), None).unwrap().is_empty());
        // the cap excludes the hexagon
        assert!(convex_even_cycles(&Graph::cycle(6), Some(4)).unwrap().is_empty());
        assert_eq!(
            convex_even_cycles(&Graph::cycle(6), Some(3)),
            Err(GraphError::CycleCapTooSmall(3))
        );
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // K_{3,2}: no convex 4-cycle
        let k32 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(convex_even_cycles(&k32, None).unwrap().is_empty());
        assert_eq!(brute_force(&k32, 8), vec![]);
        // theta graph: two hexagons sharing a path of length 2
        let theta = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 6), (6, 7), (7, 0)],
        )
        .unwrap();
        assert_eq!(convex_even_cycles(&theta, None).unwrap(), brute_force(&theta, 8));
        for n in 4..=9 {
            let c = Graph::cycle(n);
            assert_eq!(convex_even_cycles(&c, None).unwrap(), brute_force(&c, n));
        }
    }

    #[test]
    fn corner_lookup() {
        let cycles = convex_even_cycles(&Graph::cycle(6), None).unwrap();
        let idx = CornerIndex::new(&cycles);
        assert_eq!(idx.at(0, 1, 5), &[0]);
        assert_eq!(idx.at(0, 5, 1), &[0]);
        assert!(idx.at(0, 1, 2).is_empty());
    }
}
