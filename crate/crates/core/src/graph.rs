//! Finite simple graphs with cached all-pairs distances.

use std::borrow::Cow;
use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::par;

pub type Vertex = usize;

/// Marker for "no path" in raw distance rows.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs distances are cached up to this many vertices.
pub const DEFAULT_DISTANCE_CACHE_CAP: usize = 20_000;

/// Metadata for a graph that is a finite ball of a larger (possibly infinite) graph.
///
/// Checks over such graphs only quantify over tuples lying within
/// `radius - margin` of `center`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallInfo {
    pub center: Vertex,
    pub radius: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<usize>,
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Immutable once built. Distances are computed lazily on first use.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    ball: Option<BallInfo>,
    cache_cap: usize,
    distances: OnceLock<Option<Vec<u32>>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges)
            .field("ball", &self.ball)
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency && self.ball == other.ball
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<Vertex>>) -> Self {
        let edges = adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        Graph {
            adjacency,
            edges,
            ball: None,
            cache_cap: DEFAULT_DISTANCE_CACHE_CAP,
            distances: OnceLock::new(),
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges).expect("valid complete graph")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    /// Marks this graph as a ball of a larger graph.
    pub fn with_ball(mut self, ball: BallInfo) -> Self {
        self.ball = Some(ball);
        self
    }

    /// Changes the vertex count above which distances are recomputed on demand.
    pub fn with_distance_cache_cap(mut self, cap: usize) -> Self {
        self.cache_cap = cap;
        self.distances = OnceLock::new();
        self
    }

    pub fn ball(&self) -> Option<BallInfo> {
        self.ball
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// BFS distances from `source` (with [`UNREACHABLE`] for other components).
    pub fn bfs(&self, source: Vertex) -> Vec<u32> {
        self.bfs_filtered(source, |_, _| true)
    }

    /// BFS using only edges accepted by `keep`.
    pub fn bfs_filtered(&self, source: Vertex, keep: impl Fn(Vertex, Vertex) -> bool) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == UNREACHABLE && keep(u, v) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn distance_matrix(&self) -> Option<&[u32]> {
        self.distances
            .get_or_init(|| {
                let n = self.vertex_count();
                (n <= self.cache_cap).then(|| par::map_range(n, |s| self.bfs(s)).concat())
            })
            .as_deref()
    }

    /// Row of distances from `x`, borrowed from the cache when available.
    pub fn distances_from(&self, x: Vertex) -> Cow<'_, [u32]> {
        let n = self.vertex_count();
        match self.distance_matrix() {
            Some(m) => Cow::Borrowed(&m[x * n..(x + 1) * n]),
            None => Cow::Owned(self.bfs(x)),
        }
    }

    /// Raw distance, [`UNREACHABLE`] when disconnected.
    pub fn dist(&self, x: Vertex, y: Vertex) -> u32 {
        let n = self.vertex_count();
        match self.distance_matrix() {
            Some(m) => m[x * n + y],
            None => self.bfs(x)[y],
        }
    }

    /// Graph distance between `x` and `y`.
    pub fn distance(&self, x: Vertex, y: Vertex) -> Result<usize> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        match self.dist(x, y) {
            UNREACHABLE => Err(GraphError::Unreachable(x, y)),
            d => Ok(d as usize),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// First pair `(0, v)` with `v` unreachable from 0.
    pub fn disconnected_pair(&self) -> Option<(Vertex, Vertex)> {
        if self.vertex_count() == 0 {
            return None;
        }
        self.bfs(0)
            .iter()
            .position(|&d| d == UNREACHABLE)
            .map(|v| (0, v))
    }

    pub fn diameter(&self) -> Option<usize> {
        let rows = par::map_range(self.vertex_count(), |x| {
            self.distances_from(x).iter().copied().max().unwrap_or(0)
        });
        let d = rows.into_iter().max().unwrap_or(0);
        (d != UNREACHABLE).then_some(d as usize)
    }

    /// The interval `I(x, y)`: vertices on some geodesic between `x` and `y`.
    pub fn interval(&self, x: Vertex, y: Vertex) -> Result<VertexSet> {
        let d = self.distance(x, y)? as u32;
        let dx = self.distances_from(x);
        let dy = self.distances_from(y);
        Ok(self
            .vertices()
            .filter(|&z| dx[z] != UNREACHABLE && dy[z] != UNREACHABLE && dx[z] + dy[z] == d)
            .collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_edge().is_none()
    }

    /// An edge whose endpoints share a BFS level (witness of an odd cycle).
    pub fn odd_edge(&self) -> Option<(Vertex, Vertex)> {
        let mut level = vec![UNREACHABLE; self.vertex_count()];
        for s in self.vertices() {
            if level[s] != UNREACHABLE {
                continue;
            }
            let d = self.bfs(s);
            for v in self.vertices() {
                if d[v] != UNREACHABLE {
                    level[v] = d[v];
                }
            }
        }
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| level[u] % 2 == level[v] % 2)
    }

    /// An odd cycle, if the graph is not bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<Vertex>> {
        let (u, v) = self.odd_edge()?;
        // climb BFS parents from a root of u's component
        let root = {
            let d = self.bfs(u);
            self.vertices().find(|&w| d[w] != UNREACHABLE).expect("u itself")
        };
        let dist = self.bfs(root);
        let parent = |w: Vertex| {
            self.neighbors(w)
                .iter()
                .copied()
                .find(|&p| dist[p] + 1 == dist[w])
        };
        let (mut a, mut b) = (u, v);
        let (mut left, mut right) = (vec![a], vec![b]);
        while a != b {
            a = parent(a).expect("non-root has a parent");
            b = parent(b).expect("non-root has a parent");
            left.push(a);
            right.push(b);
        }
        // u -> lca, then down to v; the edge v-u closes the cycle
        right.pop();
        right.reverse();
        left.extend(right);
        Some(left)
    }

    /// All maximal cliques, each as a sorted vertex set; list sorted.
    pub fn cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let candidates: Vec<Vertex> = self.vertices().collect();
        self.bron_kerbosch(&mut Vec::new(), candidates, Vec::new(), &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<Vertex>,
        p: Vec<Vertex>,
        mut x: Vec<Vertex>,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(VertexSet::from_iter(r.iter().copied()));
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.has_edge(u, v)).count())
            .expect("p is non-empty");
        let mut p = p;
        let branch: Vec<Vertex> = p
            .iter()
            .copied()
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        for v in branch {
            let nbrs = self.neighbors(v);
            let p_next = p.iter().copied().filter(|w| nbrs.binary_search(w).is_ok()).collect();
            let x_next = x.iter().copied().filter(|w| nbrs.binary_search(w).is_ok()).collect();
            r.push(v);
            self.bron_kerbosch(r, p_next, x_next, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    /// Whether every geodesic between two vertices of `s` stays in `s`.
    ///
    /// A geodesic leaving `s` has a last vertex `x` in `s` followed by a
    /// neighbour outside `s` that is one step closer to the target; checking
    /// geodesic neighbours of every pair is therefore enough.
    pub fn is_convex(&self, s: &VertexSet) -> bool {
        self.convexity_violation(s).is_none()
    }

    /// A pair `(x, y)` of `s` together with a vertex of `I(x, y)` outside `s`.
    pub fn convexity_violation(&self, s: &VertexSet) -> Option<(Vertex, Vertex, Vertex)> {
        let mask = s.mask(self.vertex_count());
        let members = s.as_slice();
        par::find_first(members.len(), |i| {
            let y = members[i];
            let dy = self.distances_from(y);
            for &x in members {
                if x == y {
                    continue;
                }
                if dy[x] == UNREACHABLE {
                    return Some((x, y, x));
                }
                for &w in self.neighbors(x) {
                    if !mask[w] && dy[w] + 1 == dy[x] {
                        return Some((x, y, w));
                    }
                }
            }
            None
        })
    }

    /// Whether the subgraph induced on `s` is connected.
    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        let Some(&start) = s.as_slice().first() else {
            return true;
        };
        let mask = s.mask(self.vertex_count());
        let d = self.bfs_filtered(start, |_, v| mask[v]);
        s.iter().all(|v| d[v] != UNREACHABLE)
    }

    /// Whether distances inside the subgraph induced on `s` equal graph distances.
    pub fn is_isometric(&self, s: &VertexSet) -> bool {
        let mask = s.mask(self.vertex_count());
        par::find_first(s.len(), |i| {
            let x = s.as_slice()[i];
            let inner = self.bfs_filtered(x, |_, v| mask[v]);
            let outer = self.distances_from(x);
            s.iter().any(|y| inner[y] != outer[y]).then_some(())
        })
        .is_none()
    }

    /// The gate of `x` in `s`: the vertex of `s` lying on a geodesic from `x`
    /// to every vertex of `s`.
    pub fn gate(&self, s: &VertexSet, x: Vertex) -> Result<Vertex> {
        self.check_vertex(x)?;
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let dx = self.distances_from(x);
        let candidate = s
            .iter()
            .min_by_key(|&y| dx[y])
            .expect("non-empty set");
        if dx[candidate] == UNREACHABLE {
            return Err(GraphError::NotGated(x));
        }
        let dc = self.distances_from(candidate);
        if s.iter().all(|z| dc[z] != UNREACHABLE && dx[z] == dx[candidate] + dc[z]) {
            Ok(candidate)
        } else {
            Err(GraphError::NotGated(x))
        }
    }

    /// Gate of every vertex, `None` where it does not exist.
    pub fn gatedness(&self, s: &VertexSet) -> Vec<Option<Vertex>> {
        par::map_range(self.vertex_count(), |x| self.gate(s, x).ok())
    }

    /// The full gate map, failing at the first vertex without a gate.
    pub fn gate_map(&self, s: &VertexSet) -> Result<Vec<Vertex>> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.gatedness(s)
            .into_iter()
            .enumerate()
            .map(|(x, g)| g.ok_or(GraphError::NotGated(x)))
            .collect()
    }

    pub fn is_gated(&self, s: &VertexSet) -> bool {
        !s.is_empty() && self.gatedness(s).iter().all(Option::is_some)
    }

    /// The gate image of `source` on the gated set `target`.
    pub fn projection(&self, target: &VertexSet, source: &VertexSet) -> Result<VertexSet> {
        source.iter().map(|x| self.gate(target, x)).collect()
    }

    /// The subgraph induced on `s`, with vertices renumbered in the order of `s`.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let pos = |v: Vertex| s.as_slice().binary_search(&v).ok();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)))
            .collect();
        Graph::from_edges(s.len(), &edges).expect("induced subgraph is simple")
    }

    /// Connected components of the graph restricted to the edges accepted by
    /// `keep`, ordered by smallest vertex.
    pub fn components_filtered(&self, keep: impl Fn(Vertex, Vertex) -> bool) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX && keep(u, v) {
                        label[v] = id;
                        comp.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out.into_iter().map(VertexSet::from_iter).collect()
    }
}

/// A sorted set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    /// Membership mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

/// A cycle stored as a vertex sequence, canonicalised so that the smallest
/// vertex comes first and the second entry is the smaller of its two
/// neighbours on the cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    /// Canonicalises a cyclic vertex sequence.
    pub fn new(vertices: Vec<Vertex>) -> Self {
        assert!(vertices.len() >= 3, "cycles have length at least 3");
        let len = vertices.len();
        let start = (0..len).min_by_key(|&i| vertices[i]).expect("non-empty");
        let next = vertices[(start + 1) % len];
        let prev = vertices[(start + len - 1) % len];
        let seq = if next <= prev {
            (0..len).map(|k| vertices[(start + k) % len]).collect()
        } else {
            (0..len).map(|k| vertices[(start + len - k) % len]).collect()
        };
        Cycle(seq)
    }

    /// Checks the cycle against `g`: consecutive vertices adjacent, no repeats.
    pub fn validate(&self, g: &Graph) -> bool {
        let set: VertexSet = self.0.iter().copied().collect();
        set.len() == self.len()
            && self.edges().all(|(u, v)| u < g.vertex_count() && g.has_edge(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Vertex at position `i` (taken cyclically).
    pub fn at(&self, i: usize) -> Vertex {
        self.0[i % self.len()]
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    /// Edge `i` joins positions `i` and `i + 1`.
    pub fn edge(&self, i: usize) -> (Vertex, Vertex) {
        let (u, v) = (self.at(i), self.at(i + 1));
        (u.min(v), u.max(v))
    }

    /// Edges as ordered pairs `(min, max)`, in cycle order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.len()).map(|i| self.edge(i))
    }

    /// Position of the edge `{u, v}` along the cycle.
    pub fn edge_position(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        (0..self.len()).find(|&i| self.edge(i) == key)
    }

    /// Position of the edge opposite to edge `i` (even cycles only).
    pub fn opposite_edge(&self, i: usize) -> usize {
        (i + self.len() / 2) % self.len()
    }

    /// The vertex opposite to `v` (even cycles only).
    pub fn opposite_vertex(&self, v: Vertex) -> Option<Vertex> {
        self.position(v).map(|i| self.at(i + self.len() / 2))
    }

    /// Distance between positions measured along the cycle.
    pub fn cyclic_distance(&self, i: usize, j: usize) -> usize {
        let len = self.len();
        let d = (i + len - j) % len;
        d.min(len - d)
    }
}
