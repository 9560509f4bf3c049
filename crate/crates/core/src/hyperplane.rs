//! Hyperplanes: classes of edges under "same triangle" and "opposite in a
//! convex even cycle", with their sectors, carriers, fibres and angles.

use std::collections::BTreeSet;
use std::fmt;

use petgraph::unionfind::UnionFind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cycles::{convex_even_cycles, default_max_len};
use crate::error::{GraphError, Result};
use crate::graph::{Cycle, Graph, Vertex, VertexSet, UNREACHABLE};
use crate::par;

/// Seed for the random geodesics sampled by [`verify_bighyp`].
pub const DEFAULT_GEODESIC_SEED: u64 = 0x6d65_6469_616e;

/// Violations kept per report item; the counts stay exact.
const MAX_LISTED: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub id: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorDecomposition {
    pub hyperplane: usize,
    /// Ordered by smallest vertex.
    pub sectors: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Carrier {
    pub hyperplane: usize,
    pub vertices: VertexSet,
    pub fibres: Vec<VertexSet>,
    /// The hyperplane crosses no convex even cycle, so the carrier is made of
    /// its cliques alone.
    pub degenerate: bool,
}

/// A rational multiple of pi, always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Angle {
    pub numerator: u64,
    pub denominator: u64,
}

impl Angle {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(numerator > 0 && denominator > 0, "angles are positive");
        let g = gcd(numerator, denominator);
        Angle {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    /// `pi / angle`, when that is an integer.
    pub fn lambda(self) -> Result<u64> {
        if self.numerator == 1 {
            Ok(self.denominator)
        } else {
            Err(GraphError::NonIntegralLambda(self.to_string()))
        }
    }

    pub fn to_radians(self) -> f64 {
        std::f64::consts::PI * self.numerator as f64 / self.denominator as f64
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.numerator, self.denominator) {
            (1, 1) => write!(f, "pi"),
            (1, d) => write!(f, "pi/{d}"),
            (n, 1) => write!(f, "{n}pi"),
            (n, d) => write!(f, "{n}pi/{d}"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All hyperplane data of one graph, computed once.
#[derive(Debug, Clone)]
pub struct HyperplaneSystem<'g> {
    g: &'g Graph,
    max_len: usize,
    cycles: Vec<Cycle>,
    hyperplanes: Vec<Hyperplane>,
    edge_class: Vec<usize>,
    /// Per hyperplane, the ids of convex even cycles containing its edges.
    crossed_cycles: Vec<Vec<usize>>,
    sectors: Vec<Vec<VertexSet>>,
    /// `sector_of[j][v]` indexes into `sectors[j]`.
    sector_of: Vec<Vec<usize>>,
}

impl<'g> HyperplaneSystem<'g> {
    pub fn new(g: &'g Graph, max_len: Option<usize>) -> Result<Self> {
        let max_len = max_len.unwrap_or_else(|| default_max_len(g));
        let cycles = convex_even_cycles(g, Some(max_len))?;
        let m = g.edge_count();
        let mut uf = UnionFind::<usize>::new(m);
        let idx = |u, v| g.edge_index(u, v).expect("edge of g");
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            for &w in g.neighbors(u) {
                if w != v && g.has_edge(v, w) {
                    uf.union(e, idx(u, w));
                }
            }
        }
        for c in &cycles {
            for i in 0..c.len() / 2 {
                let (a, b) = c.edge(i);
                let (x, y) = c.edge(c.opposite_edge(i));
                uf.union(idx(a, b), idx(x, y));
            }
        }
        // number classes by their smallest edge
        let mut class_id = vec![usize::MAX; m];
        let mut edge_class = vec![0; m];
        let mut hyperplanes: Vec<Hyperplane> = Vec::new();
        for e in 0..m {
            let root = uf.find(e);
            if class_id[root] == usize::MAX {
                class_id[root] = hyperplanes.len();
                hyperplanes.push(Hyperplane {
                    id: hyperplanes.len(),
                    edges: Vec::new(),
                });
            }
            edge_class[e] = class_id[root];
            hyperplanes[class_id[root]].edges.push(g.edges()[e]);
        }
        let mut crossed_cycles = vec![Vec::new(); hyperplanes.len()];
        for (id, c) in cycles.iter().enumerate() {
            let classes: BTreeSet<usize> = c.edges().map(|(u, v)| edge_class[idx(u, v)]).collect();
            for j in classes {
                crossed_cycles[j].push(id);
            }
        }
        let sectors: Vec<Vec<VertexSet>> = par::map_range(hyperplanes.len(), |j| {
            g.components_filtered(|u, v| edge_class[idx(u, v)] != j)
        });
        let sector_of = sectors
            .iter()
            .map(|parts| {
                let mut of = vec![0; g.vertex_count()];
                for (s, part) in parts.iter().enumerate() {
                    for v in part.iter() {
                        of[v] = s;
                    }
                }
                of
            })
            .collect();
        Ok(HyperplaneSystem {
            g,
            max_len,
            cycles,
            hyperplanes,
            edge_class,
            crossed_cycles,
            sectors,
            sector_of,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    fn check(&self, j: usize) -> Result<()> {
        if j < self.hyperplanes.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownHyperplane(j))
        }
    }

    /// Hyperplane containing the edge `u-v`.
    pub fn hyperplane_of(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.g
            .edge_index(u, v)
            .map(|e| self.edge_class[e])
            .ok_or(GraphError::MissingEdge(u, v))
    }

    pub fn sectors(&self, j: usize) -> Result<SectorDecomposition> {
        self.check(j)?;
        Ok(SectorDecomposition {
            hyperplane: j,
            sectors: self.sectors[j].clone(),
        })
    }

    /// Index, within [`Self::sectors`], of the sector of `j` containing `v`.
    pub fn sector_of(&self, j: usize, v: Vertex) -> usize {
        self.sector_of[j][v]
    }

    pub fn separates(&self, j: usize, x: Vertex, y: Vertex) -> bool {
        self.sector_of[j][x] != self.sector_of[j][y]
    }

    pub fn separating(&self, x: Vertex, y: Vertex) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.separates(j, x, y)).collect()
    }

    /// Whether `j` has vertices of `s` in two distinct sectors.
    pub fn crosses(&self, j: usize, s: &VertexSet) -> bool {
        let mut it = s.iter().map(|v| self.sector_of[j][v]);
        let first = it.next();
        first.is_some_and(|f| it.any(|t| t != f))
    }

    /// Hyperplanes leaving `s` in one sector that does not contain `x`.
    pub fn separating_point_set(&self, x: Vertex, s: &VertexSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| {
                !self.crosses(j, s) && s.first().is_some_and(|y| self.separates(j, x, y))
            })
            .collect()
    }

    /// Hyperplanes leaving `a` and `b` in two distinct single sectors.
    pub fn separating_sets(&self, a: &VertexSet, b: &VertexSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| {
                !self.crosses(j, a)
                    && !self.crosses(j, b)
                    && matches!((a.first(), b.first()), (Some(x), Some(y)) if self.separates(j, x, y))
            })
            .collect()
    }

    /// Hyperplanes with an edge having exactly one endpoint in `s`.
    pub fn tangent(&self, s: &VertexSet) -> Vec<usize> {
        let mut out: BTreeSet<usize> = BTreeSet::new();
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if s.contains(u) != s.contains(v) {
                out.insert(self.edge_class[e]);
            }
        }
        out.into_iter().collect()
    }

    /// Convex even cycles crossed by `j`.
    pub fn crossed_cycles(&self, j: usize) -> impl Iterator<Item = &Cycle> + '_ {
        self.crossed_cycles[j].iter().map(move |&c| &self.cycles[c])
    }

    pub fn carrier(&self, j: usize) -> Result<Carrier> {
        self.check(j)?;
        let mut vertices: BTreeSet<Vertex> = BTreeSet::new();
        for &(u, v) in &self.hyperplanes[j].edges {
            vertices.insert(u);
            vertices.insert(v);
        }
        for c in self.crossed_cycles(j) {
            vertices.extend(c.vertices().iter().copied());
        }
        let vertices: VertexSet = vertices.into_iter().collect();
        let fibres = self.g.components_filtered(|u, v| {
            vertices.contains(u) && vertices.contains(v) && self.hyperplane_of(u, v) != Ok(j)
        });
        let fibres = fibres
            .into_iter()
            .filter(|f| f.first().is_some_and(|v| vertices.contains(v)))
            .collect();
        Ok(Carrier {
            hyperplane: j,
            vertices,
            fibres,
            degenerate: self.crossed_cycles[j].is_empty(),
        })
    }

    /// Crosses only triangles and convex 4-cycles.
    pub fn is_square_hyperplane(&self, j: usize) -> bool {
        self.crossed_cycles(j).all(|c| c.len() == 4)
    }

    fn check_pair(&self, j1: usize, j2: usize) -> Result<()> {
        self.check(j1)?;
        self.check(j2)?;
        if j1 == j2 {
            return Err(GraphError::IdenticalHyperplanes);
        }
        Ok(())
    }

    /// Cycles crossed by both hyperplanes.
    pub fn shared_cycles(&self, j1: usize, j2: usize) -> Vec<&Cycle> {
        let other: BTreeSet<usize> = self.crossed_cycles[j2].iter().copied().collect();
        self.crossed_cycles[j1]
            .iter()
            .filter(|c| other.contains(c))
            .map(|&c| &self.cycles[c])
            .collect()
    }

    pub fn transverse(&self, j1: usize, j2: usize) -> Result<bool> {
        self.check_pair(j1, j2)?;
        Ok(!self.shared_cycles(j1, j2).is_empty())
    }

    /// The angle of `j1, j2` at one convex even cycle crossed by both.
    pub fn angle_at(&self, j1: usize, j2: usize, c: &Cycle) -> Option<Angle> {
        let n = c.len();
        let positions = |j: usize| -> Vec<usize> {
            (0..n)
                .filter(|&i| {
                    let (u, v) = c.edge(i);
                    self.hyperplane_of(u, v) == Ok(j)
                })
                .collect()
        };
        let (p1, p2) = (positions(j1), positions(j2));
        // edge i spans cycle positions i and i + 1
        let d = p1
            .iter()
            .flat_map(|&a| p2.iter().map(move |&b| (a, b)))
            .flat_map(|(a, b)| {
                [(a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1)]
                    .map(|(s, t)| c.cyclic_distance(s % n, t % n))
            })
            .min()?;
        Some(Angle::new(2 * (1 + d as u64), n as u64))
    }

    /// The angle between two transverse hyperplanes, checked to agree on
    /// every convex even cycle they both cross.
    pub fn angle(&self, j1: usize, j2: usize) -> Result<Angle> {
        self.check_pair(j1, j2)?;
        let shared = self.shared_cycles(j1, j2);
        let mut found: Option<Angle> = None;
        for c in shared {
            let a = self.angle_at(j1, j2, c).expect("shared cycle");
            match found {
                None => found = Some(a),
                Some(b) if a != b => {
                    return Err(GraphError::AngleDisagreement {
                        first: j1,
                        second: j2,
                        found: a.to_string(),
                        expected: b.to_string(),
                    })
                }
                Some(_) => {}
            }
        }
        found.ok_or(GraphError::NotTransverse(j1, j2))
    }

    /// Every transverse pair `j1 < j2` with its angle (or the disagreement).
    pub fn angles(&self) -> Vec<(usize, usize, Result<Angle>)> {
        let mut out = Vec::new();
        for j1 in 0..self.len() {
            for j2 in j1 + 1..self.len() {
                if !self.shared_cycles(j1, j2).is_empty() {
                    out.push((j1, j2, self.angle(j1, j2)));
                }
            }
        }
        out
    }

    /// The clique through the first edge of `j`.
    pub fn representative_clique(&self, j: usize) -> VertexSet {
        let (u, v) = self.hyperplanes[j].edges[0];
        clique_through(self.g, u, v)
    }
}

/// A maximal clique containing the edge `u-v`, built greedily in vertex order.
pub fn clique_through(g: &Graph, u: Vertex, v: Vertex) -> VertexSet {
    let mut clique = vec![u, v];
    for &w in g.neighbors(u) {
        if clique.iter().all(|&c| c == w || g.has_edge(c, w)) && !clique.contains(&w) {
            clique.push(w);
        }
    }
    clique.into_iter().collect()
}

pub fn hyperplanes(g: &Graph, max_len: Option<usize>) -> Result<Vec<Hyperplane>> {
    Ok(HyperplaneSystem::new(g, max_len)?.hyperplanes)
}

pub fn sectors(g: &Graph, j: &Hyperplane) -> Result<SectorDecomposition> {
    let edges: BTreeSet<(Vertex, Vertex)> = j.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for &(u, v) in &edges {
        if !g.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
    }
    Ok(SectorDecomposition {
        hyperplane: j.id,
        sectors: g.components_filtered(|u, v| !edges.contains(&(u.min(v), u.max(v)))),
    })
}

pub fn separating_hyperplanes(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    max_len: Option<usize>,
) -> Result<Vec<Hyperplane>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let sys = HyperplaneSystem::new(g, max_len)?;
    Ok(sys
        .separating(x, y)
        .into_iter()
        .map(|j| sys.hyperplanes[j].clone())
        .collect())
}

/// Which item of the hyperplane theorem a violation breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BigHypViolation {
    /// A clique whose edges fall into several hyperplanes.
    SplitClique { clique: VertexSet, hyperplanes: Vec<usize> },
    /// Two vertices of a clique of `hyperplane` share a sector.
    CliqueNotSeparated { clique: VertexSet, hyperplane: usize, x: Vertex, y: Vertex },
    /// A sector of `hyperplane` misses a clique of it.
    SectorMissesClique { clique: VertexSet, hyperplane: usize, sector: usize },
    /// `w` lies on a geodesic between `x, y` inside the sector but not in it.
    NonConvexSector { hyperplane: usize, sector: usize, x: Vertex, y: Vertex, w: Vertex },
    SeparationCount { x: Vertex, y: Vertex, distance: u32, separating: usize },
    DoubleCrossing { x: Vertex, y: Vertex, path: Vec<Vertex>, hyperplane: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemReport {
    pub passed: bool,
    pub checked: usize,
    pub violation_count: usize,
    /// The first few violations, in a deterministic order.
    pub violations: Vec<BigHypViolation>,
}

impl ItemReport {
    fn from_checks(checked: usize, violations: Vec<BigHypViolation>) -> Self {
        let violation_count = violations.len();
        ItemReport {
            passed: violation_count == 0,
            checked,
            violation_count,
            violations: violations.into_iter().take(MAX_LISTED).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigHypReport {
    pub passed: bool,
    pub hyperplane_count: usize,
    pub cap_used: usize,
    /// Cliques are separated by their hyperplane, one vertex per sector.
    pub separation: ItemReport,
    /// Sectors are convex.
    pub convexity: ItemReport,
    /// Geodesics cross each hyperplane at most once and distance equals the
    /// number of separating hyperplanes.
    pub geodesics: ItemReport,
}

impl HyperplaneSystem<'_> {
    pub fn verify_bighyp(&self, seed: u64) -> BigHypReport {
        let separation = self.check_clique_separation();
        let convexity = self.check_sector_convexity();
        let geodesics = self.check_geodesics(seed);
        BigHypReport {
            passed: separation.passed && convexity.passed && geodesics.passed,
            hyperplane_count: self.len(),
            cap_used: self.max_len,
            separation,
            convexity,
            geodesics,
        }
    }

    fn check_clique_separation(&self) -> ItemReport {
        let cliques: Vec<VertexSet> = self.g.cliques().into_iter().filter(|c| c.len() >= 2).collect();
        let per_clique = par::map_slice(&cliques, |clique| {
            let vs = clique.as_slice();
            let classes: BTreeSet<usize> = vs
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.hyperplane_of(a, b).expect("clique edge"))
                .collect();
            if classes.len() > 1 {
                return vec![BigHypViolation::SplitClique {
                    clique: clique.clone(),
                    hyperplanes: classes.into_iter().collect(),
                }];
            }
            let j = *classes.first().expect("clique has an edge");
            let mut out = Vec::new();
            for (i, &x) in vs.iter().enumerate() {
                for &y in &vs[i + 1..] {
                    if !self.separates(j, x, y) {
                        out.push(BigHypViolation::CliqueNotSeparated {
                            clique: clique.clone(),
                            hyperplane: j,
                            x,
                            y,
                        });
                    }
                }
            }
            let hit: BTreeSet<usize> = vs.iter().map(|&v| self.sector_of[j][v]).collect();
            for sector in 0..self.sectors[j].len() {
                if !hit.contains(&sector) {
                    out.push(BigHypViolation::SectorMissesClique {
                        clique: clique.clone(),
                        hyperplane: j,
                        sector,
                    });
                }
            }
            out
        });
        ItemReport::from_checks(cliques.len(), per_clique.into_iter().flatten().collect())
    }

    fn check_sector_convexity(&self) -> ItemReport {
        let all: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|j| (0..self.sectors[j].len()).map(move |s| (j, s)))
            .collect();
        let violations = par::map_slice(&all, |&(j, s)| {
            self.g
                .convexity_violation(&self.sectors[j][s])
                .map(|(x, y, w)| BigHypViolation::NonConvexSector {
                    hyperplane: j,
                    sector: s,
                    x,
                    y,
                    w,
                })
        });
        ItemReport::from_checks(all.len(), violations.into_iter().flatten().collect())
    }

    fn check_geodesics(&self, seed: u64) -> ItemReport {
        let g = self.g;
        let n = g.vertex_count();
        let per_source = par::map_range(n, |x| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (x as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let dx = g.distances_from(x);
            let parent = bfs_parents(g, x);
            let mut out = Vec::new();
            let mut checked = 0;
            for y in x + 1..n {
                if dx[y] == UNREACHABLE {
                    continue;
                }
                let sep = self.separating(x, y).len();
                checked += 1;
                if sep != dx[y] as usize {
                    out.push(BigHypViolation::SeparationCount {
                        x,
                        y,
                        distance: dx[y],
                        separating: sep,
                    });
                }
                let tree_path = path_to_root(&parent, y);
                let random_path = random_geodesic(g, &dx, y, &mut rng);
                for path in [tree_path, random_path] {
                    if let Some(j) = self.double_crossing(&path) {
                        out.push(BigHypViolation::DoubleCrossing { x, y, path, hyperplane: j });
                    }
                }
            }
            (checked, out)
        });
        let checked = per_source.iter().map(|(c, _)| c).sum();
        ItemReport::from_checks(checked, per_source.into_iter().flat_map(|(_, v)| v).collect())
    }

    /// First hyperplane crossed twice by `path`.
    pub fn double_crossing(&self, path: &[Vertex]) -> Option<usize> {
        let mut seen = BTreeSet::new();
        path.windows(2)
            .map(|w| self.hyperplane_of(w[0], w[1]).expect("path edge"))
            .find(|&j| !seen.insert(j))
    }
}

fn bfs_parents(g: &Graph, root: Vertex) -> Vec<Vertex> {
    let d = g.distances_from(root);
    g.vertices()
        .map(|v| {
            if v == root || d[v] == UNREACHABLE {
                v
            } else {
                *g.neighbors(v).iter().find(|&&w| d[w] + 1 == d[v]).expect("bfs parent")
            }
        })
        .collect()
}

/// Path from the BFS root to `y`, root first.
fn path_to_root(parent: &[Vertex], y: Vertex) -> Vec<Vertex> {
    let mut path = vec![y];
    let mut cur = y;
    while parent[cur] != cur {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// A geodesic from the source of `d` to `y`, choosing uniformly among the
/// predecessors at each step.
fn random_geodesic(g: &Graph, d: &[u32], y: Vertex, rng: &mut impl Rng) -> Vec<Vertex> {
    let mut path = vec![y];
    let mut cur = y;
    while d[cur] > 0 {
        let preds: Vec<Vertex> = g.neighbors(cur).iter().copied().filter(|&w| d[w] + 1 == d[cur]).collect();
        cur = preds[rng.random_range(0..preds.len())];
        path.push(cur);
    }
    path.reverse();
    path
}

pub fn verify_bighyp(g: &Graph, max_len: Option<usize>) -> Result<BigHypReport> {
    Ok(HyperplaneSystem::new(g, max_len)?.verify_bighyp(DEFAULT_GEODESIC_SEED))
}

/// Result of embedding a graph into a product of complete graphs, one factor
/// per hyperplane, by taking gates on a clique of each hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueEmbedding {
    /// One clique per hyperplane, indexed by hyperplane id.
    pub factors: Vec<VertexSet>,
    /// `coordinates[v][j]` is the gate of `v` on `factors[j]`.
    pub coordinates: Vec<Vec<Vertex>>,
}

impl CliqueEmbedding {
    /// Hamming distance between the images of `x` and `y`.
    pub fn image_distance(&self, x: Vertex, y: Vertex) -> usize {
        self.coordinates[x]
            .iter()
            .zip(&self.coordinates[y])
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Pairs whose image distance differs from their graph distance.
    pub fn distortions(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        let n = g.vertex_count();
        par::flat_map_range(n, |x| {
            let dx = g.distances_from(x);
            (x + 1..n)
                .filter(|&y| dx[y] as usize != self.image_distance(x, y))
                .map(|y| (x, y))
                .collect()
        })
    }
}

impl HyperplaneSystem<'_> {
    pub fn clique_embedding(&self) -> Result<CliqueEmbedding> {
        let factors: Vec<VertexSet> = (0..self.len()).map(|j| self.representative_clique(j)).collect();
        let gates: Vec<Vec<Vertex>> = factors
            .iter()
            .map(|f| self.g.gate_map(f))
            .collect::<Result<_>>()?;
        let coordinates = self
            .g
            .vertices()
            .map(|v| gates.iter().map(|gm| gm[v]).collect())
            .collect();
        Ok(CliqueEmbedding {
            factors,
            coordinates,
        })
    }

    /// For a square-hyperplane, whether `x -> (gate on a fibre, gate on a
    /// clique)` is an isometry from the carrier onto the product.
    pub fn carrier_splits(&self, j: usize) -> Result<bool> {
        let carrier = self.carrier(j)?;
        let clique = self.representative_clique(j);
        let Some(fibre) = carrier.fibres.first() else {
            return Ok(false);
        };
        let to_fibre = self.g.gate_map(fibre)?;
        let to_clique = self.g.gate_map(&clique)?;
        let image: Vec<(Vertex, Vertex)> = carrier.vertices.iter().map(|v| (to_fibre[v], to_clique[v])).collect();
        let distinct: BTreeSet<_> = image.iter().collect();
        if distinct.len() != fibre.len() * clique.len() || image.len() != distinct.len() {
            return Ok(false);
        }
        let fibre_graph_dist = |a: Vertex, b: Vertex| self.g.dist(a, b);
        let vs = carrier.vertices.as_slice();
        for (i, &x) in vs.iter().enumerate() {
            for (k, &y) in vs.iter().enumerate().skip(i + 1) {
                let (fx, cx) = image[i];
                let (fy, cy) = image[k];
                let product = fibre_graph_dist(fx, fy) + u32::from(cx != cy);
                if product != self.g.dist(x, y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
