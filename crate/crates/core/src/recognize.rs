//! Exhaustive checkers for the mediangle axioms and recognizers for the
//! median, quasi-median, mediangle and bipartite mediangle classes.
//!
//! Every verdict is exact relative to the cycle cap it reports. Failing
//! verdicts carry the lexicographically first counterexample, which
//! [`Witness::replay`] re-checks independently of the search that found it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::cycles::{convex_even_cycles, default_max_len, CornerIndex};
use crate::error::Result;
use crate::graph::{Cycle, Graph, Vertex, VertexSet, UNREACHABLE};
use crate::induced::{find_induced, induces, Pattern};
use crate::par;

/// Knobs shared by all recognizers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Longest convex even cycle searched; defaults to twice the diameter.
    pub max_len: Option<usize>,
    /// Ball mode margin; defaults to the ball's own margin, else `max_len / 2`.
    pub margin: Option<usize>,
}

impl CheckOptions {
    pub fn with_max_len(max_len: usize) -> Self {
        CheckOptions {
            max_len: Some(max_len),
            ..Self::default()
        }
    }
}

/// A concrete counterexample to one axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Witness {
    Disconnected {
        from: Vertex,
        to: Vertex,
    },
    Triangle {
        o: Vertex,
        x: Vertex,
        y: Vertex,
    },
    InducedK4Minus {
        vertices: VertexSet,
    },
    Cycle {
        o: Vertex,
        x: Vertex,
        y: Vertex,
        z: Vertex,
    },
    EvenCycleIntersection {
        first: Cycle,
        second: Cycle,
        shared_edges: Vec<(Vertex, Vertex)>,
    },
    Median {
        x: Vertex,
        y: Vertex,
        z: Vertex,
        medians: Vec<Vertex>,
    },
    Quadrangle {
        o: Vertex,
        x: Vertex,
        y: Vertex,
        z: Vertex,
    },
    InducedK32 {
        vertices: VertexSet,
    },
    LongConvexCycle {
        cycle: Cycle,
    },
    OddCycle {
        cycle: Vec<Vertex>,
    },
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Longest convex even cycle length that was searched.
    pub cap_used: usize,
    /// Set when only the interior of a ball was quantified over.
    #[serde(default)]
    pub interior_only: bool,
}

impl Verdict {
    fn from_witness(witness: Option<Witness>, cap_used: usize, interior_only: bool) -> Self {
        Verdict {
            holds: witness.is_none(),
            witness,
            cap_used,
            interior_only,
        }
    }

    fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

/// Shared precomputation for one graph.
pub struct Analysis<'g> {
    g: &'g Graph,
    max_len: usize,
    cycles: Vec<Cycle>,
    corners: CornerIndex,
    interior: Option<Vec<bool>>,
}

impl<'g> Analysis<'g> {
    pub fn new(g: &'g Graph, opts: CheckOptions) -> Result<Self> {
        let max_len = opts.max_len.unwrap_or_else(|| default_max_len(g));
        let cycles = convex_even_cycles(g, Some(max_len))?;
        let corners = CornerIndex::new(&cycles);
        let interior = g.ball().map(|ball| {
            let margin = opts.margin.or(ball.margin).unwrap_or(max_len / 2);
            let limit = ball.radius.saturating_sub(margin) as u32;
            let dc = g.distances_from(ball.center);
            dc.iter().map(|&d| d <= limit).collect()
        });
        Ok(Analysis {
            g,
            max_len,
            cycles,
            corners,
            interior,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Convex even cycles up to the cap.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn corners(&self) -> &CornerIndex {
        &self.corners
    }

    pub fn is_interior_only(&self) -> bool {
        self.interior.is_some()
    }

    fn inside(&self, v: Vertex) -> bool {
        self.interior.as_ref().map_or(true, |m| m[v])
    }

    fn verdict(&self, witness: Option<Witness>) -> Verdict {
        Verdict::from_witness(witness, self.max_len, self.is_interior_only())
    }

    pub fn connectivity(&self) -> Verdict {
        let w = self
            .g
            .disconnected_pair()
            .map(|(from, to)| Witness::Disconnected { from, to });
        self.verdict(w)
    }

    pub fn triangle_condition(&self) -> Verdict {
        let g = self.g;
        let w = par::find_first(g.vertex_count(), |o| {
            if !self.inside(o) {
                return None;
            }
            let d = g.distances_from(o);
            g.edges().iter().find_map(|&(x, y)| {
                if d[x] != d[y] || d[x] == UNREACHABLE || !self.inside(x) || !self.inside(y) {
                    return None;
                }
                let ok = g
                    .neighbors(x)
                    .iter()
                    .any(|&z| g.has_edge(y, z) && d[z] + 1 == d[x]);
                (!ok).then_some(Witness::Triangle { o, x, y })
            })
        });
        self.verdict(w)
    }

    pub fn no_induced_k4_minus(&self) -> Verdict {
        let w = find_induced(self.g, Pattern::K4Minus)
            .filter(|s| s.iter().all(|v| self.inside(v)))
            .map(|vertices| Witness::InducedK4Minus { vertices });
        self.verdict(w)
    }

    /// Calls `f(o, x, y, z)` for every quadruple with `d(o,x) = d(o,y) =
    /// d(o,z) - 1`, `x, y` distinct neighbours of `z`, in lexicographic order,
    /// and returns the first witness `f` produces.
    fn first_corner_violation(
        &self,
        f: impl Fn(&[u32], Vertex, Vertex, Vertex, Vertex) -> Option<Witness> + Sync + Send,
    ) -> Option<Witness> {
        let g = self.g;
        par::find_first(g.vertex_count(), |o| {
            if !self.inside(o) {
                return None;
            }
            let d = g.distances_from(o);
            for z in g.vertices() {
                if d[z] == UNREACHABLE || d[z] < 2 || !self.inside(z) {
                    continue;
                }
                let lower: Vec<Vertex> = g
                    .neighbors(z)
                    .iter()
                    .copied()
                    .filter(|&w| d[w] + 1 == d[z] && self.inside(w))
                    .collect();
                for (i, &x) in lower.iter().enumerate() {
                    for &y in &lower[i + 1..] {
                        if let Some(w) = f(&d, o, x, y, z) {
                            return Some(w);
                        }
                    }
                }
            }
            None
        })
    }

    pub fn cycle_condition(&self) -> Verdict {
        let g = self.g;
        let w = self.first_corner_violation(|d, o, x, y, z| {
            let ok = self.corners.at(z, x, y).iter().any(|&c| {
                let p = self.cycles[c].opposite_vertex(z).expect("corner on cycle");
                d[p] != UNREACHABLE
                    && d[p] + g.dist(p, x) == d[x]
                    && d[p] + g.dist(p, y) == d[y]
            });
            (!ok).then_some(Witness::Cycle { o, x, y, z })
        });
        self.verdict(w)
    }

    pub fn quadrangle_condition(&self) -> Verdict {
        let g = self.g;
        let w = self.first_corner_violation(|d, o, x, y, z| {
            let ok = g
                .neighbors(x)
                .iter()
                .any(|&w| g.has_edge(y, w) && d[w] + 1 == d[x]);
            (!ok).then_some(Witness::Quadrangle { o, x, y, z })
        });
        self.verdict(w)
    }

    pub fn even_cycle_intersections(&self) -> Verdict {
        let mut by_edge: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
        for (id, c) in self.cycles.iter().enumerate() {
            if !c.vertices().iter().all(|&v| self.inside(v)) {
                continue;
            }
            for e in c.edges() {
                by_edge.entry(e).or_default().push(id);
            }
        }
        let mut shared: BTreeMap<(usize, usize), Vec<(Vertex, Vertex)>> = BTreeMap::new();
        for (e, ids) in &by_edge {
            for (i, &a) in ids.iter().enumerate() {
                for &b in &ids[i + 1..] {
                    shared.entry((a.min(b), a.max(b))).or_default().push(*e);
                }
            }
        }
        let w = shared.into_iter().find_map(|((a, b), mut edges)| {
            (edges.len() > 1).then(|| {
                edges.sort_unstable();
                Witness::EvenCycleIntersection {
                    first: self.cycles[a].clone(),
                    second: self.cycles[b].clone(),
                    shared_edges: edges,
                }
            })
        });
        self.verdict(w)
    }

    pub fn mediangle(&self) -> Verdict {
        self.connectivity()
            .and_then(|| self.triangle_condition())
            .and_then(|| self.no_induced_k4_minus())
            .and_then(|| self.cycle_condition())
            .and_then(|| self.even_cycle_intersections())
    }

    pub fn no_long_convex_cycle(&self) -> Verdict {
        let w = self
            .cycles
            .iter()
            .find(|c| c.len() > 4 && c.vertices().iter().all(|&v| self.inside(v)))
            .map(|c| Witness::LongConvexCycle { cycle: c.clone() });
        self.verdict(w)
    }

    pub fn quasi_median(&self) -> Verdict {
        self.mediangle().and_then(|| self.no_long_convex_cycle())
    }

    /// Weakly modular, connected, without induced `K4^-` or `K_{3,2}`.
    pub fn quasi_median_direct(&self) -> Verdict {
        self.connectivity()
            .and_then(|| self.triangle_condition())
            .and_then(|| self.quadrangle_condition())
            .and_then(|| self.no_induced_k4_minus())
            .and_then(|| {
                let w = find_induced(self.g, Pattern::K32)
                    .filter(|s| s.iter().all(|v| self.inside(v)))
                    .map(|vertices| Witness::InducedK32 { vertices });
                self.verdict(w)
            })
    }

    pub fn bipartite(&self) -> Verdict {
        let w = self.g.odd_cycle().map(|cycle| Witness::OddCycle { cycle });
        self.verdict(w)
    }

    pub fn median(&self) -> Verdict {
        let g = self.g;
        let n = g.vertex_count();
        let w = par::find_first(n, |x| {
            if !self.inside(x) {
                return None;
            }
            let dx = g.distances_from(x);
            for y in x + 1..n {
                if !self.inside(y) {
                    continue;
                }
                if dx[y] == UNREACHABLE {
                    return Some(Witness::Disconnected { from: x, to: y });
                }
                let dy = g.distances_from(y);
                let xy: Vec<Vertex> = g
                    .vertices()
                    .filter(|&m| dx[m] + dy[m] == dx[y])
                    .collect();
                for z in y + 1..n {
                    if !self.inside(z) {
                        continue;
                    }
                    let dz = g.distances_from(z);
                    let mut medians = xy
                        .iter()
                        .copied()
                        .filter(|&m| dy[m] + dz[m] == dy[z] && dx[m] + dz[m] == dx[z]);
                    let first = medians.next();
                    let second = medians.next();
                    if first.is_none() || second.is_some() {
                        let all = first.into_iter().chain(second).chain(medians).collect();
                        return Some(Witness::Median {
                            x,
                            y,
                            z,
                            medians: all,
                        });
                    }
                }
            }
            None
        });
        let w = w.or_else(|| self.connectivity().witness);
        self.verdict(w)
    }

    /// Every convex even cycle with a subpath of at least half its length
    /// inside `s` lies in `s`.
    pub fn is_locally_convex(&self, s: &VertexSet) -> bool {
        self.cycles.iter().all(|c| {
            let inside = longest_run(c, s);
            inside == c.len() || inside < c.len() / 2 + 1
        })
    }

    /// Every triangle with an edge in `s`, and every convex even cycle with
    /// two consecutive edges in `s`, lies in `s`.
    pub fn is_locally_gated(&self, s: &VertexSet) -> bool {
        let g = self.g;
        let triangles_ok = g.edges().iter().all(|&(u, v)| {
            !(s.contains(u) && s.contains(v))
                || g.neighbors(u).iter().all(|&w| !g.has_edge(v, w) || s.contains(w))
        });
        triangles_ok
            && self.cycles.iter().all(|c| {
                let inside = longest_run(c, s);
                inside == c.len() || inside < 3
            })
    }

    pub fn classify(&self) -> Classification {
        let mediangle = self.mediangle();
        let quasi_median = self.quasi_median();
        let median = self.median();
        let bipartite = self.bipartite();
        let bipartite_mediangle = if mediangle.holds {
            bipartite
        } else {
            mediangle.clone()
        };
        let mut verdicts = BTreeMap::new();
        verdicts.insert(Label::Median, median);
        verdicts.insert(Label::QuasiMedian, quasi_median);
        verdicts.insert(Label::Mediangle, mediangle);
        verdicts.insert(Label::BipartiteMediangle, bipartite_mediangle);
        let labels = verdicts
            .iter()
            .filter(|(_, v)| v.holds)
            .map(|(l, _)| *l)
            .collect();
        Classification {
            labels,
            verdicts,
            cap_used: self.max_len,
            interior_only: self.is_interior_only(),
        }
    }
}

/// Number of vertices in the longest run of consecutive cycle vertices
/// inside `s`; the full length when the whole cycle is inside.
fn longest_run(c: &Cycle, s: &VertexSet) -> usize {
    let n = c.len();
    if c.vertices().iter().all(|&v| s.contains(v)) {
        return n;
    }
    let mut best = 0;
    let mut run = 0;
    // two laps so runs wrapping around the start are counted
    for i in 0..2 * n {
        if s.contains(c.at(i % n)) {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// Graph classes reported by [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    Median,
    QuasiMedian,
    Mediangle,
    BipartiteMediangle,
}

impl Label {
    pub const ALL: [Label; 4] = [
        Label::Median,
        Label::QuasiMedian,
        Label::Mediangle,
        Label::BipartiteMediangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::Median => "median",
            Label::QuasiMedian => "quasi-median",
            Label::Mediangle => "mediangle",
            Label::BipartiteMediangle => "bipartite-mediangle",
        }
    }
}

impl std::str::FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Label::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub labels: BTreeSet<Label>,
    pub verdicts: BTreeMap<Label, Verdict>,
    pub cap_used: usize,
    pub interior_only: bool,
}

pub fn check_triangle_condition(g: &Graph, opts: CheckOptions) -> Result<Verdict> {
    Ok(Analysis::new(g, opts)?.triangle_condition())
}

pub fn check_cycle_condition(g: &Graph, opts: CheckOptions) -> Result<Verdict> {
    Ok(Analysis::new(g, opts)?.cycle_condition())
}

pub fn check_even_cycle_intersections(g: &Graph, opts: CheckOptions) -> Result<Verdict> {
    Ok(Analysis::new(g, opts)?.even_cycle_intersections())
}

pub fn is_mediangle(g: &Graph, opts: CheckOptions) -> Result<Verdict> {
    Ok(Analysis::new(g, opts)?.mediangle())
}

pub fn is_median(g: &Graph) -> Result<Verdict> {
    Ok(Analysis::new(g, CheckOptions::default())?.median())
}

pub fn is_quasi_median(g: &Graph, opts: CheckOptions) -> Result<Verdict> {
    Ok(Analysis::new(g, opts)?.quasi_median())
}

pub fn is_quasi_median_direct(g: &Graph) -> Result<Verdict> {
    Ok(Analysis::new(g, CheckOptions::default())?.quasi_median_direct())
}

pub fn classify(g: &Graph, opts: CheckOptions) -> Result<Classification> {
    Ok(Analysis::new(g, opts)?.classify())
}

impl Witness {
    /// Re-checks, from scratch, that this witness violates its axiom in `g`.
    pub fn replay(&self, g: &Graph, max_len: usize) -> bool {
        let n = g.vertex_count();
        let valid = |vs: &[Vertex]| vs.iter().all(|&v| v < n);
        match self {
            Witness::Disconnected { from, to } => {
                valid(&[*from, *to]) && g.dist(*from, *to) == UNREACHABLE
            }
            Witness::Triangle { o, x, y } => {
                if !valid(&[*o, *x, *y]) || !g.has_edge(*x, *y) {
                    return false;
                }
                let (dx, dy) = (g.dist(*o, *x), g.dist(*o, *y));
                dx == dy
                    && !g.vertices().any(|z| {
                        g.has_edge(z, *x)
                            && g.has_edge(z, *y)
                            && g.dist(*o, z) + g.dist(z, *x) == dx
                            && g.dist(*o, z) + g.dist(z, *y) == dy
                    })
            }
            Witness::InducedK4Minus { vertices } => {
                valid(vertices.as_slice()) && induces(g, vertices, Pattern::K4Minus)
            }
            Witness::InducedK32 { vertices } => {
                valid(vertices.as_slice()) && induces(g, vertices, Pattern::K32)
            }
            Witness::Cycle { o, x, y, z } | Witness::Quadrangle { o, x, y, z } => {
                if !valid(&[*o, *x, *y, *z]) || x == y {
                    return false;
                }
                let d = |a, b| g.dist(a, b);
                let shape = d(*o, *x) == d(*o, *y)
                    && d(*o, *x) + 1 == d(*o, *z)
                    && g.has_edge(*x, *z)
                    && g.has_edge(*y, *z);
                let in_both = |p: Vertex| {
                    d(*o, p) + d(p, *x) == d(*o, *x) && d(*o, p) + d(p, *y) == d(*o, *y)
                };
                if !shape {
                    return false;
                }
                if matches!(self, Witness::Quadrangle { .. }) {
                    return !g
                        .vertices()
                        .any(|w| g.has_edge(w, *x) && g.has_edge(w, *y) && w != *z && in_both(w));
                }
                let cycles = convex_even_cycles(g, Some(max_len)).unwrap_or_default();
                !cycles.iter().any(|c| {
                    let (Some(ix), Some(iy)) = (c.edge_position(*z, *x), c.edge_position(*z, *y))
                    else {
                        return false;
                    };
                    let _ = (ix, iy);
                    c.opposite_vertex(*z).is_some_and(in_both)
                })
            }
            Witness::EvenCycleIntersection {
                first,
                second,
                shared_edges,
            } => {
                let convex = |c: &Cycle| {
                    let set = c.vertex_set();
                    valid(c.vertices())
                        && c.len() % 2 == 0
                        && c.validate(g)
                        && g.induced(&set).edge_count() == c.len()
                        && g.is_convex(&set)
                };
                let common = first
                    .edges()
                    .filter(|e| second.edges().any(|f| f == *e))
                    .count();
                first != second
                    && convex(first)
                    && convex(second)
                    && common > 1
                    && shared_edges.len() == common
            }
            Witness::Median { x, y, z, .. } => {
                if !valid(&[*x, *y, *z]) {
                    return false;
                }
                let d = |a, b| g.dist(a, b);
                let count = g
                    .vertices()
                    .filter(|&m| {
                        d(*x, m).saturating_add(d(m, *y)) == d(*x, *y)
                            && d(*y, m).saturating_add(d(m, *z)) == d(*y, *z)
                            && d(*x, m).saturating_add(d(m, *z)) == d(*x, *z)
                    })
                    .count();
                count != 1
            }
            Witness::LongConvexCycle { cycle } => {
                let set = cycle.vertex_set();
                valid(cycle.vertices())
                    && cycle.len() > 4
                    && cycle.len() % 2 == 0
                    && cycle.validate(g)
                    && g.induced(&set).edge_count() == cycle.len()
                    && g.is_convex(&set)
            }
            Witness::OddCycle { cycle } => {
                let set: VertexSet = cycle.iter().copied().collect();
                valid(cycle)
                    && cycle.len() % 2 == 1
                    && set.len() == cycle.len()
                    && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
            }
        }
    }
}
