//! Rotation presystems and rotation systems: cliques rotated freely and
//! transitively by a conjugation-closed generating family of subgroups,
//! whose barriers separate the vertices of each clique.

use serde::{Deserialize, Serialize};

use mediangle_core::{Cycle, Graph, VertexSet};

use crate::action::{GroupAction, SubgroupSet};
use crate::error::{Result, RotationError};

/// Maximal cliques with at least one edge, sorted.
pub fn edge_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = g.cliques().into_iter().filter(|c| c.len() >= 2).collect();
    out.sort();
    out
}

/// Whether the subgroup `h` (element indices) maps `c` onto itself and acts
/// freely and transitively on it.
pub fn rotates(a: &GroupAction, h: &[usize], c: &VertexSet) -> bool {
    let g = a.group();
    let Some(x) = c.first() else { return false };
    h.len() == c.len()
        && h.iter().all(|&e| c.iter().all(|v| c.contains(g.apply(e, v))))
        && h.iter().map(|&e| g.apply(e, x)).collect::<VertexSet>() == *c
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueFailure {
    pub clique: VertexSet,
    /// Members of the family rotating this clique; exactly one is required.
    pub rotating: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresystemReport {
    pub passed: bool,
    pub group_order: usize,
    /// First `(subgroup, generator)` whose conjugate is not in the family.
    pub conjugation_witness: Option<(usize, usize)>,
    pub generating: bool,
    pub clique_failures: Vec<CliqueFailure>,
    /// Members of the family that rotate no clique.
    pub unused: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierViolation {
    pub clique: VertexSet,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FreeTransitiveViolation {
    NotTransitive { orbit_size: usize },
    NotFree { vertex: usize, element: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationReport {
    pub passed: bool,
    pub presystem: PresystemReport,
    pub barrier_violation: Option<BarrierViolation>,
    pub free_transitive_violation: Option<FreeTransitiveViolation>,
}

/// The family resolved against the group, with the rotating member of each
/// clique. Built without requiring any axiom to hold.
#[derive(Debug, Clone)]
pub struct RotationData<'a> {
    pub action: &'a GroupAction,
    pub subgroups: Vec<Vec<usize>>,
    pub cliques: Vec<VertexSet>,
    /// Per clique, the members of the family rotating it.
    pub rotating: Vec<Vec<usize>>,
}

impl<'a> RotationData<'a> {
    pub fn new(a: &'a GroupAction, r: &SubgroupSet) -> Result<Self> {
        let mut subgroups = r.resolve(a)?;
        subgroups.dedup();
        let cliques = edge_cliques(a.graph());
        let rotating = cliques
            .iter()
            .map(|c| (0..subgroups.len()).filter(|&i| rotates(a, &subgroups[i], c)).collect())
            .collect();
        Ok(RotationData {
            action: a,
            subgroups,
            cliques,
            rotating,
        })
    }

    /// The rotative stabilizer of clique `c`, when it is unique.
    pub fn rot(&self, c: usize) -> Option<usize> {
        match self.rotating[c].as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    pub fn clique_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.cliques.iter().position(|c| c.contains(u) && c.contains(v))
    }

    pub fn presystem(&self) -> PresystemReport {
        let g = self.action.group();
        let mut conjugation_witness = None;
        'outer: for (i, h) in self.subgroups.iter().enumerate() {
            for (k, p) in self.action.generators().iter().enumerate() {
                let x = g.index_of(p).expect("generator in group");
                if !self.subgroups.contains(&g.conjugate_set(x, h)) {
                    conjugation_witness = Some((i, k));
                    break 'outer;
                }
            }
        }
        let all: Vec<usize> = self.subgroups.concat();
        let generating = g.closure(&all).len() == g.order();
        let clique_failures: Vec<CliqueFailure> = self
            .cliques
            .iter()
            .zip(&self.rotating)
            .filter(|(_, r)| r.len() != 1)
            .map(|(c, r)| CliqueFailure {
                clique: c.clone(),
                rotating: r.clone(),
            })
            .collect();
        let unused: Vec<usize> = (0..self.subgroups.len())
            .filter(|&i| !self.rotating.iter().any(|r| r == &[i]))
            .collect();
        PresystemReport {
            passed: conjugation_witness.is_none() && generating && clique_failures.is_empty() && unused.is_empty(),
            group_order: g.order(),
            conjugation_witness,
            generating,
            clique_failures,
            unused,
        }
    }

    /// Per family member, the edges of all cliques it rotates.
    pub fn barriers(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.subgroups.len()];
        for (c, clique) in self.cliques.iter().enumerate() {
            if let Some(r) = self.rot(c) {
                let vs = clique.as_slice();
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        out[r].push((u, v));
                    }
                }
            }
        }
        for b in &mut out {
            b.sort_unstable();
            b.dedup();
        }
        out
    }

    /// Components left after deleting each barrier, as a class map.
    pub fn domains(&self) -> Vec<Vec<usize>> {
        let g = self.action.graph();
        self.barriers()
            .iter()
            .map(|b| {
                let mut of = vec![0; g.vertex_count()];
                for (i, part) in g
                    .components_filtered(|u, v| b.binary_search(&(u.min(v), u.max(v))).is_err())
                    .iter()
                    .enumerate()
                {
                    for v in part.iter() {
                        of[v] = i;
                    }
                }
                of
            })
            .collect()
    }

    pub fn barrier_violation(&self) -> Option<BarrierViolation> {
        let domains = self.domains();
        for (c, clique) in self.cliques.iter().enumerate() {
            let r = self.rot(c)?;
            let vs = clique.as_slice();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    if domains[r][u] == domains[r][v] {
                        return Some(BarrierViolation {
                            clique: clique.clone(),
                            u,
                            v,
                        });
                    }
                }
            }
        }
        None
    }

    /// Number of barriers separating `x` and `y`.
    pub fn separating_barriers(&self, x: usize, y: usize) -> usize {
        self.domains().iter().filter(|d| d[x] != d[y]).count()
    }

    /// Cycles traced from each vertex by alternating two rotations from
    /// distinct cliques until the two alternating products agree.
    pub fn dihedral_cycles(&self) -> Vec<Cycle> {
        let a = self.action;
        let g = a.group();
        let mut out = Vec::new();
        for x in 0..a.graph().vertex_count() {
            let at: Vec<usize> = (0..self.cliques.len()).filter(|&c| self.cliques[c].contains(x)).collect();
            for &c1 in &at {
                for &c2 in &at {
                    let (Some(r1), Some(r2)) = (self.rot(c1), self.rot(c2)) else { continue };
                    if c1 == c2 {
                        continue;
                    }
                    for &p in self.subgroups[r1].iter().filter(|&&e| e != 0) {
                        for &q in self.subgroups[r2].iter().filter(|&&e| e != 0) {
                            if let Some(c) = dihedral_cycle(g, x, p, q) {
                                out.push(c);
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// The cycle `x, p x, pq x, ...` closed up by `q x, qp x, ...` at the first
/// length where the alternating products `pqp...` and `qpq...` agree.
fn dihedral_cycle(g: &crate::perm::PermGroup, x: usize, p: usize, q: usize) -> Option<Cycle> {
    let (mut w1, mut w2) = (0, 0);
    let mut side1 = vec![x];
    let mut side2 = vec![x];
    for k in 1..=g.order() {
        let (l1, l2) = if k % 2 == 1 { (p, q) } else { (q, p) };
        w1 = g.mul(w1, l1);
        w2 = g.mul(w2, l2);
        if k >= 2 && w1 == w2 {
            let mut vs = side1.clone();
            vs.push(g.apply(w1, x));
            vs.extend(side2[1..].iter().rev());
            let distinct: VertexSet = vs.iter().copied().collect();
            return (distinct.len() == vs.len()).then(|| Cycle::new(vs));
        }
        side1.push(g.apply(w1, x));
        side2.push(g.apply(w2, x));
    }
    None
}

pub fn verify_presystem(a: &GroupAction, r: &SubgroupSet) -> Result<PresystemReport> {
    Ok(RotationData::new(a, r)?.presystem())
}

/// Free and transitive action on the vertices, or the first violation.
pub fn free_transitive_violation(a: &GroupAction) -> Option<FreeTransitiveViolation> {
    let g = a.group();
    let n = a.graph().vertex_count();
    if n == 0 {
        return None;
    }
    let orbit: VertexSet = (0..g.order()).map(|e| g.apply(e, 0)).collect();
    if orbit.len() != n {
        return Some(FreeTransitiveViolation::NotTransitive { orbit_size: orbit.len() });
    }
    for e in 1..g.order() {
        if let Some(v) = (0..n).find(|&v| g.apply(e, v) == v) {
            return Some(FreeTransitiveViolation::NotFree {
                vertex: v,
                element: g.element(e).clone(),
            });
        }
    }
    None
}

pub fn verify_rotation_system(a: &GroupAction, r: &SubgroupSet) -> Result<RotationReport> {
    let data = RotationData::new(a, r)?;
    let presystem = data.presystem();
    let barrier_violation = if presystem.clique_failures.is_empty() {
        data.barrier_violation()
    } else {
        None
    };
    let free_transitive_violation = free_transitive_violation(a);
    Ok(RotationReport {
        passed: presystem.passed && barrier_violation.is_none() && free_transitive_violation.is_none(),
        presystem,
        barrier_violation,
        free_transitive_violation,
    })
}

/// Verifies the axioms and returns the resolved data, or an error naming
/// the first failure.
pub fn require_rotation_system<'a>(a: &'a GroupAction, r: &SubgroupSet) -> Result<RotationData<'a>> {
    let report = verify_rotation_system(a, r)?;
    if !report.passed {
        return Err(RotationError::NotRotationSystem(
            serde_json::to_string(&report).expect("report serializes"),
        ));
    }
    RotationData::new(a, r)
}
