//! Periagroup presentations: a labelled graph with one group per vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use mediangle_core::Graph;

use crate::error::{PeriagroupError, Result};
use crate::group::GroupSpec;

/// The decorated graph `(Gamma, lambda)` with its vertex groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    gamma: Graph,
    lambda: BTreeMap<(usize, usize), u32>,
    groups: Vec<GroupSpec>,
}

impl Presentation {
    /// Builds and validates a presentation; edges are `(u, v, lambda)`.
    pub fn new(groups: Vec<GroupSpec>, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let gamma = Graph::from_edges(groups.len(), &pairs)?;
        let mut lambda = BTreeMap::new();
        for &(u, v, l) in edges {
            if let Some(old) = lambda.insert((u.min(v), u.max(v)), l) {
                if old != l {
                    return Err(PeriagroupError::Parse(format!("edge {u}-{v} given twice with different labels")));
                }
            }
        }
        let p = Presentation { gamma, lambda, groups };
        p.validate()?;
        Ok(p)
    }

    /// A Coxeter presentation: `n` generators of order two.
    pub fn coxeter(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        Self::new(vec![GroupSpec::Cyclic(2); n], edges)
    }

    /// Two order-two generators with `lambda = m`: the dihedral group of order `2m`.
    pub fn dihedral(m: u32) -> Result<Self> {
        Self::coxeter(2, &[(0, 1, m)])
    }

    /// Coxeter type `A_n`: the symmetric group on `n + 1` letters. Distant
    /// generators commute, so Gamma is complete.
    pub fn type_a(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j, if j == i + 1 { 3 } else { 2 })))
            .collect();
        Self::coxeter(n, &edges)
    }

    /// A graph product: every edge commutes.
    pub fn graph_product(groups: Vec<GroupSpec>, edges: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 2)).collect();
        Self::new(groups, &edges)
    }

    pub fn validate(&self) -> Result<()> {
        for g in &self.groups {
            g.validate()?;
        }
        for (&(u, v), &l) in &self.lambda {
            if l < 2 {
                return Err(PeriagroupError::LambdaTooSmall { u, v, lambda: l });
            }
            if l > 2 {
                for vertex in [u, v] {
                    if !self.groups[vertex].has_order_two() {
                        return Err(PeriagroupError::OrderConstraint {
                            u,
                            v,
                            lambda: l,
                            vertex,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn gamma(&self) -> &Graph {
        &self.gamma
    }

    pub fn vertex_count(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[GroupSpec] {
        &self.groups
    }

    pub fn group(&self, u: usize) -> &GroupSpec {
        &self.groups[u]
    }

    /// The label of the edge `u-v`, if it is an edge.
    pub fn lambda(&self, u: usize, v: usize) -> Option<u32> {
        self.lambda.get(&(u.min(v), u.max(v))).copied()
    }

    /// Edges as `(u, v, lambda)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        self.lambda.iter().map(|(&(u, v), &l)| (u, v, l)).collect()
    }

    /// Vertices carrying a group of order two (the Coxeter part).
    pub fn phi(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&u| self.groups[u].has_order_two()).collect()
    }

    /// Vertices carrying a group of order greater than two.
    pub fn psi(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&u| !self.groups[u].has_order_two()).collect()
    }

    pub fn is_coxeter(&self) -> bool {
        self.psi().is_empty()
    }

    pub fn is_finite_vertex_groups(&self) -> bool {
        self.groups.iter().all(GroupSpec::is_finite)
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.vertex_count() {
            Ok(())
        } else {
            Err(PeriagroupError::UnknownVertex(u))
        }
    }

    /// The presentation induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Presentation> {
        for &u in vertices {
            self.check_vertex(u)?;
        }
        let groups = vertices.iter().map(|&u| self.groups[u].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if let Some(l) = self.lambda(u, v) {
                    edges.push((i, j, l));
                }
            }
        }
        Presentation::new(groups, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| PeriagroupError::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    id: usize,
    group: GroupSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    u: usize,
    v: usize,
    lambda: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationJson {
    vertices: Vec<VertexJson>,
    #[serde(default)]
    edges: Vec<EdgeJson>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationJson {
            vertices: self
                .groups
                .iter()
                .enumerate()
                .map(|(id, group)| VertexJson { id, group: group.clone() })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v, lambda)| EdgeJson { u, v, lambda })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PresentationJson::deserialize(d)?;
        let n = j.vertices.len();
        if j.vertices.iter().enumerate().any(|(i, v)| v.id != i) {
            return Err(serde::de::Error::custom(PeriagroupError::BadVertexIds(n)));
        }
        let groups = j.vertices.into_iter().map(|v| v.group).collect();
        let edges: Vec<_> = j.edges.iter().map(|e| (e.u, e.v, e.lambda)).collect();
        Presentation::new(groups, &edges).map_err(serde::de::Error::custom)
    }
}
