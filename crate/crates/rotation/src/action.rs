//! Explicit group actions on graphs and candidate families of subgroups.

use serde::{Deserialize, Serialize};

use mediangle_core::Graph;

use crate::error::{Result, RotationError};
use crate::perm::{is_permutation, Perm, PermGroup};

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// A group acting on a graph by automorphisms, given by generators.
#[derive(Debug, Clone)]
pub struct GroupAction {
    graph: Graph,
    generators: Vec<Perm>,
    element_cap: usize,
    group: PermGroup,
}

impl GroupAction {
    pub fn new(graph: Graph, generators: Vec<Perm>, element_cap: usize) -> Result<Self> {
        let n = graph.vertex_count();
        for (i, g) in generators.iter().enumerate() {
            if !is_permutation(g, n) {
                return Err(RotationError::BadPermutation(i));
            }
            let preserves = graph.edges().iter().all(|&(u, v)| graph.has_edge(g[u], g[v]));
            if !preserves {
                return Err(RotationError::NotAutomorphism(i));
            }
        }
        let group = PermGroup::generate(n, &generators, element_cap)?;
        Ok(GroupAction {
            graph,
            generators,
            element_cap,
            group,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element_cap(&self) -> usize {
        self.element_cap
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }
}

/// Candidate rotative stabilizers, each as its full element set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubgroupSet {
    pub subgroups: Vec<Vec<Perm>>,
}

impl SubgroupSet {
    /// Closes each list of generators to the subgroup it generates.
    pub fn generated(a: &GroupAction, generators: &[Vec<Perm>]) -> Result<Self> {
        let g = a.group();
        let mut subgroups = Vec::new();
        for (i, gens) in generators.iter().enumerate() {
            let idx = gens
                .iter()
                .map(|p| g.index_of(p).ok_or(RotationError::NotInGroup(i)))
                .collect::<Result<Vec<_>>>()?;
            subgroups.push(g.closure(&idx).into_iter().map(|x| g.element(x).clone()).collect());
        }
        Ok(SubgroupSet { subgroups })
    }

    /// From element index sets of `a`'s group.
    pub fn from_indices(a: &GroupAction, sets: &[Vec<usize>]) -> Self {
        let g = a.group();
        SubgroupSet {
            subgroups: sets
                .iter()
                .map(|s| s.iter().map(|&x| g.element(x).clone()).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Element index sets in `a`'s group, each checked to be a nontrivial
    /// subgroup.
    pub fn resolve(&self, a: &GroupAction) -> Result<Vec<Vec<usize>>> {
        let g = a.group();
        let mut out = Vec::new();
        for (i, s) in self.subgroups.iter().enumerate() {
            let mut idx = s
                .iter()
                .map(|p| g.index_of(p).ok_or(RotationError::NotInGroup(i)))
                .collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            idx.dedup();
            if idx.len() < 2 {
                return Err(RotationError::TrivialSubgroup(i));
            }
            if !g.is_subgroup(&idx) {
                return Err(RotationError::Parse(format!("subgroup {i} is not closed under products")));
            }
            out.push(idx);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorRef {
    Index(usize),
    Perm(Perm),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionJson {
    graph: Graph,
    generators: Vec<Perm>,
    #[serde(default)]
    subgroups: Vec<Vec<GeneratorRef>>,
    #[serde(default = "default_cap")]
    element_cap: usize,
}

fn default_cap() -> usize {
    DEFAULT_ELEMENT_CAP
}

/// Parses an action file: the graph, the generators, and optional
/// subgroups given by generator indices or permutations.
pub fn action_from_json(text: &str) -> Result<(GroupAction, SubgroupSet)> {
    let j: ActionJson = serde_json::from_str(text).map_err(|e| RotationError::Parse(e.to_string()))?;
    let a = GroupAction::new(j.graph, j.generators, j.element_cap)?;
    let mut gens = Vec::new();
    for (s, refs) in j.subgroups.iter().enumerate() {
        let mut list = Vec::new();
        for r in refs {
            list.push(match r {
                GeneratorRef::Index(i) => a
                    .generators()
                    .get(*i)
                    .cloned()
                    .ok_or(RotationError::BadGeneratorIndex { subgroup: s, index: *i })?,
                GeneratorRef::Perm(p) => p.clone(),
            });
        }
        gens.push(list);
    }
    let r = SubgroupSet::generated(&a, &gens)?;
    Ok((a, r))
}

pub fn action_to_json(a: &GroupAction, r: &SubgroupSet) -> String {
    let j = ActionJson {
        graph: a.graph().clone(),
        generators: a.generators().to_vec(),
        subgroups: r
            .subgroups
            .iter()
            .map(|s| s.iter().cloned().map(GeneratorRef::Perm).collect())
            .collect(),
        element_cap: a.element_cap(),
    };
    serde_json::to_string(&j).expect("action serializes")
}

/// The permutation of `n` points induced by `g` on a partition given as a
/// class map, if `g` respects it.
pub(crate) fn induced_perm(g: &[usize], class_of: &[usize], classes: usize) -> Option<Perm> {
    let mut out = vec![usize::MAX; classes];
    for (v, &c) in class_of.iter().enumerate() {
        let d = class_of[g[v]];
        if out[c] == usize::MAX {
            out[c] = d;
        } else if out[c] != d {
            return None;
        }
    }
    Some(out)
}
