//! Rotation subgroups: for an invariant family of hyperplanes whose
//! rotative stabilizers permute sectors freely and transitively, the group
//! splits as `Rot ⋊ stab(Y)` and `Rot` is a periagroup.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use mediangle_core::{Graph, HyperplaneSystem, VertexSet};
use mediangle_periagroup::Presentation;

use crate::action::{induced_perm, GroupAction, SubgroupSet};
use crate::error::{Result, RotationError};
use crate::extract::extract_with;
use crate::perm::Perm;
use crate::system::{verify_rotation_system, RotationData};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RotationDecomposition {
    /// The seeds saturated under the group, as hyperplane ids.
    pub family: Vec<usize>,
    pub group_order: usize,
    /// Element indices of `Rot`, sorted.
    pub rot: Vec<usize>,
    /// The intersection of the family's sectors containing the basepoint.
    pub y: VertexSet,
    /// Element indices of the setwise stabilizer of `Y`.
    pub stab_y: Vec<usize>,
    /// Hyperplanes of the family tangent to `Y`.
    pub tangent: Vec<usize>,
    pub product_covers: bool,
    pub trivial_intersection: bool,
    /// The rotative stabilizers at `Y` in the quotient are those of the
    /// tangent hyperplanes.
    pub basis_matches: bool,
    /// `Rot` as a periagroup, read off the quotient rotation system.
    pub presentation: Presentation,
    pub passed: bool,
    pub interior_only: bool,
}

/// Elements stabilizing every clique of hyperplane `j`, sorted.
pub fn rotative_stabilizer(a: &GroupAction, hs: &HyperplaneSystem, j: usize) -> Result<Vec<usize>> {
    let graph = a.graph();
    let cliques: Vec<VertexSet> = crate::system::edge_cliques(graph)
        .into_iter()
        .filter(|c| {
            let vs = c.as_slice();
            hs.hyperplane_of(vs[0], vs[1]) == Ok(j)
        })
        .collect();
    let g = a.group();
    Ok((0..g.order())
        .filter(|&e| cliques.iter().all(|c| c.iter().all(|v| c.contains(g.apply(e, v)))))
        .collect())
}

fn image_hyperplane(a: &GroupAction, hs: &HyperplaneSystem, e: usize, j: usize) -> Result<usize> {
    let (u, v) = hs.hyperplanes()[j].edges[0];
    let g = a.group();
    Ok(hs.hyperplane_of(g.apply(e, u), g.apply(e, v))?)
}

pub fn rotation_subgroup(a: &GroupAction, seeds: &[usize], basepoint: usize) -> Result<RotationDecomposition> {
    let graph = a.graph();
    let n = graph.vertex_count();
    if basepoint >= n {
        return Err(RotationError::BadBasepoint(basepoint));
    }
    let hs = HyperplaneSystem::new(graph, None)?;
    for &j in seeds {
        if j >= hs.len() {
            return Err(mediangle_core::GraphError::UnknownHyperplane(j).into());
        }
    }
    let g = a.group();
    let mut family: BTreeSet<usize> = seeds.iter().copied().collect();
    let mut frontier: Vec<usize> = family.iter().copied().collect();
    while let Some(j) = frontier.pop() {
        for e in 0..g.order() {
            let k = image_hyperplane(a, &hs, e, j)?;
            if family.insert(k) {
                frontier.push(k);
            }
        }
    }
    let family: Vec<usize> = family.into_iter().collect();

    let mut stabilizers = Vec::new();
    for &j in &family {
        let stab = rotative_stabilizer(a, &hs, j)?;
        check_sector_action(a, &hs, j, &stab)?;
        stabilizers.push(stab);
    }
    let rot = g.closure(&stabilizers.concat());
    let y: VertexSet = (0..n)
        .filter(|&v| family.iter().all(|&j| hs.sector_of(j, v) == hs.sector_of(j, basepoint)))
        .collect();
    let stab_y: Vec<usize> = (0..g.order())
        .filter(|&e| y.iter().map(|v| g.apply(e, v)).collect::<VertexSet>() == y)
        .collect();
    let products: BTreeSet<usize> = rot.iter().flat_map(|&r| stab_y.iter().map(move |&s| g.mul(r, s))).collect();
    let product_covers = products.len() == g.order();
    let trivial_intersection = stab_y.iter().all(|e| *e == 0 || rot.binary_search(e).is_err());
    let tangent: Vec<usize> = hs.tangent(&y).into_iter().filter(|j| family.contains(j)).collect();

    let (presentation, basis_matches) = if family.is_empty() {
        (Presentation::new(Vec::new(), &[])?, true)
    } else {
        quotient_presentation(a, &hs, &family, &stabilizers, &rot, &tangent, basepoint)?
    };
    Ok(RotationDecomposition {
        passed: product_covers && trivial_intersection && basis_matches,
        family,
        group_order: g.order(),
        rot,
        y,
        stab_y,
        tangent,
        product_covers,
        trivial_intersection,
        basis_matches,
        presentation,
        interior_only: graph.ball().is_some(),
    })
}

fn check_sector_action(a: &GroupAction, hs: &HyperplaneSystem, j: usize, stab: &[usize]) -> Result<()> {
    let g = a.group();
    let sectors = hs.sectors(j)?.sectors;
    let fail = |why: &str| {
        Err(RotationError::Precondition(format!(
            "the rotative stabilizer of hyperplane {j} {why} its {} sectors",
            sectors.len()
        )))
    };
    if stab.len() != sectors.len() {
        return fail("has the wrong order to permute freely and transitively");
    }
    let first = sectors[0].first().expect("sectors are non-empty");
    let reached: BTreeSet<usize> = stab.iter().map(|&e| hs.sector_of(j, g.apply(e, first))).collect();
    if reached.len() != sectors.len() {
        return fail("does not act transitively on");
    }
    Ok(())
}

/// Builds the quotient graph whose vertices are the classes of vertices no
/// family hyperplane separates, checks that `Rot` with the family's
/// stabilizers is a rotation system on it, and extracts its presentation.
fn quotient_presentation(
    a: &GroupAction,
    hs: &HyperplaneSystem,
    family: &[usize],
    stabilizers: &[Vec<usize>],
    rot: &[usize],
    tangent: &[usize],
    basepoint: usize,
) -> Result<(Presentation, bool)> {
    let g = a.group();
    let n = a.graph().vertex_count();
    let signature = |v: usize| -> Vec<usize> { family.iter().map(|&j| hs.sector_of(j, v)).collect() };
    let mut signatures: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for v in 0..n {
        let s = signature(v);
        class_of[v] = match signatures.iter().position(|t| *t == s) {
            Some(c) => c,
            None => {
                signatures.push(s);
                signatures.len() - 1
            }
        };
    }
    let k = signatures.len();
    let mut edges = Vec::new();
    for c in 0..k {
        for d in c + 1..k {
            let differ = signatures[c].iter().zip(&signatures[d]).filter(|(x, y)| x != y).count();
            if differ == 1 {
                edges.push((c, d));
            }
        }
    }
    let omega = Graph::from_edges(k, &edges)?;
    let to_omega = |e: usize| -> Result<Perm> {
        induced_perm(g.element(e), &class_of, k)
            .ok_or_else(|| RotationError::Verification("an element does not preserve the classes".into()))
    };
    let mut gens: Vec<Perm> = Vec::new();
    for &e in stabilizers.iter().flatten() {
        let p = to_omega(e)?;
        if !gens.contains(&p) {
            gens.push(p);
        }
    }
    let action = GroupAction::new(omega, gens, rot.len() + 1)?;
    if action.group().order() != rot.len() {
        return Err(RotationError::Verification(format!(
            "Rot has {} elements but acts on the quotient through {}",
            rot.len(),
            action.group().order()
        )));
    }
    let mut sets: Vec<Vec<Perm>> = Vec::new();
    for stab in stabilizers {
        let mut s = stab.iter().map(|&e| to_omega(e)).collect::<Result<Vec<_>>>()?;
        s.sort();
        if !sets.contains(&s) {
            sets.push(s);
        }
    }
    let r = SubgroupSet { subgroups: sets };
    let report = verify_rotation_system(&action, &r)?;
    if !report.passed {
        return Err(RotationError::Verification(format!(
            "the quotient is not a rotation system: {}",
            serde_json::to_string(&report).expect("report serializes")
        )));
    }
    let data = RotationData::new(&action, &r)?;
    let base = class_of[basepoint];
    let p = extract_with(&data, base)?;

    // the basis at Y against the stabilizers of tangent hyperplanes
    let mut at_y: Vec<Vec<usize>> = data
        .cliques
        .iter()
        .enumerate()
        .filter(|(_, c)| c.contains(base))
        .map(|(c, _)| data.subgroups[data.rot(c).expect("rotation system")].clone())
        .collect();
    let mut from_tangent: Vec<Vec<usize>> = Vec::new();
    for &j in tangent {
        let i = family.iter().position(|&x| x == j).expect("tangent hyperplanes are in the family");
        let mut s = stabilizers[i]
            .iter()
            .map(|&e| Ok(action.group().index_of(&to_omega(e)?).expect("in Rot")))
            .collect::<Result<Vec<_>>>()?;
        s.sort_unstable();
        if !from_tangent.contains(&s) {
            from_tangent.push(s);
        }
    }
    at_y.sort();
    at_y.dedup();
    from_tangent.sort();
    Ok((p, at_y == from_tangent))
}
