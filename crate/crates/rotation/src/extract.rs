//! Reading a periagroup presentation off a rotation system, and the
//! rotation system of a periagroup acting on its Cayley graph.

use mediangle_core::{HyperplaneSystem, VertexSet};
use mediangle_periagroup::{cayley_ball, CayleyBall, GroupSpec, PeriagroupError, Presentation};

use crate::action::{GroupAction, SubgroupSet};
use crate::error::{Result, RotationError};
use crate::perm::Perm;
use crate::system::{require_rotation_system, RotationData};

/// One vertex of the extracted Gamma: a clique at the basepoint, its
/// rotative stabilizer, and the element sending the basepoint to each
/// clique vertex (basepoint first, then increasing).
#[derive(Debug, Clone)]
struct Letter {
    clique: VertexSet,
    subgroup: usize,
    elements: Vec<usize>,
}

/// The presentation with one vertex per clique at `basepoint`, its rotative
/// stabilizer as vertex group, and edges labelled `pi / angle` between
/// cliques whose hyperplanes are transverse. The presentation's Cayley
/// graph is checked to be the action's graph, labels included.
pub fn extract_periagroup(a: &GroupAction, r: &SubgroupSet, basepoint: usize) -> Result<Presentation> {
    let data = require_rotation_system(a, r)?;
    extract_with(&data, basepoint)
}

pub(crate) fn extract_with(data: &RotationData, basepoint: usize) -> Result<Presentation> {
    let a = data.action;
    let graph = a.graph();
    if basepoint >= graph.vertex_count() {
        return Err(RotationError::BadBasepoint(basepoint));
    }
    let g = a.group();
    let mut letters = Vec::new();
    for (c, clique) in data.cliques.iter().enumerate() {
        if !clique.contains(basepoint) {
            continue;
        }
        let subgroup = data.rot(c).expect("rotation system");
        let mut order: Vec<usize> = vec![basepoint];
        order.extend(clique.iter().filter(|&v| v != basepoint));
        let elements = order
            .iter()
            .map(|&v| {
                *data.subgroups[subgroup]
                    .iter()
                    .find(|&&e| g.apply(e, basepoint) == v)
                    .expect("free and transitive on the clique")
            })
            .collect();
        letters.push(Letter {
            clique: clique.clone(),
            subgroup,
            elements,
        });
    }
    let groups = letters
        .iter()
        .map(|l| {
            let position = |e: usize| l.elements.iter().position(|&x| x == e).expect("closed subgroup");
            let table = l
                .elements
                .iter()
                .map(|&x| l.elements.iter().map(|&y| position(g.mul(x, y))).collect())
                .collect();
            GroupSpec::Table(table)
        })
        .collect();
    let hs = HyperplaneSystem::new(graph, None)?;
    let hyperplane = |l: &Letter| {
        let vs = l.clique.as_slice();
        hs.hyperplane_of(vs[0], vs[1])
    };
    let mut edges = Vec::new();
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            let (ji, jj) = (hyperplane(&letters[i])?, hyperplane(&letters[j])?);
            if ji == jj {
                return Err(RotationError::Verification(format!(
                    "cliques {:?} and {:?} at the basepoint lie in one hyperplane",
                    letters[i].clique, letters[j].clique
                )));
            }
            if hs.transverse(ji, jj)? {
                let lambda = hs.angle(ji, jj)?.lambda()?;
                edges.push((i, j, lambda as u32));
            }
        }
    }
    let p = Presentation::new(groups, &edges)?;
    check_cayley_isomorphism(data, &letters, &p, basepoint)?;
    Ok(p)
}

/// Maps the Cayley ball of `p` to the graph by sending a word to its
/// product applied to the basepoint, and checks this is a bijection carrying
/// each labelled edge into a clique with the matching rotative stabilizer.
fn check_cayley_isomorphism(data: &RotationData, letters: &[Letter], p: &Presentation, basepoint: usize) -> Result<()> {
    let a = data.action;
    let g = a.group();
    let graph = a.graph();
    let n = graph.vertex_count();
    let ball = match cayley_ball(p, None, n + 1) {
        Ok(b) => b,
        Err(PeriagroupError::VertexCapExceeded(_)) => {
            return Err(RotationError::Verification("the presentation defines a larger group".into()))
        }
        Err(e) => return Err(e.into()),
    };
    let mismatch = |msg: String| Err(RotationError::Verification(msg));
    if ball.order() != n || ball.graph.edge_count() != graph.edge_count() {
        return mismatch(format!(
            "Cayley graph has {} vertices and {} edges, the action graph {} and {}",
            ball.order(),
            ball.graph.edge_count(),
            n,
            graph.edge_count()
        ));
    }
    let gen_element: Vec<usize> = ball
        .generators
        .iter()
        .map(|s| letters[s.vertex].elements[s.element as usize])
        .collect();
    // group element of each ball vertex, along the breadth-first tree
    let mut element = vec![usize::MAX; n];
    element[0] = 0;
    for x in 0..n {
        for (i, y) in ball.right[x].iter().enumerate() {
            let y = y.expect("complete ball");
            let e = g.mul(element[x], gen_element[i]);
            if element[y] == usize::MAX {
                element[y] = e;
            } else if element[y] != e {
                return mismatch(format!("relation fails at ball vertex {y}"));
            }
        }
    }
    let phi: Vec<usize> = element.iter().map(|&e| g.apply(e, basepoint)).collect();
    let image: VertexSet = phi.iter().copied().collect();
    if image.len() != n {
        return mismatch("orbit map is not injective".into());
    }
    for (e, &(x, y)) in ball.graph.edges().iter().enumerate() {
        let Some(c) = data.clique_of_edge(phi[x], phi[y]) else {
            return mismatch(format!("ball edge {x}-{y} maps to a non-edge"));
        };
        let expected = g.conjugate_set(element[x], &data.subgroups[letters[ball.labels[e].vertex].subgroup]);
        if data.rot(c).map(|r| &data.subgroups[r]) != Some(&expected) {
            return mismatch(format!("ball edge {x}-{y} lands in a clique with another rotative stabilizer"));
        }
    }
    Ok(())
}

/// The periagroup acting on its Cayley graph by left multiplication, with
/// the conjugates of vertex groups as rotative stabilizers.
pub fn cayley_action(p: &Presentation, ball: &CayleyBall) -> Result<(GroupAction, SubgroupSet)> {
    let el = ball.elements()?;
    let n = el.order();
    let left = |x: usize| -> Perm { (0..n).map(|v| el.mul(x, v)).collect() };
    let generators: Vec<Perm> = ball
        .generators
        .iter()
        .map(|&s| left(el.element_of(&[s]).expect("complete ball")))
        .collect();
    let a = GroupAction::new(ball.graph.clone(), generators, n + 1)?;
    let mut sets: Vec<Vec<Perm>> = Vec::new();
    for u in 0..p.vertex_count() {
        let gu = el.vertex_group(u);
        for x in 0..n {
            let mut s: Vec<Perm> = el.conjugate_set(x, &gu).into_iter().map(left).collect();
            s.sort();
            if !sets.contains(&s) {
                sets.push(s);
            }
        }
    }
    sets.sort();
    Ok((a, SubgroupSet { subgroups: sets }))
}
