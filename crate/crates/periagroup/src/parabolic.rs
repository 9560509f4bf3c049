//! Parabolic subgroups as gated cosets in a complete Cayley ball, and checks
//! of how vertex-group and subgraph subgroups intersect.

use std::collections::BTreeSet;

use mediangle_core::VertexSet;

use crate::cayley::{intersect, CayleyBall, Elements};
use crate::error::{PeriagroupError, Result};
use crate::presentation::Presentation;
use crate::word::{Syllable, Word};

fn require_complete(ball: &CayleyBall) -> Result<()> {
    if ball.complete {
        Ok(())
    } else {
        Err(PeriagroupError::IncompleteBall)
    }
}

fn element(ball: &CayleyBall, g: &[Syllable]) -> Result<usize> {
    ball.vertex_of(g)
        .ok_or_else(|| PeriagroupError::Parse("word uses a syllable outside the vertex groups".into()))
}

/// The coset `g <xi>` as a vertex set of the ball.
pub fn parabolic(p: &Presentation, ball: &CayleyBall, g: &[Syllable], xi: &[usize]) -> Result<VertexSet> {
    require_complete(ball)?;
    for &u in xi {
        p.check_vertex(u)?;
    }
    Ok(ball.coset(element(ball, g)?, xi))
}

/// Computes `(k, Xi)` with `g<phi>g^-1 ∩ h<psi>h^-1 = k<Xi>k^-1`, where `P` is
/// the projection of `h<psi>` onto `g<phi>`, `Xi` the labels of edges inside
/// `P` and `k` its least vertex. The equality is checked on element sets.
pub fn parabolic_intersection(
    p: &Presentation,
    ball: &CayleyBall,
    (g, phi): (&[Syllable], &[usize]),
    (h, psi): (&[Syllable], &[usize]),
) -> Result<(Word, Vec<usize>)> {
    let a = parabolic(p, ball, g, phi)?;
    let b = parabolic(p, ball, h, psi)?;
    let proj = ball.graph.projection(&a, &b)?;
    let xi: BTreeSet<usize> = ball
        .graph
        .edges()
        .iter()
        .zip(&ball.labels)
        .filter(|((x, y), _)| proj.contains(*x) && proj.contains(*y))
        .map(|(_, s)| s.vertex)
        .collect();
    let xi: Vec<usize> = xi.into_iter().collect();
    let k = proj.first().expect("projection of a non-empty set");

    let el = Elements::new(ball)?;
    let conj = |x: usize, sub: &[usize]| el.conjugate_set(x, &el.standard_subgroup(sub));
    let lhs = intersect(&conj(element(ball, g)?, phi), &conj(element(ball, h)?, psi));
    let rhs = conj(k, &xi);
    if lhs != rhs {
        return Err(PeriagroupError::Verification(format!(
            "intersection has {} elements but k<Xi>k^-1 has {} (k = {k}, Xi = {xi:?})",
            lhs.len(),
            rhs.len()
        )));
    }
    Ok((ball.reps[k].clone(), xi))
}

/// A counterexample to the rule that conjugates of two vertex groups meet
/// trivially unless they coincide and have order two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexGroupViolation {
    pub g: usize,
    pub u: usize,
    pub v: usize,
}

/// Checks, for every element `g` and vertices `u`, `v`, that a nontrivial
/// `g G_u g^-1 ∩ G_v` forces equality, and order two when `u != v`.
pub fn check_vertex_group_intersections(p: &Presentation, el: &Elements) -> Option<VertexGroupViolation> {
    let n = p.vertex_count();
    let groups: Vec<Vec<usize>> = (0..n).map(|u| el.vertex_group(u)).collect();
    for g in 0..el.order() {
        for u in 0..n {
            let conj = el.conjugate_set(g, &groups[u]);
            for v in 0..n {
                if intersect(&conj, &groups[v]).len() > 1 {
                    let equal = conj == groups[v];
                    let order_two = conj.len() == 2 && groups[v].len() == 2;
                    if !equal || (u != v && !order_two) {
                        return Some(VertexGroupViolation { g, u, v });
                    }
                }
            }
        }
    }
    None
}

/// Checks `<L1> ∩ <L2> = {1}` for all pairs of disjoint vertex subsets;
/// returns the first failing pair.
pub fn check_disjoint_subgraphs(p: &Presentation, el: &Elements) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = p.vertex_count();
    let mut cache = std::collections::HashMap::new();
    let mut subgroup = |mask: usize| -> Vec<usize> {
        cache
            .entry(mask)
            .or_insert_with(|| el.standard_subgroup(&(0..n).filter(|&u| mask >> u & 1 == 1).collect::<Vec<_>>()))
            .clone()
    };
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut m1, mut m2, mut c) = (0usize, 0usize, code);
        for u in 0..n {
            match c % 3 {
                1 => m1 |= 1 << u,
                2 => m2 |= 1 << u,
                _ => {}
            }
            c /= 3;
        }
        if m1 == 0 || m2 == 0 || m1 > m2 {
            continue;
        }
        if intersect(&subgroup(m1), &subgroup(m2)) != vec![0] {
            let bits = |m: usize| (0..n).filter(|&u| m >> u & 1 == 1).collect();
            return Some((bits(m1), bits(m2)));
        }
    }
    None
}
