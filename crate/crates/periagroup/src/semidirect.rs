//! The splitting of a finite periagroup as (graph-product part) by
//! (Coxeter part), checked on explicit element sets.

use serde::{Deserialize, Serialize};

use crate::cayley::{intersect, CayleyBall, Elements};
use crate::error::Result;
use crate::presentation::Presentation;
use crate::word::Syllable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectReport {
    pub order: usize,
    /// Order of the kernel `K` of the retraction onto the Coxeter part.
    pub kernel_order: usize,
    /// Order of the Coxeter part `C(Phi)`.
    pub complement_order: usize,
    pub homomorphism: bool,
    pub retracts: bool,
    pub product_formula: bool,
    pub trivial_intersection: bool,
    /// `K` is generated by the conjugates of the vertex groups outside Phi.
    pub kernel_generated: bool,
    /// Conjugates `g G_u g^-1` with `g` in `C(Phi)` and no tail letter in
    /// the link of `u`.
    pub basis_size: usize,
    pub basis_distinct: bool,
    pub basis_generates: bool,
    pub passed: bool,
}

/// Requires a complete ball of `p`.
pub fn verify_semidirect(p: &Presentation, ball: &CayleyBall) -> Result<SemidirectReport> {
    let el = Elements::new(ball)?;
    let n = el.order();
    let phi = p.phi();
    let psi = p.psi();
    let retract = |x: usize| {
        let kept: Vec<Syllable> = ball.reps[x].iter().copied().filter(|s| phi.contains(&s.vertex)).collect();
        el.element_of(&kept).expect("complete ball")
    };
    let r: Vec<usize> = (0..n).map(retract).collect();
    let homomorphism = (0..n).all(|a| (0..n).all(|b| r[el.mul(a, b)] == el.mul(r[a], r[b])));
    let complement = el.standard_subgroup(&phi);
    let retracts = complement.iter().all(|&x| r[x] == x) && (0..n).all(|x| complement.binary_search(&r[x]).is_ok());
    let kernel: Vec<usize> = (0..n).filter(|&x| r[x] == 0).collect();
    let product_formula = kernel.len() * complement.len() == n;
    let trivial_intersection = intersect(&kernel, &complement) == vec![0];

    let mut conjugates = Vec::new();
    for &u in &psi {
        let gu = el.vertex_group(u);
        for g in 0..n {
            conjugates.extend(gu.iter().map(|&a| el.conj(g, a)));
        }
    }
    let kernel_generated = el.closure(&conjugates) == kernel;

    let mut basis: Vec<Vec<usize>> = Vec::new();
    for &u in &psi {
        let link: Vec<usize> = p.gamma().neighbors(u).iter().copied().filter(|v| phi.contains(v)).collect();
        let gu = el.vertex_group(u);
        for &g in &complement {
            let len = ball.reps[g].len();
            let tail_meets_link = link.iter().any(|&s| {
                let gs = el.element_of(&[Syllable::new(s, 1)]).map(|s| el.mul(g, s)).expect("complete ball");
                ball.reps[gs].len() < len
            });
            if !tail_meets_link {
                basis.push(el.conjugate_set(g, &gu));
            }
        }
    }
    let basis_size = basis.len();
    let mut sorted = basis.clone();
    sorted.sort();
    sorted.dedup();
    let basis_distinct = sorted.len() == basis_size;
    let basis_elements: Vec<usize> = basis.concat();
    let basis_generates = el.closure(&basis_elements) == kernel;

    let passed = homomorphism
        && retracts
        && product_formula
        && trivial_intersection
        && kernel_generated
        && basis_distinct
        && basis_generates;
    Ok(SemidirectReport {
        order: n,
        kernel_order: kernel.len(),
        complement_order: complement.len(),
        homomorphism,
        retracts,
        product_formula,
        trivial_intersection,
        kernel_generated,
        basis_size,
        basis_distinct,
        basis_generates,
        passed,
    })
}
