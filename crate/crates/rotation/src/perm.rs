//! Finite permutation groups, enumerated explicitly.

use std::collections::HashMap;

use crate::error::{Result, RotationError};

/// A permutation of `0..n`, as the image of each point.
pub type Perm = Vec<usize>;

/// `(g h)(v) = g(h(v))`.
pub fn compose(g: &[usize], h: &[usize]) -> Perm {
    h.iter().map(|&v| g[v]).collect()
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn inverse(g: &[usize]) -> Perm {
    let mut out = vec![0; g.len()];
    for (v, &w) in g.iter().enumerate() {
        out[w] = v;
    }
    out
}

pub fn is_permutation(g: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    g.len() == n && g.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// All elements of the group generated by some permutations; element 0 is
/// the identity and the rest follow breadth-first order.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn generate(degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        let id = identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let x = compose(&elements[i], g);
                if !index.contains_key(&x) {
                    if elements.len() >= cap {
                        return Err(RotationError::CapExceeded(cap));
                    }
                    index.insert(x.clone(), elements.len());
                    elements.push(x);
                }
            }
            i += 1;
        }
        Ok(PermGroup { degree, elements, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &[usize]) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a], &self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&inverse(&self.elements[a])]
    }

    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn apply(&self, g: usize, v: usize) -> usize {
        self.elements[g][v]
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            for &g in gens {
                let y = self.mul(members[i], g);
                if !std::mem::replace(&mut inside[y], true) {
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// `g H g^-1`, sorted.
    pub fn conjugate_set(&self, g: usize, h: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&a| self.conj(g, a)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        h.contains(&0) && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, self.inv(b)))))
    }
}
