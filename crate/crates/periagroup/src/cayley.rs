//! Cayley graphs of periagroups over the union of their vertex groups, and
//! the regular representation of finite ones.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use mediangle_core::{BallInfo, Graph, VertexSet};

use crate::error::{PeriagroupError, Result};
use crate::presentation::Presentation;
use crate::word::{Rewriter, Syllable, Word};

/// Default vertex cap for ball generation.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyBall {
    pub graph: Graph,
    /// Per edge of `graph.edges()`, oriented from the smaller vertex `x` to
    /// the larger `y`: `y = x * label`.
    pub labels: Vec<Syllable>,
    /// Canonical word of each vertex, the identity first.
    pub reps: Vec<Word>,
    /// Whether the whole group was enumerated.
    pub complete: bool,
    /// The nontrivial vertex-group elements, in generation order.
    pub generators: Vec<Syllable>,
    /// `right[x][i]` is `x * generators[i]`, when it lies in the ball.
    pub right: Vec<Vec<Option<usize>>>,
}

/// Breadth-first enumeration from the identity; vertices are numbered in
/// discovery order, so the numbering is part of the result.
pub fn cayley_ball(p: &Presentation, radius: Option<usize>, vertex_cap: usize) -> Result<CayleyBall> {
    cayley_ball_with(&Rewriter::new(p), radius, vertex_cap)
}

pub fn cayley_ball_with(r: &Rewriter, radius: Option<usize>, vertex_cap: usize) -> Result<CayleyBall> {
    let p = r.presentation();
    let mut generators = Vec::new();
    for u in 0..p.vertex_count() {
        let elements = p.group(u).nontrivial().ok_or(PeriagroupError::InfiniteGroup(u))?;
        generators.extend(elements.into_iter().map(|e| Syllable::new(u, e)));
    }
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut reps: Vec<Word> = vec![Vec::new()];
    let mut depth = vec![0usize];
    let mut right: Vec<Vec<Option<usize>>> = Vec::new();
    index.insert(Vec::new(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut complete = true;
    while let Some(x) = queue.pop_front() {
        let mut row = vec![None; generators.len()];
        let at_boundary = radius.is_some_and(|r| depth[x] >= r);
        for (i, &s) in generators.iter().enumerate() {
            let mut w = reps[x].clone();
            w.push(s);
            let canon = r.canonical_form(&w)?;
            if let Some(&y) = index.get(&canon) {
                row[i] = Some(y);
            } else if at_boundary {
                complete = false;
            } else {
                if reps.len() >= vertex_cap {
                    return Err(PeriagroupError::VertexCapExceeded(vertex_cap));
                }
                let y = reps.len();
                index.insert(canon.clone(), y);
                reps.push(canon);
                depth.push(depth[x] + 1);
                queue.push_back(y);
                row[i] = Some(y);
            }
        }
        right.push(row);
    }
    let mut label_of: HashMap<(usize, usize), Syllable> = HashMap::new();
    let mut edges = Vec::new();
    for (x, row) in right.iter().enumerate() {
        for (i, y) in row.iter().enumerate() {
            if let Some(y) = *y {
                if x < y {
                    label_of.entry((x, y)).or_insert(generators[i]);
                    edges.push((x, y));
                }
            }
        }
    }
    let mut graph = Graph::from_edges(reps.len(), &edges)?;
    if !complete {
        graph = graph.with_ball(BallInfo {
            center: 0,
            radius: radius.unwrap_or(0),
            margin: None,
        });
    }
    let labels = graph.edges().iter().map(|e| label_of[e]).collect();
    Ok(CayleyBall {
        graph,
        labels,
        reps,
        complete,
        generators,
        right,
    })
}

impl CayleyBall {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    fn generator_index(&self, s: Syllable) -> Option<usize> {
        self.generators.iter().position(|&g| g == s)
    }

    /// Vertex of the element a word represents, when it lies in the ball.
    pub fn vertex_of(&self, w: &[Syllable]) -> Option<usize> {
        w.iter().try_fold(0, |x, &s| self.right[x][self.generator_index(s)?])
    }

    /// Label of the edge `x-y`, oriented so that `y = x * label`.
    pub fn label(&self, x: usize, y: usize, p: &Presentation) -> Option<Syllable> {
        let e = self.graph.edge_index(x, y)?;
        let s = self.labels[e];
        Some(if x < y {
            s
        } else {
            Syllable::new(s.vertex, p.group(s.vertex).inv(s.element))
        })
    }

    /// The coset `x * <xi>`: vertices reachable from `x` along edges whose
    /// label lies in `xi`.
    pub fn coset(&self, x: usize, xi: &[usize]) -> VertexSet {
        let mut seen = vec![false; self.order()];
        seen[x] = true;
        let mut stack = vec![x];
        while let Some(a) = stack.pop() {
            for (i, s) in self.generators.iter().enumerate() {
                if xi.contains(&s.vertex) {
                    if let Some(b) = self.right[a][i] {
                        if !std::mem::replace(&mut seen[b], true) {
                            stack.push(b);
                        }
                    }
                }
            }
        }
        (0..self.order()).filter(|&v| seen[v]).collect()
    }

    pub fn elements(&self) -> Result<Elements> {
        Elements::new(self)
    }
}

/// The regular representation of a finite periagroup: element `i` is ball
/// vertex `i`, with full multiplication and inverse tables.
#[derive(Debug, Clone)]
pub struct Elements {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<usize>,
    generators: Vec<Syllable>,
    gen_element: Vec<usize>,
}

impl Elements {
    pub fn new(ball: &CayleyBall) -> Result<Self> {
        if !ball.complete {
            return Err(PeriagroupError::IncompleteBall);
        }
        let n = ball.order();
        let walk = |x: usize, w: &[Syllable]| ball.vertex_of_from(x, w).expect("complete ball");
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = walk(a, &ball.reps[b]) as u32;
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).expect("group has inverses");
        }
        let gen_element = ball.generators.iter().map(|&s| walk(0, &[s])).collect();
        Ok(Elements {
            n,
            mul,
            inv,
            generators: ball.generators.clone(),
            gen_element,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g a g^-1`.
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn element_of(&self, w: &[Syllable]) -> Option<usize> {
        w.iter().try_fold(0, |x, s| {
            let i = self.generators.iter().position(|g| g == s)?;
            Some(self.mul(x, self.gen_element[i]))
        })
    }

    /// Elements of the vertex group at `u`, identity included.
    pub fn vertex_group(&self, u: usize) -> Vec<usize> {
        let mut out = vec![0];
        out.extend(
            self.generators
                .iter()
                .zip(&self.gen_element)
                .filter(|(s, _)| s.vertex == u)
                .map(|(_, &e)| e),
        );
        out.sort_unstable();
        out
    }

    /// The subgroup generated by the vertex groups of `vertices`.
    pub fn standard_subgroup(&self, vertices: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = vertices.iter().flat_map(|&u| self.vertex_group(u)).collect();
        self.closure(&gens)
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !std::mem::replace(&mut inside[b], true) {
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// `g H g^-1` for a sorted element set `h`, sorted.
    pub fn conjugate_set(&self, g: usize, h: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&a| self.conj(g, a)).collect();
        out.sort_unstable();
        out
    }
}

impl CayleyBall {
    fn vertex_of_from(&self, x: usize, w: &[Syllable]) -> Option<usize> {
        w.iter().try_fold(x, |x, &s| self.right[x][self.generator_index(s)?])
    }
}

/// Sorted intersection of two sorted element lists.
pub fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}
