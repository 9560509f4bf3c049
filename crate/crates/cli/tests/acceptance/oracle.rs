//! Independent group oracles: permutation representations built by hand,
//! with closures and geodesic lengths computed by plain search.

use std::collections::{BTreeSet, HashMap, VecDeque};

use mediangle_periagroup::{Presentation, Syllable};

pub type Perm = Vec<usize>;

/// `(a b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &[usize]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn power(a: &[usize], e: i64) -> Perm {
    let mut out: Perm = (0..a.len()).collect();
    for _ in 0..e {
        out = compose(&out, a);
    }
    out
}

fn cycle_on(degree: usize, points: &[usize]) -> Perm {
    let mut p: Perm = (0..degree).collect();
    for (i, &x) in points.iter().enumerate() {
        p[x] = points[(i + 1) % points.len()];
    }
    p
}

/// A finite group given by one permutation per vertex group generator.
pub struct PermOracle {
    pub degree: usize,
    /// Generator of each vertex group and its order.
    pub vertex_gens: Vec<(Perm, i64)>,
}

impl PermOracle {
    pub fn identity(&self) -> Perm {
        (0..self.degree).collect()
    }

    pub fn syllable(&self, s: Syllable) -> Perm {
        let (g, order) = &self.vertex_gens[s.vertex];
        power(g, s.element.rem_euclid(*order))
    }

    pub fn eval(&self, w: &[Syllable]) -> Perm {
        w.iter().fold(self.identity(), |acc, &s| compose(&acc, &self.syllable(s)))
    }

    /// Every nontrivial syllable.
    pub fn syllables(&self) -> Vec<Syllable> {
        self.vertex_gens
            .iter()
            .enumerate()
            .flat_map(|(u, (_, order))| (1..*order).map(move |e| Syllable::new(u, e)))
            .collect()
    }

    pub fn closure(&self, gens: &[Perm]) -> BTreeSet<Perm> {
        let mut seen = BTreeSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = compose(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn elements(&self) -> BTreeSet<Perm> {
        let gens: Vec<Perm> = self.vertex_gens.iter().map(|(g, _)| g.clone()).collect();
        self.closure(&gens)
    }

    pub fn standard_subgroup(&self, vertices: &[usize]) -> BTreeSet<Perm> {
        let gens: Vec<Perm> = vertices.iter().map(|&u| self.vertex_gens[u].0.clone()).collect();
        self.closure(&gens)
    }

    pub fn conjugate(&self, g: &[usize], h: &BTreeSet<Perm>) -> BTreeSet<Perm> {
        let gi = inverse(g);
        h.iter().map(|x| compose(&compose(g, x), &gi)).collect()
    }

    /// Syllable length of every element, by breadth-first search.
    pub fn geodesic_lengths(&self) -> HashMap<Perm, usize> {
        let letters: Vec<Perm> = self.syllables().into_iter().map(|s| self.syllable(s)).collect();
        let mut dist = HashMap::from([(self.identity(), 0)]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for l in &letters {
                let y = compose(&x, l);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// Reflections `i -> -i` and `i -> 1 - i` of the `m`-gon.
pub fn dihedral(m: usize) -> PermOracle {
    let s: Perm = (0..m).map(|i| (m - i) % m).collect();
    let t: Perm = (0..m).map(|i| (m + 1 - i) % m).collect();
    PermOracle {
        degree: m,
        vertex_gens: vec![(s, 2), (t, 2)],
    }
}

/// Adjacent transpositions of `n` letters.
pub fn symmetric(n: usize) -> PermOracle {
    PermOracle {
        degree: n,
        vertex_gens: (0..n - 1).map(|i| (cycle_on(n, &[i, i + 1]), 2)).collect(),
    }
}

/// One cycle per factor on disjoint blocks of points.
pub fn direct_product(orders: &[usize]) -> PermOracle {
    let degree = orders.iter().sum();
    let mut start = 0;
    let mut vertex_gens = Vec::new();
    for &k in orders {
        let block: Vec<usize> = (start..start + k).collect();
        vertex_gens.push((cycle_on(degree, &block), k as i64));
        start += k;
    }
    PermOracle { degree, vertex_gens }
}

/// `S3 x Z/3`: transpositions of three letters and a 3-cycle elsewhere.
pub fn s3_times_z3() -> PermOracle {
    PermOracle {
        degree: 6,
        vertex_gens: vec![
            (cycle_on(6, &[0, 1]), 2),
            (cycle_on(6, &[1, 2]), 2),
            (cycle_on(6, &[3, 4, 5]), 3),
        ],
    }
}

/// The oracle for each finite corpus presentation, by name.
pub fn for_presentation(name: &str) -> PermOracle {
    match name {
        "hexagon" => dihedral(3),
        "b2" => dihedral(4),
        "prism" => direct_product(&[3, 2]),
        "s3xz3" => s3_times_z3(),
        "s4" => symmetric(4),
        "z4" => direct_product(&[4]),
        "z2xz2xz3" => direct_product(&[2, 2, 3]),
        other => panic!("no oracle for {other}"),
    }
}

/// Normal form in a free product of cyclic groups: merge equal neighbours,
/// drop identities.
pub fn free_normal_form(p: &Presentation, w: &[Syllable]) -> Vec<Syllable> {
    let mut stack: Vec<Syllable> = Vec::new();
    for &s in w {
        let order = p.group(s.vertex).order().expect("finite") as i64;
        let mut cur = Syllable::new(s.vertex, s.element.rem_euclid(order));
        if let Some(top) = stack.last() {
            if top.vertex == cur.vertex {
                cur.element = (top.element + cur.element).rem_euclid(order);
                stack.pop();
            }
        }
        if cur.element != 0 {
            stack.push(cur);
        }
    }
    stack
}

pub fn all_words(letters: &[Syllable], max_len: usize) -> Vec<Vec<Syllable>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Syllable>| {
                letters.iter().map(move |&l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
