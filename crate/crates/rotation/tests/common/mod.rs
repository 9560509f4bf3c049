#![allow(dead_code)]

use mediangle_core::Graph;
use mediangle_periagroup::{GroupSpec, Presentation};
use mediangle_rotation::{GroupAction, Perm, SubgroupSet};

pub fn finite_presentations() -> Vec<(&'static str, Presentation)> {
    let c = GroupSpec::Cyclic;
    vec![
        ("hexagon", Presentation::dihedral(3).unwrap()),
        ("prism", Presentation::graph_product(vec![c(3), c(2)], &[(0, 1)]).unwrap()),
        (
            "s3xz3",
            Presentation::new(vec![c(2), c(2), c(3)], &[(0, 1, 3), (0, 2, 2), (1, 2, 2)]).unwrap(),
        ),
        ("s4", Presentation::type_a(3).unwrap()),
        ("b2", Presentation::dihedral(4).unwrap()),
        ("z4", Presentation::new(vec![c(4)], &[]).unwrap()),
        ("z2xz2xz3", Presentation::graph_product(vec![c(2), c(2), c(3)], &[(0, 1), (0, 2), (1, 2)]).unwrap()),
    ]
}

fn subgroups(a: &GroupAction, gens: &[Vec<Perm>]) -> SubgroupSet {
    SubgroupSet::generated(a, gens).unwrap()
}

/// S3 acting freely on the hexagon by rotations of two steps and the
/// reflections through edge midpoints.
pub fn s3_hexagon() -> (GroupAction, SubgroupSet) {
    let refl = |k: usize| -> Perm { (0..6).map(|v| (k + 6 - v) % 6).collect() };
    let rot: Perm = (0..6).map(|v| (v + 2) % 6).collect();
    let a = GroupAction::new(Graph::cycle(6), vec![rot, refl(1)], 100).unwrap();
    let r = subgroups(&a, &[vec![refl(1)], vec![refl(3)], vec![refl(5)]]);
    (a, r)
}

/// The prism on `(i, j)`, `i` mod 3 and `j` mod 2, numbered `i + 3j`.
pub fn prism() -> Graph {
    let v = |i: usize, j: usize| i % 3 + 3 * j;
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..2 {
            edges.push((v(i, j), v(i + 1, j)));
        }
        edges.push((v(i, 0), v(i, 1)));
    }
    Graph::from_edges(6, &edges).unwrap()
}

/// Z/6 acting on the prism by `(i, j) -> (i + 1, j + 1)`.
pub fn z6_prism() -> (GroupAction, SubgroupSet) {
    let v = |i: usize, j: usize| i % 3 + 3 * (j % 2);
    let gen: Perm = (0..6).map(|x| v(x % 3 + 1, x / 3 + 1)).collect();
    let turn: Perm = (0..6).map(|x| v(x % 3 + 1, x / 3)).collect();
    let flip: Perm = (0..6).map(|x| v(x % 3, x / 3 + 1)).collect();
    let a = GroupAction::new(prism(), vec![gen], 100).unwrap();
    let r = subgroups(&a, &[vec![turn], vec![flip]]);
    (a, r)
}

/// S3 acting on K3,3 = Cay(S3, transpositions) by left multiplication;
/// every axiom but the barrier one holds.
pub fn s3_k33() -> (GroupAction, SubgroupSet) {
    // elements of S3 as permutations of three letters; even ones first
    let elems: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| elems.iter().position(|&q| q == p).unwrap();
    let mul = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let edges: Vec<(usize, usize)> = (0..3).flat_map(|x| (3..6).map(move |y| (x, y))).collect();
    let graph = Graph::from_edges(6, &edges).unwrap();
    let left = |g: [usize; 3]| -> Perm { elems.iter().map(|&x| idx(mul(g, x))).collect() };
    let gens = vec![left([1, 0, 2]), left([1, 2, 0])];
    let a = GroupAction::new(graph, gens, 100).unwrap();
    let r = subgroups(&a, &[vec![left([1, 0, 2])], vec![left([0, 2, 1])], vec![left([2, 1, 0])]]);
    (a, r)
}

/// The full symmetry group of the hexagon with the three edge-reflection
/// subgroups; vertex reflections fix vertices.
pub fn d6_hexagon() -> (GroupAction, SubgroupSet) {
    let refl = |k: usize| -> Perm { (0..6).map(|v| (k + 6 - v) % 6).collect() };
    let rot: Perm = (0..6).map(|v| (v + 1) % 6).collect();
    let a = GroupAction::new(Graph::cycle(6), vec![rot, refl(1)], 100).unwrap();
    let r = subgroups(&a, &[vec![refl(1)], vec![refl(3)], vec![refl(5)]]);
    (a, r)
}
