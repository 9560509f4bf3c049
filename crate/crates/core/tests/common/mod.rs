#![allow(dead_code)]

use mediangle_core::{Graph, VertexSet};
use rand::seq::IndexedRandom;
use rand::Rng;

pub fn product(a: &Graph, b: &Graph) -> Graph {
    let nb = b.vertex_count();
    let mut edges = Vec::new();
    for x in a.vertices() {
        for &(u, v) in b.edges() {
            edges.push((x * nb + u, x * nb + v));
        }
    }
    for &(u, v) in a.edges() {
        for y in b.vertices() {
            edges.push((u * nb + y, v * nb + y));
        }
    }
    Graph::from_edges(a.vertex_count() * nb, &edges).unwrap()
}

pub fn hypercube(n: usize) -> Graph {
    (1..n).fold(Graph::path(2), |g, _| product(&g, &Graph::path(2)))
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// Graphs known to be mediangle, with their names.
pub fn mediangle_corpus() -> Vec<(&'static str, Graph)> {
    let k2 = Graph::path(2);
    vec![
        ("q1", hypercube(1)),
        ("q3", hypercube(3)),
        ("q4", hypercube(4)),
        ("c6", Graph::cycle(6)),
        ("c8", Graph::cycle(8)),
        ("c10", Graph::cycle(10)),
        ("k4", Graph::complete(4)),
        ("prism", product(&Graph::complete(3), &k2)),
        ("k3k3", product(&Graph::complete(3), &Graph::complete(3))),
        ("c6k2", product(&Graph::cycle(6), &k2)),
        ("c8k2", product(&Graph::cycle(8), &k2)),
        ("c6c4", product(&Graph::cycle(6), &Graph::cycle(4))),
        ("c6k3", product(&Graph::cycle(6), &Graph::complete(3))),
        ("star", star(5)),
        ("path", Graph::path(7)),
    ]
}

/// A connected vertex set grown from a random seed by random frontier steps.
pub fn random_connected_subset(g: &Graph, size: usize, rng: &mut impl Rng) -> VertexSet {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    let start = rng.random_range(0..n);
    inside[start] = true;
    let mut members = vec![start];
    while members.len() < size {
        let frontier: Vec<usize> = members
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&w| !inside[w])
            .collect();
        let Some(&w) = frontier.choose(rng) else { break };
        inside[w] = true;
        members.push(w);
    }
    members.into_iter().collect()
}
