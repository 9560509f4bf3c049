//! Deterministic generators for the example families of mediangle graphs,
//! each annotated with the labels the recognizer must reproduce.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use mediangle_core::{BallInfo, Graph, GraphError, Label};
use mediangle_periagroup::{cayley_ball, PeriagroupError, Presentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family}: {message}")]
    BadParameter { family: &'static str, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Periagroup(#[from] PeriagroupError),
}

pub type Result<T, E = FamilyError> = std::result::Result<T, E>;

/// Largest vertex count any generator will produce.
pub const MAX_VERTICES: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Hypercube { n: usize },
    /// Cartesian product of complete graphs of the given orders.
    Hamming { orders: Vec<usize> },
    EvenCycle { len: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    /// K4 minus an edge.
    K4Minus,
    /// A tree from a parent list: vertex `i + 1` hangs off `parents[i]`.
    Tree { parents: Vec<usize> },
    /// A uniformly random recursive tree, reproducible from its seed.
    RandomTree { n: usize, seed: u64 },
    Product { factors: Vec<FamilySpec> },
    /// The Cayley graph of the dihedral Coxeter group of order `2m`.
    CoxeterDihedral { m: usize },
    /// The Cayley graph of the symmetric group on `n + 1` letters.
    CoxeterA { n: usize },
    /// The Cayley graph of any finite periagroup.
    Cayley { presentation: Presentation },
    /// A ball in the Cayley graph of a graph product.
    GraphProductBall { presentation: Presentation, radius: usize },
    CubeMinusVertex,
    HexagonalTilingBall { radius: usize },
}

fn bad<T>(family: &'static str, message: impl Into<String>) -> Result<T> {
    Err(FamilyError::BadParameter {
        family,
        message: message.into(),
    })
}

fn check_size(family: &'static str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return bad(family, format!("{n} vertices exceeds the limit of {MAX_VERTICES}"));
    }
    Ok(())
}

/// Cartesian product, vertices numbered lexicographically: `(a, b)` is
/// `a * |h| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    let mut edges = Vec::new();
    for a in 0..g.vertex_count() {
        for &(x, y) in h.edges() {
            edges.push((a * m + x, a * m + y));
        }
    }
    for &(a, b) in g.edges() {
        for x in 0..m {
            edges.push((a * m + x, b * m + x));
        }
    }
    Graph::from_edges(g.vertex_count() * m, &edges).expect("valid product")
}

pub fn hypercube(n: usize) -> Result<Graph> {
    hamming(&vec![2; n])
}

pub fn hamming(orders: &[usize]) -> Result<Graph> {
    if orders.contains(&0) {
        return bad("hamming", "factor orders must be positive");
    }
    let size = orders.iter().try_fold(1usize, |acc, &k| acc.checked_mul(k));
    match size {
        Some(n) => check_size("hamming", n)?,
        None => return bad("hamming", "too many vertices"),
    }
    Ok(orders
        .iter()
        .fold(Graph::complete(1), |acc, &k| cartesian_product(&acc, &Graph::complete(k))))
}

pub fn even_cycle(len: usize) -> Result<Graph> {
    if len < 4 || len % 2 == 1 {
        return bad("even-cycle", format!("length must be even and at least 4, got {len}"));
    }
    check_size("even-cycle", len)?;
    Ok(Graph::cycle(len))
}

pub fn tree(parents: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, &p) in parents.iter().enumerate() {
        if p > i {
            return bad("tree", format!("vertex {} must hang off an earlier vertex, got {p}", i + 1));
        }
        edges.push((i + 1, p));
    }
    Ok(Graph::from_edges(parents.len() + 1, &edges)?)
}

pub fn random_tree_parents(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (1..n).map(|v| rng.random_range(0..v)).collect()
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges: Vec<_> = (0..m).flat_map(|a| (0..n).map(move |b| (a, m + b))).collect();
    Graph::from_edges(m + n, &edges).expect("valid bipartite graph")
}

pub fn k4_minus() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("valid graph")
}

/// The 3-cube with one vertex deleted: the others keep their binary
/// coordinates in order.
pub fn cube_minus_vertex() -> Graph {
    let q3 = hypercube(3).expect("small cube");
    let keep: mediangle_core::VertexSet = (0..7).collect();
    q3.induced(&keep)
}

/// The ball of the given radius around a vertex of the hexagonal tiling,
/// drawn as a brick wall: `(x, y)` meets `(x ± 1, y)`, and `(x, y + 1)`
/// when `x + y` is even. Vertices are numbered by `(x, y)` order and the
/// graph carries ball metadata with a margin of half a hexagon.
pub fn hexagonal_tiling_ball(radius: usize) -> Result<Graph> {
    if radius > 200 {
        return bad("hexagonal-tiling-ball", "radius must be at most 200");
    }
    let neighbours = |(x, y): (i64, i64)| {
        let vertical = if (x + y).rem_euclid(2) == 0 { (x, y + 1) } else { (x, y - 1) };
        [(x - 1, y), (x + 1, y), vertical]
    };
    let mut depth: BTreeMap<(i64, i64), usize> = BTreeMap::from([((0, 0), 0)]);
    let mut queue = VecDeque::from([(0i64, 0i64)]);
    while let Some(p) = queue.pop_front() {
        let d = depth[&p];
        if d == radius {
            continue;
        }
        for q in neighbours(p) {
            if let std::collections::btree_map::Entry::Vacant(e) = depth.entry(q) {
                e.insert(d + 1);
                queue.push_back(q);
            }
        }
    }
    let index: BTreeMap<(i64, i64), usize> = depth.keys().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (&p, &i) in &index {
        for q in neighbours(p) {
            if let Some(&j) = index.get(&q) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    let g = Graph::from_edges(index.len(), &edges)?;
    Ok(g.with_ball(BallInfo {
        center: index[&(0, 0)],
        radius,
        margin: Some(3),
    }))
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::Hamming { .. } => "hamming",
            FamilySpec::EvenCycle { .. } => "even-cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::K4Minus => "k4-minus",
            FamilySpec::Tree { .. } => "tree",
            FamilySpec::RandomTree { .. } => "random-tree",
            FamilySpec::Product { .. } => "product",
            FamilySpec::CoxeterDihedral { .. } => "coxeter-dihedral",
            FamilySpec::CoxeterA { .. } => "coxeter-a",
            FamilySpec::Cayley { .. } => "cayley",
            FamilySpec::GraphProductBall { .. } => "graph-product-ball",
            FamilySpec::CubeMinusVertex => "cube-minus-vertex",
            FamilySpec::HexagonalTilingBall { .. } => "hexagonal-tiling-ball",
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match self {
            FamilySpec::Hypercube { n } => hypercube(*n),
            FamilySpec::Hamming { orders } => hamming(orders),
            FamilySpec::EvenCycle { len } => even_cycle(*len),
            FamilySpec::Path { n } => {
                if *n == 0 {
                    return bad("path", "needs at least one vertex");
                }
                check_size("path", *n)?;
                Ok(Graph::path(*n))
            }
            FamilySpec::Complete { n } => {
                if *n == 0 || *n > 1000 {
                    return bad("complete", "order must be between 1 and 1000");
                }
                Ok(Graph::complete(*n))
            }
            FamilySpec::CompleteBipartite { m, n } => {
                if *m == 0 || *n == 0 || m + n > 1000 {
                    return bad("complete-bipartite", "sides must be positive with at most 1000 vertices");
                }
                Ok(complete_bipartite(*m, *n))
            }
            FamilySpec::K4Minus => Ok(k4_minus()),
            FamilySpec::Tree { parents } => tree(parents),
            FamilySpec::RandomTree { n, seed } => {
                if *n == 0 {
                    return bad("random-tree", "needs at least one vertex");
                }
                check_size("random-tree", *n)?;
                tree(&random_tree_parents(*n, *seed))
            }
            FamilySpec::Product { factors } => {
                if factors.is_empty() {
                    return bad("product", "needs at least one factor");
                }
                let graphs = factors.iter().map(FamilySpec::generate).collect::<Result<Vec<_>>>()?;
                let size = graphs.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.vertex_count()));
                match size {
                    Some(n) => check_size("product", n)?,
                    None => return bad("product", "too many vertices"),
                }
                let mut it = graphs.into_iter();
                let first = it.next().expect("non-empty");
                Ok(it.fold(first, |acc, g| cartesian_product(&acc, &g)))
            }
            FamilySpec::CoxeterDihedral { m } => {
                if *m < 2 {
                    return bad("coxeter-dihedral", "m must be at least 2");
                }
                even_cycle(2 * m)
            }
            FamilySpec::CoxeterA { n } => {
                if *n == 0 || *n > 6 {
                    return bad("coxeter-a", "n must be between 1 and 6");
                }
                let p = Presentation::type_a(*n)?;
                Ok(cayley_ball(&p, None, MAX_VERTICES)?.graph)
            }
            FamilySpec::Cayley { presentation } => Ok(cayley_ball(presentation, None, MAX_VERTICES)?.graph),
            FamilySpec::GraphProductBall { presentation, radius } => {
                if presentation.edges().iter().any(|&(_, _, l)| l != 2) {
                    return bad("graph-product-ball", "every edge label must be 2");
                }
                Ok(cayley_ball(presentation, Some(*radius), MAX_VERTICES)?.graph)
            }
            FamilySpec::CubeMinusVertex => Ok(cube_minus_vertex()),
            FamilySpec::HexagonalTilingBall { radius } => hexagonal_tiling_ball(*radius),
        }
    }

    /// The labels the recognizer must report. Balls are judged on their
    /// interior.
    pub fn expected_labels(&self) -> BTreeSet<Label> {
        use Label::*;
        let all = || BTreeSet::from([Median, QuasiMedian, Mediangle, BipartiteMediangle]);
        let qm = || BTreeSet::from([QuasiMedian, Mediangle]);
        let bipartite = || BTreeSet::from([Mediangle, BipartiteMediangle]);
        match self {
            FamilySpec::Hypercube { .. }
            | FamilySpec::Path { .. }
            | FamilySpec::Tree { .. }
            | FamilySpec::RandomTree { .. } => all(),
            FamilySpec::Hamming { orders } => {
                if orders.iter().all(|&k| k <= 2) {
                    all()
                } else {
                    qm()
                }
            }
            FamilySpec::EvenCycle { len } => {
                if *len == 4 {
                    all()
                } else {
                    bipartite()
                }
            }
            FamilySpec::CoxeterDihedral { m } => {
                if *m == 2 {
                    all()
                } else {
                    bipartite()
                }
            }
            FamilySpec::Complete { n } => {
                if *n <= 2 {
                    all()
                } else {
                    qm()
                }
            }
            FamilySpec::CompleteBipartite { m, n } => {
                if (*m).min(*n) == 1 || (*m == 2 && *n == 2) {
                    all()
                } else {
                    BTreeSet::new()
                }
            }
            FamilySpec::K4Minus | FamilySpec::CubeMinusVertex => BTreeSet::new(),
            FamilySpec::Product { factors } => factors
                .iter()
                .map(FamilySpec::expected_labels)
                .reduce(|a, b| a.intersection(&b).copied().collect())
                .unwrap_or_default(),
            FamilySpec::CoxeterA { n } => {
                if *n == 1 {
                    all()
                } else {
                    bipartite()
                }
            }
            FamilySpec::Cayley { presentation: p } | FamilySpec::GraphProductBall { presentation: p, .. } => {
                let right_angled = p.edges().iter().all(|&(_, _, l)| l == 2);
                let mut labels = BTreeSet::from([Mediangle]);
                if p.is_coxeter() {
                    labels.insert(BipartiteMediangle);
                }
                if right_angled {
                    labels.insert(QuasiMedian);
                    if p.is_coxeter() {
                        labels.insert(Median);
                    }
                }
                labels
            }
            FamilySpec::HexagonalTilingBall { .. } => bipartite(),
        }
    }
}

fn parse_usize(family: &'static str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .or_else(|_| bad(family, format!("expected a non-negative integer, got {s:?}")))
}

fn parse_list(family: &'static str, args: &str) -> Result<Vec<usize>> {
    if args.trim().is_empty() {
        return Ok(Vec::new());
    }
    args.split(',').map(|s| parse_usize(family, s)).collect()
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// `name:arg,arg,...`; products join factors with `*`. Presentation
    /// families are built directly, not parsed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('*') {
            let factors = s.split('*').map(str::parse).collect::<Result<Vec<_>>>()?;
            return Ok(FamilySpec::Product { factors });
        }
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let one = |family: &'static str| -> Result<usize> {
            match parse_list(family, args)?.as_slice() {
                [x] => Ok(*x),
                _ => bad(family, "expected one parameter"),
            }
        };
        let two = |family: &'static str| -> Result<(usize, usize)> {
            match parse_list(family, args)?.as_slice() {
                [x, y] => Ok((*x, *y)),
                _ => bad(family, "expected two parameters"),
            }
        };
        let none = |family: &'static str, spec: FamilySpec| -> Result<FamilySpec> {
            if args.trim().is_empty() {
                Ok(spec)
            } else {
                bad(family, "takes no parameters")
            }
        };
        Ok(match name {
            "hypercube" => FamilySpec::Hypercube { n: one("hypercube")? },
            "hamming" => FamilySpec::Hamming {
                orders: parse_list("hamming", args)?,
            },
            "even-cycle" => FamilySpec::EvenCycle { len: one("even-cycle")? },
            "path" => FamilySpec::Path { n: one("path")? },
            "complete" => FamilySpec::Complete { n: one("complete")? },
            "complete-bipartite" => {
                let (m, n) = two("complete-bipartite")?;
                FamilySpec::CompleteBipartite { m, n }
            }
            "k4-minus" => none("k4-minus", FamilySpec::K4Minus)?,
            "tree" => FamilySpec::Tree {
                parents: parse_list("tree", args)?,
            },
            "random-tree" => {
                let (n, seed) = two("random-tree")?;
                FamilySpec::RandomTree { n, seed: seed as u64 }
            }
            "coxeter-dihedral" => FamilySpec::CoxeterDihedral {
                m: one("coxeter-dihedral")?,
            },
            "coxeter-a" => FamilySpec::CoxeterA { n: one("coxeter-a")? },
            "cube-minus-vertex" => none("cube-minus-vertex", FamilySpec::CubeMinusVertex)?,
            "hexagonal-tiling-ball" => FamilySpec::HexagonalTilingBall {
                radius: one("hexagonal-tiling-ball")?,
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Hypercube { n } => write!(f, "hypercube:{n}"),
            FamilySpec::Hamming { orders } => write!(f, "hamming:{}", list(orders)),
            FamilySpec::EvenCycle { len } => write!(f, "even-cycle:{len}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "complete-bipartite:{m},{n}"),
            FamilySpec::K4Minus => write!(f, "k4-minus"),
            FamilySpec::Tree { parents } => write!(f, "tree:{}", list(parents)),
            FamilySpec::RandomTree { n, seed } => write!(f, "random-tree:{n},{seed}"),
            FamilySpec::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("*"))
            }
            FamilySpec::CoxeterDihedral { m } => write!(f, "coxeter-dihedral:{m}"),
            FamilySpec::CoxeterA { n } => write!(f, "coxeter-a:{n}"),
            FamilySpec::Cayley { presentation } => write!(f, "cayley({})", presentation.to_json()),
            FamilySpec::GraphProductBall { presentation, radius } => {
                write!(f, "graph-product-ball:{radius}({})", presentation.to_json())
            }
            FamilySpec::CubeMinusVertex => write!(f, "cube-minus-vertex"),
            FamilySpec::HexagonalTilingBall { radius } => write!(f, "hexagonal-tiling-ball:{radius}"),
        }
    }
}

/// One annotated corpus graph.
#[derive(Debug, Clone)]
pub struct Member {
    pub name: String,
    pub spec: FamilySpec,
    pub graph: Graph,
    pub expected: BTreeSet<Label>,
}

impl Member {
    pub fn new(name: impl Into<String>, spec: FamilySpec) -> Result<Self> {
        let graph = spec.generate()?;
        let expected = spec.expected_labels();
        Ok(Member {
            name: name.into(),
            spec,
            graph,
            expected,
        })
    }
}

/// Finite presentations used throughout the tests.
pub fn finite_presentations() -> Vec<(&'static str, Presentation)> {
    use mediangle_periagroup::GroupSpec::Cyclic;
    vec![
        ("hexagon", Presentation::dihedral(3).expect("valid")),
        ("prism", Presentation::graph_product(vec![Cyclic(3), Cyclic(2)], &[(0, 1)]).expect("valid")),
        (
            "s3xz3",
            Presentation::new(vec![Cyclic(2), Cyclic(2), Cyclic(3)], &[(0, 1, 3), (0, 2, 2), (1, 2, 2)])
                .expect("valid"),
        ),
        ("s4", Presentation::type_a(3).expect("valid")),
        ("b2", Presentation::dihedral(4).expect("valid")),
        ("z4", Presentation::new(vec![Cyclic(4)], &[]).expect("valid")),
        (
            "z2xz2xz3",
            Presentation::graph_product(vec![Cyclic(2), Cyclic(2), Cyclic(3)], &[(0, 1), (0, 2), (1, 2)]).expect("valid"),
        ),
    ]
}

/// The recognizer ground-truth corpus: every family with fixed parameters.
pub fn corpus() -> Vec<Member> {
    let s = |text: &str| text.parse::<FamilySpec>().expect("corpus spec parses");
    let mut specs: Vec<(String, FamilySpec)> = Vec::new();
    for n in 1..=4 {
        specs.push((format!("q{n}"), FamilySpec::Hypercube { n }));
    }
    for (n, seed) in [(1, 0), (2, 1), (7, 2), (20, 3), (35, 4), (50, 5)] {
        specs.push((format!("tree{n}"), FamilySpec::RandomTree { n, seed }));
    }
    for text in [
        "hamming:2,3",
        "hamming:3,3",
        "hamming:3,3,2",
        "even-cycle:4",
        "even-cycle:6",
        "even-cycle:8",
        "even-cycle:10",
        "even-cycle:6*path:2",
        "even-cycle:8*path:2",
        "even-cycle:6*even-cycle:4",
        "even-cycle:6*complete:3",
        "complete:3",
        "complete:4",
        "k4-minus",
        "complete-bipartite:3,2",
        "complete-bipartite:3,3",
        "complete-bipartite:1,4",
        "cube-minus-vertex",
        "coxeter-dihedral:3",
        "coxeter-dihedral:5",
        "coxeter-a:2",
        "coxeter-a:3",
    ] {
        specs.push((text.to_string(), s(text)));
    }
    for (name, p) in finite_presentations() {
        specs.push((format!("cayley-{name}"), FamilySpec::Cayley { presentation: p }));
    }
    specs
        .into_iter()
        .map(|(name, spec)| Member::new(name, spec).expect("corpus generates"))
        .collect()
}
