//! Acceptance suite: one pass/fail line per criterion. Every check is exact;
//! the only tolerances are the wall-clock limits below.

mod oracle;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::time::{Duration, Instant};

use mediangle_core::{classify, CheckOptions, Cycle, Graph, HyperplaneSystem, Label, VertexSet};
use mediangle_families::{cartesian_product, corpus, finite_presentations, FamilySpec};
use mediangle_periagroup::parabolic::{check_disjoint_subgraphs, check_vertex_group_intersections};
use mediangle_periagroup::{
    cayley_ball, groups_isomorphic, parabolic_intersection, presentation_isomorphism, verify_semidirect, GroupSpec,
    Presentation, Rewriter, Syllable,
};
use mediangle_rotation::{
    cayley_action, extract_periagroup, rotation_subgroup, verify_rotation_system, FreeTransitiveViolation,
    GroupAction, Perm, SubgroupSet,
};

use oracle::{all_words, compose, free_normal_form, PermOracle};

const LIMIT_RECOGNIZER: Duration = Duration::from_secs(10);
const LIMIT_BIGHYP: Duration = Duration::from_secs(60);
const LIMIT_WORDS: Duration = Duration::from_secs(120);
const LIMIT_PARABOLIC: Duration = Duration::from_secs(60);
/// Criteria without a stated limit still must finish.
const LIMIT_DEFAULT: Duration = Duration::from_secs(300);

const MAX_BIGHYP_VERTICES: usize = 500;
const MAX_WORD_LEN: usize = 6;
const MAX_TREE_VERTICES: usize = 50;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labels(ls: &[Label]) -> BTreeSet<Label> {
    ls.iter().copied().collect()
}

fn bfs(g: &Graph, x: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; g.vertex_count()];
    d[x] = Some(0);
    let mut q = VecDeque::from([x]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if d[w].is_none() {
                d[w] = Some(d[v].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    d
}

fn c1_recognizer() -> Check {
    use Label::*;
    let all = labels(&[Median, QuasiMedian, Mediangle, BipartiteMediangle]);
    let qm = labels(&[QuasiMedian, Mediangle]);
    let bip = labels(&[Mediangle, BipartiteMediangle]);
    let none = BTreeSet::new();
    let cubes: Vec<String> = (1..=4).map(|n| format!("hypercube:{n}")).collect();
    let mut trees = Vec::new();
    for n in [1, 2, 3, 5, 8, 13, 21, 34, MAX_TREE_VERTICES] {
        for seed in 0..3 {
            trees.push(format!("random-tree:{n},{seed}"));
        }
    }
    let mut checked = 0;
    let mut run = |spec: &str, expected: &BTreeSet<Label>| -> Result<(), String> {
        let g = spec.parse::<FamilySpec>().map_err(|e| e.to_string())?.generate().map_err(|e| e.to_string())?;
        let c = classify(&g, CheckOptions::default()).map_err(|e| e.to_string())?;
        checked += 1;
        ensure(&c.labels == expected, || format!("{spec}: got {:?}, expected {expected:?}", c.labels))
    };
    for spec in cubes.iter().chain(&trees) {
        run(spec, &all)?;
    }
    for (spec, expected) in [
        ("hamming:2,3", &qm),
        ("hamming:3,3", &qm),
        ("even-cycle:6", &bip),
        ("even-cycle:8", &bip),
        ("even-cycle:10", &bip),
        ("k4-minus", &none),
        ("complete-bipartite:3,2", &none),
        ("cube-minus-vertex", &none),
    ] {
        run(spec, expected)?;
    }
    Ok(format!("{checked} graphs"))
}

fn c2_bighyp() -> Check {
    let mut checked = 0;
    for m in corpus() {
        if !m.expected.contains(&Label::Mediangle) || m.graph.vertex_count() > MAX_BIGHYP_VERTICES {
            continue;
        }
        let report = mediangle_core::verify_bighyp(&m.graph, None).map_err(|e| e.to_string())?;
        let violations =
            report.separation.violation_count + report.convexity.violation_count + report.geodesics.violation_count;
        ensure(report.passed && violations == 0, || format!("{}: {violations} violations", m.name))?;
        checked += 1;
    }
    ensure(checked > 0, || "no mediangle corpus graphs".into())?;
    Ok(format!("{checked} mediangle corpus graphs"))
}

/// The angle at one cycle, from first principles: `2(1 + d) / len` in units
/// of pi, with `d` the least cycle distance between the edges.
fn angle_on_cycle(c: &Cycle, e1: &[usize], e2: &[usize]) -> (u64, u64) {
    let len = c.len();
    let mut d = usize::MAX;
    for &i in e1 {
        for &j in e2 {
            for a in [i, (i + 1) % len] {
                for b in [j, (j + 1) % len] {
                    let k = (a + len - b) % len;
                    d = d.min(k.min(len - k));
                }
            }
        }
    }
    let (num, den) = (2 * (1 + d) as u64, len as u64);
    let g = gcd(num, den);
    (num / g, den / g)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks every transverse pair against the formula on every shared cycle.
fn check_angles(name: &str, g: &Graph) -> Result<usize, String> {
    let hs = HyperplaneSystem::new(g, None).map_err(|e| e.to_string())?;
    let mut per_pair: BTreeMap<(usize, usize), BTreeSet<(u64, u64)>> = BTreeMap::new();
    for c in hs.cycles() {
        let len = c.len();
        let mut positions: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..len {
            let j = hs.hyperplane_of(c.at(i), c.at((i + 1) % len)).map_err(|e| e.to_string())?;
            positions.entry(j).or_default().push(i);
        }
        let hyps: Vec<usize> = positions.keys().copied().collect();
        for (a, &j1) in hyps.iter().enumerate() {
            for &j2 in &hyps[a + 1..] {
                let value = angle_on_cycle(c, &positions[&j1], &positions[&j2]);
                per_pair.entry((j1, j2)).or_default().insert(value);
            }
        }
    }
    for (&(j1, j2), values) in &per_pair {
        ensure(values.len() == 1, || format!("{name}: pair {j1},{j2} has angles {values:?}"))?;
        let expected = *values.iter().next().unwrap();
        let a = hs.angle(j1, j2).map_err(|e| format!("{name}: {e}"))?;
        ensure((a.numerator, a.denominator) == expected, || {
            format!("{name}: pair {j1},{j2} gives {a}, formula gives {expected:?}")
        })?;
    }
    ensure(!per_pair.is_empty(), || format!("{name}: no transverse pairs"))?;
    Ok(per_pair.len())
}

fn c3_angles() -> Check {
    let k2 = Graph::complete(2);
    let s4 = cayley_ball(&Presentation::type_a(3).unwrap(), None, 1000).map_err(|e| e.to_string())?.graph;
    let mut pairs = 0;
    for (name, g) in [
        ("C6xK2", cartesian_product(&Graph::cycle(6), &k2)),
        ("C8xK2", cartesian_product(&Graph::cycle(8), &k2)),
        ("S4", s4),
    ] {
        pairs += check_angles(name, &g)?;
    }
    for m in 2..=8u64 {
        let g = Graph::cycle(2 * m as usize);
        let hs = HyperplaneSystem::new(&g, None).map_err(|e| e.to_string())?;
        for i in 0..(m as usize) {
            // edge i and edge i + 1 share a vertex: d = 0
            let j1 = hs.hyperplane_of(i, i + 1).unwrap();
            let j2 = hs.hyperplane_of(i + 1, (i + 2) % (2 * m as usize)).unwrap();
            let a = hs.angle(j1, j2).map_err(|e| e.to_string())?;
            ensure((a.numerator, a.denominator) == (1, m), || format!("C{}: angle {a}", 2 * m))?;
            ensure(a.lambda() == Ok(m), || format!("C{}: lambda of {a}", 2 * m))?;
        }
    }
    Ok(format!("{pairs} transverse pairs, dihedral m = 2..8"))
}

fn c4_words() -> Check {
    let c = GroupSpec::Cyclic;
    let s = Syllable::new;
    let mut cases: Vec<(String, Presentation, Option<PermOracle>, Vec<Syllable>)> = Vec::new();
    for m in 3..=6 {
        cases.push((
            format!("dihedral {m}"),
            Presentation::dihedral(m as u32).unwrap(),
            Some(oracle::dihedral(m)),
            vec![s(0, 1), s(1, 1)],
        ));
    }
    cases.push(("A2".into(), Presentation::type_a(2).unwrap(), Some(oracle::symmetric(3)), vec![s(0, 1), s(1, 1)]));
    cases.push((
        "A3".into(),
        Presentation::type_a(3).unwrap(),
        Some(oracle::symmetric(4)),
        vec![s(0, 1), s(1, 1), s(2, 1)],
    ));
    cases.push((
        "Z2 x Z3 x Z4".into(),
        Presentation::graph_product(vec![c(2), c(3), c(4)], &[(0, 1), (0, 2), (1, 2)]).unwrap(),
        Some(oracle::direct_product(&[2, 3, 4])),
        vec![s(0, 1), s(1, 1), s(2, 1)],
    ));
    cases.push((
        "Z2 * Z3".into(),
        Presentation::new(vec![c(2), c(3)], &[]).unwrap(),
        None,
        vec![s(0, 1), s(1, 1), s(1, 2)],
    ));
    let mut pairs = 0usize;
    for (name, p, perm, letters) in &cases {
        let r = Rewriter::new(p);
        let words = all_words(letters, MAX_WORD_LEN);
        // oracle element keys and geodesic lengths
        let (keys, lengths): (Vec<Vec<i64>>, Vec<usize>) = match perm {
            Some(o) => {
                let geo = o.geodesic_lengths();
                words
                    .iter()
                    .map(|w| {
                        let e = o.eval(w);
                        let len = geo[&e];
                        (e.into_iter().map(|x| x as i64).collect(), len)
                    })
                    .unzip()
            }
            None => words
                .iter()
                .map(|w| {
                    let nf = free_normal_form(p, w);
                    let len = nf.len();
                    (nf.iter().flat_map(|x| [x.vertex as i64, x.element]).collect(), len)
                })
                .unzip(),
        };
        for (w, &len) in words.iter().zip(&lengths) {
            let red = r.reduce(w).map_err(|e| format!("{name}: {e}"))?;
            ensure(red.len() == len, || format!("{name}: reduce({w:?}) has length {}, oracle {len}", red.len()))?;
        }
        for i in 0..words.len() {
            for j in i..words.len() {
                let got = r.words_equal(&words[i], &words[j]).map_err(|e| format!("{name}: {e}"))?;
                let expected = keys[i] == keys[j];
                ensure(got == expected, || {
                    format!("{name}: words_equal({:?}, {:?}) = {got}, oracle {expected}", words[i], words[j])
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{} presentations, {pairs} word pairs", cases.len()))
}

fn criterion5_presentations() -> Vec<(&'static str, Presentation)> {
    finite_presentations()
        .into_iter()
        .filter(|(n, _)| ["hexagon", "prism", "s3xz3", "s4", "b2"].contains(n))
        .collect()
}

fn c5_round_trip() -> Check {
    let expected_orders = BTreeMap::from([("hexagon", 6), ("prism", 6), ("s3xz3", 18), ("s4", 24), ("b2", 8)]);
    let list = criterion5_presentations();
    ensure(list.len() == 5, || "missing presentations".into())?;
    for (name, p) in list {
        let ball = cayley_ball(&p, None, 100_000).map_err(|e| format!("{name}: {e}"))?;
        ensure(ball.complete, || format!("{name}: incomplete"))?;
        let order = oracle::for_presentation(name).elements().len();
        ensure(ball.order() == order && order == expected_orders[name], || {
            format!("{name}: {} vertices, oracle order {order}", ball.order())
        })?;
        let verdict = mediangle_core::is_mediangle(&ball.graph, CheckOptions::default()).map_err(|e| e.to_string())?;
        ensure(verdict.holds, || format!("{name}: not mediangle: {:?}", verdict.witness))?;
        let (a, r) = cayley_action(&p, &ball).map_err(|e| format!("{name}: {e}"))?;
        let report = verify_rotation_system(&a, &r).map_err(|e| e.to_string())?;
        ensure(report.passed, || format!("{name}: induced action is not a rotation system"))?;
        let q = extract_periagroup(&a, &r, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure(presentation_isomorphism(&p, &q).is_some(), || format!("{name}: extracted {q:?}"))?;
    }
    Ok("5 presentations".into())
}

fn reflection(k: usize) -> Perm {
    (0..6).map(|v| (k + 6 - v) % 6).collect()
}

fn prism() -> Graph {
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

fn z6_prism() -> (GroupAction, SubgroupSet) {
    let v = |i: usize, j: usize| i % 3 + 3 * (j % 2);
    let gen: Perm = (0..6).map(|x| v(x % 3 + 1, x / 3 + 1)).collect();
    let turn: Perm = (0..6).map(|x| v(x % 3 + 1, x / 3)).collect();
    let flip: Perm = (0..6).map(|x| v(x % 3, x / 3 + 1)).collect();
    let a = GroupAction::new(prism(), vec![gen], 100).unwrap();
    let r = SubgroupSet::generated(&a, &[vec![turn], vec![flip]]).unwrap();
    (a, r)
}

fn c6_rotation() -> Check {
    let rot2: Perm = (0..6).map(|v| (v + 2) % 6).collect();
    let s3 = GroupAction::new(Graph::cycle(6), vec![rot2, reflection(1)], 100).unwrap();
    let s3_r = SubgroupSet::generated(&s3, &[vec![reflection(1)], vec![reflection(3)], vec![reflection(5)]]).unwrap();
    let (z6, z6_r) = z6_prism();
    for (name, a, r) in [("S3 on hexagon", &s3, &s3_r), ("Z6 on prism", &z6, &z6_r)] {
        let report = verify_rotation_system(a, r).map_err(|e| e.to_string())?;
        ensure(report.passed, || format!("{name} fails: {report:?}"))?;
    }

    // S3 on K3,3 by left multiplication, rotated by the transpositions
    let elems: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| elems.iter().position(|&q| q == p).unwrap();
    let mul = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let left = |g: [usize; 3]| -> Perm { elems.iter().map(|&x| idx(mul(g, x))).collect() };
    let edges: Vec<(usize, usize)> = (0..3).flat_map(|x| (3..6).map(move |y| (x, y))).collect();
    let k33 = Graph::from_edges(6, &edges).unwrap();
    let a = GroupAction::new(k33.clone(), vec![left([1, 0, 2]), left([1, 2, 0])], 100).unwrap();
    let transpositions = [left([1, 0, 2]), left([0, 2, 1]), left([2, 1, 0])];
    let r = SubgroupSet::generated(&a, &transpositions.iter().map(|t| vec![t.clone()]).collect::<Vec<_>>()).unwrap();
    let report = verify_rotation_system(&a, &r).map_err(|e| e.to_string())?;
    ensure(report.presystem.passed && !report.passed, || format!("K3,3: {report:?}"))?;
    let w = report.barrier_violation.ok_or("K3,3: no barrier witness")?;
    // the witness clique is an edge; the barrier is every edge rotated by
    // the same transposition, and removing it leaves u, v connected
    ensure(w.clique.len() == 2 && w.clique.contains(w.u) && w.clique.contains(w.v) && w.u != w.v, || {
        format!("K3,3: bad witness {w:?}")
    })?;
    let t = transpositions
        .iter()
        .find(|t| t[w.u] == w.v && t[w.v] == w.u)
        .ok_or("K3,3: no transposition rotates the witness clique")?;
    let kept: Vec<(usize, usize)> = k33.edges().iter().copied().filter(|&(x, y)| !(t[x] == y && t[y] == x)).collect();
    let rest = Graph::from_edges(6, &kept).unwrap();
    ensure(bfs(&rest, w.u)[w.v].is_some(), || "K3,3: barrier separates the witness".into())?;

    // the full symmetry group of the hexagon: vertex reflections fix vertices
    let rot1: Perm = (0..6).map(|v| (v + 1) % 6).collect();
    let d6 = GroupAction::new(Graph::cycle(6), vec![rot1, reflection(1)], 100).unwrap();
    let d6_r = SubgroupSet::generated(&d6, &[vec![reflection(1)], vec![reflection(3)], vec![reflection(5)]]).unwrap();
    let report = verify_rotation_system(&d6, &d6_r).map_err(|e| e.to_string())?;
    ensure(!report.passed, || "D6 passes".into())?;
    match report.free_transitive_violation {
        Some(FreeTransitiveViolation::NotFree { vertex, element }) => {
            let identity: Perm = (0..6).collect();
            ensure(element != identity && element[vertex] == vertex, || {
                format!("D6: {element:?} does not witness a fixed point at {vertex}")
            })?;
            let g = Graph::cycle(6);
            let automorphism = g.edges().iter().all(|&(x, y)| g.has_edge(element[x], element[y]));
            let even_rotation = element == compose(&reflection(1), &reflection(1));
            ensure(automorphism && !even_rotation, || format!("D6: {element:?} is not a symmetry"))?;
        }
        other => return Err(format!("D6: expected a fixed point, got {other:?}")),
    }
    Ok("2 passing, 2 failing with verified witnesses".into())
}

fn c7_pingpong() -> Check {
    let (a, _) = z6_prism();
    let hs = HyperplaneSystem::new(a.graph(), None).map_err(|e| e.to_string())?;
    let vertical = hs.hyperplane_of(0, 3).map_err(|e| e.to_string())?;
    let d = rotation_subgroup(&a, &[vertical], 0).map_err(|e| e.to_string())?;
    ensure(
        d.passed && d.group_order == 6 && d.rot.len() == 2 && d.stab_y.len() == 3 && d.trivial_intersection,
        || format!("prism: {d:?}"),
    )?;
    ensure(d.presentation.vertex_count() == 1 && d.presentation.group(0).has_order_two(), || {
        format!("prism: Rot is {:?}", d.presentation)
    })?;

    let mut seeds = 0;
    for (name, p) in finite_presentations() {
        let ball = cayley_ball(&p, None, 100_000).map_err(|e| e.to_string())?;
        let (a, _) = cayley_action(&p, &ball).map_err(|e| e.to_string())?;
        let group = a.group();
        let hs = HyperplaneSystem::new(a.graph(), None).map_err(|e| e.to_string())?;
        for j in 0..hs.len() {
            let d = rotation_subgroup(&a, &[j], 0).map_err(|e| format!("{name} seed {j}: {e}"))?;
            // recompute G = Rot . stab(Y) and Rot ∩ stab(Y) = {1} from the sets
            let mut products = BTreeSet::new();
            for &x in &d.rot {
                for &y in &d.stab_y {
                    products.insert(group.mul(x, y));
                }
            }
            let meet: Vec<_> = d.rot.iter().filter(|x| d.stab_y.contains(x)).collect();
            ensure(products.len() == group.order() && meet == vec![&0], || {
                format!("{name} seed {j}: |Rot.stab| = {}, meet {meet:?}", products.len())
            })?;
            ensure(d.passed, || format!("{name} seed {j}: {d:?}"))?;
            d.presentation.validate().map_err(|e| format!("{name} seed {j}: {e}"))?;
            for h in d.presentation.groups() {
                ensure(p.groups().iter().any(|g| groups_isomorphic(g, h)), || {
                    format!("{name} seed {j}: vertex group {h:?} is not among the inputs")
                })?;
            }
            seeds += 1;
        }
    }
    Ok(format!("prism 6 = 2 * 3, {seeds} single seeds"))
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1usize << n).map(|m| (0..n).filter(|&u| m >> u & 1 == 1).collect()).collect()
}

fn c8_parabolic() -> Check {
    let mut total = 0;
    for name in ["s4", "s3xz3"] {
        let p = finite_presentations().into_iter().find(|(n, _)| *n == name).unwrap().1;
        let o = oracle::for_presentation(name);
        let ball = cayley_ball(&p, None, 100_000).map_err(|e| e.to_string())?;
        let elements: Vec<(Vec<Syllable>, oracle::Perm)> = ball.reps.iter().map(|w| (w.clone(), o.eval(w))).collect();
        // parabolic conjugates g<X>g^-1, one g per left coset of <X>
        let mut conjugates = Vec::new();
        for x in subsets(p.vertex_count()) {
            let sub = o.standard_subgroup(&x);
            let mut cosets = BTreeSet::new();
            for (w, g) in &elements {
                let coset: BTreeSet<oracle::Perm> = sub.iter().map(|h| compose(g, h)).collect();
                if cosets.insert(coset) {
                    conjugates.push((w.clone(), x.clone(), o.conjugate(g, &sub)));
                }
            }
        }
        for (g, phi, a) in &conjugates {
            for (h, psi, b) in &conjugates {
                let (k, xi) = parabolic_intersection(&p, &ball, (g, phi), (h, psi))
                    .map_err(|e| format!("{name}: {g:?}<{phi:?}> and {h:?}<{psi:?}>: {e}"))?;
                let brute: BTreeSet<oracle::Perm> = a.intersection(b).cloned().collect();
                let answer = o.conjugate(&o.eval(&k), &o.standard_subgroup(&xi));
                ensure(brute == answer, || {
                    format!("{name}: {g:?}<{phi:?}> and {h:?}<{psi:?}> meet in {} elements, answer has {}", brute.len(), answer.len())
                })?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} pairs"))
}

/// Conjugates of vertex groups meet trivially unless equal, and distinct
/// vertices share a conjugate only for order two; disjoint subgraphs
/// generate subgroups meeting trivially.
fn oracle_vertex_group_lemmas(o: &PermOracle, n: usize) -> Result<(), String> {
    let groups: Vec<BTreeSet<oracle::Perm>> = (0..n).map(|u| o.standard_subgroup(&[u])).collect();
    for g in o.elements() {
        for (u, gu) in groups.iter().enumerate() {
            let conj = o.conjugate(&g, gu);
            for (v, gv) in groups.iter().enumerate() {
                let meet = conj.intersection(gv).count();
                if meet > 1 {
                    ensure(conj == *gv && (u == v || conj.len() == 2), || {
                        format!("conjugate of G_{u} meets G_{v} in {meet} elements")
                    })?;
                }
            }
        }
    }
    for a in subsets(n) {
        for b in subsets(n) {
            if a.is_empty() || b.is_empty() || a.iter().any(|x| b.contains(x)) {
                continue;
            }
            let meet = o.standard_subgroup(&a).intersection(&o.standard_subgroup(&b)).count();
            ensure(meet == 1, || format!("<{a:?}> and <{b:?}> meet in {meet} elements"))?;
        }
    }
    Ok(())
}

fn c9_semidirect() -> Check {
    let list = finite_presentations();
    for (name, p) in &list {
        let ball = cayley_ball(p, None, 100_000).map_err(|e| e.to_string())?;
        let report = verify_semidirect(p, &ball).map_err(|e| format!("{name}: {e}"))?;
        let o = oracle::for_presentation(name);
        let order = o.elements().len();
        ensure(report.passed && report.order == order && report.kernel_order * report.complement_order == order, || {
            format!("{name}: {report:?}, oracle order {order}")
        })?;
        let el = ball.elements().map_err(|e| e.to_string())?;
        ensure(check_vertex_group_intersections(p, &el).is_none(), || format!("{name}: vertex groups"))?;
        ensure(check_disjoint_subgraphs(p, &el).is_none(), || format!("{name}: disjoint subgraphs"))?;
        oracle_vertex_group_lemmas(&o, p.vertex_count()).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} presentations", list.len()))
}

fn c10_embedding() -> Check {
    let mut checked = 0;
    for m in corpus() {
        if !m.expected.contains(&Label::Mediangle) {
            continue;
        }
        let g = &m.graph;
        let hs = HyperplaneSystem::new(g, None).map_err(|e| e.to_string())?;
        let emb = hs.clique_embedding().map_err(|e| format!("{}: {e}", m.name))?;
        ensure(emb.factors.len() == hs.len(), || format!("{}: one factor per hyperplane", m.name))?;
        for f in &emb.factors {
            let f: &VertexSet = f;
            ensure(f.iter().all(|x| f.iter().all(|y| x == y || g.has_edge(x, y))), || {
                format!("{}: factor {f:?} is not complete", m.name)
            })?;
        }
        for x in g.vertices() {
            let d = bfs(g, x);
            for y in g.vertices() {
                let image = emb.coordinates[x].iter().zip(&emb.coordinates[y]).filter(|(a, b)| a != b).count();
                ensure(d[y] == Some(image), || {
                    format!("{}: d({x},{y}) = {:?} but the image distance is {image}", m.name, d[y])
                })?;
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} mediangle corpus graphs"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("recognizer ground truth", c1_recognizer, LIMIT_RECOGNIZER),
        ("hyperplane theorem suite", c2_bighyp, LIMIT_BIGHYP),
        ("angle well-definedness", c3_angles, LIMIT_DEFAULT),
        ("word problem against oracles", c4_words, LIMIT_WORDS),
        ("Cayley round trip", c5_round_trip, LIMIT_DEFAULT),
        ("rotation system verification", c6_rotation, LIMIT_DEFAULT),
        ("ping-pong decomposition", c7_pingpong, LIMIT_DEFAULT),
        ("parabolic intersections", c8_parabolic, LIMIT_PARABOLIC),
        ("semidirect and vertex-group lemmas", c9_semidirect, LIMIT_DEFAULT),
        ("isometric clique embedding", c10_embedding, LIMIT_DEFAULT),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let id = format!("{}", i + 1);
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= *limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS {name}: {detail} ({elapsed:.2?}, limit {limit:?})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name}: {msg} ({elapsed:.2?}, limit {limit:?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
