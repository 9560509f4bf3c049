//! Isomorphism tests for small finite groups and for presentations.

use crate::group::GroupSpec;
use crate::presentation::Presentation;

/// An isomorphism between finite groups given as tables, as the image of
/// each element, found by searching over images of a generating set.
pub fn group_isomorphism(a: &[Vec<usize>], b: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let order = |t: &[Vec<usize>], x: usize| {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = t[y][x];
            k += 1;
        }
        k
    };
    // greedy generating set of a
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = closure(a, &gens);
    for x in 0..n {
        if !reached[x] {
            gens.push(x);
            reached = closure(a, &gens);
        }
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| order(b, y) == order(a, g)).collect())
        .collect();
    let mut choice = vec![0; gens.len()];
    loop {
        if candidates.iter().all(|c| !c.is_empty()) {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if let Some(map) = extend(a, b, &gens, &images) {
                return Some(map);
            }
        } else {
            return None;
        }
        // odometer over candidate images
        let mut i = 0;
        loop {
            if i == gens.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn closure(t: &[Vec<usize>], gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; t.len()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = t[x][g];
            if !std::mem::replace(&mut seen[y], true) {
                stack.push(y);
            }
        }
    }
    seen
}

fn extend(a: &[Vec<usize>], b: &[Vec<usize>], gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for (&g, &h) in gens.iter().zip(images) {
            let (y, fy) = (a[x][g], b[map[x]][h]);
            if map[y] == usize::MAX {
                map[y] = fy;
                stack.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &y in &map {
        if std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    let hom = (0..n).all(|x| (0..n).all(|y| map[a[x][y]] == b[map[x]][map[y]]));
    hom.then_some(map)
}

pub fn groups_isomorphic(a: &GroupSpec, b: &GroupSpec) -> bool {
    match (a.table(), b.table()) {
        (Some(x), Some(y)) => group_isomorphism(&x, &y).is_some(),
        (None, None) => true,
        _ => false,
    }
}

/// A bijection `sigma` of vertices with `lambda(u, v) = lambda'(sigma u,
/// sigma v)` and `G_u ≅ G'_{sigma u}`, if one exists.
pub fn presentation_isomorphism(p: &Presentation, q: &Presentation) -> Option<Vec<usize>> {
    let n = p.vertex_count();
    if q.vertex_count() != n || p.edges().len() != q.edges().len() {
        return None;
    }
    let compatible: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| groups_isomorphic(p.group(u), q.group(v))).collect())
        .collect();
    let mut sigma = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(p, q, &compatible, &mut sigma, &mut used).then_some(sigma)
}

fn search(p: &Presentation, q: &Presentation, ok: &[Vec<bool>], sigma: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let u = sigma.len();
    if u == p.vertex_count() {
        return true;
    }
    for v in 0..q.vertex_count() {
        if used[v] || !ok[u][v] {
            continue;
        }
        if (0..u).any(|w| p.lambda(w, u) != q.lambda(sigma[w], v)) {
            continue;
        }
        sigma.push(v);
        used[v] = true;
        if search(p, q, ok, sigma, used) {
            return true;
        }
        sigma.pop();
        used[v] = false;
    }
    false
}
