//! Minimal coset representatives in Coxeter groups.

use crate::error::{PeriagroupError, Result};
use crate::presentation::Presentation;
use crate::word::{Rewriter, Syllable, Word};

/// The minimal-length element of `w <t>`, found by right-multiplying by
/// generators of `t` while that shortens the word.
pub fn coset_min_rep(p: &Presentation, w: &[Syllable], t: &[usize]) -> Result<Word> {
    coset_min_rep_with(&Rewriter::new(p), w, t)
}

pub fn coset_min_rep_with(r: &Rewriter, w: &[Syllable], t: &[usize]) -> Result<Word> {
    let p = r.presentation();
    if let Some(&u) = p.psi().first() {
        return Err(PeriagroupError::NotCoxeter(u));
    }
    for &s in t {
        p.check_vertex(s)?;
    }
    let mut current = r.reduce(w)?;
    'outer: loop {
        for &s in t {
            let mut next = current.clone();
            next.push(Syllable::new(s, 1));
            let next = r.reduce(&next)?;
            if next.len() < current.len() {
                current = next;
                continue 'outer;
            }
        }
        return r.canonical_form(&current);
    }
}

/// Right descent set: the generators `s` with `|ws| < |w|`. The tail of a
/// Coxeter element.
pub fn tail(r: &Rewriter, w: &[Syllable]) -> Result<Vec<usize>> {
    let p = r.presentation();
    let len = r.length(w)?;
    let mut out = Vec::new();
    for s in p.phi() {
        let mut ws = w.to_vec();
        ws.push(Syllable::new(s, 1));
        if r.length(&ws)? < len {
            out.push(s);
        }
    }
    Ok(out)
}
