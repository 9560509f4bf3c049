//! Words over vertex groups and the rewriting moves that decide the word
//! problem: reduction, fusion and the dihedral relation.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{PeriagroupError, Result};
use crate::group::Element;
use crate::presentation::Presentation;

/// Default cap on the number of words explored in one flip closure.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A letter of a word: one element of one vertex group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub vertex: usize,
    pub element: Element,
}

impl Syllable {
    pub fn new(vertex: usize, element: Element) -> Self {
        Syllable { vertex, element }
    }
}

pub type Word = Vec<Syllable>;

/// Shorthand for words whose syllables are all the element 1, the usual
/// case for Coxeter presentations.
pub fn word(vertices: &[usize]) -> Word {
    vertices.iter().map(|&v| Syllable::new(v, 1)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "at", rename_all = "snake_case")]
pub enum Move {
    /// Delete the trivial syllable at this position.
    Reduction(usize),
    /// Merge the syllables at this position and the next, from one vertex group.
    Fusion(usize),
    /// Replace the alternating window starting here by its swapped version.
    Dihedral(usize),
}

/// Rewriting engine for one presentation with a fixed flip-closure budget.
#[derive(Debug, Clone, Copy)]
pub struct Rewriter<'p> {
    p: &'p Presentation,
    budget: usize,
}

impl<'p> Rewriter<'p> {
    pub fn new(p: &'p Presentation) -> Self {
        Rewriter {
            p,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(p: &'p Presentation, budget: usize) -> Self {
        Rewriter { p, budget }
    }

    pub fn presentation(&self) -> &'p Presentation {
        self.p
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Checks that every syllable names a vertex and an element of its group.
    pub fn check_word(&self, w: &[Syllable]) -> Result<()> {
        for s in w {
            self.p.check_vertex(s.vertex)?;
            if !self.p.group(s.vertex).contains(s.element) {
                return Err(PeriagroupError::BadElement {
                    vertex: s.vertex,
                    element: s.element,
                });
            }
        }
        Ok(())
    }

    /// Drops trivial syllables, logging a warning when any were present.
    pub fn strip_identities(&self, w: &[Syllable]) -> Word {
        let out: Word = w
            .iter()
            .copied()
            .filter(|s| !self.p.group(s.vertex).is_identity(s.element))
            .collect();
        if out.len() != w.len() {
            log::warn!("stripped {} identity syllable(s)", w.len() - out.len());
        }
        out
    }

    pub fn inverse(&self, w: &[Syllable]) -> Word {
        w.iter()
            .rev()
            .map(|s| Syllable::new(s.vertex, self.p.group(s.vertex).inv(s.element)))
            .collect()
    }

    /// Length of the alternating window starting at `i`, if a dihedral move
    /// applies there.
    fn dihedral_window(&self, w: &[Syllable], i: usize) -> Option<usize> {
        let (a, b) = (w.get(i)?, w.get(i + 1)?);
        if a.vertex == b.vertex {
            return None;
        }
        let lambda = self.p.lambda(a.vertex, b.vertex)? as usize;
        if i + lambda > w.len() {
            return None;
        }
        let fits = (0..lambda).all(|k| w[i + k] == if k % 2 == 0 { *a } else { *b });
        let nontrivial = !self.p.group(a.vertex).is_identity(a.element)
            && !self.p.group(b.vertex).is_identity(b.element);
        (fits && nontrivial).then_some(lambda)
    }

    pub fn is_applicable(&self, w: &[Syllable], m: Move) -> bool {
        match m {
            Move::Reduction(i) => w.get(i).is_some_and(|s| self.p.group(s.vertex).is_identity(s.element)),
            Move::Fusion(i) => matches!((w.get(i), w.get(i + 1)), (Some(a), Some(b)) if a.vertex == b.vertex),
            Move::Dihedral(i) => self.dihedral_window(w, i).is_some(),
        }
    }

    pub fn applicable_moves(&self, w: &[Syllable]) -> Vec<Move> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            for m in [Move::Reduction(i), Move::Fusion(i), Move::Dihedral(i)] {
                if self.is_applicable(w, m) {
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn apply_move(&self, w: &[Syllable], m: Move) -> Result<Word> {
        if !self.is_applicable(w, m) {
            return Err(PeriagroupError::MoveNotApplicable(format!("{m:?}")));
        }
        let mut out = w.to_vec();
        match m {
            Move::Reduction(i) => {
                out.remove(i);
            }
            Move::Fusion(i) => {
                let g = self.p.group(w[i].vertex);
                out[i].element = g.mul(w[i].element, w[i + 1].element);
                out.remove(i + 1);
            }
            Move::Dihedral(i) => {
                let lambda = self.dihedral_window(w, i).expect("checked above");
                let (a, b) = (w[i], w[i + 1]);
                for k in 0..lambda {
                    out[i + k] = if k % 2 == 0 { b } else { a };
                }
            }
        }
        Ok(out)
    }

    /// All words reachable from `w` by dihedral moves, in breadth-first order.
    pub fn flip_closure(&self, w: &[Syllable]) -> Result<Vec<Word>> {
        let mut found = Vec::new();
        self.explore(w, |x| {
            found.push(x.to_vec());
            false
        })?;
        Ok(found)
    }

    /// Breadth-first walk of the flip closure; stops early when `visit`
    /// returns true. Returns whether it stopped early.
    fn explore(&self, w: &[Syllable], mut visit: impl FnMut(&[Syllable]) -> bool) -> Result<bool> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue: VecDeque<Word> = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(x) = queue.pop_front() {
            if visit(&x) {
                return Ok(true);
            }
            for i in 0..x.len() {
                if self.dihedral_window(&x, i).is_some() {
                    let y = self.apply_move(&x, Move::Dihedral(i))?;
                    if !seen.contains(&y) {
                        if seen.len() >= self.budget {
                            return Err(PeriagroupError::BudgetExceeded(self.budget));
                        }
                        seen.insert(y.clone());
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(false)
    }

    /// First shortening move available on `w`, if any.
    fn shortening(&self, w: &[Syllable]) -> Option<Move> {
        (0..w.len()).find_map(|i| {
            if self.is_applicable(w, Move::Reduction(i)) {
                Some(Move::Reduction(i))
            } else if self.is_applicable(w, Move::Fusion(i)) {
                Some(Move::Fusion(i))
            } else {
                None
            }
        })
    }

    /// A word of minimal length representing the same element: flips until a
    /// fusion or reduction appears, applies it, and starts over.
    pub fn reduce(&self, w: &[Syllable]) -> Result<Word> {
        self.check_word(w)?;
        let mut current = self.strip_identities(w);
        loop {
            let mut shorter: Option<Word> = None;
            self.explore(&current, |x| match self.shortening(x) {
                Some(m) => {
                    shorter = Some(self.apply_move(x, m).expect("shortening applies"));
                    true
                }
                None => false,
            })?;
            match shorter {
                Some(next) => current = next,
                None => return Ok(current),
            }
        }
    }

    pub fn length(&self, w: &[Syllable]) -> Result<usize> {
        Ok(self.reduce(w)?.len())
    }

    fn compare(&self, a: &[Syllable], b: &[Syllable]) -> Ordering {
        let key = |s: &Syllable| (s.vertex, self.p.group(s.vertex).sort_key(s.element));
        a.iter().map(key).cmp(b.iter().map(key))
    }

    /// The least word, in `(vertex, element)` lexicographic order, among the
    /// reduced words representing the same element.
    pub fn canonical_form(&self, w: &[Syllable]) -> Result<Word> {
        let reduced = self.reduce(w)?;
        let closure = self.flip_closure(&reduced)?;
        Ok(closure
            .into_iter()
            .min_by(|a, b| self.compare(a, b))
            .expect("closure contains the word itself"))
    }

    pub fn words_equal(&self, a: &[Syllable], b: &[Syllable]) -> Result<bool> {
        Ok(self.canonical_form(a)? == self.canonical_form(b)?)
    }

    /// Checks the exchange property for the element `g` of `w` and the
    /// syllable `s`.
    pub fn exchange_check(&self, w: &[Syllable], s: Syllable) -> Result<ExchangeReport> {
        self.check_word(&[s])?;
        let g = self.reduce(w)?;
        let mut gs = g.clone();
        gs.push(s);
        let length_g = g.len();
        let length_gs = self.length(&gs)?;
        let group = self.p.group(s.vertex);
        let inverse = group.inv(s.element);
        let case = match length_gs.cmp(&length_g) {
            Ordering::Greater => ExchangeCase::Longer,
            Ordering::Equal => ExchangeCase::Equal,
            Ordering::Less => ExchangeCase::Shorter,
        };
        let ends_well = |x: &[Syllable]| {
            x.last().is_some_and(|t| {
                t.vertex == s.vertex
                    && match case {
                        ExchangeCase::Equal => !group.is_identity(t.element) && t.element != inverse,
                        ExchangeCase::Shorter => t.element == inverse,
                        ExchangeCase::Longer => false,
                    }
            })
        };
        let witness = if case == ExchangeCase::Longer {
            None
        } else {
            self.flip_closure(&g)?.into_iter().find(|x| ends_well(x))
        };
        Ok(ExchangeReport {
            length_g,
            length_gs,
            passed: case == ExchangeCase::Longer || witness.is_some(),
            case,
            witness,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeCase {
    Longer,
    Equal,
    Shorter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeReport {
    pub length_g: usize,
    pub length_gs: usize,
    pub case: ExchangeCase,
    /// A reduced word for `g` ending in the syllable the case requires.
    pub witness: Option<Word>,
    pub passed: bool,
}

pub fn reduce(p: &Presentation, w: &[Syllable]) -> Result<Word> {
    Rewriter::new(p).reduce(w)
}

pub fn canonical_form(p: &Presentation, w: &[Syllable]) -> Result<Word> {
    Rewriter::new(p).canonical_form(w)
}

pub fn words_equal(p: &Presentation, a: &[Syllable], b: &[Syllable]) -> Result<bool> {
    Rewriter::new(p).words_equal(a, b)
}

pub fn apply_move(p: &Presentation, w: &[Syllable], m: Move) -> Result<Word> {
    Rewriter::new(p).apply_move(w, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn hexagon() -> Presentation {
        Presentation::dihedral(3).unwrap()
    }

    #[test]
    fn moves() {
        let z3 = Presentation::new(vec![GroupSpec::Cyclic(3)], &[]).unwrap();
        let r = Rewriter::new(&z3);
        let a = Syllable::new(0, 1);
        assert_eq!(r.apply_move(&[a, a], Move::Fusion(0)).unwrap(), vec![Syllable::new(0, 2)]);
        let p = hexagon();
        let r = Rewriter::new(&p);
        assert_eq!(r.apply_move(&word(&[0, 1, 0]), Move::Dihedral(0)).unwrap(), word(&[1, 0, 1]));
        assert!(r.apply_move(&word(&[0, 1]), Move::Dihedral(0)).is_err());
        let square = Presentation::dihedral(2).unwrap();
        let r = Rewriter::new(&square);
        assert_eq!(r.apply_move(&word(&[0, 1]), Move::Dihedral(0)).unwrap(), word(&[1, 0]));
        assert_eq!(
            r.apply_move(&[Syllable::new(0, 0)], Move::Reduction(0)).unwrap(),
            vec![]
        );
        assert!(matches!(
            r.apply_move(&word(&[0]), Move::Reduction(0)),
            Err(PeriagroupError::MoveNotApplicable(_))
        ));
    }

    #[test]
    fn reduction() {
        let p = hexagon();
        let r = Rewriter::new(&p);
        assert_eq!(r.reduce(&word(&[0, 1, 0, 1])).unwrap().len(), 2);
        assert_eq!(r.reduce(&word(&[0, 1])).unwrap(), word(&[0, 1]));
        let z3 = Presentation::new(vec![GroupSpec::Cyclic(3)], &[]).unwrap();
        let a = Syllable::new(0, 1);
        assert!(reduce(&z3, &[a, a, a]).unwrap().is_empty());
        // identity syllables are stripped
        assert_eq!(reduce(&z3, &[Syllable::new(0, 0), a]).unwrap(), vec![a]);
        assert!(matches!(
            reduce(&z3, &[Syllable::new(0, 5)]),
            Err(PeriagroupError::BadElement { .. })
        ));
    }

    #[test]
    fn canonical_forms() {
        let p = hexagon();
        assert_eq!(canonical_form(&p, &word(&[1, 0, 1])).unwrap(), word(&[0, 1, 0]));
        assert_eq!(canonical_form(&p, &[]).unwrap(), vec![]);
        let square = Presentation::dihedral(2).unwrap();
        assert_eq!(canonical_form(&square, &word(&[1, 0])).unwrap(), word(&[0, 1]));
        let zz = Presentation::graph_product(vec![GroupSpec::Infinite, GroupSpec::Infinite], &[(0, 1)]).unwrap();
        let w = vec![Syllable::new(1, 3), Syllable::new(0, -2), Syllable::new(1, -3)];
        assert_eq!(canonical_form(&zz, &w).unwrap(), vec![Syllable::new(0, -2)]);
    }

    #[test]
    fn equality() {
        let p = hexagon();
        let uv3 = word(&[0, 1, 0, 1, 0, 1]);
        assert!(words_equal(&p, &uv3, &[]).unwrap());
        assert!(!words_equal(&p, &word(&[0]), &word(&[1])).unwrap());
        let square = Presentation::dihedral(2).unwrap();
        assert!(words_equal(&square, &word(&[0, 1]), &word(&[1, 0])).unwrap());
    }

    #[test]
    fn budget() {
        let p = Presentation::dihedral(2).unwrap();
        let r = Rewriter::with_budget(&p, 1);
        assert_eq!(r.flip_closure(&word(&[0, 1])), Err(PeriagroupError::BudgetExceeded(1)));
    }

    #[test]
    fn exchange() {
        let p = hexagon();
        let r = Rewriter::new(&p);
        let rep = r.exchange_check(&word(&[0, 1, 0]), Syllable::new(1, 1)).unwrap();
        assert_eq!((rep.length_g, rep.length_gs, rep.case), (3, 2, ExchangeCase::Shorter));
        assert_eq!(rep.witness, Some(word(&[1, 0, 1])));
        assert!(rep.passed);
        let z3 = Presentation::new(vec![GroupSpec::Cyclic(3)], &[]).unwrap();
        let a = Syllable::new(0, 1);
        let rep = Rewriter::new(&z3).exchange_check(&[a], a).unwrap();
        assert_eq!(rep.case, ExchangeCase::Equal);
        assert!(rep.passed);
        let rep = r.exchange_check(&[], Syllable::new(0, 1)).unwrap();
        assert_eq!(rep.case, ExchangeCase::Longer);
        assert!(rep.passed && rep.witness.is_none());
    }
}
