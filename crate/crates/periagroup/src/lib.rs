//! Periagroups: presentations over a decorated graph, the word problem via
//! rewriting moves, Cayley graphs, and checks of their structure.

pub mod cayley;
pub mod coxeter;
pub mod error;
pub mod group;
pub mod iso;
pub mod parabolic;
pub mod presentation;
pub mod semidirect;
pub mod word;

pub use cayley::{cayley_ball, cayley_ball_with, CayleyBall, Elements, DEFAULT_VERTEX_CAP};
pub use coxeter::{coset_min_rep, coset_min_rep_with};
pub use error::{PeriagroupError, Result};
pub use group::{Element, GroupSpec};
pub use iso::{groups_isomorphic, presentation_isomorphism};
pub use parabolic::{parabolic, parabolic_intersection};
pub use presentation::Presentation;
pub use semidirect::{verify_semidirect, SemidirectReport};
pub use word::{
    apply_move, canonical_form, reduce, word, words_equal, ExchangeCase, ExchangeReport, Move, Rewriter, Syllable,
    Word, DEFAULT_BUDGET,
};
