//! Forcing among eventually-fixed orbit patterns of interval maps.
//!
//! An orbit that reaches a fixed point after `n` steps is tagged by a word of
//! length `n` over `{L, R}`. Three independent routes compute the set of tags a
//! tag forces:
//!
//! * [`rewrite::derivable_set`]: the reduction rules `LL -> L`, `RR -> R`,
//!   `LR -> e`, `RL -> e` plus tail formation;
//! * [`language::construct_language`]: the recursive constructed language;
//! * [`realization::forced_set_via_realization`]: every tag admitted by the
//!   exact piecewise-linear interpolant of a canonical orbit.
//!
//! [`poset`] assembles the resulting order on all words up to a length bound
//! and exports its Hasse diagram.

pub mod language;
pub mod pattern_set;
pub mod poset;
pub mod rational;
pub mod realization;
pub mod rewrite;
pub mod word;

pub use language::{construct_language, extend_language, LanguageError, LanguageTable};
pub use pattern_set::{pattern_set, PatternSet};
pub use poset::{forced_set, forcing_graph, hasse, ForcingGraph, Method, PosetError};
pub use rational::Rational;
pub use realization::{
    canonical_map, canonical_orbit, enumerate_tags, forced_set_via_realization, interpolate,
    tag_of_point, verify_collapse, CanonicalOrbit, PlMap, RealizationError, TagBand,
    TagEnumeration,
};
pub use rewrite::{
    derivable_set, derivation_witness, is_derivable, one_step_reductions, reduction_closure,
    Derivation, DerivationStep, ReductionKind, ReductionRule,
};
pub use word::{format_word, parse_word, shortlex_compare, Letter, Word, WordError};
