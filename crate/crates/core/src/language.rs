//! The constructed language of a word.
//!
//! For `|w| <= 2` the language is the set of tails of `w`. Longer words are
//! handled by cases on the first three letters. With `x` the first letter and
//! `y` its dual:
//!
//! * `w = x y w'`:   `Lang(y w') ∪ x·{u ∈ Lang(y w') : u starts with y}`
//! * `w = x x x w'`: `Lang(x x w') ∪ x·{u ∈ Lang(x x w') : u starts with x}`
//! * `w = x x y w'`: `Lang(x y w') ∪ x·Lang(x y w')`
//!
//! In every case the recursion is on the tail `w[1..]`, which is what makes the
//! one-letter extension form of [`extend_language`] possible.

use std::collections::HashMap;

use thiserror::Error;

use crate::pattern_set::PatternSet;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error("inconsistent language for {word}: {reason}")]
    InconsistentInput { word: Word, reason: String },
}

fn tail_set(w: &Word) -> PatternSet {
    w.tails().into_iter().collect()
}

/// Memoized languages keyed by the full word.
#[derive(Debug, Default, Clone)]
pub struct LanguageTable {
    entries: HashMap<Word, PatternSet>,
}

impl LanguageTable {
    pub fn new() -> LanguageTable {
        LanguageTable::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, w: &Word) -> Option<&PatternSet> {
        self.entries.get(w)
    }

    pub fn language(&mut self, w: &Word) -> PatternSet {
        if let Some(cached) = self.entries.get(w) {
            return cached.clone();
        }
        let lang = if w.len() <= 2 {
            tail_set(w)
        } else {
            let letters = w.letters();
            let x = letters[0];
            let rest = self.language(&w.tail(1));
            let prefixed = if letters[1] != x {
                rest.filter_by_first_letter(x.dual())
            } else if letters[2] == x {
                rest.filter_by_first_letter(x)
            } else {
                rest.clone()
            };
            rest.union(&prefixed.prepend_letter(x))
        };
        self.entries.insert(w.clone(), lang.clone());
        lang
    }

    /// Checks the table invariants for every cached entry.
    pub fn check(&self) -> Result<(), LanguageError> {
        self.entries
            .iter()
            .try_for_each(|(w, lang)| check_language(w, lang))
    }
}

fn check_language(w: &Word, lang: &PatternSet) -> Result<(), LanguageError> {
    let fail = |reason: &str| {
        Err(LanguageError::InconsistentInput {
            word: w.clone(),
            reason: reason.to_string(),
        })
    };
    if !lang.contains(w) {
        return fail("language does not contain the word itself");
    }
    if !lang.contains(&Word::empty()) {
        return fail("language does not contain the empty word");
    }
    if w.len() <= 2 && *lang != tail_set(w) {
        return fail("language of a word of length at most 2 must be its tail set");
    }
    Ok(())
}

pub fn construct_language(w: &Word) -> PatternSet {
    LanguageTable::new().language(w)
}

/// Second route to the same language: the three printed cases for L-initial
/// words only, with R-initial words sent through the letter swap.
pub fn construct_language_via_dual(w: &Word) -> PatternSet {
    via_dual(&mut HashMap::new(), w)
}

fn via_dual(memo: &mut HashMap<Word, PatternSet>, w: &Word) -> PatternSet {
    if let Some(cached) = memo.get(w) {
        return cached.clone();
    }
    let lang = if w.len() <= 2 {
        tail_set(w)
    } else if w.first() == Some(Letter::R) {
        via_dual(memo, &w.dual()).dual()
    } else {
        use Letter::*;
        let rest = via_dual(memo, &w.tail(1));
        let prefixed = match w.letters()[1..3] {
            [R, _] => rest.filter_by_first_letter(R),
            [L, L] => rest.filter_by_first_letter(L),
            [L, R] => rest.clone(),
            _ => unreachable!(),
        };
        rest.union(&prefixed.prepend_letter(L))
    };
    memo.insert(w.clone(), lang.clone());
    lang
}

pub fn filter_by_first_letter(s: &PatternSet, letter: Letter) -> PatternSet {
    s.filter_by_first_letter(letter)
}

pub fn prepend_letter(s: &PatternSet, letter: Letter) -> PatternSet {
    s.prepend_letter(letter)
}

/// The language of `letter·w` from the language of `w`, one letter at a time.
pub fn extend_language(
    letter: Letter,
    w: &Word,
    lang_w: &PatternSet,
) -> Result<PatternSet, LanguageError> {
    check_language(w, lang_w)?;
    let extended = w.prepend(letter);
    if w.len() <= 1 {
        return Ok(tail_set(&extended));
    }
    if lang_w.longest() != Some(w) {
        return Err(LanguageError::InconsistentInput {
            word: w.clone(),
            reason: "language has a member longer than the word, or a rival of equal length"
                .to_string(),
        });
    }
    let letters = w.letters();
    let prefixed = if letters[0] != letter {
        lang_w.filter_by_first_letter(letters[0])
    } else if letters[1] == letter {
        lang_w.filter_by_first_letter(letter)
    } else {
        lang_w.clone()
    };
    Ok(lang_w.union(&prefixed.prepend_letter(letter)))
}
