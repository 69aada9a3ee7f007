use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;

use crate::word::{Letter, Word};

/// A finite set of words, iterated in shortlex order.
#[derive(Clone, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct PatternSet(BTreeSet<Word>);

impl PatternSet {
    pub fn new() -> PatternSet {
        PatternSet(BTreeSet::new())
    }

    pub fn insert(&mut self, w: Word) -> bool {
        self.0.insert(w)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Word> {
        self.0.iter()
    }

    pub fn extend_from(&mut self, other: &PatternSet) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn union(&self, other: &PatternSet) -> PatternSet {
        PatternSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &PatternSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Members in `self` but not in `other`.
    pub fn difference(&self, other: &PatternSet) -> PatternSet {
        PatternSet(self.0.difference(&other.0).cloned().collect())
    }

    /// Longest member (the last one in shortlex order).
    pub fn longest(&self) -> Option<&Word> {
        self.0.last()
    }

    pub fn dual(&self) -> PatternSet {
        self.iter().map(Word::dual).collect()
    }

    /// Non-empty members beginning with `letter`.
    pub fn filter_by_first_letter(&self, letter: Letter) -> PatternSet {
        self.iter().filter(|w| w.first() == Some(letter)).cloned().collect()
    }

    pub fn prepend_letter(&self, letter: Letter) -> PatternSet {
        self.iter().map(|w| w.prepend(letter)).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.iter().map(Word::to_string).collect()
    }
}

impl FromIterator<Word> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        PatternSet(iter.into_iter().collect())
    }
}

impl IntoIterator for PatternSet {
    type Item = Word;
    type IntoIter = btree_set::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a PatternSet {
    type Item = &'a Word;
    type IntoIter = btree_set::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a set from text tokens; panics on malformed input. Meant for tests
/// and literals.
pub fn pattern_set(words: &[&str]) -> PatternSet {
    words
        .iter()
        .map(|s| Word::parse(s).unwrap_or_else(|e| panic!("{e}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_shortlex() {
        let s = pattern_set(&["RL", "e", "LLRL", "L", "LRL", "LL"]);
        assert_eq!(s.to_strings(), ["e", "L", "LL", "RL", "LRL", "LLRL"]);
        assert_eq!(s.longest().unwrap().to_string(), "LLRL");
    }

    #[test]
    fn filter_by_first_letter_examples() {
        let s = pattern_set(&["LLRL", "LRL", "LL", "L", "RL", "e"]);
        assert_eq!(
            s.filter_by_first_letter(Letter::L),
            pattern_set(&["LLRL", "LRL", "LL", "L"])
        );
        assert!(pattern_set(&["e"]).filter_by_first_letter(Letter::R).is_empty());
        assert_eq!(
            pattern_set(&["RL", "L"]).filter_by_first_letter(Letter::R),
            pattern_set(&["RL"])
        );
    }

    #[test]
    fn prepend_letter_examples() {
        assert_eq!(
            pattern_set(&["RL", "L", "e"]).prepend_letter(Letter::L),
            pattern_set(&["LRL", "LL", "L"])
        );
        assert!(PatternSet::new().prepend_letter(Letter::R).is_empty());
        assert_eq!(pattern_set(&["e"]).prepend_letter(Letter::R), pattern_set(&["R"]));
    }

    #[test]
    fn display() {
        assert_eq!(pattern_set(&["L", "e"]).to_string(), "{e, L}");
    }
}
