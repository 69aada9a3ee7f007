//! Words over the two-letter alphabet `{L, R}`.
//!
//! A word is the tag of an eventually-fixed orbit: letter `i` records whether
//! the `i`-th point of the orbit moves left or right. The empty word is the tag
//! of a fixed point and is written `e` in text form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Text token for the empty word.
pub const EMPTY_TOKEN: &str = "e";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {letter:?} at position {position} in {text:?} (expected 'L' or 'R', or \"e\" for the empty word)")]
    InvalidLetter {
        text: String,
        position: usize,
        letter: char,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::L, Letter::R];

    pub fn dual(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'L' => Some(Letter::L),
            'R' => Some(Letter::R),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{L, R}`.
///
/// `Ord` is shortlex: shorter words first, then lexicographic with `L < R`.
/// Every ordered collection of words in this crate relies on that.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn parse(text: &str) -> Result<Word, WordError> {
        if text == EMPTY_TOKEN {
            return Ok(Word::empty());
        }
        text.chars()
            .enumerate()
            .map(|(position, c)| {
                Letter::from_char(c).ok_or_else(|| WordError::InvalidLetter {
                    text: text.to_string(),
                    position,
                    letter: c,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn starts_with(&self, prefix: &[Letter]) -> bool {
        self.0.starts_with(prefix)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// The suffix obtained by dropping the first `k` letters.
    pub fn tail(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    /// All suffixes, from the word itself down to the empty word.
    pub fn tails(&self) -> Vec<Word> {
        (0..=self.len()).map(|k| self.tail(k)).collect()
    }

    /// Letterwise swap of `L` and `R`.
    pub fn dual(&self) -> Word {
        Word(self.0.iter().map(|l| l.dual()).collect())
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    /// All words of length exactly `len`, in lexicographic (`L < R`) order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < usize::BITS as usize, "word length {len} too large to enumerate");
        (0..1usize << len).map(move |bits| {
            Word(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::L
                        } else {
                            Letter::R
                        }
                    })
                    .collect(),
            )
        })
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(Word::all_of_length)
    }
}

pub fn shortlex_compare(a: &Word, b: &Word) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EMPTY_TOKEN);
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

pub fn parse_word(text: &str) -> Result<Word, WordError> {
    Word::parse(text)
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        use Letter::*;
        assert_eq!(w("RLLRL").letters(), &[R, L, L, R, L]);
        assert!(w("e").is_empty());
        assert_eq!(
            parse_word("LXR"),
            Err(WordError::InvalidLetter {
                text: "LXR".into(),
                position: 1,
                letter: 'X'
            })
        );
    }

    #[test]
    fn empty_string_is_empty_word() {
        assert_eq!(w(""), Word::empty());
    }

    #[test]
    fn e_only_as_whole_token() {
        assert!(parse_word("Le").is_err());
        assert!(parse_word("ee").is_err());
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_word(&w("LL")), "LL");
        assert_eq!(format_word(&Word::empty()), "e");
        assert_eq!(format_word(&w("RL")), "RL");
    }

    #[test]
    fn tails_examples() {
        let t: Vec<String> = w("LLRL").tails().iter().map(|x| x.to_string()).collect();
        assert_eq!(t, ["LLRL", "LRL", "RL", "L", "e"]);
        assert_eq!(Word::empty().tails(), vec![Word::empty()]);
        assert_eq!(w("RL").tails(), vec![w("RL"), w("L"), w("e")]);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(w("LRL").dual(), w("RLR"));
        assert_eq!(Word::empty().dual(), Word::empty());
        assert_eq!(w("LL").dual(), w("RR"));
    }

    #[test]
    fn shortlex_examples() {
        assert_eq!(shortlex_compare(&w("L"), &w("RL")), Ordering::Less);
        assert_eq!(shortlex_compare(&w("LR"), &w("RL")), Ordering::Less);
        assert_eq!(shortlex_compare(&w("e"), &w("e")), Ordering::Equal);
        assert_eq!(shortlex_compare(&w("RR"), &w("LLL")), Ordering::Less);
    }

    #[test]
    fn enumeration_is_shortlex_and_complete() {
        let all: Vec<Word> = Word::all_up_to(6).collect();
        assert_eq!(all.len(), (1 << 7) - 1);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn shortlex_is_total_order_up_to_len_4() {
        let all: Vec<Word> = Word::all_up_to(4).collect();
        for a in &all {
            for b in &all {
                let ab = shortlex_compare(a, b);
                assert_eq!(ab.reverse(), shortlex_compare(b, a));
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &all {
                    if ab != Ordering::Greater && shortlex_compare(b, c) != Ordering::Greater {
                        assert_ne!(shortlex_compare(a, c), Ordering::Greater);
                    }
                }
            }
        }
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop_oneof![Just(Letter::L), Just(Letter::R)], 0..=max_len)
            .prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn text_round_trip(x in arb_word(24)) {
            prop_assert_eq!(parse_word(&format_word(&x)).unwrap(), x);
        }

        #[test]
        fn tails_are_suffixes(x in arb_word(16)) {
            let t = x.tails();
            prop_assert_eq!(t.len(), x.len() + 1);
            for s in &t {
                prop_assert!(x.ends_with(s));
            }
        }

        #[test]
        fn dual_is_involution(x in arb_word(16)) {
            prop_assert_eq!(x.dual().dual(), x.clone());
            prop_assert_eq!(x.dual().len(), x.len());
        }

        #[test]
        fn shortlex_total_on_len_6(a in arb_word(6), b in arb_word(6), c in arb_word(6)) {
            let ab = shortlex_compare(&a, &b);
            prop_assert_eq!(ab.reverse(), shortlex_compare(&b, &a));
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less && shortlex_compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(shortlex_compare(&a, &c), Ordering::Less);
            }
        }
    }
}
