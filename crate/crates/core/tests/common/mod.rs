//! Test-only oracles, written against plain strings so they share no code with
//! the library's rewrite engine.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use efforce::{pattern_set, PatternSet, Word};

/// Every word reachable from `w` by any of the five rules (four reductions and
/// tail formation), interleaved in every order.
pub fn naive_derivable(w: &str) -> BTreeSet<String> {
    let mut seen: HashSet<String> = HashSet::from([w.to_string()]);
    let mut stack = vec![w.to_string()];
    while let Some(x) = stack.pop() {
        let mut next = Vec::new();
        let b = x.as_bytes();
        for i in 0..b.len().saturating_sub(1) {
            let replacement = match &b[i..i + 2] {
                b"LL" => "L",
                b"RR" => "R",
                b"LR" | b"RL" => "",
                _ => unreachable!(),
            };
            next.push(format!("{}{}{}", &x[..i], replacement, &x[i + 2..]));
        }
        for k in 1..=x.len() {
            next.push(x[k..].to_string());
        }
        for y in next {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn to_pattern_set(words: &BTreeSet<String>) -> PatternSet {
    words
        .iter()
        .map(|s| if s.is_empty() { Word::empty() } else { Word::parse(s).unwrap() })
        .collect()
}

pub fn words_up_to(n: usize) -> Vec<Word> {
    Word::all_up_to(n).collect()
}

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

/// The arrows of the length-4 Hasse diagram, one `source target` pair per line
/// (`e` is the empty word).
pub const REFERENCE_HASSE: &str = include_str!("../data/hasse_len4.txt");

pub fn reference_hasse_edges() -> BTreeSet<(Word, Word)> {
    REFERENCE_HASSE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (a, b) = l.split_once(' ').expect("two words per line");
            (w(a), w(b.trim()))
        })
        .collect()
}

/// The forced set printed for RLLRL, plus the empty word.
pub fn rllrl_forced() -> PatternSet {
    pattern_set(&["L", "LL", "RL", "LRL", "RLL", "LLRL", "RLRL", "RLLRL", "e"])
}
