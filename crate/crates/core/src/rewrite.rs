//! The derivation engine.
//!
//! Four reduction rules rewrite a two-letter window anywhere in a word:
//! `RR -> R`, `LL -> L`, `LR -> e` and `RL -> e`. Tail formation drops any
//! prefix. A reduction step and a tail step commute, so every derivable word is
//! a tail of some word in the reduction closure; [`derivable_set`] computes it in
//! that normal form.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::pattern_set::PatternSet;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionKind {
    RrToR,
    LlToL,
    LrToEmpty,
    RlToEmpty,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 4] = [
        ReductionKind::RrToR,
        ReductionKind::LlToL,
        ReductionKind::LrToEmpty,
        ReductionKind::RlToEmpty,
    ];

    pub fn window(self) -> [Letter; 2] {
        use Letter::*;
        match self {
            ReductionKind::RrToR => [R, R],
            ReductionKind::LlToL => [L, L],
            ReductionKind::LrToEmpty => [L, R],
            ReductionKind::RlToEmpty => [R, L],
        }
    }

    pub fn replacement(self) -> &'static [Letter] {
        match self {
            ReductionKind::RrToR => &[Letter::R],
            ReductionKind::LlToL => &[Letter::L],
            ReductionKind::LrToEmpty | ReductionKind::RlToEmpty => &[],
        }
    }

    fn for_window(a: Letter, b: Letter) -> ReductionKind {
        use Letter::*;
        match (a, b) {
            (R, R) => ReductionKind::RrToR,
            (L, L) => ReductionKind::LlToL,
            (L, R) => ReductionKind::LrToEmpty,
            (R, L) => ReductionKind::RlToEmpty,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::RrToR => "RR→R",
            ReductionKind::LlToL => "LL→L",
            ReductionKind::LrToEmpty => "LR→e",
            ReductionKind::RlToEmpty => "RL→e",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One reduction applied at a zero-based window position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReductionRule {
    pub kind: ReductionKind,
    pub position: usize,
}

impl ReductionRule {
    /// Applies the rule, or returns `None` if the window at `position` does not
    /// match or runs past the end of the word.
    pub fn apply(&self, w: &Word) -> Option<Word> {
        let letters = w.letters();
        if self.position + 2 > letters.len()
            || letters[self.position..self.position + 2] != self.kind.window()
        {
            return None;
        }
        let mut out = Vec::with_capacity(letters.len() - 1);
        out.extend_from_slice(&letters[..self.position]);
        out.extend_from_slice(self.kind.replacement());
        out.extend_from_slice(&letters[self.position + 2..]);
        Some(Word::new(out))
    }
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {} at position {}", self.kind, self.position)
    }
}

/// Every rule that applies to `w`, one per window, left to right.
pub fn applicable_rules(w: &Word) -> Vec<ReductionRule> {
    w.letters()
        .windows(2)
        .enumerate()
        .map(|(position, pair)| ReductionRule {
            kind: ReductionKind::for_window(pair[0], pair[1]),
            position,
        })
        .collect()
}

pub fn one_step_reductions(w: &Word) -> PatternSet {
    applicable_rules(w)
        .iter()
        .filter_map(|rule| rule.apply(w))
        .collect()
}

/// All words reachable from `w` by reductions only, `w` included.
pub fn reduction_closure(w: &Word) -> PatternSet {
    let mut seen = PatternSet::new();
    seen.insert(w.clone());
    let mut frontier = vec![w.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for r in one_step_reductions(v) {
                if seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Every word derivable from `w`: the tails of its reduction closure.
pub fn derivable_set(w: &Word) -> PatternSet {
    let mut out = PatternSet::new();
    for v in reduction_closure(w) {
        for t in v.tails() {
            out.insert(t);
        }
    }
    out
}

pub fn is_derivable(w: &Word, u: &Word) -> bool {
    if u.len() > w.len() {
        return false;
    }
    reduction_closure(w).iter().any(|v| v.ends_with(u))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationStep {
    Reduce(ReductionRule),
    /// Drops the first `dropped` letters.
    Tail { dropped: usize },
}

impl fmt::Display for DerivationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationStep::Reduce(rule) => write!(f, "{rule}"),
            DerivationStep::Tail { dropped } => {
                write!(f, "tail dropping the first {dropped} letter")?;
                if *dropped != 1 {
                    f.write_str("s")?;
                }
                Ok(())
            }
        }
    }
}

/// A witness sequence: reductions first, at most one tail step last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub source: Word,
    /// Each step with the word it produces.
    pub steps: Vec<(DerivationStep, Word)>,
}

impl Derivation {
    pub fn target(&self) -> &Word {
        self.steps.last().map(|(_, w)| w).unwrap_or(&self.source)
    }

    /// Re-applies every step from the source; `true` iff each recorded word is
    /// reproduced and the tail step, if any, comes last.
    pub fn replay(&self) -> bool {
        let mut current = self.source.clone();
        for (i, (step, produced)) in self.steps.iter().enumerate() {
            let next = match step {
                DerivationStep::Reduce(rule) => rule.apply(&current),
                DerivationStep::Tail { dropped } => {
                    if i + 1 != self.steps.len() || *dropped == 0 || *dropped > current.len() {
                        return false;
                    }
                    Some(current.tail(*dropped))
                }
            };
            match next {
                Some(n) if &n == produced => current = n,
                _ => return false,
            }
        }
        true
    }
}

/// A shortest reduction path from `w` to some word ending in `u`, followed by
/// the tail step when needed. `None` when `u` is not derivable.
///
/// Windows are tried right to left, so ties go to the rightmost rewrite.
pub fn derivation_witness(w: &Word, u: &Word) -> Option<Derivation> {
    if u.len() > w.len() {
        return None;
    }
    let mut parent: HashMap<Word, Option<(Word, ReductionRule)>> = HashMap::new();
    parent.insert(w.clone(), None);
    let mut queue = VecDeque::from([w.clone()]);
    let mut found = None;
    while let Some(v) = queue.pop_front() {
        if v.ends_with(u) {
            found = Some(v);
            break;
        }
        for rule in applicable_rules(&v).into_iter().rev() {
            let r = rule.apply(&v).expect("applicable rule applies");
            if !parent.contains_key(&r) {
                parent.insert(r.clone(), Some((v.clone(), rule)));
                queue.push_back(r);
            }
        }
    }
    let end = found?;

    let mut steps = Vec::new();
    let mut cursor = end.clone();
    while let Some(Some((prev, rule))) = parent.get(&cursor) {
        steps.push((DerivationStep::Reduce(*rule), cursor.clone()));
        cursor = prev.clone();
    }
    steps.reverse();
    if end.len() > u.len() {
        steps.push((
            DerivationStep::Tail {
                dropped: end.len() - u.len(),
            },
            u.clone(),
        ));
    }
    Some(Derivation {
        source: w.clone(),
        steps,
    })
}
