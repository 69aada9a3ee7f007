//! The forcing order on all words up to a length bound, its Hasse diagram, and
//! DOT/JSON export.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::language::LanguageTable;
use crate::pattern_set::PatternSet;
use crate::realization::{forced_set_via_realization, RealizationError};
use crate::rewrite::derivable_set;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error("malformed graph JSON: {0}")]
    Json(String),
    #[error("unknown method {0:?} (expected derive, construct or realize)")]
    UnknownMethod(String),
}

/// Which characterization produced a forced set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Derive,
    Construct,
    Realize,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Derive, Method::Construct, Method::Realize];

    pub fn name(self) -> &'static str {
        match self {
            Method::Derive => "derive",
            Method::Construct => "construct",
            Method::Realize => "realize",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| PosetError::UnknownMethod(s.to_string()))
    }
}

/// Computes forced sets with one method, reusing state across words.
pub struct ForcedSets {
    method: Method,
    table: LanguageTable,
}

impl ForcedSets {
    pub fn new(method: Method) -> ForcedSets {
        ForcedSets {
            method,
            table: LanguageTable::new(),
        }
    }

    pub fn forced_set(&mut self, w: &Word) -> Result<PatternSet, RealizationError> {
        match self.method {
            Method::Derive => Ok(derivable_set(w)),
            Method::Construct => Ok(self.table.language(w)),
            Method::Realize => forced_set_via_realization(w),
        }
    }
}

pub fn forced_set(w: &Word, method: Method) -> Result<PatternSet, RealizationError> {
    ForcedSets::new(method).forced_set(w)
}

/// Words up to `max_len` with an edge `(w, u)` whenever `w` forces `u != w`.
///
/// [`forcing_graph`] stores the full (transitively closed) relation; [`hasse`]
/// returns a graph holding only the covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingGraph {
    pub max_len: usize,
    pub method: Method,
    pub nodes: Vec<Word>,
    pub edges: BTreeSet<(Word, Word)>,
}

impl ForcingGraph {
    pub fn successors<'a>(&'a self, w: &'a Word) -> impl Iterator<Item = &'a Word> + 'a {
        self.edges
            .range((w.clone(), Word::empty())..)
            .take_while(move |(a, _)| a == w)
            .map(|(_, b)| b)
    }

    pub fn has_edge(&self, w: &Word, u: &Word) -> bool {
        self.edges.contains(&(w.clone(), u.clone()))
    }

    fn adjacency(&self) -> BTreeMap<&Word, BTreeSet<&Word>> {
        let mut adj: BTreeMap<&Word, BTreeSet<&Word>> =
            self.nodes.iter().map(|n| (n, BTreeSet::new())).collect();
        for (a, b) in &self.edges {
            adj.entry(a).or_default().insert(b);
        }
        adj
    }

    /// Irreflexive, antisymmetric and transitive.
    pub fn check_strict_partial_order(&self) -> Result<(), PosetError> {
        let adj = self.adjacency();
        for (a, b) in &self.edges {
            if a == b {
                return Err(PosetError::NotAPartialOrder(format!("reflexive edge at {a}")));
            }
            if adj.get(b).is_some_and(|s| s.contains(a)) {
                return Err(PosetError::NotAPartialOrder(format!(
                    "{a} and {b} force each other"
                )));
            }
            if let Some(c) = adj
                .get(b)
                .and_then(|s| s.iter().find(|c| !adj[a].contains(*c)))
            {
                return Err(PosetError::NotAPartialOrder(format!(
                    "{a} -> {b} -> {c} without {a} -> {c}"
                )));
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph forcing {\n");
        for n in &self.nodes {
            out.push_str(&format!("  {n};\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  {a} -> {b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let value = GraphJson {
            max_len: self.max_len,
            method: self.method,
            nodes: self.nodes.clone(),
            edges: self.edges.iter().map(|(a, b)| [a.clone(), b.clone()]).collect(),
        };
        serde_json::to_string(&value).expect("graph JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<ForcingGraph, PosetError> {
        let value: GraphJson =
            serde_json::from_str(text).map_err(|e| PosetError::Json(e.to_string()))?;
        let mut nodes = value.nodes;
        nodes.sort();
        nodes.dedup();
        let known: BTreeSet<&Word> = nodes.iter().collect();
        if let Some([a, b]) = value
            .edges
            .iter()
            .find(|[a, b]| !known.contains(a) || !known.contains(b))
        {
            return Err(PosetError::Json(format!("edge {a} -> {b} uses an unknown node")));
        }
        let edges = value.edges.into_iter().map(|[a, b]| (a, b)).collect();
        Ok(ForcingGraph {
            max_len: value.max_len,
            method: value.method,
            nodes,
            edges,
        })
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct GraphJson {
    max_len: usize,
    method: Method,
    nodes: Vec<Word>,
    edges: Vec<[Word; 2]>,
}

pub fn forcing_graph(max_len: usize, method: Method) -> Result<ForcingGraph, PosetError> {
    let nodes: Vec<Word> = Word::all_up_to(max_len).collect();
    let mut sets = ForcedSets::new(method);
    let mut edges = BTreeSet::new();
    for w in &nodes {
        for u in sets.forced_set(w)? {
            if u != *w {
                edges.insert((w.clone(), u));
            }
        }
    }
    Ok(ForcingGraph {
        max_len,
        method,
        nodes,
        edges,
    })
}

/// Transitive reduction: keeps `(w, u)` unless some `v` has `w -> v -> u`.
pub fn hasse(g: &ForcingGraph) -> Result<ForcingGraph, PosetError> {
    g.check_strict_partial_order()?;
    let adj = g.adjacency();
    let edges = g
        .edges
        .iter()
        .filter(|(w, u)| {
            !adj[w]
                .iter()
                .any(|v| adj.get(v).is_some_and(|s| s.contains(u)))
        })
        .cloned()
        .collect();
    Ok(ForcingGraph {
        edges,
        ..g.clone()
    })
}

pub fn export_dot(g: &ForcingGraph) -> String {
    g.to_dot()
}

pub fn export_json(g: &ForcingGraph) -> String {
    g.to_json()
}
