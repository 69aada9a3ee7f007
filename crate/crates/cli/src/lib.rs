//! Argument definitions and report generation for the `efforce` binary.
//!
//! Every subcommand renders its whole report into a string first, so output
//! is byte-identical across runs and can go to stdout or `--out`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use efforce::rational::to_display_string;
use efforce::{
    canonical_map, canonical_orbit, derivable_set, derivation_witness,
    enumerate_tags, forcing_graph, hasse, ForcingGraph, Method, PatternSet, PosetError,
    RealizationError, Word,
};

/// Default hard cap on `--max-len`.
pub const DEFAULT_MAX_LEN_CAP: usize = 14;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "efforce",
    version,
    about = "Forcing among eventually-fixed orbit patterns of interval maps",
    long_about = "Forcing among eventually-fixed orbit patterns of interval maps.\n\n\
                  Words are strings over L and R; `e` is the empty word."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Largest accepted --max-len.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LEN_CAP, value_name = "N")]
    pub max_len_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether U is derivable from W and print a witness derivation.
    Derive { w: Word, u: Word },
    /// Print every word forced by W.
    Forced {
        w: Word,
        #[arg(long, value_enum, default_value_t = MethodArg::Derive)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the exact piecewise-linear realization of W and its tag bands.
    Realize {
        w: Word,
        /// `json` prints only the map export.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Hasse diagram of the forcing order on words up to --max-len.
    Hasse {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Derive)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that all three characterizations agree on every word up to --max-len.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Length bound for the realization check [default: min(max-len, 8)].
        #[arg(long)]
        realize_max_len: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Derive,
    Construct,
    Realize,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Derive => Method::Derive,
            MethodArg::Construct => Method::Construct,
            MethodArg::Realize => Method::Realize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Rendered output plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub status: u8,
}

impl Report {
    fn ok(text: String) -> Report {
        Report { text, status: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let check_len = |n: usize| {
        if n > cli.max_len_cap {
            Err(CliError::Usage(format!(
                "--max-len {n} exceeds the cap {} (raise it with --max-len-cap)",
                cli.max_len_cap
            )))
        } else {
            Ok(())
        }
    };
    match &cli.command {
        Command::Derive { w, u } => Ok(cmd_derive(w, u)),
        Command::Forced { w, method, format } => cmd_forced(w, (*method).into(), *format),
        Command::Realize { w, format } => cmd_realize(w, *format),
        Command::Hasse {
            max_len,
            method,
            format,
        } => {
            check_len(*max_len)?;
            cmd_hasse(*max_len, (*method).into(), *format)
        }
        Command::Verify {
            max_len,
            realize_max_len,
        } => {
            check_len(*max_len)?;
            let realize = realize_max_len.unwrap_or((*max_len).min(8));
            check_len(realize)?;
            cmd_verify(*max_len, realize)
        }
    }
}

pub fn cmd_derive(w: &Word, u: &Word) -> Report {
    match derivation_witness(w, u) {
        Some(derivation) => {
            let mut text = format!("yes: {u} is derivable from {w}\n");
            if derivation.steps.is_empty() {
                text.push_str("  (no steps: the words are equal)\n");
            }
            for (i, (step, produced)) in derivation.steps.iter().enumerate() {
                writeln!(text, "  {}. {step} => {produced}", i + 1).unwrap();
            }
            Report::ok(text)
        }
        None => Report {
            text: format!("no: {u} is not derivable from {w}\n"),
            status: 1,
        },
    }
}

fn set_json(s: &PatternSet) -> String {
    serde_json::to_string(s).expect("pattern set serializes")
}

pub fn cmd_forced(w: &Word, method: Method, format: Format) -> Result<Report, CliError> {
    let set = efforce::forced_set(w, method)?;
    let text = match format {
        Format::Text => set.iter().map(|u| format!("{u}\n")).collect(),
        Format::Json => format!("{}\n", set_json(&set)),
        Format::Dot => return Err(CliError::Usage("forced supports --format text or json".into())),
    };
    Ok(Report::ok(text))
}

pub fn cmd_realize(w: &Word, format: Format) -> Result<Report, CliError> {
    let map = canonical_map(w);
    match format {
        Format::Json => return Ok(Report::ok(format!("{}\n", map.to_json()))),
        Format::Dot => {
            return Err(CliError::Usage("realize supports --format text or json".into()))
        }
        Format::Text => {}
    }
    let orbit = canonical_orbit(w);
    let enumeration = enumerate_tags(&map, w.len())?;
    let mut text = format!("word: {w}\n");
    let points: Vec<String> = orbit.points().iter().map(to_display_string).collect();
    writeln!(text, "orbit: {}", points.join(" -> ")).unwrap();
    let (lo, hi) = map.domain();
    writeln!(
        text,
        "domain: [{}, {}]",
        to_display_string(lo),
        to_display_string(hi)
    )
    .unwrap();
    text.push_str("breakpoints:\n");
    for (x, y) in map.breakpoints() {
        writeln!(text, "  {} -> {}", to_display_string(x), to_display_string(y)).unwrap();
    }
    text.push_str("bands:\n");
    for band in &enumeration.bands {
        writeln!(text, "  {band}").unwrap();
    }
    writeln!(text, "tags: {}", enumeration.tags).unwrap();
    Ok(Report::ok(text))
}

fn hasse_text(g: &ForcingGraph) -> String {
    let mut text = format!(
        "# {} nodes, {} covers (max length {}, method {})\n",
        g.nodes.len(),
        g.edges.len(),
        g.max_len,
        g.method
    );
    for n in &g.nodes {
        let covers: Vec<String> = g.successors(n).map(Word::to_string).collect();
        if covers.is_empty() {
            writeln!(text, "{n}").unwrap();
        } else {
            writeln!(text, "{n} -> {}", covers.join(", ")).unwrap();
        }
    }
    text
}

pub fn cmd_hasse(max_len: usize, method: Method, format: Format) -> Result<Report, CliError> {
    let h = hasse(&forcing_graph(max_len, method)?)?;
    let text = match format {
        Format::Text => hasse_text(&h),
        Format::Json => format!("{}\n", h.to_json()),
        Format::Dot => h.to_dot(),
    };
    Ok(Report::ok(text))
}

fn describe_mismatch(w: &Word, a: (&str, &PatternSet), b: (&str, &PatternSet)) -> String {
    format!(
        "mismatch at {w} ({} vs {}): only {} {}; only {} {}\n",
        a.0,
        b.0,
        a.0,
        a.1.difference(b.1),
        b.0,
        b.1.difference(a.1)
    )
}

pub fn cmd_verify(max_len: usize, realize_max_len: usize) -> Result<Report, CliError> {
    let mut table = efforce::LanguageTable::new();
    let mut mismatches = String::new();
    let (mut symbolic, mut realized) = (0usize, 0usize);
    let (mut symbolic_ok, mut realized_ok) = (0usize, 0usize);
    for w in Word::all_up_to(max_len.max(realize_max_len)) {
        let derived = derivable_set(&w);
        if w.len() <= max_len {
            symbolic += 1;
            let constructed = table.language(&w);
            if constructed == derived {
                symbolic_ok += 1;
            } else {
                mismatches.push_str(&describe_mismatch(
                    &w,
                    ("derive", &derived),
                    ("construct", &constructed),
                ));
            }
        }
        if w.len() <= realize_max_len {
            realized += 1;
            let r = efforce::forced_set_via_realization(&w)?;
            if r == derived {
                realized_ok += 1;
            } else {
                mismatches.push_str(&describe_mismatch(&w, ("derive", &derived), ("realize", &r)));
            }
        }
    }
    let mut text = format!("words up to length {max_len}: {symbolic}\n");
    writeln!(text, "derive = construct: {symbolic_ok}/{symbolic}").unwrap();
    writeln!(
        text,
        "derive = realize: {realized_ok}/{realized} (words up to length {realize_max_len})"
    )
    .unwrap();
    text.push_str(&mismatches);
    let agree = symbolic_ok == symbolic && realized_ok == realized;
    text.push_str(if agree {
        "all characterizations agree\n"
    } else {
        "characterizations disagree\n"
    });
    Ok(Report {
        text,
        status: if agree { 0 } else { 1 },
    })
}
