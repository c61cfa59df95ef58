//! Fixture-driven conformance harness.
//!
//! Cases live under `fixtures/<category>/<name>.case` at the repository
//! root. Each file holds a source section and either an expected result
//! listing or an expected error:
//!
//! ```text
//! --- source
//! (believe (inherit "robin" "bird"))
//! --- expect
//! NARSESE\t<robin --> bird>.
//! ```
//!
//! Error cases replace `--- expect` with `--- error` holding one line
//! `line:col message-substring`. Cases are independent, so the runner
//! compiles them on the rayon pool when the `parallel` feature is on;
//! the report is identical either way.

mod gen;
mod wellformed;

pub use gen::{perf_unit, random_program, seeded_rng};
pub use wellformed::check_narsese_wellformed;

use crate::api::compile_source;
use crate::codegen::ResultKind;
use crate::diag::SourcePos;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Result cap handed to `compile_source` for every case; no fixture
/// comes anywhere near it.
pub const CASE_MAX_RESULTS: usize = 64;

/// Fewest cases the corpus may hold overall.
pub const MIN_TOTAL_CASES: usize = 106;

/// Anchor cases (named `gNN_*`) that must each appear exactly once.
pub const GOLDEN_ANCHOR_COUNT: usize = 20;

/// Per-category minimum case counts.
pub const CATEGORY_MINIMUMS: [(&str, usize); 13] = [
    ("tokenizer", 14),
    ("parser", 6),
    ("copulas", 8),
    ("connectors", 17),
    ("call", 4),
    ("sentences", 12),
    ("variables", 6),
    ("meta", 7),
    ("nested", 5),
    ("multi", 2),
    ("errors", 4),
    ("quoting", 7),
    ("validation", 10),
];

/// One conformance case, parsed from a fixture file.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCase {
    pub name: String,
    pub category: String,
    pub source: String,
    /// Expected results for success cases (kind and payload per form).
    pub expected: Option<Vec<(ResultKind, String)>>,
    /// Expected position and message substring for error cases.
    pub expected_error: Option<(SourcePos, String)>,
}

/// Verdict for one executed case.
#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub name: String,
    pub category: String,
    pub passed: bool,
    /// Empty when passed; otherwise says what differed.
    pub detail: String,
}

/// All case verdicts, in corpus order.
#[derive(Debug)]
pub struct CorpusReport {
    pub outcomes: Vec<CaseOutcome>,
}

impl CorpusReport {
    pub fn total(&self) -> usize {
        self.outcomes.len()
    }

    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.total()
    }

    /// The machine-readable summary line, e.g. `PASS 108/108`.
    pub fn summary_line(&self) -> String {
        format!("PASS {}/{}", self.passed(), self.total())
    }

    /// Human-readable listing of every failure.
    pub fn failure_report(&self) -> String {
        let mut out = String::new();
        for o in self.outcomes.iter().filter(|o| !o.passed) {
            let _ = writeln!(out, "FAIL {}/{}: {}", o.category, o.name, o.detail);
        }
        out
    }
}

/// Parses one fixture file. `Err` carries a description of what is
/// malformed; the harness treats that as a corpus bug, not a case failure.
pub fn parse_case(category: &str, name: &str, text: &str) -> Result<GoldenCase, String> {
    let mut lines = text.lines().peekable();
    match lines.next() {
        Some("--- source") => {}
        other => return Err(format!("{}/{}: expected '--- source', got {:?}", category, name, other)),
    }
    let mut source_lines: Vec<&str> = Vec::new();
    let mut section = None;
    for line in lines.by_ref() {
        if line == "--- expect" || line == "--- error" {
            section = Some(line);
            break;
        }
        source_lines.push(line);
    }
    let source = source_lines.join("\n");
    let rest: Vec<&str> = lines.collect();
    match section {
        Some("--- expect") => {
            let mut expected = Vec::new();
            for line in rest.iter().filter(|l| !l.is_empty()) {
                let (tag, payload) = line
                    .split_once('\t')
                    .ok_or_else(|| format!("{}/{}: expect line lacks a tab: {:?}", category, name, line))?;
                let kind = ResultKind::from_tag(tag)
                    .ok_or_else(|| format!("{}/{}: unknown kind tag {:?}", category, name, tag))?;
                expected.push((kind, payload.to_string()));
            }
            Ok(GoldenCase {
                name: name.to_string(),
                category: category.to_string(),
                source,
                expected: Some(expected),
                expected_error: None,
            })
        }
        Some("--- error") => {
            let line = rest
                .iter()
                .find(|l| !l.is_empty())
                .ok_or_else(|| format!("{}/{}: '--- error' section is empty", category, name))?;
            let (pos_part, message) = line
                .split_once(' ')
                .ok_or_else(|| format!("{}/{}: error line needs 'line:col message'", category, name))?;
            let (l, c) = pos_part
                .split_once(':')
                .ok_or_else(|| format!("{}/{}: bad position {:?}", category, name, pos_part))?;
            let pos = SourcePos::new(
                l.parse().map_err(|_| format!("{}/{}: bad line {:?}", category, name, l))?,
                c.parse().map_err(|_| format!("{}/{}: bad column {:?}", category, name, c))?,
            );
            Ok(GoldenCase {
                name: name.to_string(),
                category: category.to_string(),
                source,
                expected: None,
                expected_error: Some((pos, message.to_string())),
            })
        }
        _ => Err(format!("{}/{}: missing '--- expect' or '--- error'", category, name)),
    }
}

/// Loads every `.case` file under `dir`, sorted by category then name.
pub fn load_corpus(dir: &Path) -> Result<Vec<GoldenCase>, String> {
    let mut cases = Vec::new();
    let mut categories: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("cannot read fixture dir {}: {}", dir.display(), e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_dir())
        .collect();
    categories.sort();
    for cat_dir in categories {
        let category = cat_dir
            .file_name()
            .and_then(|n| n.to_str())
            .ok_or_else(|| format!("unreadable category name in {}", cat_dir.display()))?
            .to_string();
        let mut files: Vec<PathBuf> = std::fs::read_dir(&cat_dir)
            .map_err(|e| format!("cannot read {}: {}", cat_dir.display(), e))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "case"))
            .collect();
        files.sort();
        for file in files {
            let name = file
                .file_stem()
                .and_then(|n| n.to_str())
                .ok_or_else(|| format!("unreadable case name in {}", file.display()))?
                .to_string();
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {}", file.display(), e))?;
            cases.push(parse_case(&category, &name, &text)?);
        }
    }
    Ok(cases)
}

/// The repository fixture directory, resolved relative to this crate.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Runs one case against the compiler.
pub fn run_case(case: &GoldenCase) -> CaseOutcome {
    let outcome = compile_source(&case.source, CASE_MAX_RESULTS);
    let detail = match (&case.expected, &case.expected_error, outcome) {
        (Some(expected), None, Ok(results)) => {
            let got: Vec<(ResultKind, String)> = results
                .into_iter()
                .map(|r| (r.kind, r.payload))
                .collect();
            if got != *expected {
                format!("expected {:?}, got {:?}", expected, got)
            } else if let Some((_, p)) = got
                .iter()
                .find(|(k, p)| *k == ResultKind::Narsese && !check_narsese_wellformed(p))
            {
                format!("payload fails the well-formedness oracle: {:?}", p)
            } else {
                String::new()
            }
        }
        (Some(_), None, Err(d)) => format!("expected success, got error: {}", d),
        (None, Some((pos, substring)), Err(d)) => {
            if d.pos != *pos {
                format!("expected error at {}, got {} ({})", pos, d.pos, d)
            } else if !d.message.contains(substring.as_str()) {
                format!("error message {:?} does not contain {:?}", d.message, substring)
            } else {
                String::new()
            }
        }
        (None, Some((pos, substring)), Ok(_)) => {
            format!("expected error '{}' at {}, but the case compiled", substring, pos)
        }
        _ => "case declares neither or both of expect/error".to_string(),
    };
    CaseOutcome {
        name: case.name.clone(),
        category: case.category.clone(),
        passed: detail.is_empty(),
        detail,
    }
}

/// Runs every case. Order of the report matches the corpus regardless of
/// execution order.
pub fn run_corpus(cases: &[GoldenCase]) -> CorpusReport {
    #[cfg(feature = "parallel")]
    let outcomes = cases.par_iter().map(run_case).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes = cases.iter().map(run_case).collect();
    CorpusReport { outcomes }
}

/// Case counts per category.
pub fn category_tally(cases: &[GoldenCase]) -> BTreeMap<String, usize> {
    let mut tally = BTreeMap::new();
    for case in cases {
        *tally.entry(case.category.clone()).or_insert(0) += 1;
    }
    tally
}

/// Checks corpus shape: total size, per-category minimums, and the
/// presence of each `gNN_*` anchor case exactly once.
pub fn verify_corpus_shape(cases: &[GoldenCase]) -> Result<(), String> {
    if cases.len() < MIN_TOTAL_CASES {
        return Err(format!("corpus has {} cases, need at least {}", cases.len(), MIN_TOTAL_CASES));
    }
    let tally = category_tally(cases);
    for (category, minimum) in CATEGORY_MINIMUMS {
        let have = tally.get(category).copied().unwrap_or(0);
        if have < minimum {
            return Err(format!("category '{}' has {} cases, need at least {}", category, have, minimum));
        }
    }
    for nn in 1..=GOLDEN_ANCHOR_COUNT {
        let prefix = format!("g{:02}_", nn);
        let hits = cases.iter().filter(|c| c.name.starts_with(&prefix)).count();
        if hits != 1 {
            return Err(format!("anchor case {}* appears {} times, expected once", prefix, hits));
        }
    }
    Ok(())
}
