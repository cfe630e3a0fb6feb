//! The regression corpus: `.morph` files next to `.expected.json` verdicts.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use morphic_core::criteria::{analyze, AnalysisOptions, NotAutomaticReason, Verdict};
use serde::{Deserialize, Serialize};

use crate::format::parse_morphism;
use crate::report::VerdictKind;

/// Directory of the corpus shipped with this crate.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedAnagram {
    pub degree: usize,
    pub words: Vec<String>,
}

/// What `analyze` must report for an entry. Absent fields are not checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub provenance: String,
    pub verdict: VerdictKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sturmian_subsystem: Option<bool>,
    /// Checked with a direct anagram search, independent of the stage that fired. `words` is
    /// compared as a set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anagram: Option<ExpectedAnagram>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub path: PathBuf,
    pub source: String,
    pub expected: Expected,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}: missing .expected.json")]
    MissingExpected(PathBuf),
}

/// Loads every `*.morph` file of `dir` with its expectation, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CorpusError::Io { path, source }
    };
    let mut entries = Vec::new();
    for item in fs::read_dir(dir).map_err(io(dir))? {
        let path = item.map_err(io(dir))?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("morph") {
            continue;
        }
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or_default()
            .to_string();
        let expected_path = dir.join(format!("{name}.expected.json"));
        if !expected_path.exists() {
            return Err(CorpusError::MissingExpected(path));
        }
        let source = fs::read_to_string(&path).map_err(io(&path))?;
        let text = fs::read_to_string(&expected_path).map_err(io(&expected_path))?;
        let expected = serde_json::from_str(&text).map_err(|source| CorpusError::Json {
            path: expected_path.clone(),
            source,
        })?;
        entries.push(CorpusEntry {
            name,
            path,
            source,
            expected,
        });
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(entries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryOutcome {
    pub name: String,
    pub summary: String,
    /// One line per disagreement; empty when the entry passes.
    pub mismatches: Vec<String>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<String>,
    what: &str,
    expected: &Option<T>,
    actual: Option<T>,
) {
    if let Some(e) = expected {
        if actual.as_ref() != Some(e) {
            out.push(format!("{what}: expected {e:?}, got {actual:?}"));
        }
    }
}

pub fn run_entry(entry: &CorpusEntry, options: &AnalysisOptions) -> EntryOutcome {
    let fail = |summary: String| EntryOutcome {
        name: entry.name.clone(),
        summary: summary.clone(),
        mismatches: vec![summary],
    };
    let spec = match parse_morphism(&entry.source) {
        Ok(spec) => spec,
        Err(e) => return fail(format!("parse error: {e}")),
    };
    let analysis = match analyze(&spec, options) {
        Ok(a) => a,
        Err(e) => return fail(format!("analysis error: {e}")),
    };
    let verdict = &analysis.verdict;
    let expected = &entry.expected;
    let mut mismatches = Vec::new();
    let kind = match verdict {
        Verdict::Automatic(_) => VerdictKind::Automatic,
        Verdict::NotAutomatic(_) => VerdictKind::NotAutomatic,
        Verdict::Unknown(_) => VerdictKind::Unknown,
    };
    if kind != expected.verdict {
        mismatches.push(format!(
            "verdict: expected {:?}, got {kind:?}",
            expected.verdict
        ));
    }
    let auto = verdict.automatic();
    check(&mut mismatches, "q", &expected.q, auto.map(|a| a.q));
    check(
        &mut mismatches,
        "base",
        &expected.base,
        auto.map(|a| a.base),
    );
    check(
        &mut mismatches,
        "stage",
        &expected.stage,
        Some(verdict.stage().name().to_string()),
    );
    let poly = match verdict {
        Verdict::NotAutomatic(NotAutomaticReason::IrrationalDominant(r)) => {
            Some(r.char_poly.to_string())
        }
        _ => None,
    };
    check(&mut mismatches, "char_poly", &expected.char_poly, poly);
    let sturmian = match verdict {
        Verdict::Unknown(e) => Some(e.has_sturmian_subsystem()),
        _ => None,
    };
    check(
        &mut mismatches,
        "sturmian_subsystem",
        &expected.sturmian_subsystem,
        sturmian,
    );
    if let Some(want) = &expected.anagram {
        let m = spec.morphism();
        let got = morphic_core::criteria::anagram_decomposition(m)
            .ok()
            .flatten()
            .map(|c| {
                let mut words: Vec<String> =
                    c.words.iter().map(|w| m.alphabet().render(w)).collect();
                words.sort();
                ExpectedAnagram {
                    degree: c.degree,
                    words,
                }
            });
        let mut want = want.clone();
        want.words.sort();
        if got.as_ref() != Some(&want) {
            mismatches.push(format!("anagram: expected {want:?}, got {got:?}"));
        }
    }
    EntryOutcome {
        name: entry.name.clone(),
        summary: verdict.to_string(),
        mismatches,
    }
}

pub fn run_all(entries: &[CorpusEntry], options: &AnalysisOptions) -> Vec<EntryOutcome> {
    entries.iter().map(|e| run_entry(e, options)).collect()
}

/// A fixed-width pass/fail table followed by the details of every failure.
pub fn render_table(outcomes: &[EntryOutcome]) -> String {
    let width = outcomes
        .iter()
        .map(|o| o.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let mut out = String::new();
    writeln!(out, "{:<width$}  {:<6}  verdict", "name", "result").unwrap();
    for o in outcomes {
        let result = if o.passed() { "pass" } else { "FAIL" };
        writeln!(out, "{:<width$}  {:<6}  {}", o.name, result, o.summary).unwrap();
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
    writeln!(
        out,
        "{} entries, {} passed, {} failed",
        outcomes.len(),
        outcomes.len() - failed.len(),
        failed.len()
    )
    .unwrap();
    for o in failed {
        for m in &o.mismatches {
            writeln!(out, "  {}: {m}", o.name).unwrap();
        }
    }
    out
}
