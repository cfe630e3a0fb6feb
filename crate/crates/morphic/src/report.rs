//! JSON analysis reports.
//!
//! Integers coming from exact arithmetic (matrix entries, polynomial coefficients, rationals)
//! are written as decimal strings so no reader loses precision. The shape is described by
//! `schema/analysis-report.schema.json`.

use morphic_core::constructions::UniformRepresentation;
use morphic_core::criteria::{Analysis, NotAutomaticReason, Outcome, StageRecord, Verdict};
use morphic_core::linalg::{incidence, IntMatrix, SpectralReport};
use morphic_core::word::{Alphabet, MorphicSpec, Word};
use serde::{Deserialize, Serialize};

use crate::format::write_spec;

pub const SCHEMA_VERSION: u32 = 1;

/// The JSON schema shipped with the crate.
pub const SCHEMA: &str = include_str!("../schema/analysis-report.schema.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub letter: String,
    pub image: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodingPair {
    pub letter: String,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub letters: Vec<String>,
    pub rules: Vec<Rule>,
    pub seed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coding: Option<Vec<CodingPair>>,
    /// Rows of the incidence matrix: entry `(i, j)` counts letter `i` in the image of `j`.
    pub incidence: Vec<Vec<String>>,
    pub length_vector: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub q: usize,
    pub spec: SpecJson,
    /// The certificate in `.morph` syntax.
    pub morph: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnagramJson {
    pub block_length: usize,
    pub words: Vec<String>,
    pub counts: Vec<usize>,
    pub shared_parikh: Vec<usize>,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksJson {
    pub k: usize,
    pub blocks: Vec<String>,
    pub rules: Vec<Rule>,
    pub numbered: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub root: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralJson {
    pub primitive: bool,
    pub char_poly: String,
    /// Coefficients from the constant term up.
    pub coefficients: Vec<String>,
    pub integer_roots: Vec<RootJson>,
    pub radius_lower: String,
    pub radius_upper: String,
    pub radius_loose: bool,
    pub dominant_is_integer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemJson {
    pub letters: Vec<String>,
    pub seed: String,
    pub sturmian: bool,
    pub complexity: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceJson {
    pub n_max: usize,
    pub prefix_length: usize,
    pub validity_margin: usize,
    pub complexity: Vec<usize>,
    pub sturmian_subsystem: bool,
    pub subsystems: Vec<SubsystemJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Automatic,
    NotAutomatic,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub kind: VerdictKind,
    pub stage: String,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anagram: Option<AnagramJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlocksJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<EvidenceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageJson {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<usize>,
    pub outcome: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: SpecJson,
    pub verdict: VerdictJson,
    pub stages: Vec<StageJson>,
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn tokens(alphabet: &Alphabet, word: &Word) -> Vec<String> {
    word.iter()
        .map(|&l| alphabet.token(l).to_string())
        .collect()
}

pub fn spec_json(spec: &MorphicSpec) -> SpecJson {
    let m = spec.morphism();
    let alphabet = m.alphabet();
    let data = incidence(m);
    SpecJson {
        letters: alphabet.tokens().to_vec(),
        rules: alphabet
            .letters()
            .map(|l| Rule {
                letter: alphabet.token(l).to_string(),
                image: tokens(alphabet, m.image(l)),
            })
            .collect(),
        seed: alphabet.token(spec.seed()).to_string(),
        coding: spec.coding().map(|c| {
            alphabet
                .letters()
                .map(|l| CodingPair {
                    letter: alphabet.token(l).to_string(),
                    output: c.target().token(c.map(l)).to_string(),
                })
                .collect()
        }),
        incidence: matrix_rows(&data.matrix),
        length_vector: strings(&data.length_vector),
    }
}

pub fn certificate_json(u: &UniformRepresentation, derived_from: &str) -> CertificateJson {
    CertificateJson {
        q: u.q(),
        spec: spec_json(u.spec()),
        morph: write_spec(u.spec(), Some(derived_from)),
    }
}

pub fn spectral_json(report: &SpectralReport, primitive: bool) -> SpectralJson {
    SpectralJson {
        primitive,
        char_poly: report.char_poly.to_string(),
        coefficients: strings(report.char_poly.coefficients()),
        integer_roots: report
            .integer_roots
            .iter()
            .map(|(r, k)| RootJson {
                root: r.to_string(),
                multiplicity: *k,
            })
            .collect(),
        radius_lower: report.radius_bracket.lo.to_string(),
        radius_upper: report.radius_bracket.hi.to_string(),
        radius_loose: report.radius_bracket.loose,
        dominant_is_integer: report.dominant_is_integer,
    }
}

fn stage_json(r: &StageRecord) -> StageJson {
    StageJson {
        name: r.stage.name().to_string(),
        parameter: r.parameter,
        outcome: match r.outcome {
            Outcome::Fired => "fired",
            Outcome::Failed => "failed",
        }
        .to_string(),
        detail: r.detail.clone(),
    }
}

/// Builds the report; `source` names the analyzed input in certificate headers.
pub fn analysis_report(spec: &MorphicSpec, analysis: &Analysis, source: &str) -> AnalysisReport {
    let verdict = &analysis.verdict;
    let mut json = VerdictJson {
        kind: VerdictKind::Unknown,
        stage: verdict.stage().name().to_string(),
        summary: verdict.to_string(),
        q: None,
        base: None,
        certificate: None,
        anagram: None,
        blocks: None,
        spectral: None,
        evidence: None,
    };
    match verdict {
        Verdict::Automatic(a) => {
            json.kind = VerdictKind::Automatic;
            json.q = Some(a.q);
            json.base = Some(a.base);
            let origin = format!("{} stage on {source}", a.stage);
            json.certificate = Some(certificate_json(&a.certificate, &origin));
            json.anagram = a.anagram.as_ref().map(|w| {
                let alphabet = spec.morphism().alphabet();
                AnagramJson {
                    block_length: w.block_length,
                    words: w.words.iter().map(|x| alphabet.render(x)).collect(),
                    counts: w.counts.clone(),
                    shared_parikh: w.shared_parikh.clone(),
                    degree: w.degree,
                }
            });
            json.blocks = a.blocks.as_ref().map(|b| {
                let alphabet = b.morphism().alphabet();
                BlocksJson {
                    k: b.k(),
                    blocks: alphabet.tokens().to_vec(),
                    rules: alphabet
                        .letters()
                        .map(|l| Rule {
                            letter: alphabet.token(l).to_string(),
                            image: tokens(alphabet, b.morphism().image(l)),
                        })
                        .collect(),
                    numbered: b.numbered(),
                }
            });
        }
        Verdict::NotAutomatic(reason) => {
            json.kind = VerdictKind::NotAutomatic;
            let NotAutomaticReason::IrrationalDominant(report) = reason;
            json.spectral = Some(spectral_json(report, true));
        }
        Verdict::Unknown(e) => {
            let alphabet = spec.morphism().alphabet();
            json.evidence = Some(EvidenceJson {
                n_max: e.profile.n_max,
                prefix_length: e.profile.prefix_length,
                validity_margin: e.profile.validity_margin(),
                complexity: e.profile.counts.clone(),
                sturmian_subsystem: e.has_sturmian_subsystem(),
                subsystems: e
                    .subsystems
                    .iter()
                    .map(|s| SubsystemJson {
                        letters: s
                            .letters
                            .iter()
                            .map(|&l| alphabet.token(l).to_string())
                            .collect(),
                        seed: alphabet.token(s.seed).to_string(),
                        sturmian: s.witness.is_sturmian,
                        complexity: s.witness.profile.counts.clone(),
                    })
                    .collect(),
            });
        }
    }
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: spec_json(spec),
        verdict: json,
        stages: analysis.stages.iter().map(stage_json).collect(),
    }
}
