//! The `morphic` command line.
//!
//! Exit codes: 0 success, 1 mismatch (compare, corpus), 2 parse error, 3 internal invariant
//! violated, 4 precondition not met (e.g. the eigenvector criterion fails), 5 IO error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use morphic_core::constructions::{
    block_morphism, cup_transform, minimize_uniform, reshuffle_uniformize, verify_back, CupParams,
    UniformRepresentation,
};
use morphic_core::criteria::{analyze, AnalysisOptions};
use morphic_core::sequence::{first_difference, sturmian_witness};
use morphic_core::word::{iterate_fixed_point, MorphicSpec};

use crate::corpus;
use crate::format::{parse_morphism, write_spec, ParseError};
use crate::report::analysis_report;

#[derive(Debug, Parser)]
#[command(
    name = "morphic",
    version,
    about = "Find automatic sequences hidden behind non-uniform morphisms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the fixed point is automatic.
    Analyze {
        path: PathBuf,
        /// Print the JSON report instead of a summary.
        #[arg(long)]
        json: bool,
        /// Prefix length on which certificates are checked.
        #[arg(long, default_value_t = 10_000)]
        depth: usize,
        /// Largest block length tried.
        #[arg(long, default_value_t = 8)]
        kmax: usize,
    },
    /// Emit a uniform representation built from the eigenvector criterion.
    Uniformize {
        path: PathBuf,
        #[arg(long)]
        minimize: bool,
        #[arg(long, default_value_t = 10_000)]
        depth: usize,
    },
    /// Emit the morphism induced on non-overlapping k-blocks.
    Blocks {
        path: PathBuf,
        #[arg(short)]
        k: usize,
        /// Emit the uniform representation of the original sequence instead.
        #[arg(long)]
        uniform: bool,
        #[arg(long, default_value_t = 10_000)]
        depth: usize,
    },
    /// Rewrite a uniform representation into a non-uniform one.
    Cup {
        path: PathBuf,
        #[arg(long = "pair-pos")]
        pair_pos: Option<usize>,
        #[arg(long)]
        split: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        depth: usize,
    },
    /// Compare the coded fixed points of two files.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, default_value_t = 10_000)]
        n: usize,
    },
    /// Print a prefix of the coded fixed point.
    Generate {
        path: PathBuf,
        #[arg(short)]
        n: usize,
    },
    /// Factor complexity of a prefix.
    Complexity {
        path: PathBuf,
        #[arg(long, default_value_t = 30)]
        nmax: usize,
        #[arg(short = 'N', default_value_t = 10_000)]
        prefix: usize,
        /// Write `n,p` rows as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// List or run the regression corpus.
    Corpus {
        #[arg(long)]
        run: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Invariant(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse { .. } => 2,
            CliError::Invariant(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<morphic_core::Error> for CliError {
    fn from(e: morphic_core::Error) -> Self {
        match e {
            morphic_core::Error::Invariant(_) => CliError::Invariant(e.to_string()),
            morphic_core::Error::CriterionFailed => CliError::Precondition(format!(
                "{e}; the eigenvector criterion does not apply (try `analyze` or `blocks`)"
            )),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn load(path: &Path) -> Result<MorphicSpec, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_morphism(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn check_prefix(
    spec: &MorphicSpec,
    u: &UniformRepresentation,
    depth: usize,
    what: &str,
) -> Result<(), CliError> {
    match first_difference(spec, u, depth) {
        Some(i) => Err(CliError::Invariant(format!(
            "{what} differs from the input at position {i}"
        ))),
        None => Ok(()),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            path,
            json,
            depth,
            kmax,
        } => {
            let spec = load(&path)?;
            let options = AnalysisOptions {
                depth,
                kmax,
                ..AnalysisOptions::default()
            };
            let analysis = analyze(&spec, &options)?;
            if json {
                let report = analysis_report(&spec, &analysis, &path.display().to_string());
                let text = serde_json::to_string_pretty(&report)
                    .map_err(|e| CliError::Invariant(e.to_string()))?;
                writeln!(out, "{text}")?;
            } else {
                writeln!(out, "{}", analysis.verdict)?;
                for s in &analysis.stages {
                    let param = s.parameter.map(|k| format!(" k={k}")).unwrap_or_default();
                    let outcome = match s.outcome {
                        morphic_core::criteria::Outcome::Fired => "fired",
                        morphic_core::criteria::Outcome::Failed => "failed",
                    };
                    writeln!(out, "  {}{param}: {outcome}: {}", s.stage, s.detail)?;
                }
            }
        }
        Command::Uniformize {
            path,
            minimize,
            depth,
        } => {
            let spec = load(&path)?;
            let mut u = reshuffle_uniformize(&spec)?;
            let mut origin = format!("reshuffle of {}", path.display());
            if minimize {
                u = minimize_uniform(&u);
                origin.push_str(", minimized");
            }
            check_prefix(&spec, &u, depth, "uniform representation")?;
            write!(out, "{}", write_spec(u.spec(), Some(&origin)))?;
            writeln!(
                out,
                "# uniform length {}, checked on {depth} letters",
                u.q()
            )?;
        }
        Command::Blocks {
            path,
            k,
            uniform,
            depth,
        } => {
            let spec = load(&path)?;
            let b = block_morphism(&spec, k)?;
            let block_spec = b.spec()?;
            let flat = b.flatten(&block_spec.raw_prefix(depth.div_ceil(k)));
            let raw = spec.raw_prefix(depth);
            if let Some(i) = raw.iter().zip(flat.iter()).position(|(x, y)| x != y) {
                return Err(CliError::Invariant(format!(
                    "flattened block sequence differs at position {i}"
                )));
            }
            if uniform {
                let u = b.to_uniform()?;
                check_prefix(&spec, &u, depth, "block certificate")?;
                let origin = format!("{k}-blocks of {}", path.display());
                write!(out, "{}", write_spec(u.spec(), Some(&origin)))?;
                writeln!(out, "# uniform length {}", u.q())?;
            } else {
                let origin = format!("{k}-blocks of {}; {}", path.display(), b.numbered());
                write!(out, "{}", write_spec(&block_spec, Some(&origin)))?;
                match b.uniform_length() {
                    Some(q) => writeln!(out, "# uniform length {q}")?,
                    None => writeln!(out, "# not uniform")?,
                }
            }
        }
        Command::Cup {
            path,
            pair_pos,
            split,
            depth,
        } => {
            let spec = load(&path)?;
            let mut u = UniformRepresentation::from_spec(&spec)?;
            let mut origin = format!("pair construction on {}", path.display());
            if u.q() == 2 {
                // images of length 2 leave no room for a pair after the seed letter
                u = u.power(2)?;
                origin.push_str(", squared");
            }
            let auto = CupParams::auto(&u)?;
            let params = CupParams {
                pair_position: pair_pos.unwrap_or(auto.pair_position),
                split_index: split.unwrap_or(auto.split_index),
            };
            origin.push_str(&format!(
                ", p={}, s={}",
                params.pair_position, params.split_index
            ));
            let cup = cup_transform(&u, params)?;
            if let Some(i) = first_difference(&cup.spec, &u, depth) {
                return Err(CliError::Invariant(format!(
                    "projection differs from the input at position {i}"
                )));
            }
            let back = verify_back(cup.spec.morphism());
            write!(out, "{}", write_spec(&cup.spec, Some(&origin)))?;
            match back.eigenvalue {
                Some(lambda) => writeln!(
                    out,
                    "# verify_back: holds, L'M' = {lambda}L', L' = {:?}",
                    back.length_vector
                )?,
                None => writeln!(out, "# verify_back: fails, L' = {:?}", back.length_vector)?,
            }
        }
        Command::Compare { a, b, n } => {
            let (sa, sb) = (load(&a)?, load(&b)?);
            match first_difference(&sa, &sb, n) {
                None => writeln!(out, "equal")?,
                Some(i) => return Err(CliError::Mismatch(format!("differ at position {i}"))),
            }
        }
        Command::Generate { path, n } => {
            let spec = load(&path)?;
            let prefix = iterate_fixed_point(&spec, n);
            writeln!(out, "{}", spec.output_alphabet().render(&prefix))?;
        }
        Command::Complexity {
            path,
            nmax,
            prefix,
            csv,
        } => {
            let spec = load(&path)?;
            let w = sturmian_witness(&spec, nmax, prefix)?;
            if csv {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(["n", "p"])
                    .map_err(|e| CliError::Io(e.to_string()))?;
                for (i, p) in w.profile.counts.iter().enumerate() {
                    writer
                        .serialize((i + 1, p))
                        .map_err(|e| CliError::Io(e.to_string()))?;
                }
                let bytes = writer
                    .into_inner()
                    .map_err(|e| CliError::Io(e.to_string()))?;
                out.write_all(&bytes)?;
            } else {
                for (i, p) in w.profile.counts.iter().enumerate() {
                    writeln!(out, "p({}) = {p}", i + 1)?;
                }
                let verdict = if w.is_sturmian {
                    "p(n) = n+1 throughout"
                } else {
                    "not Sturmian"
                };
                writeln!(
                    out,
                    "{verdict} (prefix {prefix}, margin {})",
                    w.profile.validity_margin()
                )?;
            }
        }
        Command::Corpus { run, dir } => {
            let dir = dir.unwrap_or_else(corpus::default_dir);
            let entries = corpus::load_dir(&dir).map_err(|e| match e {
                corpus::CorpusError::Io { .. } => CliError::Io(e.to_string()),
                _ => CliError::Precondition(e.to_string()),
            })?;
            if entries.is_empty() {
                writeln!(err, "warning: no corpus entries in {}", dir.display())?;
                return Ok(());
            }
            if !run {
                for e in &entries {
                    writeln!(out, "{}  {}", e.name, e.expected.provenance)?;
                }
                return Ok(());
            }
            let outcomes = corpus::run_all(&entries, &AnalysisOptions::default());
            write!(out, "{}", corpus::render_table(&outcomes))?;
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            if failed > 0 {
                return Err(CliError::Mismatch(format!(
                    "{failed} corpus entries failed"
                )));
            }
        }
    }
    Ok(())
}
