//! The `.morph` text format.
//!
//! ```text
//! # Lysënok
//! letters: a b c d
//! a -> aca
//! b -> d
//! c -> b
//! d -> c
//! seed: a
//! coding: a->x, b->y, c->x, d->y
//! ```
//!
//! Images are written as whitespace-separated tokens, or as a plain run of characters when every
//! letter is a single character. `seed:` and `coding:` are optional; without a seed the first
//! prolongable letter is used. `#` starts a comment.

use std::fmt::Write as _;

use morphic_core::word::{Alphabet, Coding, Letter, MorphicSpec, Morphism, Word};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("missing `letters:` declaration")]
    MissingLetters,
    #[error("`{0}:` given twice")]
    DuplicateDirective(&'static str),
    #[error("invalid letter token `{0}`")]
    InvalidToken(String),
    #[error("letter `{0}` is declared twice")]
    DuplicateLetter(String),
    #[error("undeclared letter `{0}`")]
    UndeclaredLetter(String),
    #[error("duplicate rule for `{0}`")]
    DuplicateRule(String),
    #[error("no rule for letter `{0}`")]
    MissingRule(String),
    #[error("coding maps `{0}` twice")]
    DuplicateCoding(String),
    #[error("coding has no image for `{0}`")]
    IncompleteCoding(String),
    #[error(transparent)]
    Spec(#[from] morphic_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// The contents of a `.morph` file before the seed is checked for prolongability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphFile {
    pub morphism: Morphism,
    /// The declared seed, if any.
    pub seed: Option<Letter>,
    pub coding: Option<Coding>,
    seed_position: (usize, usize),
}

impl MorphFile {
    /// The morphic spec, with the first prolongable letter as seed when none was declared.
    pub fn spec(&self) -> Result<MorphicSpec, ParseError> {
        let spec = match self.seed {
            Some(seed) => MorphicSpec::new(self.morphism.clone(), seed, self.coding.clone()),
            None => MorphicSpec::with_default_seed(self.morphism.clone(), self.coding.clone()),
        };
        spec.map_err(|e| ParseError {
            line: self.seed_position.0,
            column: self.seed_position.1,
            kind: e.into(),
        })
    }
}

/// A line with comments removed, keeping character columns of the original.
struct Line<'a> {
    number: usize,
    raw: &'a str,
    text: &'a str,
}

impl Line<'_> {
    /// 1-based character column of a subslice of this line.
    fn column_of(&self, part: &str) -> usize {
        let offset = part.as_ptr() as usize - self.raw.as_ptr() as usize;
        self.raw[..offset].chars().count() + 1
    }

    fn error(&self, part: &str, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.number,
            column: self.column_of(part),
            kind,
        }
    }
}

fn valid_token(token: &str) -> bool {
    !token.is_empty() && !token.contains(['#', ',', ':']) && !token.contains("->")
}

/// Splits `text` into tokens, each a subslice so columns can be reported.
fn tokens(text: &str, single_char: bool) -> Vec<&str> {
    if single_char {
        text.char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| &text[i..i + c.len_utf8()])
            .collect()
    } else {
        text.split_whitespace().collect()
    }
}

fn directive<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    let rest = text.strip_prefix(name)?.trim_start();
    rest.strip_prefix(':')
}

/// Coding pairs with the line and column of the directive.
type CodingDirective<'a> = (Vec<(Letter, &'a str)>, usize, usize);

struct Parser<'a> {
    alphabet: Option<(Alphabet, usize)>,
    rules: Vec<Option<Word>>,
    seed: Option<(Letter, usize, usize)>,
    coding: Option<CodingDirective<'a>>,
}

impl<'a> Parser<'a> {
    fn letter(&self, line: &Line<'_>, token: &str) -> Result<Letter, ParseError> {
        let (alphabet, _) = self.alphabet.as_ref().expect("checked by caller");
        alphabet
            .index_of(token)
            .ok_or_else(|| line.error(token, ParseErrorKind::UndeclaredLetter(token.to_string())))
    }

    fn require_letters(&self, line: &Line<'_>) -> Result<(), ParseError> {
        match self.alphabet {
            Some(_) => Ok(()),
            None => Err(line.error(line.text, ParseErrorKind::MissingLetters)),
        }
    }

    fn letters(&mut self, line: &Line<'_>, rest: &str) -> Result<(), ParseError> {
        if self.alphabet.is_some() {
            return Err(line.error(line.text, ParseErrorKind::DuplicateDirective("letters")));
        }
        let list = tokens(rest, false);
        for (i, token) in list.iter().enumerate() {
            if !valid_token(token) {
                return Err(line.error(token, ParseErrorKind::InvalidToken(token.to_string())));
            }
            if list[..i].contains(token) {
                return Err(line.error(token, ParseErrorKind::DuplicateLetter(token.to_string())));
            }
        }
        let alphabet =
            Alphabet::new(list.iter().copied()).map_err(|e| line.error(line.text, e.into()))?;
        self.rules = vec![None; alphabet.len()];
        self.alphabet = Some((alphabet, line.number));
        Ok(())
    }

    fn rule(&mut self, line: &Line<'_>, lhs: &str, rhs: &str) -> Result<(), ParseError> {
        self.require_letters(line)?;
        let lhs = lhs.trim();
        if lhs.is_empty() {
            return Err(line.error(
                line.text,
                ParseErrorKind::Syntax("rule has no letter".into()),
            ));
        }
        let letter = self.letter(line, lhs)?;
        if self.rules[letter].is_some() {
            return Err(line.error(lhs, ParseErrorKind::DuplicateRule(lhs.to_string())));
        }
        let single = self.alphabet.as_ref().expect("checked").0.is_single_char();
        let image = tokens(rhs, single)
            .into_iter()
            .map(|t| self.letter(line, t))
            .collect::<Result<Word, _>>()?;
        self.rules[letter] = Some(image);
        Ok(())
    }

    fn seed(&mut self, line: &Line<'_>, rest: &str) -> Result<(), ParseError> {
        self.require_letters(line)?;
        if self.seed.is_some() {
            return Err(line.error(line.text, ParseErrorKind::DuplicateDirective("seed")));
        }
        let token = rest.trim();
        if token.is_empty() || token.split_whitespace().count() != 1 {
            return Err(line.error(
                rest,
                ParseErrorKind::Syntax("expected one seed letter".into()),
            ));
        }
        let letter = self.letter(line, token)?;
        self.seed = Some((letter, line.number, line.column_of(token)));
        Ok(())
    }

    fn coding(&mut self, line: &Line<'a>, rest: &'a str) -> Result<(), ParseError> {
        self.require_letters(line)?;
        if self.coding.is_some() {
            return Err(line.error(line.text, ParseErrorKind::DuplicateDirective("coding")));
        }
        let mut pairs: Vec<(Letter, &'a str)> = Vec::new();
        for item in rest.split(',') {
            let Some((from, to)) = item.split_once("->") else {
                let kind = ParseErrorKind::Syntax("expected `letter->output`".into());
                return Err(line.error(item, kind));
            };
            let (from, to) = (from.trim(), to.trim());
            if from.is_empty() || to.is_empty() {
                let kind = ParseErrorKind::Syntax("expected `letter->output`".into());
                return Err(line.error(item, kind));
            }
            if !valid_token(to) || to.contains(char::is_whitespace) {
                return Err(line.error(to, ParseErrorKind::InvalidToken(to.to_string())));
            }
            let letter = self.letter(line, from)?;
            if pairs.iter().any(|&(l, _)| l == letter) {
                return Err(line.error(from, ParseErrorKind::DuplicateCoding(from.to_string())));
            }
            pairs.push((letter, to));
        }
        self.coding = Some((pairs, line.number, line.column_of(rest)));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<MorphFile, ParseError> {
        let Some((alphabet, letters_line)) = self.alphabet else {
            return Err(ParseError {
                line: last_line.max(1),
                column: 1,
                kind: ParseErrorKind::MissingLetters,
            });
        };
        let at = |line, column, kind| ParseError { line, column, kind };
        let mut images = Vec::with_capacity(alphabet.len());
        for (l, rule) in self.rules.into_iter().enumerate() {
            match rule {
                Some(image) => images.push(image),
                None => {
                    let kind = ParseErrorKind::MissingRule(alphabet.token(l).to_string());
                    return Err(at(letters_line, 1, kind));
                }
            }
        }
        let morphism =
            Morphism::new(alphabet.clone(), images).map_err(|e| at(letters_line, 1, e.into()))?;
        let coding = match self.coding {
            None => None,
            Some((pairs, line, column)) => {
                let mut outputs: Vec<&str> = Vec::new();
                for &(_, to) in &pairs {
                    if !outputs.contains(&to) {
                        outputs.push(to);
                    }
                }
                let mut map = vec![None; alphabet.len()];
                for &(from, to) in &pairs {
                    map[from] = outputs.iter().position(|&o| o == to);
                }
                let map = map
                    .into_iter()
                    .enumerate()
                    .map(|(l, m)| {
                        m.ok_or_else(|| {
                            let kind =
                                ParseErrorKind::IncompleteCoding(alphabet.token(l).to_string());
                            at(line, column, kind)
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let target = Alphabet::new(outputs).map_err(|e| at(line, column, e.into()))?;
                Some(Coding::new(alphabet, target, map).map_err(|e| at(line, column, e.into()))?)
            }
        };
        let (seed, seed_position) = match self.seed {
            Some((l, line, column)) => (Some(l), (line, column)),
            None => (None, (letters_line, 1)),
        };
        Ok(MorphFile {
            morphism,
            seed,
            coding,
            seed_position,
        })
    }
}

/// Parses a `.morph` file without requiring a prolongable seed.
pub fn parse_file(text: &str) -> Result<MorphFile, ParseError> {
    let mut parser = Parser {
        alphabet: None,
        rules: Vec::new(),
        seed: None,
        coding: None,
    };
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let code = raw.split('#').next().unwrap_or("");
        let text = code.trim();
        if text.is_empty() {
            continue;
        }
        let line = Line {
            number: i + 1,
            raw,
            text,
        };
        if let Some(rest) = directive(text, "letters") {
            parser.letters(&line, rest)?;
        } else if let Some(rest) = directive(text, "seed") {
            parser.seed(&line, rest)?;
        } else if let Some(rest) = directive(text, "coding") {
            parser.coding(&line, rest)?;
        } else if let Some((lhs, rhs)) = text.split_once("->") {
            parser.rule(&line, lhs, rhs)?;
        } else {
            let kind = ParseErrorKind::Syntax(
                "expected `letters:`, `seed:`, `coding:` or a rule `letter -> image`".into(),
            );
            return Err(line.error(text, kind));
        }
    }
    parser.finish(last_line)
}

/// Parses a `.morph` file into a morphic spec.
pub fn parse_morphism(text: &str) -> Result<MorphicSpec, ParseError> {
    parse_file(text)?.spec()
}

/// Writes a spec in `.morph` syntax. Each line of `derived_from` becomes a
/// `# derived-from:` header line.
pub fn write_spec(spec: &MorphicSpec, derived_from: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(origin) = derived_from {
        for line in origin.lines() {
            writeln!(out, "# derived-from: {line}").unwrap();
        }
    }
    let m = spec.morphism();
    let alphabet = m.alphabet();
    writeln!(out, "letters: {}", alphabet.tokens().join(" ")).unwrap();
    for l in alphabet.letters() {
        let image = alphabet.render(m.image(l));
        writeln!(out, "{} -> {}", alphabet.token(l), image).unwrap();
    }
    writeln!(out, "seed: {}", alphabet.token(spec.seed())).unwrap();
    if let Some(coding) = spec.coding() {
        let pairs: Vec<String> = alphabet
            .letters()
            .map(|l| {
                format!(
                    "{}->{}",
                    alphabet.token(l),
                    coding.target().token(coding.map(l))
                )
            })
            .collect();
        writeln!(out, "coding: {}", pairs.join(", ")).unwrap();
    }
    out
}
