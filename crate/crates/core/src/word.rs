//! Alphabets, words, morphisms and codings.
//!
//! Letters are indices into an [`Alphabet`]; the alphabet carries the printable tokens in
//! declaration order, which is also the canonical row/column order for every matrix built from a
//! morphism.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::{Error, Result};

/// Index of a letter in its alphabet.
pub type Letter = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = BTreeSet::new();
        for token in &letters {
            if token.is_empty() || token.chars().any(char::is_whitespace) {
                return Err(Error::InvalidToken(token.clone()));
            }
            if !seen.insert(token.as_str()) {
                return Err(Error::DuplicateLetter(token.clone()));
            }
        }
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.letters[letter]
    }

    pub fn tokens(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, token: &str) -> Option<Letter> {
        self.letters.iter().position(|t| t == token)
    }

    pub fn letter(&self, token: &str) -> Result<Letter> {
        self.index_of(token)
            .ok_or_else(|| Error::UnknownLetter(token.to_string()))
    }

    pub fn letters(&self) -> core::ops::Range<Letter> {
        0..self.letters.len()
    }

    /// True when every token is a single character, so words can be written without separators.
    pub fn is_single_char(&self) -> bool {
        self.letters.iter().all(|t| t.chars().count() == 1)
    }

    pub fn render(&self, word: &[Letter]) -> String {
        let sep = if self.is_single_char() { "" } else { " " };
        let mut out = String::new();
        for (i, &l) in word.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            out.push_str(self.token(l));
        }
        out
    }

    /// Parses a word written either as whitespace-separated tokens or, for single-character
    /// alphabets, as a run of characters.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut word = Word::new();
        if self.is_single_char() {
            for c in text.chars().filter(|c| !c.is_whitespace()) {
                let mut buf = [0u8; 4];
                word.push(self.letter(c.encode_utf8(&mut buf))?);
            }
        } else {
            for token in text.split_whitespace() {
                word.push(self.letter(token)?);
            }
        }
        Ok(word)
    }

    fn check(&self, word: &[Letter]) -> Result<()> {
        match word.iter().find(|&&l| l >= self.len()) {
            Some(&index) => Err(Error::LetterOutOfRange {
                index,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }
}

/// A finite word over some alphabet, stored as letter indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn new() -> Self {
        Self(Vec::new())
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Self(Vec::with_capacity(capacity))
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_slice(&mut self, letters: &[Letter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Self(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Occurrence count of every letter of `alphabet` in `word`, in alphabet order.
pub fn parikh_vector(word: &[Letter], alphabet: &Alphabet) -> Vec<usize> {
    let mut counts = vec![0; alphabet.len()];
    for &l in word {
        counts[l] += 1;
    }
    counts
}

/// A substitution: one image word per letter of the alphabet.
///
/// Erasing images (empty words) are representable; analyses that need a non-erasing morphism
/// check it themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::ImageCount {
                expected: alphabet.len(),
                found: images.len(),
            });
        }
        for image in &images {
            alphabet.check(image)?;
        }
        Ok(Self { alphabet, images })
    }

    /// Builds a morphism from letter tokens and their images written as in
    /// [`Alphabet::parse_word`].
    ///
    /// ```
    /// use morphic_core::word::Morphism;
    /// let fib = Morphism::from_rules(&["0", "1"], &["01", "0"]).unwrap();
    /// assert_eq!(fib.length_vector(), vec![2, 1]);
    /// ```
    pub fn from_rules(letters: &[&str], images: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(letters.iter().copied())?;
        let images = images
            .iter()
            .map(|img| alphabet.parse_word(img))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, images)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.letters().map(|l| Word::from(vec![l])).collect();
        Self { alphabet, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn length_vector(&self) -> Vec<usize> {
        self.images.iter().map(|w| w.len()).collect()
    }

    pub fn uniform_length(&self) -> Option<usize> {
        let first = self.images[0].len();
        self.images
            .iter()
            .all(|w| w.len() == first)
            .then_some(first)
    }

    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(|w| w.is_empty())
    }

    pub fn apply(&self, word: &[Letter]) -> Word {
        let len = word.iter().map(|&l| self.images[l].len()).sum();
        let mut out = Word::with_capacity(len);
        for &l in word {
            out.extend_from_slice(&self.images[l]);
        }
        out
    }

    /// `self ∘ inner`: the morphism sending a letter `l` to `self(inner(l))`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if self.alphabet != inner.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let images = inner.images.iter().map(|w| self.apply(w)).collect();
        Ok(Morphism {
            alphabet: self.alphabet.clone(),
            images,
        })
    }

    pub fn power(&self, k: usize) -> Result<Morphism> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Letters whose iterated images eventually become empty.
    pub fn mortal_letters(&self) -> Vec<bool> {
        let mut mortal = vec![false; self.alphabet.len()];
        loop {
            let mut changed = false;
            for l in self.alphabet.letters() {
                if !mortal[l] && self.images[l].iter().all(|&c| mortal[c]) {
                    mortal[l] = true;
                    changed = true;
                }
            }
            if !changed {
                return mortal;
            }
        }
    }

    /// A letter is prolongable when its image starts with it and the rest of the image contains
    /// a letter that never dies out, i.e. the iterates `σⁿ(letter)` grow without bound.
    pub fn is_prolongable(&self, letter: Letter) -> bool {
        let image = &self.images[letter];
        if image.len() < 2 || image[0] != letter {
            return false;
        }
        let mortal = self.mortal_letters();
        image[1..].iter().any(|&c| !mortal[c])
    }

    pub fn is_prolongable_token(&self, token: &str) -> Result<bool> {
        Ok(self.is_prolongable(self.alphabet.letter(token)?))
    }

    /// Letters occurring in some `σⁿ(letter)`, `n ≥ 0`, in ascending order.
    pub fn reachable_from(&self, letter: Letter) -> Vec<Letter> {
        let mut seen = vec![false; self.alphabet.len()];
        let mut stack = vec![letter];
        seen[letter] = true;
        while let Some(l) = stack.pop() {
            for &c in self.images[l].iter() {
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        self.alphabet.letters().filter(|&l| seen[l]).collect()
    }

    /// The restriction to a set of letters closed under the morphism, reindexed in the order of
    /// `letters`. Returns `None` when the set is not closed.
    pub fn restrict(&self, letters: &[Letter]) -> Option<Morphism> {
        let mut index = vec![None; self.alphabet.len()];
        for (i, &l) in letters.iter().enumerate() {
            index[l] = Some(i);
        }
        let alphabet =
            Alphabet::new(letters.iter().map(|&l| self.alphabet.token(l).to_string())).ok()?;
        let images = letters
            .iter()
            .map(|&l| {
                self.images[l]
                    .iter()
                    .map(|&c| index[c])
                    .collect::<Option<Word>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism { alphabet, images })
    }
}

/// Letterwise image equality of two morphisms on the same alphabet.
pub fn morphism_equal(a: &Morphism, b: &Morphism) -> Result<bool> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    Ok(a.images == b.images)
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, image) in self.images.iter().enumerate() {
            if l > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}→{}",
                self.alphabet.token(l),
                self.alphabet.render(image)
            )?;
        }
        Ok(())
    }
}

/// A letter-to-letter map between two alphabets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding {
    source: Alphabet,
    target: Alphabet,
    map: Vec<Letter>,
}

impl Coding {
    pub fn new(source: Alphabet, target: Alphabet, map: Vec<Letter>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::ImageCount {
                expected: source.len(),
                found: map.len(),
            });
        }
        target.check(&map)?;
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let map = alphabet.letters().collect();
        Self {
            source: alphabet.clone(),
            target: alphabet,
            map,
        }
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn map(&self, letter: Letter) -> Letter {
        self.map[letter]
    }

    pub fn table(&self) -> &[Letter] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &l)| i == l)
    }

    pub fn apply(&self, word: &[Letter]) -> Word {
        word.iter().map(|&l| self.map[l]).collect()
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &Coding) -> Result<Coding> {
        if self.target != after.source {
            return Err(Error::AlphabetMismatch);
        }
        let map = self.map.iter().map(|&l| after.map[l]).collect();
        Ok(Coding {
            source: self.source.clone(),
            target: after.target.clone(),
            map,
        })
    }
}

/// A morphism, a prolongable seed letter and an optional coding: the data of a morphic sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphicSpec {
    morphism: Morphism,
    seed: Letter,
    coding: Option<Coding>,
}

impl MorphicSpec {
    pub fn new(morphism: Morphism, seed: Letter, coding: Option<Coding>) -> Result<Self> {
        if seed >= morphism.alphabet.len() {
            return Err(Error::LetterOutOfRange {
                index: seed,
                size: morphism.alphabet.len(),
            });
        }
        if !morphism.is_prolongable(seed) {
            return Err(Error::NotProlongable(
                morphism.alphabet.token(seed).to_string(),
            ));
        }
        if let Some(c) = &coding {
            if c.source != morphism.alphabet {
                return Err(Error::AlphabetMismatch);
            }
        }
        Ok(Self {
            morphism,
            seed,
            coding,
        })
    }

    /// Uses the first prolongable letter in alphabet order as seed.
    pub fn with_default_seed(morphism: Morphism, coding: Option<Coding>) -> Result<Self> {
        let seed = morphism
            .alphabet
            .letters()
            .find(|&l| morphism.is_prolongable(l))
            .ok_or_else(|| Error::NotProlongable(String::from("<any letter>")))?;
        Self::new(morphism, seed, coding)
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    pub fn coding(&self) -> Option<&Coding> {
        self.coding.as_ref()
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        match &self.coding {
            Some(c) => c.target(),
            None => self.morphism.alphabet(),
        }
    }

    /// The same morphism and seed without the coding.
    pub fn uncoded(&self) -> MorphicSpec {
        MorphicSpec {
            morphism: self.morphism.clone(),
            seed: self.seed,
            coding: None,
        }
    }

    /// The coding composed behind an extra letter-to-letter map on the fixed point.
    pub fn output_coding(&self) -> Coding {
        self.coding
            .clone()
            .unwrap_or_else(|| Coding::identity(self.morphism.alphabet.clone()))
    }

    /// The first `n` letters of the fixed point starting with the seed, before coding.
    ///
    /// The prefix is grown in place: with `x = σ(x)`, the images of `x₀ x₁ … x_{i-1}` form a
    /// prefix of `x`, so letter `i` is always available before its image is appended.
    pub fn raw_prefix(&self, n: usize) -> Word {
        let seed_image = self.morphism.image(self.seed);
        let max_image = self
            .morphism
            .images
            .iter()
            .map(|w| w.len())
            .max()
            .unwrap_or(0);
        let mut out = Word::with_capacity(n.max(seed_image.len()) + max_image);
        out.extend_from_slice(seed_image);
        let mut next = 1;
        while out.len() < n {
            debug_assert!(next < out.len(), "prolongable seed cannot stall");
            if next >= out.len() {
                break;
            }
            let letter = out[next];
            out.extend_from_slice(self.morphism.image(letter));
            next += 1;
        }
        out.truncate(n);
        out
    }
}

/// The first `n` letters of the coded fixed point of `spec`.
pub fn iterate_fixed_point(spec: &MorphicSpec, n: usize) -> Word {
    let raw = spec.raw_prefix(n);
    match &spec.coding {
        Some(c) => c.apply(&raw),
        None => raw,
    }
}
