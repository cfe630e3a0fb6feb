use alloc::format;
use alloc::vec::Vec;

use super::UniformRepresentation;
use crate::criteria::eigenvector_criterion;
use crate::word::{Alphabet, Coding, Letter, MorphicSpec, Morphism, Word};
use crate::{Error, Result};

/// The letter `a(i, j)`: position `j` (1-based) inside the image of letter `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpandedLetter {
    pub base: Letter,
    pub position: usize,
}

/// All expanded letters of `m`, ordered by base letter then position. This is also the letter
/// order of the alphabet produced by [`reshuffle_uniformize`].
pub fn expanded_letters(m: &Morphism) -> Vec<ExpandedLetter> {
    m.alphabet()
        .letters()
        .flat_map(|base| {
            (1..=m.image(base).len()).map(move |position| ExpandedLetter { base, position })
        })
        .collect()
}

/// Turns a morphism whose length vector is a left eigenvector of its incidence matrix into a
/// uniform representation of the same coded fixed point.
///
/// Each letter `i` is split into `a(i,1) … a(i,L_i)`. The word `E_i`, obtained by replacing every
/// letter `c` of `σ(i)` with `a(c,1) … a(c,L_c)`, has length `(LM)_i = q·L_i`, and
/// `a(i,j)` is mapped to the `j`-th length-`q` slice of `E_i`. The coding sends `a(i,j)` to the
/// `j`-th letter of `σ(i)`, followed by the coding of `spec` if it has one.
pub fn reshuffle_uniformize(spec: &MorphicSpec) -> Result<UniformRepresentation> {
    let m = spec.morphism();
    let q = eigenvector_criterion(m)?.ok_or(Error::CriterionFailed)?;
    let lengths = m.length_vector();
    let mut offsets = Vec::with_capacity(lengths.len());
    let mut total = 0;
    for &len in &lengths {
        offsets.push(total);
        total += len;
    }
    let letters = expanded_letters(m);
    let alphabet = Alphabet::new(
        letters
            .iter()
            .map(|e| format!("{}.{}", m.alphabet().token(e.base), e.position)),
    )?;

    let mut images = Vec::with_capacity(total);
    for i in m.alphabet().letters() {
        let expanded: Word = m
            .image(i)
            .iter()
            .flat_map(|&c| offsets[c]..offsets[c] + lengths[c])
            .collect();
        if expanded.len() != q * lengths[i] {
            return Err(Error::Invariant(format!(
                "expanded image of `{}` has length {}, expected {}",
                m.alphabet().token(i),
                expanded.len(),
                q * lengths[i]
            )));
        }
        images.extend(expanded.chunks(q).map(Word::from));
    }

    let output = spec.output_coding();
    let map = letters
        .iter()
        .map(|e| output.map(m.image(e.base)[e.position - 1]))
        .collect();
    let coding = Coding::new(alphabet.clone(), output.target().clone(), map)?;
    let morphism = Morphism::new(alphabet, images)?;
    UniformRepresentation::new(morphism, coding, offsets[spec.seed()])
}
