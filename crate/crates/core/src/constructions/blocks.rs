use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::UniformRepresentation;
use crate::word::{Alphabet, Coding, Letter, MorphicSpec, Morphism, Word};
use crate::{Error, Result};

/// The morphism induced on non-overlapping `k`-blocks of a fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMorphism {
    k: usize,
    morphism: Morphism,
    blocks: Vec<Word>,
    source: Alphabet,
    coding: Coding,
}

impl BlockMorphism {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Morphism on the block alphabet; block `0` is the seed block.
    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    /// The letters of each block, over the original alphabet.
    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    pub fn seed(&self) -> Letter {
        0
    }

    pub fn uniform_length(&self) -> Option<usize> {
        self.morphism.uniform_length()
    }

    /// Coding from block letters to their `k`-letter words over the original alphabet.
    pub fn block_word(&self, block: Letter) -> &Word {
        &self.blocks[block]
    }

    pub fn render_block(&self, block: Letter) -> String {
        self.source.render(&self.blocks[block])
    }

    /// Replaces every block letter by its `k` letters.
    pub fn flatten(&self, word: &[Letter]) -> Word {
        let mut out = Word::with_capacity(word.len() * self.k);
        for &b in word {
            out.extend_from_slice(&self.blocks[b]);
        }
        out
    }

    /// The induced morphism with blocks numbered `1, 2, …` in lexicographic order, e.g.
    /// `1→23,2→21,3→22 (1=ab, 2=ac, 3=ad)`.
    pub fn numbered(&self) -> String {
        let mut order: Vec<Letter> = (0..self.blocks.len()).collect();
        order.sort_by(|&a, &b| self.blocks[a].cmp(&self.blocks[b]));
        let mut number = vec![0; order.len()];
        for (i, &b) in order.iter().enumerate() {
            number[b] = i + 1;
        }
        let sep = if order.len() < 10 { "" } else { " " };
        let rules: Vec<String> = order
            .iter()
            .map(|&b| {
                let image: Vec<String> = self
                    .morphism
                    .image(b)
                    .iter()
                    .map(|&c| format!("{}", number[c]))
                    .collect();
                format!("{}→{}", number[b], image.join(sep))
            })
            .collect();
        let legend: Vec<String> = order
            .iter()
            .map(|&b| format!("{}={}", number[b], self.render_block(b)))
            .collect();
        format!("{} ({})", rules.join(","), legend.join(", "))
    }

    /// The block sequence as a morphic spec (no coding).
    pub fn spec(&self) -> Result<MorphicSpec> {
        MorphicSpec::new(self.morphism.clone(), self.seed(), None)
    }

    /// A `q`-uniform representation of the original coded fixed point, available when the block
    /// morphism `μ` is `q`-uniform.
    ///
    /// Letters are pairs `(β, j)` with `β` a block and `j < k` a position. The fixed point
    /// `z(kn + j) = (Y(n), j)` of the flattened block sequence `Y` satisfies
    /// `z(qn + i) = (μ(β)[(qj + i) div k], (qj + i) mod k)` whenever `z(n) = (β, j)`, which
    /// defines a `q`-uniform morphism. The coding sends `(β, j)` to the `j`-th letter of `β`.
    pub fn to_uniform(&self) -> Result<UniformRepresentation> {
        let q = self
            .uniform_length()
            .ok_or(Error::NotUniform(self.morphism.image(0).len()))?;
        let k = self.k;
        let letter = |block: Letter, j: usize| block * k + j;
        let mut tokens = Vec::with_capacity(self.blocks.len() * k);
        let mut images = Vec::with_capacity(self.blocks.len() * k);
        let mut map = Vec::with_capacity(self.blocks.len() * k);
        for (b, word) in self.blocks.iter().enumerate() {
            for (j, &original) in word.iter().enumerate() {
                tokens.push(format!("{}@{}", self.morphism.alphabet().token(b), j));
                let image = self.morphism.image(b);
                images.push(
                    (0..q)
                        .map(|i| {
                            let t = q * j + i;
                            letter(image[t / k], t % k)
                        })
                        .collect::<Word>(),
                );
                map.push(self.coding.map(original));
            }
        }
        let alphabet = Alphabet::new(tokens)?;
        let coding = Coding::new(alphabet.clone(), self.coding.target().clone(), map)?;
        UniformRepresentation::new(Morphism::new(alphabet, images)?, coding, letter(0, 0))
    }
}

/// Discovers the `k`-blocks occurring at positions `≡ 0 (mod k)` of the fixed point of `spec` and
/// the morphism they induce.
///
/// Starting from the first `k` letters, each discovered block `b` must have `|σ(b)|` divisible
/// by `k`; `σ(b)` is then cut into `k`-blocks, which join the discovered set. Discovery stops
/// with an error once more than `|A|^k` blocks appear.
pub fn block_morphism(spec: &MorphicSpec, k: usize) -> Result<BlockMorphism> {
    if k < 2 {
        return Err(Error::BlockLength(k));
    }
    let m = spec.morphism();
    let source = m.alphabet();
    let bound = u32::try_from(k)
        .ok()
        .and_then(|k| source.len().checked_pow(k))
        .unwrap_or(usize::MAX);

    let mut index: BTreeMap<Vec<Letter>, Letter> = BTreeMap::new();
    let mut blocks: Vec<Word> = Vec::new();
    let seed_block = spec.raw_prefix(k);
    index.insert(seed_block.to_vec(), 0);
    blocks.push(seed_block);

    let mut images = Vec::new();
    let mut next = 0;
    while next < blocks.len() {
        let image = m.apply(&blocks[next]);
        if !image.len().is_multiple_of(k) {
            return Err(Error::BlockDivisibility {
                block: source.render(&blocks[next]),
                length: image.len(),
                k,
            });
        }
        let mut induced = Word::with_capacity(image.len() / k);
        for chunk in image.chunks(k) {
            let id = match index.get(chunk) {
                Some(&id) => id,
                None => {
                    if blocks.len() >= bound {
                        return Err(Error::BlockBoundExceeded(bound));
                    }
                    let id = blocks.len();
                    index.insert(chunk.to_vec(), id);
                    blocks.push(Word::from(chunk));
                    id
                }
            };
            induced.push(id);
        }
        images.push(induced);
        next += 1;
    }

    let alphabet = Alphabet::new(blocks.iter().map(|b| {
        let mut s = String::new();
        for &l in b.iter() {
            s.push_str(source.token(l));
        }
        s
    }))?;
    Ok(BlockMorphism {
        k,
        morphism: Morphism::new(alphabet, images)?,
        blocks,
        source: source.clone(),
        coding: spec.output_coding(),
    })
}
