//! Certificate-producing constructions.
//!
//! Every positive automaticity answer comes with a [`UniformRepresentation`]: a `q`-uniform
//! morphism, a prolongable seed and a letter-to-letter coding whose coded fixed point is the
//! analyzed sequence.

mod blocks;
mod cup;
mod minimize;
mod reshuffle;

pub use blocks::{block_morphism, BlockMorphism};
pub use cup::{cup_transform, verify_back, BackCheck, CupOutput, CupParams};
pub use minimize::{iso_equivalent, minimize_uniform};
pub use reshuffle::{expanded_letters, reshuffle_uniformize, ExpandedLetter};

use crate::word::{iterate_fixed_point, Coding, Letter, MorphicSpec, Morphism, Word};
use crate::{Error, Result};

/// A `q`-uniform morphism with a prolongable seed and a coding: an automatic-sequence certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformRepresentation {
    spec: MorphicSpec,
    coding: Coding,
    q: usize,
}

impl UniformRepresentation {
    pub fn new(morphism: Morphism, coding: Coding, seed: Letter) -> Result<Self> {
        let q = morphism
            .uniform_length()
            .ok_or(Error::NotUniform(morphism.image(0).len()))?;
        if q < 2 {
            return Err(Error::NotUniform(2));
        }
        let spec = MorphicSpec::new(morphism, seed, Some(coding.clone()))?;
        Ok(Self { spec, coding, q })
    }

    /// Wraps a spec whose morphism is uniform, using the identity coding when it has none.
    pub fn from_spec(spec: &MorphicSpec) -> Result<Self> {
        Self::new(spec.morphism().clone(), spec.output_coding(), spec.seed())
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn morphism(&self) -> &Morphism {
        self.spec.morphism()
    }

    pub fn coding(&self) -> &Coding {
        &self.coding
    }

    pub fn seed(&self) -> Letter {
        self.spec.seed()
    }

    pub fn spec(&self) -> &MorphicSpec {
        &self.spec
    }

    pub fn generate(&self, n: usize) -> Word {
        iterate_fixed_point(&self.spec, n)
    }

    /// Drops the coding, keeping the plain uniform fixed point.
    pub fn uncoded(&self) -> UniformRepresentation {
        let alphabet = self.morphism().alphabet().clone();
        UniformRepresentation {
            spec: self.spec.uncoded(),
            coding: Coding::identity(alphabet),
            q: self.q,
        }
    }

    /// The `k`-th power of the morphism, same seed and coding.
    pub fn power(&self, k: usize) -> Result<UniformRepresentation> {
        let morphism = self.morphism().power(k)?;
        UniformRepresentation::new(morphism, self.coding.clone(), self.seed())
    }
}
