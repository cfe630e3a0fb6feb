use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::UniformRepresentation;
use crate::linalg::{incidence, left_eigencheck};
use crate::word::{Alphabet, Coding, Letter, MorphicSpec, Morphism, Word};
use crate::{Error, Result};

/// Where the unique pair is created: the 2-factor `bc` at `pair_position` in the image of the
/// seed, and the cut `γ(bc) = z·t` after `split_index` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CupParams {
    pub pair_position: usize,
    pub split_index: usize,
}

impl CupParams {
    /// The leftmost pair after the seed letter, split after one letter.
    pub fn auto(u: &UniformRepresentation) -> Result<CupParams> {
        let p = CupParams {
            pair_position: 1,
            split_index: 1,
        };
        p.validate(u)?;
        Ok(p)
    }

    fn validate(&self, u: &UniformRepresentation) -> Result<()> {
        let len = u.morphism().image(u.seed()).len();
        if self.pair_position == 0 || self.pair_position + 1 >= len {
            return Err(Error::InvalidCupParams(format!(
                "pair position must satisfy 1 <= p and p + 1 < {len}, got {}",
                self.pair_position
            )));
        }
        let max = 2 * u.q() - 1;
        if self.split_index == 0 || self.split_index > max {
            return Err(Error::InvalidCupParams(format!(
                "split index must lie in 1..={max}, got {}",
                self.split_index
            )));
        }
        Ok(())
    }
}

/// The non-uniform morphic representation produced by [`cup_transform`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupOutput {
    /// `γ'` with its seed and the projection `D` (composed with the original coding).
    pub spec: MorphicSpec,
    pub b_prime: Letter,
    pub c_prime: Letter,
    pub z: Word,
    pub t: Word,
}

fn fresh_token(alphabet: &[String], base: &str) -> String {
    let mut token = format!("{base}'");
    while alphabet.contains(&token) {
        token.push('\'');
    }
    token
}

/// Rewrites a uniform representation of length `k` into a non-uniform morphism with the same
/// coded fixed point.
///
/// Two fresh letters `b'`, `c'` replace the pair `bc` sitting at `pair_position` in `γ(seed)`;
/// they map to `z` and `t`, where `zt = γ(b)γ(c)`, and project back to `b` and `c`. The pair
/// `b'c'` occurs only there, so the projection of the new fixed point is the old one.
pub fn cup_transform(u: &UniformRepresentation, params: CupParams) -> Result<CupOutput> {
    params.validate(u)?;
    let gamma = u.morphism();
    let original = gamma.alphabet();
    let seed = u.seed();
    let seed_image = gamma.image(seed);
    let (b, c) = (
        seed_image[params.pair_position],
        seed_image[params.pair_position + 1],
    );

    let mut pair_image = gamma.image(b).clone();
    pair_image.extend_from_slice(gamma.image(c));
    let z = Word::from(&pair_image[..params.split_index]);
    let t = Word::from(&pair_image[params.split_index..]);

    let mut tokens: Vec<String> = original.tokens().to_vec();
    let b_token = fresh_token(&tokens, original.token(b));
    tokens.push(b_token);
    let c_token = fresh_token(&tokens, original.token(c));
    tokens.push(c_token);
    let alphabet = Alphabet::new(tokens)?;
    let (b_prime, c_prime) = (original.len(), original.len() + 1);

    let mut images: Vec<Word> = gamma.images().to_vec();
    let mut new_seed_image = seed_image.clone().into_vec();
    new_seed_image[params.pair_position] = b_prime;
    new_seed_image[params.pair_position + 1] = c_prime;
    images[seed] = Word::from(new_seed_image);
    images.push(z.clone());
    images.push(t.clone());
    let morphism = Morphism::new(alphabet.clone(), images)?;

    let mut projection: Vec<Letter> = original.letters().collect();
    projection.push(b);
    projection.push(c);
    let projection = Coding::new(alphabet, original.clone(), projection)?;
    let coding = projection.then(u.coding())?;
    let spec = MorphicSpec::new(morphism, seed, Some(coding))?;
    Ok(CupOutput {
        spec,
        b_prime,
        c_prime,
        z,
        t,
    })
}

/// Outcome of the left-eigenvector check `L'M' = λL'` on a morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackCheck {
    pub holds: bool,
    pub eigenvalue: Option<BigRational>,
    pub length_vector: Vec<usize>,
}

/// Checks whether the length vector of `m` is a left eigenvector of its incidence matrix.
pub fn verify_back(m: &Morphism) -> BackCheck {
    let data = incidence(m);
    let eigenvalue = left_eigencheck(&data.length_vector, &data.matrix);
    BackCheck {
        holds: eigenvalue.is_some(),
        eigenvalue,
        length_vector: m.length_vector(),
    }
}
