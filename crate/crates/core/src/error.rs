use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("letter `{0}` is declared twice")]
    DuplicateLetter(String),
    #[error("invalid letter token `{0}`")]
    InvalidToken(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("letter index {index} out of range for an alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("morphisms are defined over different alphabets")]
    AlphabetMismatch,
    #[error("letter `{0}` is not prolongable")]
    NotProlongable(String),
    #[error("the morphism is erasing")]
    Erasing,
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("expected an alphabet of size {expected}, found {found}")]
    WrongAlphabetSize { expected: usize, found: usize },
    #[error("morphism is not {0}-uniform")]
    NotUniform(usize),
    #[error("the length vector is not a left eigenvector of the incidence matrix")]
    CriterionFailed,
    #[error("block length must be at least 2, got {0}")]
    BlockLength(usize),
    #[error("image of block `{block}` has length {length}, not divisible by {k}")]
    BlockDivisibility {
        block: String,
        length: usize,
        k: usize,
    },
    #[error("block discovery exceeded the bound of {0} blocks")]
    BlockBoundExceeded(usize),
    #[error("invalid pair parameters: {0}")]
    InvalidCupParams(String),
    #[error("prefix length {prefix_len} is below 4 x n_max = {}", 4 * n_max)]
    MarginViolation { n_max: usize, prefix_len: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
