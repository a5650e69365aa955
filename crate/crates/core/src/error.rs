use alloc::string::String;

use crate::verify::OverlapWitness;
use crate::words::Word;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 2..=256")]
    AlphabetSize(usize),
    #[error("words must have at least one symbol")]
    EmptyWord,
    #[error("symbol {symbol} is not in Z_{q}")]
    SymbolOutOfRange { symbol: u8, q: usize },
    #[error("codeword {0} has length 1; codewords need length >= 2")]
    ShortCodeword(Word),
    #[error("duplicate codeword {0}")]
    DuplicateWord(Word),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("word {0} is not binary")]
    NotBinary(Word),
    #[error("code has words of several lengths; a fixed-length code is required")]
    MixedLength,
    #[error("enumerating {q}^{len} words exceeds the enumeration cap {cap}")]
    EnumerationCap { q: usize, len: usize, cap: u64 },
    #[error("code is overlapping: {0}")]
    Overlapping(OverlapWitness),
    #[error("pattern of length {pattern} is longer than the word of length {word}")]
    PatternTooLong { pattern: usize, word: usize },
    #[error("series denominator has a zero constant term")]
    ZeroConstantTerm,
    #[error("series coefficient {index} is not an integer")]
    NonIntegralSeries { index: usize },
    #[error("tolerance must be a positive finite number no smaller than 2^-100")]
    InvalidTolerance,
    #[error("epsilon_{k}: root and series disagree beyond the tolerance")]
    EpsilonMismatch { k: usize },
}
