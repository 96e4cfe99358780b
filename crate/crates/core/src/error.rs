// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::words::{Alphabet, Word};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol {symbol} at position {position} for {alphabet:?}")]
    InvalidSymbol {
        symbol: u8,
        position: usize,
        alphabet: Alphabet,
    },

    #[error("invalid word length {0} (must be 1..={max})", max = crate::words::MAX_WORD_LEN)]
    InvalidLength(usize),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("alphabet mismatch: expected {expected:?}, found {found:?}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("word {word} does not conform to channel {channel}")]
    ChannelMismatch { word: String, channel: String },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element {element:?} is not a member of the group with factors {factors:?}")]
    ElementMismatch {
        element: Vec<u32>,
        factors: Vec<u32>,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("code is not self-complementary: complement of {0} is missing")]
    NotSelfComplementary(Word),

    #[error("code is not a 1-code: {0} and {1} have asymmetric distance below 2")]
    NotOneCode(Word, Word),

    #[error("{n} qubits exceeds the configured cap of {cap}")]
    QubitCapExceeded { n: usize, cap: usize },

    #[error("invalid seed clique: {0}")]
    InvalidSeed(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
