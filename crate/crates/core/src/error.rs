// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow")]
    Overflow,

    #[error("{0}")]
    OutOfRange(String),

    #[error("no solution: gcd {gcd} does not divide {c}")]
    NoSolution { gcd: i128, c: i128 },

    #[error("{a} has no inverse modulo {m}: gcd is {gcd}")]
    NotCoprime { a: u64, m: u64, gcd: u64 },

    /// Indices are zero-based positions in the input list.
    #[error(
        "inconsistent congruences #{} (x = {} mod {}) and #{} (x = {} mod {}): residues differ modulo gcd {}",
        .first + 1, .first_residue, .first_modulus, .second + 1, .second_residue, .second_modulus, .gcd
    )]
    InconsistentSystem {
        first: usize,
        second: usize,
        first_residue: u64,
        first_modulus: u64,
        second_residue: u64,
        second_modulus: u64,
        gcd: u64,
    },

    /// `position` is the 1-based index of the offending token.
    #[error("parse error at token {position}: {kind}")]
    Parse {
        kind: ParseErrorKind,
        position: usize,
        offset: usize,
    },

    #[error("no mapped consonant in input")]
    EmptyDecode,

    #[error("unknown token {token:?} at position {position}")]
    UnknownToken { token: String, position: usize },

    #[error("invalid cipher: {0}")]
    InvalidCipher(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownToken(String),
    VowelWithoutConsonant(String),
    TrailingConsonants,
    SpaceInsideSyllable,
    Empty,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownToken(t) => write!(f, "unknown token {t:?}"),
            ParseErrorKind::VowelWithoutConsonant(v) => {
                write!(f, "vowel {v:?} has no preceding consonant")
            }
            ParseErrorKind::TrailingConsonants => write!(f, "consonants with no vowel"),
            ParseErrorKind::SpaceInsideSyllable => write!(f, "whitespace inside a syllable"),
            ParseErrorKind::Empty => write!(f, "no syllables"),
        }
    }
}

impl Error {
    /// Stable machine-readable name, used by the command-line envelope.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Overflow => "overflow",
            Error::OutOfRange(_) => "range",
            Error::NoSolution { .. } => "no_solution",
            Error::NotCoprime { .. } => "not_coprime",
            Error::InconsistentSystem { .. } => "inconsistent_system",
            Error::Parse { .. } => "parse",
            Error::EmptyDecode => "empty_decode",
            Error::UnknownToken { .. } => "unknown_token",
            Error::InvalidCipher(_) => "invalid_cipher",
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Parse { position, .. } | Error::UnknownToken { position, .. } => Some(*position),
            _ => None,
        }
    }
}
