// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Katapayadi: consonants stand for digits, vowels are free.
//!
//! Digits are read left to right as written, so `kava sira` is `1472`.

use super::translit::{Letter, LexemeKind, Piece, Vocabulary};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symbol {
    Digit(u8),
    Free,
}

/// One row per line of the code table, columns in the order 1..9, 0.
type Row = [Option<&'static str>; 10];

const SANSKRIT_ROWS: [Row; 4] = [
    [
        Some("k"),
        Some("kh"),
        Some("g"),
        Some("gh"),
        Some("G"),
        Some("c"),
        Some("ch"),
        Some("j"),
        Some("jh"),
        Some("J"),
    ],
    [
        Some("T"),
        Some("Th"),
        Some("D"),
        Some("Dh"),
        Some("N"),
        Some("t"),
        Some("th"),
        Some("d"),
        Some("dh"),
        Some("n"),
    ],
    [
        Some("p"),
        Some("ph"),
        Some("b"),
        Some("bh"),
        Some("m"),
        None,
        None,
        None,
        None,
        None,
    ],
    [
        Some("y"),
        Some("r"),
        Some("l"),
        Some("v"),
        Some("z"),
        Some("S"),
        Some("s"),
        Some("h"),
        None,
        None,
    ],
];

const ENGLISH_ROWS: [Row; 3] = [
    [
        Some("b"),
        Some("c"),
        Some("d"),
        Some("f"),
        Some("g"),
        Some("h"),
        Some("j"),
        Some("k"),
        Some("l"),
        Some("m"),
    ],
    [
        Some("n"),
        Some("p"),
        Some("q"),
        Some("r"),
        Some("s"),
        Some("t"),
        Some("v"),
        Some("w"),
        Some("x"),
        Some("y"),
    ],
    [
        Some("z"),
        None,
        None,
        None,
        None,
        None,
        None,
        None,
        None,
        None,
    ],
];

const fn column_digit(column: usize) -> u8 {
    ((column + 1) % 10) as u8
}

#[derive(Debug, Clone)]
pub struct KatapayadiTable {
    name: &'static str,
    /// Consonants in table order (row by row), with their digit.
    mapping: Vec<(&'static str, u8)>,
    free: Vec<&'static str>,
    vocab: Vocabulary<Symbol>,
    default_vowel: &'static str,
    trailing_vowel: bool,
}

impl KatapayadiTable {
    fn from_rows(
        name: &'static str,
        rows: &[Row],
        free: &[&'static str],
        fold_case: bool,
        default_vowel: &'static str,
        trailing_vowel: bool,
    ) -> Self {
        let mapping: Vec<(&'static str, u8)> = rows
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(col, s)| s.map(|s| (s, column_digit(col))))
            })
            .collect();
        let vocab = Vocabulary::new(
            mapping
                .iter()
                .map(|&(s, d)| (s, Symbol::Digit(d)))
                .chain(free.iter().map(|&s| (s, Symbol::Free))),
            fold_case,
        );
        KatapayadiTable {
            name,
            mapping,
            free: free.to_vec(),
            vocab,
            default_vowel,
            trailing_vowel,
        }
    }

    pub fn sanskrit() -> Self {
        let vowels: Vec<&'static str> = Letter::ALL
            .iter()
            .filter(|l| l.is_vowel())
            .map(|l| l.ascii())
            .collect();
        Self::from_rows("sanskrit", &SANSKRIT_ROWS, &vowels, false, "a", true)
    }

    pub fn english() -> Self {
        Self::from_rows(
            "english",
            &ENGLISH_ROWS,
            &["a", "e", "i", "o", "u"],
            true,
            "o",
            false,
        )
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn digit_of(&self, token: &str) -> Option<u8> {
        self.mapping
            .iter()
            .find(|(s, _)| *s == token)
            .map(|&(_, d)| d)
    }

    /// Consonants standing for `digit`, in table order.
    pub fn preimage(&self, digit: u8) -> Vec<&'static str> {
        self.mapping
            .iter()
            .filter(|(_, d)| *d == digit)
            .map(|&(s, _)| s)
            .collect()
    }

    pub fn free_symbols(&self) -> &[&'static str] {
        &self.free
    }

    /// First character outside the table, for strict decoding.
    pub fn check_alphabet(&self, word: &str) -> Result<()> {
        for lex in self.vocab.tokenize(word) {
            if let LexemeKind::Other(ch) = lex.kind {
                return Err(Error::UnknownToken {
                    token: ch.to_string(),
                    position: lex.position,
                });
            }
        }
        Ok(())
    }

    pub fn default_options(&self) -> EncodeOptions {
        EncodeOptions {
            chooser: Chooser::FirstRow,
            vowel: self.default_vowel.to_string(),
            trailing_vowel: self.trailing_vowel,
        }
    }
}

/// Picks a consonant among the preimages of a digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Chooser {
    #[default]
    FirstRow,
    /// Zero-based table row, falling back to the first row when that row
    /// has no letter for the digit.
    Row(usize),
    /// The `i`-th digit takes preimage `i mod count`.
    Cycle,
}

impl Chooser {
    fn pick<'a>(self, choices: &[&'a str], index: usize) -> &'a str {
        match self {
            Chooser::FirstRow => choices[0],
            Chooser::Row(r) => choices.get(r).copied().unwrap_or(choices[0]),
            Chooser::Cycle => choices[index % choices.len()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeOptions {
    pub chooser: Chooser,
    /// Free symbol written after each consonant.
    pub vowel: String,
    /// Whether the last consonant also gets the vowel.
    pub trailing_vowel: bool,
}

pub fn katapayadi_decode(word: &str, table: &KatapayadiTable) -> Result<String> {
    let digits: String = table
        .vocab
        .tokenize(word)
        .into_iter()
        .filter_map(|lex| match lex.kind {
            LexemeKind::Token(Symbol::Digit(d)) => Some(char::from(b'0' + d)),
            _ => None,
        })
        .collect();
    if digits.is_empty() {
        return Err(Error::EmptyDecode);
    }
    Ok(digits)
}

pub fn katapayadi_encode(
    digits: &str,
    table: &KatapayadiTable,
    options: &EncodeOptions,
) -> Result<String> {
    if digits.is_empty() {
        return Err(Error::OutOfRange("no digits to encode".into()));
    }
    let vowel = table
        .free
        .iter()
        .find(|&&f| f == options.vowel.as_str())
        .copied()
        .ok_or_else(|| {
            Error::OutOfRange(format!(
                "{:?} is not a free symbol of the {} table",
                options.vowel, table.name
            ))
        })?;

    let mut pieces = Vec::new();
    let count = digits.chars().count();
    for (i, ch) in digits.chars().enumerate() {
        let digit = ch
            .to_digit(10)
            .ok_or_else(|| Error::OutOfRange(format!("{ch:?} is not a decimal digit")))?
            as u8;
        let choices = table.preimage(digit);
        if choices.is_empty() {
            return Err(Error::OutOfRange(format!(
                "digit {digit} has no letter in the {} table",
                table.name
            )));
        }
        pieces.push(Piece::Token(options.chooser.pick(&choices, i)));
        if i + 1 < count || options.trailing_vowel {
            pieces.push(Piece::Token(vowel));
        }
    }
    Ok(table.vocab.render(pieces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sanskrit_rows() {
        let t = KatapayadiTable::sanskrit();
        assert_eq!(t.preimage(1), ["k", "T", "p", "y"]);
        assert_eq!(t.preimage(5), ["G", "N", "m", "z"]);
        assert_eq!(t.preimage(8), ["j", "d", "h"]);
        assert_eq!(t.preimage(0), ["J", "n"]);
        assert_eq!(t.mapping.len(), 33);
    }

    #[test]
    fn english_rows() {
        let t = KatapayadiTable::english();
        assert_eq!(t.preimage(1), ["b", "n", "z"]);
        assert_eq!(t.preimage(0), ["m", "y"]);
        assert_eq!(t.mapping.len(), 21);
    }

    #[test]
    fn strict_alphabet() {
        let s = KatapayadiTable::sanskrit();
        assert!(s.check_alphabet("mule dana").is_ok());
        let err = s.check_alphabet("mu-le").unwrap_err();
        assert_eq!(err.position(), Some(3));
        assert!(KatapayadiTable::english().check_alphabet("FOG").is_ok());
    }

    #[test]
    fn worked_words() {
        let s = KatapayadiTable::sanskrit();
        assert_eq!(katapayadi_decode("mule dana", &s).unwrap(), "5380");
        assert_eq!(katapayadi_decode("zila hena", &s).unwrap(), "5380");
        assert_eq!(katapayadi_decode("kava sira", &s).unwrap(), "1472");
        let e = KatapayadiTable::english();
        assert_eq!(
            katapayadi_decode("fog base game bin rip bone nod", &e).unwrap(),
            "45155011421113"
        );
        assert_eq!(katapayadi_decode("Fog Base", &e).unwrap(), "4515");
    }

    #[test]
    fn vowels_only() {
        assert_eq!(
            katapayadi_decode("aeiou", &KatapayadiTable::english()),
            Err(Error::EmptyDecode)
        );
        assert_eq!(
            katapayadi_decode("aeiou", &KatapayadiTable::sanskrit()),
            Err(Error::EmptyDecode)
        );
    }

    #[test]
    fn encode_fog() {
        let e = KatapayadiTable::english();
        assert_eq!(
            katapayadi_encode("45", &e, &e.default_options()).unwrap(),
            "fog"
        );
        let s = KatapayadiTable::sanskrit();
        let zero = katapayadi_encode("0", &s, &s.default_options()).unwrap();
        assert_eq!(zero, "Ja");
        assert_eq!(katapayadi_decode(&zero, &s).unwrap(), "0");
    }

    #[test]
    fn encode_rejects_bad_input() {
        let s = KatapayadiTable::sanskrit();
        assert!(katapayadi_encode("", &s, &s.default_options()).is_err());
        assert!(katapayadi_encode("12a", &s, &s.default_options()).is_err());
        let bad_vowel = EncodeOptions {
            vowel: "k".into(),
            ..s.default_options()
        };
        assert!(katapayadi_encode("1", &s, &bad_vowel).is_err());
    }

    #[test]
    fn vocalic_l_vowel_keeps_digits() {
        // "l" followed by the vowel "R" must not collapse into the vowel "lR".
        let s = KatapayadiTable::sanskrit();
        let opts = EncodeOptions {
            chooser: Chooser::Row(3),
            vowel: "R".into(),
            trailing_vowel: true,
        };
        let word = katapayadi_encode("33", &s, &opts).unwrap();
        assert_eq!(word, "l.Rl.R");
        assert_eq!(katapayadi_decode(&word, &s).unwrap(), "33");
    }
}
