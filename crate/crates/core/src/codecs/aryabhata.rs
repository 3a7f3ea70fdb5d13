// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Aryabhata's alphabetic numeral code.
//!
//! A syllable is one or more consonants followed by a vowel. Its value is the
//! sum of the consonant values times the vowel's place, and a text is worth
//! the sum of its syllables, in any order. Encoding splits a number into
//! two-digit groups from the units upward; group `k` sits under the vowel of
//! place `10^(2k)`.

use super::translit::{sanskrit, Letter, LexemeKind, Piece};
use crate::{Error, ParseErrorKind, Result};

/// Exclusive upper bound of encodable numbers.
pub const ENCODE_LIMIT: u64 = 1_000_000_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    consonants: Vec<Letter>,
    vowel: Letter,
}

impl Syllable {
    pub fn new(consonants: Vec<Letter>, vowel: Letter) -> Result<Self> {
        if consonants.is_empty() {
            return Err(Error::OutOfRange("a syllable needs a consonant".into()));
        }
        if let Some(c) = consonants.iter().find(|c| c.is_vowel()) {
            return Err(Error::OutOfRange(format!("{c} is not a consonant")));
        }
        if !vowel.is_vowel() {
            return Err(Error::OutOfRange(format!("{vowel} is not a vowel")));
        }
        Ok(Syllable { consonants, vowel })
    }

    pub fn consonants(&self) -> &[Letter] {
        &self.consonants
    }

    pub fn vowel(&self) -> Letter {
        self.vowel
    }

    pub fn value(&self) -> Result<u64> {
        let sum: u64 = self
            .consonants
            .iter()
            .filter_map(|c| c.consonant_value())
            .sum();
        let place = self.vowel.place().expect("syllable vowel has a place");
        sum.checked_mul(place).ok_or(Error::Overflow)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// Highest place first, as in `yijivaka`.
    #[default]
    Descending,
    Ascending,
}

pub fn parse_syllables(text: &str) -> Result<Vec<Syllable>> {
    let parse_err = |kind, position, offset| Error::Parse {
        kind,
        position,
        offset,
    };
    let mut syllables = Vec::new();
    let mut pending: Vec<Letter> = Vec::new();
    let mut last = (0, 0);
    for lex in sanskrit().tokenize(text) {
        match lex.kind {
            LexemeKind::Token(letter) if letter.is_vowel() => {
                if pending.is_empty() {
                    return Err(parse_err(
                        ParseErrorKind::VowelWithoutConsonant(letter.ascii().into()),
                        lex.position,
                        lex.offset,
                    ));
                }
                syllables.push(Syllable {
                    consonants: std::mem::take(&mut pending),
                    vowel: letter,
                });
            }
            LexemeKind::Token(letter) => pending.push(letter),
            LexemeKind::Space if !pending.is_empty() => {
                return Err(parse_err(
                    ParseErrorKind::SpaceInsideSyllable,
                    last.0 + 1,
                    lex.offset,
                ));
            }
            LexemeKind::Space | LexemeKind::Boundary => {}
            LexemeKind::Other(ch) => {
                return Err(parse_err(
                    ParseErrorKind::UnknownToken(ch.to_string()),
                    lex.position,
                    lex.offset,
                ));
            }
        }
        if lex.position > 0 {
            last = (lex.position, lex.offset);
        }
    }
    if !pending.is_empty() {
        return Err(parse_err(
            ParseErrorKind::TrailingConsonants,
            last.0,
            last.1,
        ));
    }
    if syllables.is_empty() {
        return Err(parse_err(ParseErrorKind::Empty, 0, 0));
    }
    Ok(syllables)
}

pub fn decode_syllables(syllables: &[Syllable]) -> Result<u64> {
    syllables.iter().try_fold(0u64, |acc, s| {
        acc.checked_add(s.value()?).ok_or(Error::Overflow)
    })
}

pub fn aryabhata_decode(text: &str) -> Result<u64> {
    decode_syllables(&parse_syllables(text)?)
}

/// Canonical syllables for one two-digit group under `vowel`.
fn group_syllables(d: u8, vowel: Letter) -> Vec<Syllable> {
    let one = |c: Letter| Syllable {
        consonants: vec![c],
        vowel,
    };
    match d {
        0 => vec![],
        1..=25 => vec![one(Letter::varga(d).expect("varga value"))],
        26..=29 => vec![Syllable {
            consonants: vec![Letter::Ma, Letter::varga(d - 25).expect("varga value")],
            vowel,
        }],
        _ => {
            let mut out = vec![one(Letter::avarga(d / 10 * 10).expect("avarga value"))];
            if !d.is_multiple_of(10) {
                out.push(one(Letter::varga(d % 10).expect("varga value")));
            }
            out
        }
    }
}

/// Canonical syllables of `n`, highest place first.
pub fn encode_syllables(n: u64) -> Result<Vec<Syllable>> {
    if n == 0 || n >= ENCODE_LIMIT {
        return Err(Error::OutOfRange(format!(
            "{n} is outside the encodable range 1..10^18"
        )));
    }
    let mut groups = Vec::new();
    let mut rest = n;
    while rest > 0 {
        groups.push((rest % 100) as u8);
        rest /= 100;
    }
    Ok(groups
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(k, &d)| group_syllables(d, Letter::vowel(k as u8).expect("place < 10^18")))
        .collect())
}

pub fn render_syllables(syllables: &[Syllable]) -> String {
    let letters: Vec<Letter> = syllables
        .iter()
        .flat_map(|s| s.consonants.iter().copied().chain([s.vowel]))
        .collect();
    sanskrit().render(letters.iter().map(|l| Piece::Token(l.ascii())))
}

pub fn aryabhata_encode(n: u64, order: Order) -> Result<String> {
    let mut syllables = encode_syllables(n)?;
    if order == Order::Ascending {
        syllables.reverse();
    }
    Ok(render_syllables(&syllables))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_one() {
        for text in ["yijivaka", "kavajiyi", "yivakaji"] {
            assert_eq!(aryabhata_decode(text).unwrap(), 3861, "{text}");
        }
        assert_eq!(
            aryabhata_encode(3861, Order::Descending).unwrap(),
            "yijivaka"
        );
        assert_eq!(
            aryabhata_encode(3861, Order::Ascending).unwrap(),
            "kavajiyi"
        );
    }

    #[test]
    fn small_values() {
        assert_eq!(aryabhata_decode("ka").unwrap(), 1);
        assert_eq!(aryabhata_encode(25, Order::Descending).unwrap(), "ma");
        let s26 = aryabhata_encode(26, Order::Descending).unwrap();
        assert_eq!(s26, "mka");
        assert_eq!(parse_syllables(&s26).unwrap().len(), 1);
        assert_eq!(aryabhata_decode(&s26).unwrap(), 26);
        assert_eq!(aryabhata_decode("ha").unwrap(), 100);
    }

    #[test]
    fn earth_rotations() {
        let n = 1_582_237_500;
        let asc = aryabhata_encode(n, Order::Ascending).unwrap();
        assert_eq!(asc, "GizibukhRSRNlR");
        assert_eq!(aryabhata_decode(&asc).unwrap(), n);
        let desc = aryabhata_encode(n, Order::Descending).unwrap();
        assert_eq!(aryabhata_decode(&desc).unwrap(), n);
    }

    #[test]
    fn avarga_under_vocalic_r_needs_boundary() {
        // 50 at place 10^6: l + R, which would otherwise read as the vowel lR.
        let n = 50_000_000;
        let text = aryabhata_encode(n, Order::Descending).unwrap();
        assert_eq!(text, "l.R");
        assert_eq!(aryabhata_decode(&text).unwrap(), n);
    }

    #[test]
    fn top_place() {
        let n = ENCODE_LIMIT - 1;
        assert_eq!(
            aryabhata_decode(&aryabhata_encode(n, Order::Descending).unwrap()).unwrap(),
            n
        );
        assert!(aryabhata_encode(ENCODE_LIMIT, Order::Descending).is_err());
        assert!(aryabhata_encode(0, Order::Descending).is_err());
    }

    #[test]
    fn parse_errors() {
        let kind = |text: &str| match aryabhata_decode(text) {
            Err(Error::Parse { kind, position, .. }) => (kind, position),
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        };
        assert_eq!(kind("kaxa"), (ParseErrorKind::UnknownToken("x".into()), 3));
        assert_eq!(
            kind("ika"),
            (ParseErrorKind::VowelWithoutConsonant("i".into()), 1)
        );
        assert_eq!(kind("kak"), (ParseErrorKind::TrailingConsonants, 3));
        assert_eq!(kind("k a"), (ParseErrorKind::SpaceInsideSyllable, 2));
        assert_eq!(kind(""), (ParseErrorKind::Empty, 0));
    }

    #[test]
    fn diphthong_is_one_vowel() {
        assert_eq!(aryabhata_decode("kai").unwrap(), 10u64.pow(12));
    }

    #[test]
    fn spaces_between_syllables() {
        assert_eq!(aryabhata_decode("yi ji va ka").unwrap(), 3861);
    }
}
