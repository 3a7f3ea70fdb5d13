// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! ASCII transliteration of the Sanskrit letters used by the codes, and a
//! longest-match tokenizer over any fixed token set.
//!
//! Two adjacent tokens can spell a different token when concatenated
//! (`k`+`h` is `kh`, `a`+`i` is `ai`, `l`+`R` is `lR`). Renderers write a
//! [`BOUNDARY`] mark between such pairs and tokenizers consume it as a
//! zero-width separator.

use std::fmt;

pub const BOUNDARY: char = '.';

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterClass {
    /// Classed consonant, value 1..=25.
    Varga(u8),
    /// Unclassed consonant, value 30..=100.
    Avarga(u8),
    /// Vowel standing for the place `10^(2·index)`.
    Vowel(u8),
}

macro_rules! letters {
    ($($variant:ident => $ascii:literal, $iast:literal, $class:expr;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Letter {
            $($variant,)*
        }

        impl Letter {
            pub const ALL: &'static [Letter] = &[$(Letter::$variant,)*];

            pub fn ascii(self) -> &'static str {
                match self {
                    $(Letter::$variant => $ascii,)*
                }
            }

            pub fn iast(self) -> &'static str {
                match self {
                    $(Letter::$variant => $iast,)*
                }
            }

            pub fn class(self) -> LetterClass {
                use LetterClass::*;
                match self {
                    $(Letter::$variant => $class,)*
                }
            }
        }
    };
}

letters! {
    Ka => "k", "k", Varga(1);
    Kha => "kh", "kh", Varga(2);
    Ga => "g", "g", Varga(3);
    Gha => "gh", "gh", Varga(4);
    Nga => "G", "ṅ", Varga(5);
    Ca => "c", "c", Varga(6);
    Cha => "ch", "ch", Varga(7);
    Ja => "j", "j", Varga(8);
    Jha => "jh", "jh", Varga(9);
    Nya => "J", "ñ", Varga(10);
    Tta => "T", "ṭ", Varga(11);
    Ttha => "Th", "ṭh", Varga(12);
    Dda => "D", "ḍ", Varga(13);
    Ddha => "Dh", "ḍh", Varga(14);
    Nna => "N", "ṇ", Varga(15);
    Ta => "t", "t", Varga(16);
    Tha => "th", "th", Varga(17);
    Da => "d", "d", Varga(18);
    Dha => "dh", "dh", Varga(19);
    Na => "n", "n", Varga(20);
    Pa => "p", "p", Varga(21);
    Pha => "ph", "ph", Varga(22);
    Ba => "b", "b", Varga(23);
    Bha => "bh", "bh", Varga(24);
    Ma => "m", "m", Varga(25);
    Ya => "y", "y", Avarga(30);
    Ra => "r", "r", Avarga(40);
    La => "l", "l", Avarga(50);
    Va => "v", "v", Avarga(60);
    Sha => "z", "ś", Avarga(70);
    Ssa => "S", "ṣ", Avarga(80);
    Sa => "s", "s", Avarga(90);
    Ha => "h", "h", Avarga(100);
    A => "a", "a", Vowel(0);
    I => "i", "i", Vowel(1);
    U => "u", "u", Vowel(2);
    VocalicR => "R", "ṛ", Vowel(3);
    VocalicL => "lR", "ḷ", Vowel(4);
    E => "e", "e", Vowel(5);
    Ai => "ai", "ai", Vowel(6);
    O => "o", "o", Vowel(7);
    Au => "au", "au", Vowel(8);
}

impl Letter {
    pub fn is_vowel(self) -> bool {
        matches!(self.class(), LetterClass::Vowel(_))
    }

    pub fn consonant_value(self) -> Option<u64> {
        match self.class() {
            LetterClass::Varga(v) | LetterClass::Avarga(v) => Some(v.into()),
            LetterClass::Vowel(_) => None,
        }
    }

    /// Place multiplier `10^(2·index)` of a vowel.
    pub fn place(self) -> Option<u64> {
        match self.class() {
            LetterClass::Vowel(i) => Some(100u64.pow(i.into())),
            _ => None,
        }
    }

    pub fn varga(value: u8) -> Option<Letter> {
        Letter::ALL
            .iter()
            .copied()
            .find(|l| l.class() == LetterClass::Varga(value))
    }

    pub fn avarga(value: u8) -> Option<Letter> {
        Letter::ALL
            .iter()
            .copied()
            .find(|l| l.class() == LetterClass::Avarga(value))
    }

    /// Vowel for the place `10^(2·index)`, `index` in `0..9`.
    pub fn vowel(index: u8) -> Option<Letter> {
        Letter::ALL
            .iter()
            .copied()
            .find(|l| l.class() == LetterClass::Vowel(index))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexemeKind<T> {
    Token(T),
    Space,
    Boundary,
    Other(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lexeme<T> {
    pub kind: LexemeKind<T>,
    /// Byte offset into the (case-folded, when enabled) input.
    pub offset: usize,
    /// 1-based index among token and unknown lexemes; 0 for separators.
    pub position: usize,
}

/// A fixed token set tokenized by longest match.
#[derive(Debug, Clone)]
pub struct Vocabulary<T> {
    // Longest spellings first.
    entries: Vec<(String, T)>,
    fold_case: bool,
}

impl<T: Copy + PartialEq> Vocabulary<T> {
    pub fn new<S: Into<String>>(
        entries: impl IntoIterator<Item = (S, T)>,
        fold_case: bool,
    ) -> Self {
        let mut entries: Vec<(String, T)> = entries
            .into_iter()
            .map(|(s, t)| {
                let s = s.into();
                (if fold_case { s.to_lowercase() } else { s }, t)
            })
            .collect();
        entries.sort_by_key(|e| std::cmp::Reverse(e.0.len()));
        Vocabulary { entries, fold_case }
    }

    pub fn spelling(&self, token: T) -> Option<&str> {
        self.entries
            .iter()
            .find(|(_, t)| *t == token)
            .map(|(s, _)| s.as_str())
    }

    pub fn tokenize(&self, text: &str) -> Vec<Lexeme<T>> {
        let owned;
        let text = if self.fold_case {
            owned = text.to_lowercase();
            owned.as_str()
        } else {
            text
        };
        let mut out = Vec::new();
        let mut position = 0;
        let mut offset = 0;
        while offset < text.len() {
            let rest = &text[offset..];
            let ch = rest.chars().next().expect("offset is on a char boundary");
            let (kind, len) = if ch.is_whitespace() {
                (LexemeKind::Space, ch.len_utf8())
            } else if ch == BOUNDARY {
                (LexemeKind::Boundary, 1)
            } else if let Some((s, t)) = self
                .entries
                .iter()
                .find(|(s, _)| rest.starts_with(s.as_str()))
            {
                (LexemeKind::Token(*t), s.len())
            } else {
                (LexemeKind::Other(ch), ch.len_utf8())
            };
            let pos = match kind {
                LexemeKind::Token(_) | LexemeKind::Other(_) => {
                    position += 1;
                    position
                }
                _ => 0,
            };
            out.push(Lexeme {
                kind,
                offset,
                position: pos,
            });
            offset += len;
        }
        out
    }

    fn splits_cleanly(&self, left: &str, right: &str) -> bool {
        let joined = format!("{left}{right}");
        let lexemes = self.tokenize(&joined);
        lexemes.len() == 2 && lexemes[0].offset == 0 && lexemes[1].offset == left.len()
    }

    /// Concatenates spellings, inserting [`BOUNDARY`] wherever two adjacent
    /// tokens would otherwise re-tokenize differently. `None` entries are
    /// written verbatim and break adjacency.
    pub fn render<'a>(&self, pieces: impl IntoIterator<Item = Piece<'a>>) -> String {
        let mut out = String::new();
        let mut prev: Option<&str> = None;
        for piece in pieces {
            match piece {
                Piece::Token(s) => {
                    if let Some(p) = prev {
                        if !self.splits_cleanly(p, s) {
                            out.push(BOUNDARY);
                        }
                    }
                    out.push_str(s);
                    prev = Some(s);
                }
                Piece::Verbatim(c) => {
                    out.push(c);
                    prev = None;
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece<'a> {
    Token(&'a str),
    Verbatim(char),
}

pub fn sanskrit() -> Vocabulary<Letter> {
    Vocabulary::new(Letter::ALL.iter().map(|l| (l.ascii(), *l)), false)
}

/// IAST rendering of a letter sequence.
pub fn to_iast(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.iast()).collect()
}
