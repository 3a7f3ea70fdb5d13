// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Muladeviya: letters are swapped with a fixed partner, everything else is
//! left alone. The substitution is its own inverse.

use std::collections::HashMap;

use super::translit::{sanskrit, Letter, LexemeKind, Piece};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct ReciprocalCipher {
    pairs: Vec<(Letter, Letter)>,
    partner: HashMap<Letter, Letter>,
}

impl ReciprocalCipher {
    /// Fails when a letter is paired with itself or appears in two pairs.
    pub fn new(pairs: &[(Letter, Letter)]) -> Result<Self> {
        let mut partner = HashMap::new();
        for &(x, y) in pairs {
            if x == y {
                return Err(Error::InvalidCipher(format!("{x} is paired with itself")));
            }
            for letter in [x, y] {
                if partner.contains_key(&letter) {
                    return Err(Error::InvalidCipher(format!(
                        "{letter} appears in two pairs"
                    )));
                }
            }
            partner.insert(x, y);
            partner.insert(y, x);
        }
        Ok(ReciprocalCipher {
            pairs: pairs.to_vec(),
            partner,
        })
    }

    /// a↔k, kh↔g, gh↔ṅ, c↔ṭ, t↔p, ñ↔ṇ, n↔m, r↔ṣ, l↔s, y↔ś.
    pub fn muladeviya() -> Self {
        use Letter::*;
        Self::new(&[
            (A, Ka),
            (Kha, Ga),
            (Gha, Nga),
            (Ca, Tta),
            (Ta, Pa),
            (Nya, Nna),
            (Na, Ma),
            (Ra, Ssa),
            (La, Sa),
            (Ya, Sha),
        ])
        .expect("default pairs are disjoint")
    }

    pub fn pairs(&self) -> &[(Letter, Letter)] {
        &self.pairs
    }

    pub fn map(&self, letter: Letter) -> Letter {
        self.partner.get(&letter).copied().unwrap_or(letter)
    }

    pub fn apply(&self, letters: &[Letter]) -> Vec<Letter> {
        letters.iter().map(|&l| self.map(l)).collect()
    }

    /// Applies the cipher to transliterated text. Whitespace and characters
    /// outside the alphabet pass through unchanged, unless `strict`, in which
    /// case an unknown character is an error.
    pub fn apply_text(&self, text: &str, strict: bool) -> Result<String> {
        let vocab = sanskrit();
        let lexemes = vocab.tokenize(text);
        let mut mapped = Vec::with_capacity(lexemes.len());
        for lex in &lexemes {
            match lex.kind {
                LexemeKind::Token(l) => mapped.push(Piece::Token(self.map(l).ascii())),
                LexemeKind::Boundary => {}
                LexemeKind::Space => {
                    let ch = text[lex.offset..].chars().next().expect("space char");
                    mapped.push(Piece::Verbatim(ch));
                }
                LexemeKind::Other(ch) => {
                    if strict {
                        return Err(Error::UnknownToken {
                            token: ch.to_string(),
                            position: lex.position,
                        });
                    }
                    mapped.push(Piece::Verbatim(ch));
                }
            }
        }
        Ok(vocab.render(mapped))
    }
}

impl Default for ReciprocalCipher {
    fn default() -> Self {
        Self::muladeviya()
    }
}

pub fn mula_apply(text: &str, cipher: &ReciprocalCipher, strict: bool) -> Result<String> {
    cipher.apply_text(text, strict)
}
