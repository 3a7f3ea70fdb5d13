// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Substitution codes over an ASCII transliteration of Sanskrit.
//! See `docs/transliteration.md` for the token table.

pub mod aryabhata;
pub mod katapayadi;
pub mod mula;
pub mod translit;

pub use aryabhata::{aryabhata_decode, aryabhata_encode, Order, Syllable};
pub use katapayadi::{
    katapayadi_decode, katapayadi_encode, Chooser, EncodeOptions, KatapayadiTable,
};
pub use mula::{mula_apply, ReciprocalCipher};
pub use translit::{Letter, LetterClass};
