// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Aryabhata's kuttaka ("pulverizer") for the linear indeterminate equation
//! `a·x + c = b·y`, its use for modular inverses and simultaneous
//! congruences, and three classical substitution codes: the Aryabhata
//! alphabetic numeral code, Katapayadi (Sanskrit and English tables) and the
//! Muladeviya reciprocal cipher.
//!
//! Everything here is a pure function over immutable data.

pub mod arith;
pub mod codecs;
pub mod congruence;
mod error;
pub mod kuttaka;

pub use congruence::{mod_inverse, solve_pair, solve_system, Congruence, CongruenceSolution};
pub use error::{Error, ParseErrorKind, Result};
pub use kuttaka::{
    choose_mati, extended_euclid, mutual_division, reduce_valli, solve, solve_traced, Equation,
    Parity, QuotientChain, Solution, Trace, Valli,
};
