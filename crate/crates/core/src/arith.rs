// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Checked integer helpers shared by the solvers.

use crate::{Error, Result};

/// Largest magnitude accepted for any input coefficient, residue or modulus.
pub const MAGNITUDE_BOUND: i128 = 1_000_000_000_000_000_000;

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn check_bound(name: &str, v: i128) -> Result<()> {
    if v.abs() > MAGNITUDE_BOUND {
        return Err(Error::OutOfRange(format!(
            "{name} = {v} exceeds the magnitude bound 10^18"
        )));
    }
    Ok(())
}

pub fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `ceil(n / d)` for `d > 0`.
pub(crate) fn div_ceil(n: i128, d: i128) -> i128 {
    debug_assert!(d > 0);
    let q = n.div_euclid(d);
    if q * d == n {
        q
    } else {
        q + 1
    }
}
