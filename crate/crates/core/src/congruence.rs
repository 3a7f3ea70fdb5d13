// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Modular inverses and simultaneous congruences on top of the pulverizer.

use crate::arith::{add, check_bound, gcd, mul, MAGNITUDE_BOUND};
use crate::kuttaka::{solve, Equation};
use crate::{Error, Result};

/// `x ≡ residue (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Congruence {
    residue: u64,
    modulus: u64,
}

impl Congruence {
    pub fn new(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::OutOfRange("modulus must be positive".into()));
        }
        check_bound("modulus", modulus.into())?;
        if residue >= modulus {
            return Err(Error::OutOfRange(format!(
                "residue {residue} must be less than modulus {modulus}"
            )));
        }
        Ok(Congruence { residue, modulus })
    }

    /// Reduces `residue` into range first.
    pub fn reduced(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::OutOfRange("modulus must be positive".into()));
        }
        Congruence::new(residue % modulus, modulus)
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn holds_for(&self, x: u64) -> bool {
        x % self.modulus == self.residue
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub value: u64,
    pub combined_modulus: u64,
}

/// Inverse of `a` modulo `m` from `a·x + 1 = m·y`, as `−x mod m`.
pub fn mod_inverse(a: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::OutOfRange(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    check_bound("a", a.into())?;
    check_bound("m", m.into())?;
    let g = gcd(a.into(), m.into());
    if g != 1 {
        return Err(Error::NotCoprime {
            a,
            m,
            gcd: g as u64,
        });
    }
    let eq = Equation::new(a as i64, 1, m as i64)?;
    let sol = solve(&eq)?;
    Ok((-sol.x_min).rem_euclid(m.into()) as u64)
}

/// Both inverses from one equation `a·x + 1 = b·y`: `a⁻¹ = −x mod b` and
/// `b⁻¹ = y mod a`. `a` and `b` must be coprime and at least 2.
pub fn inverse_pair(a: u64, b: u64) -> Result<(u64, u64)> {
    for (name, v) in [("a", a), ("b", b)] {
        if v < 2 {
            return Err(Error::OutOfRange(format!(
                "{name} must be at least 2, got {v}"
            )));
        }
    }
    let g = gcd(a.into(), b.into());
    if g != 1 {
        return Err(Error::NotCoprime {
            a,
            m: b,
            gcd: g as u64,
        });
    }
    let sol = solve(&Equation::new(a as i64, 1, b as i64)?)?;
    let a_inv = (-sol.x_min).rem_euclid(b.into()) as u64;
    let b_inv = sol.y_min.rem_euclid(a.into()) as u64;
    Ok((a_inv, b_inv))
}

/// Least nonnegative `x` satisfying both congruences.
///
/// The congruence with the greater remainder `R` (ties: larger modulus)
/// gives `x = D·u + R`; the other gives `x = d·w + r`. So
/// `D·u + (R − r) = d·w`, and the pulverizer's minimal `u` is already the
/// remainder of division by `d / gcd`. Then `x = u·D + R`.
pub fn solve_pair(first: Congruence, second: Congruence) -> Result<CongruenceSolution> {
    combine(first, second).map_err(|e| match e {
        Error::NoSolution { .. } => inconsistent(0, first, 1, second),
        other => other,
    })
}

fn combine(first: Congruence, second: Congruence) -> Result<CongruenceSolution> {
    let (greater, smaller) = if (first.residue, first.modulus) >= (second.residue, second.modulus) {
        (first, second)
    } else {
        (second, first)
    };
    let (big_r, big_d) = (i128::from(greater.residue), i128::from(greater.modulus));
    let (small_r, small_d) = (i128::from(smaller.residue), i128::from(smaller.modulus));

    let g = gcd(big_d, small_d);
    let lcm = mul(big_d / g, small_d)?;
    if lcm > MAGNITUDE_BOUND {
        return Err(Error::Overflow);
    }

    let eq = Equation::new(big_d as i64, (big_r - small_r) as i64, small_d as i64)?;
    let u = solve(&eq)?.x_min;
    let value = add(mul(u, big_d)?, big_r)?;
    debug_assert!(value < lcm);
    Ok(CongruenceSolution {
        value: value as u64,
        combined_modulus: lcm as u64,
    })
}

fn inconsistent(i: usize, ci: Congruence, j: usize, cj: Congruence) -> Error {
    Error::InconsistentSystem {
        first: i,
        second: j,
        first_residue: ci.residue,
        first_modulus: ci.modulus,
        second_residue: cj.residue,
        second_modulus: cj.modulus,
        gcd: gcd(ci.modulus.into(), cj.modulus.into()) as u64,
    }
}

/// Left fold of [`solve_pair`]. Moduli need not be pairwise coprime.
pub fn solve_system(congruences: &[Congruence]) -> Result<CongruenceSolution> {
    let (head, rest) = congruences
        .split_first()
        .ok_or_else(|| Error::OutOfRange("empty congruence system".into()))?;
    let mut acc = CongruenceSolution {
        value: head.residue,
        combined_modulus: head.modulus,
    };
    for (offset, next) in rest.iter().enumerate() {
        let index = offset + 1;
        let so_far = Congruence::new(acc.value, acc.combined_modulus)?;
        acc = combine(so_far, *next).map_err(|e| match e {
            // Pairwise consistency is equivalent to joint consistency, so some
            // earlier congruence conflicts with this one on its own.
            Error::NoSolution { .. } => {
                let (j, cj) = congruences[..index]
                    .iter()
                    .enumerate()
                    .find(|(_, cj)| !pair_consistent(**cj, *next))
                    .expect("a conflicting earlier congruence exists");
                inconsistent(j, *cj, index, *next)
            }
            other => other,
        })?;
    }
    Ok(acc)
}

fn pair_consistent(a: Congruence, b: Congruence) -> bool {
    let g = gcd(a.modulus.into(), b.modulus.into()) as u64;
    a.residue % g == b.residue % g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cg(r: u64, m: u64) -> Congruence {
        Congruence::new(r, m).unwrap()
    }

    #[test]
    fn worked_inverses() {
        assert_eq!(mod_inverse(137, 60).unwrap(), 53);
        assert_eq!(mod_inverse(60, 137).unwrap(), 16);
        assert_eq!(inverse_pair(137, 60).unwrap(), (53, 16));
    }

    #[test]
    fn inverse_of_one() {
        for m in 2..50 {
            assert_eq!(mod_inverse(1, m).unwrap(), 1);
        }
    }

    #[test]
    fn inverse_errors() {
        assert_eq!(
            mod_inverse(6, 4),
            Err(Error::NotCoprime { a: 6, m: 4, gcd: 2 })
        );
        assert!(matches!(mod_inverse(3, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(
            mod_inverse(0, 7),
            Err(Error::NotCoprime { gcd: 7, .. })
        ));
    }

    #[test]
    fn worked_pairs() {
        let s = solve_pair(cg(0, 60), cg(10, 137)).unwrap();
        assert_eq!(
            s,
            CongruenceSolution {
                value: 1380,
                combined_modulus: 8220
            }
        );
        assert_eq!(solve_pair(cg(5, 60), cg(15, 137)).unwrap().value, 1385);
        assert_eq!(solve_pair(cg(0, 12), cg(0, 18)).unwrap().value, 0);
    }

    #[test]
    fn equal_residues_tie() {
        let s = solve_pair(cg(3, 8), cg(3, 12)).unwrap();
        assert_eq!(
            s,
            CongruenceSolution {
                value: 3,
                combined_modulus: 24
            }
        );
    }

    #[test]
    fn inconsistent_pair() {
        let err = solve_pair(cg(0, 4), cg(1, 6)).unwrap_err();
        assert!(matches!(
            err,
            Error::InconsistentSystem {
                first: 0,
                second: 1,
                gcd: 2,
                ..
            }
        ));
    }

    #[test]
    fn system_names_first_conflict() {
        let cs = [cg(1, 3), cg(2, 5), cg(0, 4), cg(1, 6)];
        let err = solve_system(&cs).unwrap_err();
        // 1 mod 6 clashes with 0 mod 4 (and is fine with 1 mod 3).
        assert!(matches!(
            err,
            Error::InconsistentSystem {
                first: 2,
                second: 3,
                ..
            }
        ));
    }

    #[test]
    fn system_basics() {
        assert_eq!(solve_system(&[cg(0, 60), cg(10, 137)]).unwrap().value, 1380);
        assert_eq!(solve_system(&[cg(4, 9)]).unwrap().value, 4);
        assert!(solve_system(&[]).is_err());
        let s = solve_system(&[cg(2, 3), cg(3, 5), cg(2, 7)]).unwrap();
        assert_eq!((s.value, s.combined_modulus), (23, 105));
    }

    #[test]
    fn lcm_overflow() {
        let a = cg(0, 999_999_999_989);
        let b = cg(0, 999_999_999_959);
        assert_eq!(solve_pair(a, b), Err(Error::Overflow));
    }

    #[test]
    fn congruence_validation() {
        assert!(Congruence::new(5, 5).is_err());
        assert!(Congruence::new(0, 0).is_err());
        assert_eq!(Congruence::reduced(17, 5).unwrap().residue(), 2);
    }
}
