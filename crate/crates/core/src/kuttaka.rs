// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! The pulverizer for `a·x + c = b·y`.
//!
//! The larger coefficient is divided by the smaller, then remainder and
//! divisor are divided by one another. Every quotient whose remainder is
//! nonzero is kept, so the last kept remainder is `gcd(a, b)`. An optional
//! number (the *mati*) is chosen so that
//! `r_last · mati ∓ c` divides exactly by the last kept divisor, and the
//! chain `[q1, …, qn, mati, quotient]` (the *valli*) is folded from the bottom
//! up into the pair `(y, x)`.
//!
//! Each mutual division maps `A·X + C = B·Y` onto `B·Y' − C = R·X` with
//! `Y = q·X + Y'`, so after `n` divisions the constant carries the sign
//! `(−1)^n`. That is the whole reason the mati sign depends on the parity of
//! the kept quotients.

use crate::arith::{add, check_bound, div_ceil, gcd, mul, sub};
use crate::{Error, Result};

/// The equation `a·x + c = b·y` with `a, b ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Equation {
    pub a: i64,
    pub c: i64,
    pub b: i64,
}

impl Equation {
    /// Arguments in the order they are written: `a·x + c = b·y`.
    pub fn new(a: i64, c: i64, b: i64) -> Result<Self> {
        let eq = Equation { a, c, b };
        eq.validate()?;
        Ok(eq)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a < 1 || self.b < 1 {
            return Err(Error::OutOfRange(format!(
                "coefficients must be positive (a = {}, b = {})",
                self.a, self.b
            )));
        }
        check_bound("a", self.a.into())?;
        check_bound("b", self.b.into())?;
        check_bound("c", self.c.into())
    }
}

/// Quotients and remainders of full mutual division, continued to remainder 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientChain {
    pub quotients: Vec<i128>,
    pub remainders: Vec<i128>,
    pub gcd: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Sign applied to `c` in the mati condition.
    fn sign(self) -> i128 {
        match self {
            Parity::Even => -1,
            Parity::Odd => 1,
        }
    }
}

/// The vertical chain folded into the solution pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valli(Vec<i128>);

impl Valli {
    pub fn new(entries: Vec<i128>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::OutOfRange(format!(
                "valli needs at least two entries, got {}",
                entries.len()
            )));
        }
        if let Some(v) = entries.iter().find(|&&v| v < 0) {
            return Err(Error::OutOfRange(format!(
                "valli entries must be nonnegative, got {v}"
            )));
        }
        Ok(Valli(entries))
    }

    pub fn entries(&self) -> &[i128] {
        &self.0
    }

    /// Every intermediate column of the fold, starting with the chain itself
    /// and ending with the final two entries.
    pub fn columns(&self) -> Result<Vec<Vec<i128>>> {
        let mut column = self.0.clone();
        let mut columns = vec![column.clone()];
        while column.len() > 2 {
            let k = column.len();
            let bottom = column[k - 1];
            let penultimate = column[k - 2];
            let above = column[k - 3];
            column[k - 3] = add(mul(above, penultimate)?, bottom)?;
            column.pop();
            columns.push(column.clone());
        }
        Ok(columns)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solution {
    pub x_raw: i128,
    pub y_raw: i128,
    pub x_min: i128,
    /// Paired with `x_min`. May be negative when `c` is.
    pub y_min: i128,
    pub period_x: i128,
    pub period_y: i128,
}

/// How the array was built, for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    /// Chain of `max(a, b) ÷ min(a, b)`.
    pub chain: QuotientChain,
    pub retained: usize,
    /// True when `a < b`: the top of the folded valli is then `x`, not `y`.
    pub swapped: bool,
    /// `mati` satisfies `r_last·mati + offset = d_prev·mati_quotient`.
    pub r_last: i128,
    pub d_prev: i128,
    pub offset: i128,
    pub mati: i128,
    pub mati_quotient: i128,
    pub columns: Vec<Vec<i128>>,
}

pub fn mutual_division(a: i128, b: i128) -> Result<QuotientChain> {
    if a < 1 || b < 1 {
        return Err(Error::OutOfRange(format!(
            "mutual division needs positive operands (got {a}, {b})"
        )));
    }
    let (mut dividend, mut divisor) = (a, b);
    let mut quotients = Vec::new();
    let mut remainders = Vec::new();
    loop {
        let q = dividend / divisor;
        let r = dividend % divisor;
        quotients.push(q);
        remainders.push(r);
        if r == 0 {
            break;
        }
        (dividend, divisor) = (divisor, r);
    }
    Ok(QuotientChain {
        quotients,
        remainders,
        gcd: divisor,
    })
}

/// Smallest `mati ≥ 0` for which `r_last·mati + s·c` is a positive exact
/// multiple of `d_prev` (`s = −1` for an even count of kept quotients,
/// `+1` for odd). Returns the mati with that multiple's quotient. When
/// `c = 0` the answer is `(0, 0)`.
pub fn choose_mati(r_last: i128, d_prev: i128, c: i128, parity: Parity) -> Result<(i128, i128)> {
    if r_last < 1 || d_prev < 1 {
        return Err(Error::OutOfRange(format!(
            "remainder and divisor must be positive (got {r_last}, {d_prev})"
        )));
    }
    for (name, v) in [("r_last", r_last), ("d_prev", d_prev), ("c", c)] {
        check_bound(name, v)?;
    }
    if c == 0 {
        return Ok((0, 0));
    }
    let target = parity.sign() * c;
    if d_prev % r_last == 0 {
        return mati_dividing(r_last, d_prev, target);
    }

    // General case: r·mati + target = d·q is itself an equation of the solved
    // form, and solving it only ever reaches the dividing case above.
    let g = gcd(r_last, d_prev);
    if target % g != 0 {
        return Err(Error::NoSolution { gcd: g, c });
    }
    let eq = Equation {
        a: r_last as i64,
        c: target as i64,
        b: d_prev as i64,
    };
    let sol = solve(&eq)?;
    let step_q = r_last / g;
    let steps = if sol.y_min >= 1 {
        0
    } else {
        div_ceil(1 - sol.y_min, step_q)
    };
    Ok((
        add(sol.x_min, mul(steps, d_prev / g)?)?,
        add(sol.y_min, mul(steps, step_q)?)?,
    ))
}

/// `r` divides `d`, so with `d = r·m` the condition reduces to
/// `mati + target/r = m·q`.
fn mati_dividing(r: i128, d: i128, target: i128) -> Result<(i128, i128)> {
    if target % r != 0 {
        return Err(Error::NoSolution {
            gcd: r,
            c: target.abs(),
        });
    }
    let k = target / r;
    let m = d / r;
    let q = div_ceil(k, m).max(1);
    Ok((sub(mul(q, m)?, k)?, q))
}

/// Folds the valli bottom-up; returns `(top, second)`.
pub fn reduce_valli(valli: &Valli) -> Result<(i128, i128)> {
    let columns = valli.columns()?;
    let last = columns.last().expect("fold yields at least one column");
    Ok((last[0], last[1]))
}

pub fn solve(eq: &Equation) -> Result<Solution> {
    solve_traced(eq).map(|(sol, _)| sol)
}

/// Like [`solve`], also returning how the array was built. The trace is
/// `None` for `c = 0`, which is answered directly.
pub fn solve_traced(eq: &Equation) -> Result<(Solution, Option<Trace>)> {
    eq.validate()?;
    let (a, b, c) = (i128::from(eq.a), i128::from(eq.b), i128::from(eq.c));
    let g = gcd(a, b);
    let (period_x, period_y) = (b / g, a / g);

    if c == 0 {
        let zero = Solution {
            x_raw: 0,
            y_raw: 0,
            x_min: 0,
            y_min: 0,
            period_x,
            period_y,
        };
        return Ok((zero, None));
    }
    if c % g != 0 {
        return Err(Error::NoSolution { gcd: g, c });
    }

    // a < b: rewrite as b·y + (−c) = a·x so the larger coefficient leads.
    let swapped = a < b;
    let (big, small, constant) = if swapped { (b, a, -c) } else { (a, b, c) };

    let chain = mutual_division(big, small)?;
    let retained = chain.quotients.len() - 1;
    // r_{-1} = big, r_0 = small, r_i = remainders[i - 1].
    let remainder_at = |i: usize| -> i128 {
        match i {
            0 => small,
            i => chain.remainders[i - 1],
        }
    };
    let r_last = remainder_at(retained);
    let d_prev = if retained == 0 {
        big
    } else {
        remainder_at(retained - 1)
    };
    let offset = Parity::of(retained).sign() * constant;
    let (mati, mati_quotient) = mati_dividing(r_last, d_prev, offset)?;

    let mut entries = chain.quotients[..retained].to_vec();
    entries.push(mati);
    entries.push(mati_quotient);
    let valli = Valli::new(entries)?;
    let columns = valli.columns()?;
    let (top, second) = {
        let last = columns.last().expect("fold yields at least one column");
        (last[0], last[1])
    };
    let (x_raw, y_raw) = if swapped {
        (top, second)
    } else {
        (second, top)
    };
    debug_assert_eq!(a * x_raw + c, b * y_raw);

    let x_min = x_raw.rem_euclid(period_x);
    let y_min = add(mul(a, x_min)?, c)? / b;

    let solution = Solution {
        x_raw,
        y_raw,
        x_min,
        y_min,
        period_x,
        period_y,
    };
    let trace = Trace {
        chain,
        retained,
        swapped,
        r_last,
        d_prev,
        offset,
        mati,
        mati_quotient,
        columns,
    };
    Ok((solution, Some(trace)))
}

/// Iterative extended Euclid: `(g, s, t)` with `s·a + t·b = g`.
pub fn extended_euclid(a: i128, b: i128) -> Result<(i128, i128, i128)> {
    if a < 1 || b < 1 {
        return Err(Error::OutOfRange(format!(
            "extended Euclid needs positive operands (got {a}, {b})"
        )));
    }
    check_bound("a", a)?;
    check_bound("b", b)?;
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, sub(old_r, mul(q, r)?)?);
        (old_s, s) = (s, sub(old_s, mul(q, s)?)?);
        (old_t, t) = (t, sub(old_t, mul(q, t)?)?);
    }
    Ok((old_r, old_s, old_t))
}
