//! Exact rational arithmetic and negative (Hirzebruch-Jung) continued
//! fractions.
//!
//! The bracket `[x_1, ..., x_n] = x_1 - 1/(x_2 - 1/(... - 1/x_n))` with all
//! entries >= 2 gives a unique expansion of every rational P/Q > 1.  All
//! arithmetic is exact over `i128`; overflow aborts with a range error
//! instead of wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Greatest common divisor of two positive integers.
pub fn gcd(x: i64, y: i64) -> i64 {
    debug_assert!(x >= 1 && y >= 1);
    let (mut a, mut b) = (x, y);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Modular inverse: the unique `r` with `q * r == 1 (mod modulus)` and
/// `0 < r < modulus`.
pub fn mod_inverse(q: i64, modulus: i64) -> Result<i64> {
    assert!(modulus >= 1);
    // Extended Euclid on (modulus, q mod modulus), tracking only the
    // coefficient of q.
    let (mut r0, mut r1) = (modulus, q.rem_euclid(modulus));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible(q, modulus));
    }
    Ok(t0.rem_euclid(modulus))
}

/// A rational number stored reduced, with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd128(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn from_int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Evaluate the nested bracket `x_1 - 1/(x_2 - ... - 1/x_n)` exactly.
///
/// Unlike [`NegContinuedFraction`], entries below 2 (in particular 1, the
/// outer weights of the torus-knot legs) are allowed here, so intermediate
/// values may reach zero; that case is reported as an error.
pub fn eval_bracket(entries: &[i64]) -> Result<Rational> {
    let (last, rest) = entries.split_last().ok_or(Error::EmptyBracket)?;
    // Evaluate right-to-left; (num, den) is the reduced value of the tail.
    let (mut num, mut den) = (*last as i128, 1i128);
    for &x in rest.iter().rev() {
        if num == 0 {
            return Err(Error::ZeroDenominator);
        }
        // x - den/num = (x*num - den) / num
        let new_num = (x as i128)
            .checked_mul(num)
            .and_then(|v| v.checked_sub(den))
            .ok_or(Error::Overflow)?;
        den = num;
        num = new_num;
        if den < 0 {
            num = -num;
            den = -den;
        }
    }
    Ok(Rational::new(num, den))
}

/// A negative continued fraction `[c_0, c_1, ..., c_N]` with every entry >= 2.
///
/// Entries are the absolute values of the plumbing weights; the sign
/// convention lives in `WeightChain`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegContinuedFraction {
    entries: Vec<i64>,
}

impl NegContinuedFraction {
    /// Rejects the empty bracket and any entry < 2.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyBracket);
        }
        if let Some(&e) = entries.iter().find(|&&e| e < 2) {
            return Err(Error::EntryTooSmall(e));
        }
        Ok(NegContinuedFraction { entries })
    }

    /// The unique entries->=2 expansion of P/Q, computed by repeated
    /// ceiling division: c = ceil(P/Q), then recurse on Q / (cQ - P).
    pub fn expand(p: i64, q: i64) -> Result<Self> {
        if q < 1 || p <= q || gcd(p, q) != 1 {
            return Err(Error::InvalidFraction { p, q });
        }
        let mut entries = Vec::new();
        let (mut p, mut q) = (p, q);
        loop {
            let c = (p + q - 1) / q;
            entries.push(c);
            let r = c * q - p;
            if r == 0 {
                break;
            }
            (p, q) = (q, r);
        }
        Ok(NegContinuedFraction { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        NegContinuedFraction { entries }
    }

    /// Exact value of the bracket.  With all entries >= 2 every partial
    /// value stays > 1, so evaluation cannot fail.
    pub fn eval(&self) -> Rational {
        eval_bracket(&self.entries).expect("entries >= 2 keep partial values > 1")
    }
}

impl fmt::Display for NegContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
