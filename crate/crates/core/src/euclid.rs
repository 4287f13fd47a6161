//! The subtractive Euclidean algorithm on coprime pairs, recorded as an
//! LR-word, together with the involutive pair map `A` and the auxiliary
//! `(s_i, t_i)` sequence.
//!
//! One run produces the whole row-by-row trace: the shrinking pair
//! `(a_i, b_i)`, the growing pair `(m_i, n_i)` (whose final value is
//! `A(a,b)`), and `(s_i, t_i)` which satisfies `m_i t_i - n_i s_i = -1`
//! at every row.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Letter {
    L,
    R,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::L => write!(f, "L"),
            Letter::R => write!(f, "R"),
        }
    }
}

/// A finite word over {L, R}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LRWord {
    letters: Vec<Letter>,
}

impl LRWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LRWord { letters }
    }

    pub fn empty() -> Self {
        LRWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n_l(&self) -> usize {
        self.letters.iter().filter(|l| **l == Letter::L).count()
    }

    pub fn n_r(&self) -> usize {
        self.letters.iter().filter(|l| **l == Letter::R).count()
    }

    pub fn reversed(&self) -> LRWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        LRWord { letters }
    }
}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An ordered pair of positive coprime integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoprimePair {
    first: i64,
    second: i64,
}

impl CoprimePair {
    pub fn new(first: i64, second: i64) -> Result<Self> {
        if first < 1 || second < 1 {
            return Err(Error::NonPositive(first, second));
        }
        if gcd(first, second) != 1 {
            return Err(Error::NotCoprime(first, second));
        }
        Ok(CoprimePair { first, second })
    }

    pub fn first(&self) -> i64 {
        self.first
    }

    pub fn second(&self) -> i64 {
        self.second
    }

    pub fn as_tuple(&self) -> (i64, i64) {
        (self.first, self.second)
    }

    pub fn swapped(&self) -> CoprimePair {
        CoprimePair {
            first: self.second,
            second: self.first,
        }
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// One row of the trace: `(a_i, b_i)`, `(m_i, n_i)`, `(s_i, t_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceRow {
    pub ab: (i64, i64),
    pub mn: (i64, i64),
    pub st: (i64, i64),
}

/// The full record of one run: N+1 rows and the word of length N.
///
/// Row 0 is `(a,b), (1,1), (1,0)`; the last row has `(a_N, b_N) = (1,1)`.
/// Coprimality forces termination; N is the sum of the partial quotients
/// of a/b minus one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanTrace {
    rows: Vec<TraceRow>,
    word: LRWord,
}

impl EuclideanTrace {
    pub fn run(pair: CoprimePair) -> Self {
        let mut rows = vec![TraceRow {
            ab: pair.as_tuple(),
            mn: (1, 1),
            st: (1, 0),
        }];
        let mut letters = Vec::new();
        loop {
            let TraceRow {
                ab: (a, b),
                mn: (m, n),
                st: (s, t),
            } = *rows.last().unwrap();
            if (a, b) == (1, 1) {
                break;
            }
            // a_i = b_i would mean gcd > 1; unreachable for coprime input
            assert!(a != b, "a_i = b_i only occurs at (1,1)");
            if a > b {
                letters.push(Letter::L);
                rows.push(TraceRow {
                    ab: (a - b, b),
                    mn: (m + n, n),
                    st: (s + t, t),
                });
            } else {
                letters.push(Letter::R);
                rows.push(TraceRow {
                    ab: (a, b - a),
                    mn: (m, n + m),
                    st: (s, t + s),
                });
            }
        }
        EuclideanTrace {
            rows,
            word: LRWord::new(letters),
        }
    }

    pub fn rows(&self) -> &[TraceRow] {
        &self.rows
    }

    pub fn word(&self) -> &LRWord {
        &self.word
    }

    /// Number of steps N (= word length).
    pub fn steps(&self) -> usize {
        self.word.len()
    }

    /// `A(a,b) = (m_N, n_N)`.
    pub fn a_image(&self) -> CoprimePair {
        let (m, n) = self.rows.last().unwrap().mn;
        CoprimePair::new(m, n).expect("m_N t_N - n_N s_N = -1 forces coprimality")
    }

    pub fn final_st(&self) -> (i64, i64) {
        self.rows.last().unwrap().st
    }
}

/// The involutive pair map: `(a,b) -> (m_N, n_N)`.
pub fn a_image(pair: CoprimePair) -> CoprimePair {
    EuclideanTrace::run(pair).a_image()
}

/// `(s_N, t_N)`, the unique positive solution of `m t - n s = -1` with
/// `0 < s, t < a + b`.
///
/// For `b = 1` the word is all L and `t_N = 0`, which violates the range
/// condition; that case (including the input `(1,1)`) is rejected.
pub fn st_pair(pair: CoprimePair) -> Result<(i64, i64)> {
    let (s, t) = EuclideanTrace::run(pair).final_st();
    if t == 0 {
        return Err(Error::DegenerateSt);
    }
    Ok((s, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: i64, b: i64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    #[test]
    fn trace_7_2() {
        let t = EuclideanTrace::run(pair(7, 2));
        assert_eq!(t.word().to_string(), "LLLR");
        let ab: Vec<_> = t.rows().iter().map(|r| r.ab).collect();
        assert_eq!(ab, [(7, 2), (5, 2), (3, 2), (1, 2), (1, 1)]);
        let mn: Vec<_> = t.rows().iter().map(|r| r.mn).collect();
        assert_eq!(mn, [(1, 1), (2, 1), (3, 1), (4, 1), (4, 5)]);
        let st: Vec<_> = t.rows().iter().map(|r| r.st).collect();
        assert_eq!(st, [(1, 0), (1, 0), (1, 0), (1, 0), (1, 1)]);
        assert_eq!(t.a_image().as_tuple(), (4, 5));
        assert_eq!(t.steps(), 4);
    }

    #[test]
    fn trace_terminal_pair() {
        let t = EuclideanTrace::run(pair(1, 1));
        assert!(t.word().is_empty());
        assert_eq!(t.rows().len(), 1);
        assert_eq!(t.a_image().as_tuple(), (1, 1));
    }

    #[test]
    fn trace_3_1() {
        let t = EuclideanTrace::run(pair(3, 1));
        assert_eq!(t.word().to_string(), "LL");
        assert_eq!(t.a_image().as_tuple(), (3, 1));
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_image(pair(7, 2)).as_tuple(), (4, 5));
        for a in 1..20 {
            assert_eq!(a_image(pair(a, 1)).as_tuple(), (a, 1));
        }
        // A(a,2) = ((a+1)/2, (a+3)/2) for odd a
        assert_eq!(a_image(pair(5, 2)).as_tuple(), (3, 4));
    }

    #[test]
    fn st_examples() {
        assert_eq!(st_pair(pair(7, 2)).unwrap(), (1, 1));
        assert_eq!(st_pair(pair(3, 1)), Err(Error::DegenerateSt));
        assert_eq!(st_pair(pair(2, 1)), Err(Error::DegenerateSt));
        assert_eq!(st_pair(pair(1, 1)), Err(Error::DegenerateSt));
    }

    #[test]
    fn reverse_word() {
        use Letter::{L, R};
        let w = LRWord::new(vec![L, L, L, R]);
        assert_eq!(w.reversed().to_string(), "RLLL");
        assert_eq!(LRWord::empty().reversed(), LRWord::empty());
        assert_eq!(LRWord::new(vec![L, R]).reversed(), LRWord::new(vec![R, L]));
    }

    #[test]
    fn pair_validation() {
        assert_eq!(CoprimePair::new(9, 3), Err(Error::NotCoprime(9, 3)));
        assert_eq!(CoprimePair::new(0, 1), Err(Error::NonPositive(0, 1)));
    }
}
