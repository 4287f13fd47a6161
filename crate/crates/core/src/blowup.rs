//! Blow-up weight sequences driven by the reversed word W, and the final
//! plumbing chain `(a_1, ..., a_{n_L}, c, a_{-n_R}, ..., a_{-1})`.
//!
//! Two constructions are implemented: the indexed sequence `a^(i)_j`
//! (centered at the fixed `a_0 = -1`) and the class-T sequence
//! `abar^(i)_j` starting from `(-4)`.  Both apply one rule per letter of
//! W; the assembled chain and the class-T sequence agree.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{eval_bracket, NegContinuedFraction, Rational};
use crate::error::{Error, Result};
use crate::euclid::{CoprimePair, EuclideanTrace, LRWord, Letter};

/// The indexed weight sequence of the main blow-up construction.
///
/// `a_0 = -1` at every step and is kept implicit; the negative side is
/// stored with `a_{-1}` at the front, the positive side with `a_1` at the
/// front, so both rules are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupState {
    neg: VecDeque<i64>,
    pos: VecDeque<i64>,
}

impl BlowupState {
    /// `(-1, -1, -1)` at indices -1..1.
    pub fn initial() -> Self {
        BlowupState {
            neg: VecDeque::from([-1]),
            pos: VecDeque::from([-1]),
        }
    }

    /// One blow-up step.
    ///
    /// R: decrement `a_1`, insert -2 at index -1 shifting the negative
    /// side outward.  L is the mirror image.
    pub fn apply(&mut self, letter: Letter) {
        match letter {
            Letter::R => {
                *self.pos.front_mut().unwrap() -= 1;
                self.neg.push_front(-2);
            }
            Letter::L => {
                *self.neg.front_mut().unwrap() -= 1;
                self.pos.push_front(-2);
            }
        }
    }

    /// Final state after all letters of `reversed_word`.
    pub fn run(reversed_word: &LRWord) -> Self {
        let mut state = BlowupState::initial();
        for &l in reversed_word.letters() {
            state.apply(l);
        }
        state
    }

    /// States after 0, 1, ..., N letters (N+1 entries).
    pub fn history(reversed_word: &LRWord) -> Vec<Self> {
        let mut states = Vec::with_capacity(reversed_word.len() + 1);
        let mut state = BlowupState::initial();
        states.push(state.clone());
        for &l in reversed_word.letters() {
            state.apply(l);
            states.push(state.clone());
        }
        states
    }

    pub fn min_index(&self) -> i64 {
        -(self.neg.len() as i64)
    }

    pub fn max_index(&self) -> i64 {
        self.pos.len() as i64
    }

    pub fn weight(&self, j: i64) -> Option<i64> {
        if j == 0 {
            Some(-1)
        } else if j < 0 {
            self.neg.get((-j - 1) as usize).copied()
        } else {
            self.pos.get((j - 1) as usize).copied()
        }
    }

    /// Weights in index order, `min_index ..= max_index`.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.neg.iter().rev().copied().collect();
        w.push(-1);
        w.extend(self.pos.iter());
        w
    }

    /// `c^(i) = a_{M(i)} + a_{m(i)} - 2`.
    pub fn center_weight(&self) -> i64 {
        self.pos.back().unwrap() + self.neg.back().unwrap() - 2
    }

    /// The final chain `(a_1, ..., a_{n_L}, c, a_{-n_R}, ..., a_{-1})`.
    ///
    /// Requires the index range to be exactly `-(n_R+1) ..= n_L+1`.
    pub fn assemble_chain(&self, n_l: usize, n_r: usize) -> Result<WeightChain> {
        if self.min_index() != -(n_r as i64) - 1 || self.max_index() != n_l as i64 + 1 {
            return Err(Error::InconsistentCounts);
        }
        let mut weights = Vec::with_capacity(n_l + n_r + 1);
        for j in 1..=n_l as i64 {
            weights.push(self.weight(j).unwrap());
        }
        weights.push(self.center_weight());
        for j in -(n_r as i64)..=-1 {
            weights.push(self.weight(j).unwrap());
        }
        WeightChain::new(weights)
    }

    /// Verify and evaluate the two Seifert legs for the torus knot T(m,n).
    ///
    /// Left leg: `[|a_{m(N)}|, ..., |a_{-1}|]`; right leg:
    /// `[|a_{M(N)}|, ..., |a_1|]`.  The outer weight on the
    /// smaller-of-(m,n) side must be -1 and the values must be
    /// `{m/n, n/m}`; any mismatch is an error.  Leading entries equal to 1
    /// are expected, so the relaxed bracket evaluator is used.
    pub fn torus_knot_legs(&self, m: i64, n: i64) -> Result<(Rational, Rational)> {
        let mismatch = Error::LegMismatch { m, n };
        if m < n && *self.neg.back().unwrap() != -1 {
            return Err(mismatch);
        }
        if m > n && *self.pos.back().unwrap() != -1 {
            return Err(mismatch);
        }
        let left_entries: Vec<i64> = self.neg.iter().rev().map(|w| w.abs()).collect();
        let right_entries: Vec<i64> = self.pos.iter().rev().map(|w| w.abs()).collect();
        let left = eval_bracket(&left_entries)?;
        let right = eval_bracket(&right_entries)?;
        // The two legs carry {m/n, n/m}; the negative side always reads m/n.
        let want_left = Rational::new(m as i128, n as i128);
        let want_right = Rational::new(n as i128, m as i128);
        if left != want_left || right != want_right {
            return Err(mismatch);
        }
        Ok((left, right))
    }
}

/// The class-T resolution sequence, built from `(-4)` by one append plus
/// one decrement per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarState {
    weights: VecDeque<i64>,
    min_index: i64,
}

impl BarState {
    /// `(-4)` at index 0.
    pub fn initial() -> Self {
        BarState {
            weights: VecDeque::from([-4]),
            min_index: 0,
        }
    }

    /// R: append -2 on the right, decrement the leftmost entry.
    /// L: insert -2 on the left, decrement the rightmost entry.
    pub fn apply(&mut self, letter: Letter) {
        match letter {
            Letter::R => {
                *self.weights.front_mut().unwrap() -= 1;
                self.weights.push_back(-2);
            }
            Letter::L => {
                *self.weights.back_mut().unwrap() -= 1;
                self.weights.push_front(-2);
                self.min_index -= 1;
            }
        }
    }

    pub fn run(reversed_word: &LRWord) -> Self {
        let mut state = BarState::initial();
        for &l in reversed_word.letters() {
            state.apply(l);
        }
        state
    }

    pub fn history(reversed_word: &LRWord) -> Vec<Self> {
        let mut states = Vec::with_capacity(reversed_word.len() + 1);
        let mut state = BarState::initial();
        states.push(state.clone());
        for &l in reversed_word.letters() {
            state.apply(l);
            states.push(state.clone());
        }
        states
    }

    pub fn min_index(&self) -> i64 {
        self.min_index
    }

    pub fn max_index(&self) -> i64 {
        self.min_index + self.weights.len() as i64 - 1
    }

    pub fn weight(&self, j: i64) -> Option<i64> {
        if j < self.min_index {
            return None;
        }
        self.weights.get((j - self.min_index) as usize).copied()
    }

    /// `abar_0`, which tracks the center weight of the main construction.
    pub fn center_weight(&self) -> i64 {
        self.weight(0).unwrap()
    }

    pub fn weights(&self) -> Vec<i64> {
        self.weights.iter().copied().collect()
    }

    /// The weights read in index order as a chain.
    pub fn chain(&self) -> WeightChain {
        WeightChain::new(self.weights()).expect("class-T weights stay <= -2")
    }
}

/// A finite plumbing chain; every weight <= -2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightChain {
    weights: Vec<i64>,
}

impl WeightChain {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyChain);
        }
        if let Some(&w) = weights.iter().find(|&&w| w > -2) {
            return Err(Error::NotNormalized(w));
        }
        Ok(WeightChain { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut weights = self.weights.clone();
        weights.reverse();
        WeightChain { weights }
    }

    pub fn abs_entries(&self) -> Vec<i64> {
        self.weights.iter().map(|w| w.abs()).collect()
    }

    /// Value of the bracket of absolute values, read left to right.
    pub fn eval(&self) -> Rational {
        NegContinuedFraction::new(self.abs_entries())
            .expect("chain weights <= -2")
            .eval()
    }
}

impl fmt::Display for WeightChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Full pipeline for a coprime pair `(a,b)`: run the Euclidean trace,
/// reverse the word, run the blow-up, assemble the chain.
pub fn chain_for_pair(pair: CoprimePair) -> WeightChain {
    let trace = EuclideanTrace::run(pair);
    let state = BlowupState::run(&trace.word().reversed());
    state
        .assemble_chain(trace.word().n_l(), trace.word().n_r())
        .expect("final index range matches the letter counts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::Letter::{L, R};

    fn rows(states: &[BlowupState]) -> Vec<(i64, i64, Vec<i64>)> {
        states
            .iter()
            .map(|s| (s.min_index(), s.max_index(), s.weights()))
            .collect()
    }

    #[test]
    fn step3_rlll() {
        // W = RLLL, the (7,2) case; rows frozen from the worked table
        let w = LRWord::new(vec![R, L, L, L]);
        let h = BlowupState::history(&w);
        assert_eq!(
            rows(&h),
            vec![
                (-1, 1, vec![-1, -1, -1]),
                (-2, 1, vec![-1, -2, -1, -2]),
                (-2, 2, vec![-1, -3, -1, -2, -2]),
                (-2, 3, vec![-1, -4, -1, -2, -2, -2]),
                (-2, 4, vec![-1, -5, -1, -2, -2, -2, -2]),
            ]
        );
    }

    #[test]
    fn step3_single_r() {
        let s = BlowupState::run(&LRWord::new(vec![R]));
        assert_eq!(s.min_index(), -2);
        assert_eq!(s.max_index(), 1);
        assert_eq!(s.weights(), vec![-1, -2, -1, -2]);
    }

    #[test]
    fn step3_empty() {
        let s = BlowupState::run(&LRWord::empty());
        assert_eq!((s.min_index(), s.max_index()), (-1, 1));
        assert_eq!(s.weights(), vec![-1, -1, -1]);
        assert_eq!(s.center_weight(), -4);
    }

    #[test]
    fn step3prime_rlll() {
        let w = LRWord::new(vec![R, L, L, L]);
        let h = BarState::history(&w);
        let got: Vec<_> = h
            .iter()
            .map(|s| (s.min_index(), s.max_index(), s.weights()))
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 0, vec![-4]),
                (0, 1, vec![-5, -2]),
                (-1, 1, vec![-2, -5, -3]),
                (-2, 1, vec![-2, -2, -5, -4]),
                (-3, 1, vec![-2, -2, -2, -5, -5]),
            ]
        );
    }

    #[test]
    fn step3prime_single_r() {
        let s = BarState::run(&LRWord::new(vec![R]));
        assert_eq!((s.min_index(), s.max_index()), (0, 1));
        assert_eq!(s.weights(), vec![-5, -2]);
    }

    #[test]
    fn assemble_example() {
        let w = LRWord::new(vec![R, L, L, L]);
        let s = BlowupState::run(&w);
        let chain = s.assemble_chain(3, 1).unwrap();
        assert_eq!(chain.weights(), &[-2, -2, -2, -5, -5]);
        assert_eq!(chain.to_string(), "(-2,-2,-2,-5,-5)");
    }

    #[test]
    fn assemble_empty_word() {
        let s = BlowupState::run(&LRWord::empty());
        let chain = s.assemble_chain(0, 0).unwrap();
        assert_eq!(chain.weights(), &[-4]);
    }

    #[test]
    fn assemble_ll() {
        // (a,b) = (3,1): word LL, reverse LL
        let s = BlowupState::run(&LRWord::new(vec![L, L]));
        let chain = s.assemble_chain(2, 0).unwrap();
        assert_eq!(chain.weights(), &[-2, -2, -6]);
    }

    #[test]
    fn assemble_count_mismatch() {
        let s = BlowupState::run(&LRWord::new(vec![R, L]));
        assert_eq!(s.assemble_chain(2, 0), Err(Error::InconsistentCounts));
    }

    #[test]
    fn legs_example() {
        let s = BlowupState::run(&LRWord::new(vec![R, L, L, L]));
        let (left, right) = s.torus_knot_legs(4, 5).unwrap();
        assert_eq!(left, Rational::new(4, 5));
        assert_eq!(right, Rational::new(5, 4));
    }

    #[test]
    fn legs_trivial() {
        let s = BlowupState::run(&LRWord::empty());
        let (left, right) = s.torus_knot_legs(1, 1).unwrap();
        assert_eq!(left, Rational::new(1, 1));
        assert_eq!(right, Rational::new(1, 1));
    }

    #[test]
    fn legs_3_1() {
        let s = BlowupState::run(&LRWord::new(vec![L, L]));
        let (left, right) = s.torus_knot_legs(3, 1).unwrap();
        assert_eq!(left, Rational::new(3, 1));
        assert_eq!(right, Rational::new(1, 3));
    }

    #[test]
    fn legs_reject_wrong_knot() {
        let s = BlowupState::run(&LRWord::new(vec![R, L, L, L]));
        assert!(s.torus_knot_legs(5, 4).is_err());
    }

    #[test]
    fn center_tracking_small_range() {
        // abar^(i)_0 == c^(i) at every step, for every coprime pair
        for a in 1..=20i64 {
            for b in 1..=20i64 {
                if crate::arith::gcd(a, b) != 1 {
                    continue;
                }
                let pair = CoprimePair::new(a, b).unwrap();
                let word = EuclideanTrace::run(pair).word().reversed();
                let main = BlowupState::history(&word);
                let bar = BarState::history(&word);
                for (m, b) in main.iter().zip(&bar) {
                    assert_eq!(m.center_weight(), b.center_weight());
                }
            }
        }
    }

    #[test]
    fn chain_agreement_small_range() {
        for a in 1..=25i64 {
            for b in 1..=25i64 {
                if crate::arith::gcd(a, b) != 1 {
                    continue;
                }
                let pair = CoprimePair::new(a, b).unwrap();
                let trace = EuclideanTrace::run(pair);
                let word = trace.word().reversed();
                let chain = BlowupState::run(&word)
                    .assemble_chain(trace.word().n_l(), trace.word().n_r())
                    .unwrap();
                assert_eq!(chain, BarState::run(&word).chain(), "({a},{b})");
                assert_eq!(chain.len(), trace.steps() + 1);
            }
        }
    }

    #[test]
    fn chain_validation() {
        assert_eq!(WeightChain::new(vec![]), Err(Error::EmptyChain));
        assert_eq!(WeightChain::new(vec![-2, -1]), Err(Error::NotNormalized(-1)));
    }
}
