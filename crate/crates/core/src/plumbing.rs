//! Linear plumbing chains as integer quadratic forms and their lens-space
//! boundaries.
//!
//! A chain of weights `(-c_0, ..., -c_N)` gives a tridiagonal intersection
//! matrix; its boundary is the lens space `L(P,Q)` with
//! `P/Q = [c_0, ..., c_N]`.  `C_{p,q}` is the chain obtained from the
//! expansion of `p^2/(pq-1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, NegContinuedFraction};
use crate::blowup::WeightChain;
use crate::error::{Error, Result};

/// Require `1 <= q < p` with `gcd(p,q) = 1`.
pub fn check_pq(p: i64, q: i64) -> Result<()> {
    if q < 1 || p <= q {
        return Err(Error::InvalidPq { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(())
}

/// A lens space `L(P,Q)` with `0 < Q < P` and `gcd(P,Q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 || p <= q || gcd(p, q) != 1 {
            return Err(Error::InvalidLens { p, q });
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Orientation-preserving homeomorphism: same P and `Q' == Q` or
    /// `Q Q' == 1 (mod P)`.
    pub fn is_equivalent(&self, other: &LensSpace) -> bool {
        self.p == other.p
            && (self.q == other.q
                || (self.q as i128 * other.q as i128).rem_euclid(self.p as i128) == 1)
    }

    /// Orientation-insensitive variant: additionally allows `Q' == -Q` or
    /// `Q Q' == -1 (mod P)`.
    pub fn is_equivalent_unoriented(&self, other: &LensSpace) -> bool {
        if self.is_equivalent(other) {
            return true;
        }
        let p = self.p as i128;
        self.p == other.p
            && ((self.q as i128 + other.q as i128).rem_euclid(p) == 0
                || (self.q as i128 * other.q as i128 + 1).rem_euclid(p) == 0)
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Symmetric tridiagonal integer matrix: chain weights on the diagonal,
/// `off[i]` linking vertices i and i+1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    diag: Vec<i64>,
    off: Vec<i64>,
}

impl IntersectionMatrix {
    pub fn new(diag: Vec<i64>, off: Vec<i64>) -> Result<Self> {
        if diag.is_empty() || off.len() != diag.len() - 1 {
            return Err(Error::BadMatrixShape {
                diag: diag.len(),
                off: off.len(),
            });
        }
        Ok(IntersectionMatrix { diag, off })
    }

    pub fn from_chain(chain: &WeightChain) -> Self {
        IntersectionMatrix {
            diag: chain.weights().to_vec(),
            off: vec![1; chain.len() - 1],
        }
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[i64] {
        &self.diag
    }

    /// Leading principal minors `d_1, ..., d_n` by the three-term
    /// recurrence `d_k = diag_k d_{k-1} - off_{k-1}^2 d_{k-2}`.
    pub fn leading_minors(&self) -> Vec<i128> {
        let n = self.size();
        let mut minors = Vec::with_capacity(n);
        let (mut prev2, mut prev1) = (1i128, 1i128); // d_{-1} unused, d_0 = 1
        for k in 0..n {
            let off2 = if k == 0 {
                0
            } else {
                let o = self.off[k - 1] as i128;
                o * o
            };
            let d = self.diag[k] as i128 * prev1 - off2 * prev2;
            minors.push(d);
            (prev2, prev1) = (prev1, d);
        }
        minors
    }

    pub fn determinant(&self) -> i128 {
        *self.leading_minors().last().unwrap()
    }

    /// Negative definite iff the leading principal minors alternate in
    /// sign starting negative.
    pub fn is_negative_definite(&self) -> bool {
        self.leading_minors()
            .iter()
            .enumerate()
            .all(|(k, &d)| if k % 2 == 0 { d < 0 } else { d > 0 })
    }

    pub fn invariants(&self) -> (i128, bool) {
        (self.determinant(), self.is_negative_definite())
    }
}

/// The chain `(-c_0, ..., -c_N)` with `[c_0, ..., c_N] = p^2/(pq-1)`.
pub fn build_c_pq(p: i64, q: i64) -> Result<WeightChain> {
    check_pq(p, q)?;
    let ncf = NegContinuedFraction::expand(p * p, p * q - 1)?;
    WeightChain::new(ncf.entries().iter().map(|&c| -c).collect())
}

/// Boundary lens space of a chain: `L(P,Q)` with `P/Q` the value of the
/// bracket of absolute values read left to right.
pub fn chain_to_lens(chain: &WeightChain) -> Result<LensSpace> {
    let v = chain.eval();
    let p = i64::try_from(v.numer()).map_err(|_| Error::Overflow)?;
    let q = i64::try_from(v.denom()).map_err(|_| Error::Overflow)?;
    LensSpace::new(p, q)
}

/// Lens space of a two-legged star after contraction: given vertex
/// fractions `-alpha1/beta1` and `-alpha2/beta2`, and `(gamma2, delta2)`
/// with `alpha2 delta2 - beta2 gamma2 = -1`,
/// `P = alpha1 alpha2 - beta1 beta2` and
/// `Q = alpha1 gamma2 - beta1 delta2 (mod P)`.
pub fn two_leg_lens(
    alpha1: i64,
    beta1: i64,
    alpha2: i64,
    beta2: i64,
    gamma2: i64,
    delta2: i64,
) -> Result<LensSpace> {
    let det = alpha2 as i128 * delta2 as i128 - beta2 as i128 * gamma2 as i128;
    if det != -1 {
        return Err(Error::BadLegDeterminant);
    }
    let p = alpha1 as i128 * alpha2 as i128 - beta1 as i128 * beta2 as i128;
    let q = (alpha1 as i128 * gamma2 as i128 - beta1 as i128 * delta2 as i128).rem_euclid(p.abs());
    let p = i64::try_from(p).map_err(|_| Error::Overflow)?;
    let q = i64::try_from(q).map_err(|_| Error::Overflow)?;
    LensSpace::new(p, q)
}
