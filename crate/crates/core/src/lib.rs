//! Exact-integer constructions for generalized rational blow-down.
//!
//! For a coprime pair `(p,q)` with `1 <= q < p`, the subtractive Euclidean
//! algorithm on `(p-q, q)` yields an LR-word, the involutive pair map `A`,
//! and a blow-up weight chain whose plumbing is `C_{p,q}`, the negative
//! definite linear plumbing with boundary `L(p^2, pq-1)`.  The same
//! boundary is presented by the Kirby diagram `k(A(p-q,q)) ∪ u`, a dotted
//! circle plus an mn-framed torus knot.  Everything here is exact integer
//! arithmetic; the lemmas connecting these constructions are all checkable
//! by exhaustive sweeps over `(p,q)` ranges.

pub mod arith;
pub mod blowup;
pub mod error;
pub mod euclid;
pub mod kirby;
pub mod plumbing;

pub use arith::{eval_bracket, gcd, mod_inverse, NegContinuedFraction, Rational};
pub use blowup::{chain_for_pair, BarState, BlowupState, WeightChain};
pub use error::{Error, Result};
pub use euclid::{a_image, st_pair, CoprimePair, EuclideanTrace, LRWord, Letter, TraceRow};
pub use kirby::{KirbyDiagram, SurgeryPresentation};
pub use plumbing::{
    build_c_pq, chain_to_lens, check_pq, two_leg_lens, IntersectionMatrix, LensSpace,
};
