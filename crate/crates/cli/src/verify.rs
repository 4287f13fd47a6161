//! Exhaustive verification of every checkable identity over a `(p,q)`
//! range.
//!
//! Each pair is independent, so the range is split across worker threads;
//! tallies merge associatively and the report is identical for any
//! schedule.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use blowdown_core::{
    a_image, build_c_pq, chain_to_lens, st_pair, BarState, BlowupState, CoprimePair,
    EuclideanTrace, IntersectionMatrix, KirbyDiagram, Rational,
};

pub const PROPERTIES: &[&str] = &[
    "involution",
    "symmetry",
    "word-reversal",
    "sum-conservation",
    "st-law",
    "row-invariants",
    "closed-forms",
    "chain-agreement",
    "torus-knot-legs",
    "chain-fraction",
    "determinant",
    "negative-definite",
    "kirby-homology",
    "reverse-symmetry",
    "lens-equivalence",
];

/// Per-property pass/fail counts with the first failing pair, ordered by
/// `(p,q)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PropertyTally {
    pub pass: u64,
    pub fail: u64,
    pub first_failure: Option<(i64, i64)>,
}

impl PropertyTally {
    fn record(&mut self, ok: bool, p: i64, q: i64) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
            if self.first_failure.map_or(true, |w| (p, q) < w) {
                self.first_failure = Some((p, q));
            }
        }
    }

    fn merge(&mut self, other: &PropertyTally) {
        self.pass += other.pass;
        self.fail += other.fail;
        match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => self.first_failure = Some(a.min(b)),
            (None, Some(b)) => self.first_failure = Some(b),
            _ => {}
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub p_min: i64,
    pub p_max: i64,
    pub pairs: u64,
    pub tallies: Vec<PropertyTally>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.tallies.iter().all(|t| t.fail == 0)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify: {} <= p <= {}, 1 <= q < p, gcd(p,q) = 1 ({} pairs, {:.2?})",
            self.p_min, self.p_max, self.pairs, self.elapsed
        );
        for (name, tally) in PROPERTIES.iter().zip(&self.tallies) {
            let _ = write!(out, "  {name:<18} pass {:<8} fail {}", tally.pass, tally.fail);
            if let Some((p, q)) = tally.first_failure {
                let _ = write!(out, "   first failure at (p,q) = ({p},{q})");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{}",
            if self.all_pass() {
                "all properties hold"
            } else {
                "FAILED"
            }
        );
        out
    }
}

/// Run every property on one coprime pair; one flag per entry of
/// [`PROPERTIES`].
pub fn check_pair(p: i64, q: i64, unoriented: bool) -> Vec<bool> {
    let (a, b) = (p - q, q);
    let pair = CoprimePair::new(a, b).expect("caller supplies coprime (p,q)");
    let trace = EuclideanTrace::run(pair);
    let mn = trace.a_image();
    let (m, n) = mn.as_tuple();

    let involution = a_image(mn) == pair;
    let symmetry = a_image(pair.swapped()) == mn.swapped();
    let word_reversal = *EuclideanTrace::run(mn).word() == trace.word().reversed();
    let sum_conservation =
        m + n == p && trace.word().n_l() + trace.word().n_r() == trace.steps();
    let st = st_pair(pair);
    let st_law = match st {
        Ok((s, t)) => {
            b >= 2
                && m * t - n * s == -1
                && 0 < s
                && s < a + b
                && 0 < t
                && t < a + b
                && s + t == b
        }
        Err(_) => b == 1,
    };
    let row_invariants = trace.rows().iter().all(|r| {
        let ((ai, bi), (mi, ni), (si, ti)) = (r.ab, r.mn, r.st);
        ai * ni + bi * mi == a + b && mi * ti - ni * si == -1 && ai * ti + bi * si == b
    });
    let closed_forms = match b {
        1 => (m, n) == (a, 1),
        2 => a % 2 == 1 && (m, n) == ((a + 1) / 2, (a + 3) / 2),
        _ => true,
    };

    let reversed_word = trace.word().reversed();
    let state = BlowupState::run(&reversed_word);
    let chain = state
        .assemble_chain(trace.word().n_l(), trace.word().n_r())
        .expect("index range matches letter counts");
    let chain_agreement = chain == BarState::run(&reversed_word).chain();
    let legs = state.torus_knot_legs(m, n).is_ok();

    let target = Rational::new((p * p) as i128, (p * q - 1) as i128);
    let c_pq = build_c_pq(p, q).expect("valid (p,q)");
    let chain_fraction = (chain.eval() == target || chain.reversed().eval() == target)
        && (chain == c_pq || chain.reversed() == c_pq);

    let matrix = IntersectionMatrix::from_chain(&chain);
    let c_matrix = IntersectionMatrix::from_chain(&c_pq);
    let p2 = (p * p) as i128;
    let determinant = matrix.determinant().abs() == p2 && c_matrix.determinant().abs() == p2;
    let negative_definite = matrix.is_negative_definite() && c_matrix.is_negative_definite();

    let kirby = KirbyDiagram::new(m, n).expect("A-image is coprime");
    let kirby_homology = kirby.surgery().boundary_h1_order() == p2
        && kirby.ball_h1_order() == p
        && kirby.surgery().boundary_h1_order() == matrix.determinant().abs();

    // (p, p-q) corresponds to the swapped starting pair (q, p-q)
    let other_chain = blowdown_core::chain_for_pair(pair.swapped());
    let reverse_symmetry = other_chain == chain.reversed();
    let lens = chain_to_lens(&chain);
    let lens_rev = chain_to_lens(&chain.reversed());
    let lens_equivalence = match (lens, lens_rev) {
        (Ok(l1), Ok(l2)) => {
            if unoriented {
                l1.is_equivalent_unoriented(&l2)
            } else {
                l1.is_equivalent(&l2)
            }
        }
        _ => false,
    };

    vec![
        involution,
        symmetry,
        word_reversal,
        sum_conservation,
        st_law,
        row_invariants,
        closed_forms,
        chain_agreement,
        legs,
        chain_fraction,
        determinant,
        negative_definite,
        kirby_homology,
        reverse_symmetry,
        lens_equivalence,
    ]
}

fn coprime_pairs(p_min: i64, p_max: i64) -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for p in p_min.max(2)..=p_max {
        for q in 1..p {
            if blowdown_core::gcd(p, q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

fn tally_chunk(chunk: &[(i64, i64)], unoriented: bool) -> Vec<PropertyTally> {
    let mut tallies = vec![PropertyTally::default(); PROPERTIES.len()];
    for &(p, q) in chunk {
        for (tally, ok) in tallies.iter_mut().zip(check_pair(p, q, unoriented)) {
            tally.record(ok, p, q);
        }
    }
    tallies
}

pub fn verify_range(p_min: i64, p_max: i64, threads: usize, unoriented: bool) -> VerificationReport {
    let start = Instant::now();
    let pairs = coprime_pairs(p_min, p_max);
    let threads = threads.max(1).min(pairs.len().max(1));
    let tallies = if threads == 1 {
        tally_chunk(&pairs, unoriented)
    } else {
        let chunk_size = pairs.len().div_ceil(threads);
        let partials: Vec<Vec<PropertyTally>> = std::thread::scope(|scope| {
            let handles: Vec<_> = pairs
                .chunks(chunk_size)
                .map(|chunk| scope.spawn(move || tally_chunk(chunk, unoriented)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut merged = vec![PropertyTally::default(); PROPERTIES.len()];
        for partial in &partials {
            for (acc, t) in merged.iter_mut().zip(partial) {
                acc.merge(t);
            }
        }
        merged
    };
    VerificationReport {
        p_min: p_min.max(2),
        p_max,
        pairs: pairs.len() as u64,
        tallies,
        elapsed: start.elapsed(),
    }
}
