//! The machine-readable record for one `(p,q)` pair, and the DOT emitter
//! for its plumbing graph.

use serde::{Deserialize, Serialize};

use blowdown_core::{
    chain_for_pair, check_pq, st_pair, CoprimePair, EuclideanTrace, IntersectionMatrix,
    KirbyDiagram, LensSpace, Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensRecord {
    #[serde(rename = "P")]
    pub p: i64,
    #[serde(rename = "Q")]
    pub q: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirbyRecord {
    pub framing: i64,
    pub linking: i64,
}

/// Everything the pipeline computes for one pair, in a stable schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub p: i64,
    pub q: i64,
    pub word: String,
    #[serde(rename = "A")]
    pub a: [i64; 2],
    /// `(s,t)`; absent for q = 1 where t = 0 is out of range.
    pub st: Option<[i64; 2]>,
    /// Chain in assembly order `(a_1, ..., a_{n_L}, c, a_{-n_R}, ..., a_{-1})`.
    pub chain: Vec<i64>,
    /// The boundary lens space `L(p^2, pq-1)`.
    pub lens: LensRecord,
    pub kirby: KirbyRecord,
    /// Signed determinant of the chain's intersection matrix.
    pub det: i64,
    pub negative_definite: bool,
}

pub fn pair_record(p: i64, q: i64) -> Result<PairRecord> {
    check_pq(p, q)?;
    let pair = CoprimePair::new(p - q, q)?;
    let trace = EuclideanTrace::run(pair);
    let mn = trace.a_image();
    let chain = chain_for_pair(pair);
    let (det, negative_definite) = IntersectionMatrix::from_chain(&chain).invariants();
    let lens = LensSpace::new(p * p, p * q - 1)?;
    let kirby = KirbyDiagram::for_pq(p, q)?;
    Ok(PairRecord {
        p,
        q,
        word: trace.word().to_string(),
        a: [mn.first(), mn.second()],
        st: st_pair(pair).ok().map(|(s, t)| [s, t]),
        chain: chain.weights().to_vec(),
        lens: LensRecord {
            p: lens.p(),
            q: lens.q(),
        },
        kirby: KirbyRecord {
            framing: kirby.framing,
            linking: kirby.linking,
        },
        det: det as i64,
        negative_definite,
    })
}

/// Undirected path graph in DOT format, node labels carrying the weights,
/// left to right in chain order.
pub fn render_dot(p: i64, q: i64) -> Result<String> {
    check_pq(p, q)?;
    let chain = chain_for_pair(CoprimePair::new(p - q, q)?);
    let mut out = String::new();
    out.push_str("graph plumbing {\n");
    out.push_str(&format!("  graph [p={p}, q={q}];\n"));
    out.push_str("  node [shape=circle];\n");
    for (i, w) in chain.weights().iter().enumerate() {
        out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
    }
    for i in 1..chain.len() {
        out.push_str(&format!("  v{} -- v{};\n", i - 1, i));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_9_2() {
        let r = pair_record(9, 2).unwrap();
        assert_eq!(r.word, "LLLR");
        assert_eq!(r.a, [4, 5]);
        assert_eq!(r.st, Some([1, 1]));
        assert_eq!(r.chain, vec![-2, -2, -2, -5, -5]);
        assert_eq!((r.lens.p, r.lens.q), (81, 17));
        assert_eq!((r.kirby.framing, r.kirby.linking), (20, 9));
        assert_eq!(r.det, -81);
        assert!(r.negative_definite);
    }

    #[test]
    fn record_2_1() {
        let r = pair_record(2, 1).unwrap();
        assert_eq!(r.word, "");
        assert_eq!(r.a, [1, 1]);
        assert_eq!(r.st, None);
        assert_eq!(r.chain, vec![-4]);
        assert_eq!((r.lens.p, r.lens.q), (4, 1));
    }

    #[test]
    fn json_round_trip() {
        let r = pair_record(9, 2).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"A\":[4,5]"));
        assert!(json.contains("\"P\":81"));
        let back: PairRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn dot_output() {
        let dot = render_dot(9, 2).unwrap();
        assert!(dot.contains("graph [p=9, q=2]"));
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(dot.matches("label=\"-2\"").count(), 3);
        assert_eq!(dot.matches("label=\"-5\"").count(), 2);

        let dot = render_dot(2, 1).unwrap();
        assert!(dot.contains("v0 [label=\"-4\"]"));
        assert!(!dot.contains("--"));
    }
}
