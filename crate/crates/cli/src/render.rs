//! Plain-text rendering of the full trace for one `(p,q)` pair.

use std::fmt::Write;

use blowdown_core::{
    chain_for_pair, check_pq, chain_to_lens, st_pair, BarState, BlowupState, CoprimePair,
    EuclideanTrace, IntersectionMatrix, KirbyDiagram, NegContinuedFraction, Result,
};

fn pair_row(out: &mut String, label: &str, pairs: &[(i64, i64)], word: &str) {
    let _ = write!(out, "{label}:");
    for (i, (x, y)) in pairs.iter().enumerate() {
        if i == 0 {
            let _ = write!(out, " ({x},{y})");
        } else {
            let letter = &word[i - 1..i];
            let _ = write!(out, " ->{letter} ({x},{y})");
        }
    }
    out.push('\n');
}

fn weight_table(out: &mut String, header: &str, rows: &[(i64, i64, Vec<i64>)]) {
    let _ = writeln!(out, "{header}:");
    for (i, (min, max, weights)) in rows.iter().enumerate() {
        let _ = write!(out, "  i={i}  j in [{min},{max}]:");
        for w in weights {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
}

pub fn render_trace(p: i64, q: i64) -> Result<String> {
    check_pq(p, q)?;
    let pair = CoprimePair::new(p - q, q)?;
    let trace = EuclideanTrace::run(pair);
    let word = trace.word().to_string();
    let reversed_word = trace.word().reversed();
    let mn = trace.a_image();

    let mut out = String::new();
    let _ = writeln!(out, "(p,q) = ({p},{q})    (a,b) = {pair}");
    out.push('\n');
    let ab: Vec<_> = trace.rows().iter().map(|r| r.ab).collect();
    let mnr: Vec<_> = trace.rows().iter().map(|r| r.mn).collect();
    let str_: Vec<_> = trace.rows().iter().map(|r| r.st).collect();
    pair_row(&mut out, "(a_i,b_i)", &ab, &word);
    pair_row(&mut out, "(m_i,n_i)", &mnr, &word);
    pair_row(&mut out, "(s_i,t_i)", &str_, &word);
    out.push('\n');
    let show = |w: &str| if w.is_empty() { "(empty)".to_string() } else { w.to_string() };
    let _ = writeln!(out, "w = {}", show(&word));
    let _ = writeln!(out, "W = {}", show(&reversed_word.to_string()));
    let _ = writeln!(out, "A = ({},{})", mn.first(), mn.second());
    match st_pair(pair) {
        Ok((s, t)) => {
            let _ = writeln!(out, "(s,t) = ({s},{t})");
        }
        Err(_) => {
            let _ = writeln!(out, "(s,t) = degenerate (t = 0)");
        }
    }
    let _ = writeln!(out, "n_L = {}, n_R = {}", trace.word().n_l(), trace.word().n_r());
    out.push('\n');

    let main_rows: Vec<_> = BlowupState::history(&reversed_word)
        .iter()
        .map(|s| (s.min_index(), s.max_index(), s.weights()))
        .collect();
    weight_table(&mut out, "blow-up weights a^(i)_j", &main_rows);
    out.push('\n');
    let bar_rows: Vec<_> = BarState::history(&reversed_word)
        .iter()
        .map(|s| (s.min_index(), s.max_index(), s.weights()))
        .collect();
    weight_table(&mut out, "class-T weights abar^(i)_j", &bar_rows);
    out.push('\n');

    let chain = chain_for_pair(pair);
    let _ = writeln!(out, "chain = {chain}");
    let as_is = NegContinuedFraction::new(chain.abs_entries()).expect("chain weights <= -2");
    let reversed = as_is.reversed();
    let _ = writeln!(out, "{as_is} = {}", as_is.eval());
    let _ = writeln!(out, "{reversed} = {}  (reversed)", reversed.eval());
    let lens = chain_to_lens(&chain)?;
    let lens_rev = chain_to_lens(&chain.reversed())?;
    let _ = writeln!(out, "lens: {lens} ~ {lens_rev}");

    let kirby = KirbyDiagram::for_pq(p, q)?;
    let _ = writeln!(
        out,
        "kirby: T({},{}), framing = {}, linking = {}",
        kirby.m, kirby.n, kirby.framing, kirby.linking
    );
    let (det, nd) = IntersectionMatrix::from_chain(&chain).invariants();
    let _ = writeln!(
        out,
        "det = {det}, {}",
        if nd { "negative definite" } else { "NOT negative definite" }
    );
    Ok(out)
}
