use alloc::vec::Vec;

use crate::cnf::{ClauseSink, EncoderContext};
use crate::lit::Lit;
use crate::Result;

use super::{degenerate, AtMostK, Outcome};

/// Unary sequential counter.
///
/// Counter `i` (for the prefix `x1..xi`, `i < n`) has `k` bits where bit `j`
/// true means at least `j` of the prefix are true. Bits are only ever forced
/// upward; the last input is constrained by the overflow clauses alone.
pub fn encode_sequential_counter<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    c: &AtMostK,
) -> Result<Outcome> {
    if let Some(outcome) = degenerate(ctx, c)? {
        return Ok(outcome);
    }
    let xs = c.lits();
    let (n, k) = (c.n(), c.k());

    // counters[i][j] is c_{i+1}^{j+1}
    let mut counters: Vec<Vec<Lit>> = Vec::with_capacity(n - 1);
    for _ in 0..n - 1 {
        counters.push((0..k).map(|_| ctx.fresh_var()).collect::<Result<_>>()?);
    }

    // c_1 = x1: first bit follows x1, higher bits are zero
    ctx.emit_clause(&[!xs[0], counters[0][0]])?;
    for &bit in &counters[0][1..] {
        ctx.emit_clause(&[!bit])?;
    }

    for i in 1..n - 1 {
        let (prev, cur) = (&counters[i - 1], &counters[i]);
        ctx.emit_clause(&[!xs[i], cur[0]])?;
        for j in 0..k {
            ctx.emit_clause(&[!prev[j], cur[j]])?;
        }
        for j in 1..k {
            ctx.emit_clause(&[!xs[i], !prev[j - 1], cur[j]])?;
        }
    }

    // overflow: x_i with k already counted before it
    for i in k..n {
        ctx.emit_clause(&[!xs[i], !counters[i - 1][k - 1]])?;
    }
    Ok(Outcome::Encoded)
}

#[cfg(test)]
mod tests {
    use super::super::test_util::*;
    use super::super::{build_formula, count_report, EncodingId};
    use alloc::vec;

    #[test]
    fn four_choose_two_hand_trace() {
        // c1 = (5,6), c2 = (7,8), c3 = (9,10)
        let (f, _) = build_formula(EncodingId::SequentialCounter, 4, 2).unwrap();
        assert_eq!(
            raw(&f),
            vec![
                vec![-1, 5],
                vec![-6],
                vec![-2, 7],
                vec![-5, 7],
                vec![-6, 8],
                vec![-2, -5, 8],
                vec![-3, 9],
                vec![-7, 9],
                vec![-8, 10],
                vec![-3, -7, 10],
                vec![-3, -8],
                vec![-4, -10],
            ]
        );
        let r = count_report(EncodingId::SequentialCounter, 4, 2).unwrap();
        assert_eq!((r.clauses, r.aux_vars), (12, 6));
        assert!(brute_equivalent(&f, 4, 2));
    }

    #[test]
    fn two_inputs_is_binary_exclusion() {
        let (f, _) = build_formula(EncodingId::SequentialCounter, 2, 1).unwrap();
        assert_eq!(raw(&f), vec![vec![-1, 3], vec![-2, -3]]);
        assert!(brute_equivalent(&f, 2, 1));
    }

    #[test]
    fn closed_form_size() {
        // base k + 2k per middle counter + (n - k) overflow clauses
        for n in 2..=60 {
            for k in 1..n {
                let r = count_report(EncodingId::SequentialCounter, n, k).unwrap();
                assert_eq!(r.clauses, k + 2 * k * (n - 2) + (n - k), "n={n} k={k}");
                assert_eq!(r.aux_vars, (n - 1) * k);
            }
        }
    }
}
