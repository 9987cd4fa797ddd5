use crate::cnf::{ClauseSink, EncoderContext};
use crate::Result;

use super::adder::{build_incomplete_sum, counter_width, encode_leq_const};
use super::{degenerate, AtMostK, Outcome};

/// Parallel counter: an incomplete-adder sum of all inputs, narrowed to the
/// bit length of `k`, bounded once by a comparator.
pub fn encode_parallel_counter<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    c: &AtMostK,
) -> Result<Outcome> {
    if let Some(outcome) = degenerate(ctx, c)? {
        return Ok(outcome);
    }
    let k = c.k() as u64;
    let t = build_incomplete_sum(ctx, c.lits(), counter_width(k))?;
    encode_leq_const(ctx, &t, k)?;
    Ok(Outcome::Encoded)
}

#[cfg(test)]
mod tests {
    use super::super::test_util::*;
    use super::super::{build_formula, count_report, EncodingId};
    use alloc::vec;

    #[test]
    fn three_choose_two_hand_trace() {
        // one full adder (sum 4, carry 5), then ¬t1 ∨ ¬t0
        let (f, _) = build_formula(EncodingId::ParallelCounter, 3, 2).unwrap();
        assert_eq!(f.num_clauses(), 8);
        assert_eq!(f.num_vars(), 5);
        assert_eq!(raw(&f).last().unwrap(), &vec![-5, -4]);
        let r = count_report(EncodingId::ParallelCounter, 3, 2).unwrap();
        assert_eq!((r.clauses, r.aux_vars), (8, 2));
        assert!(brute_equivalent(&f, 3, 2));
    }

    #[test]
    fn amo_uses_single_bit_counter() {
        let (f, _) = build_formula(EncodingId::ParallelCounter, 5, 1).unwrap();
        assert!(brute_equivalent(&f, 5, 1));
        // FA(x1,x2,x3), HA(x4,x5), HA of the two sums: one sum bit each,
        // no carry variables at width 1
        let r = count_report(EncodingId::ParallelCounter, 5, 1).unwrap();
        assert_eq!(r.aux_vars, 3);
    }
}
