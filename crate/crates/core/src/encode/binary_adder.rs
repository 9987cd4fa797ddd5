use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::cnf::{ClauseSink, EncoderContext};
use crate::Result;

use super::adder::{counter_width, encode_leq_const, ripple_add, AdderKind, BinaryNumber};
use super::{degenerate, AtMostK, Outcome};

/// Which partial sums of the binary-adder encoding get a `<= k` comparator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntermediateBounds {
    /// Every partial sum, as the encoding prescribes.
    #[default]
    All,
    /// Only the final sum. The dropped comparators are implied, so this is
    /// still a correct encoding; it exists for ablation experiments.
    FinalOnly,
}

/// Binary adder: repeatedly adds the two narrowest numbers with complete
/// adders (ties go to the older number) until one remains, bounding each
/// new sum by `k`.
pub fn encode_binary_adder<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    c: &AtMostK,
) -> Result<Outcome> {
    encode_binary_adder_with(ctx, c, IntermediateBounds::All)
}

pub fn encode_binary_adder_with<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    c: &AtMostK,
    bounds: IntermediateBounds,
) -> Result<Outcome> {
    if let Some(outcome) = degenerate(ctx, c)? {
        return Ok(outcome);
    }
    let k = c.k() as u64;
    let width = counter_width(k);

    let mut numbers: Vec<Option<BinaryNumber>> = c
        .lits()
        .iter()
        .map(|&x| Some(BinaryNumber::from_lit(x)))
        .collect();
    let mut queue: BinaryHeap<Reverse<(usize, usize)>> =
        (0..numbers.len()).map(|i| Reverse((1, i))).collect();

    while let (Some(Reverse((_, a))), Some(Reverse((_, b)))) = (queue.pop(), queue.pop()) {
        let x = numbers[a].take().expect("queued once");
        let y = numbers[b].take().expect("queued once");
        let t = ripple_add(ctx, AdderKind::Complete, &x, &y, width)?;
        if bounds == IntermediateBounds::All || queue.is_empty() {
            encode_leq_const(ctx, &t, k)?;
        }
        queue.push(Reverse((t.width(), numbers.len())));
        numbers.push(Some(t));
    }
    Ok(Outcome::Encoded)
}

#[cfg(test)]
mod tests {
    use super::super::test_util::*;
    use super::super::{build_formula, count_report, EncodingId};
    use super::*;
    use alloc::vec;

    fn formula(n: usize, k: usize, bounds: IntermediateBounds) -> crate::CnfFormula {
        let c = AtMostK::over_first(n, k).unwrap();
        let mut ctx = EncoderContext::new(n as u32).unwrap();
        encode_binary_adder_with(&mut ctx, &c, bounds).unwrap();
        ctx.finish(vec![])
    }

    #[test]
    fn two_inputs_bound_one() {
        // complete half adder with the carry folded to 0; sum needs no bound
        let (f, _) = build_formula(EncodingId::BinaryAdder, 2, 1).unwrap();
        assert_eq!(
            raw(&f),
            vec![
                vec![1, 2, -3],
                vec![-1, -2, -3],
                vec![1, -2, 3],
                vec![-1, 2, 3],
                vec![-1, -2]
            ]
        );
        assert!(brute_equivalent(&f, 2, 1));
    }

    #[test]
    fn pairs_narrowest_first() {
        // n = 4, k = 3: (x1+x2), (x3+x4), then the two 2-bit sums
        let f = formula(4, 3, IntermediateBounds::All);
        assert!(brute_equivalent(&f, 4, 3));
        assert_eq!(f.num_vars(), 4 + 2 + 2 + 2 + 1);
    }

    #[test]
    fn final_only_drops_clauses() {
        for n in 3..=10 {
            for k in 1..n {
                let all = count_report(EncodingId::BinaryAdder, n, k).unwrap();
                let f = formula(n, k, IntermediateBounds::FinalOnly);
                assert!(f.num_clauses() <= all.clauses);
                assert_eq!(f.num_vars() as usize, n + all.aux_vars);
            }
        }
        let all = count_report(EncodingId::BinaryAdder, 8, 2).unwrap();
        assert!(formula(8, 2, IntermediateBounds::FinalOnly).num_clauses() < all.clauses);
    }
}
