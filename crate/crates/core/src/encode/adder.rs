//! Binary counters built from half and full adders, plus the comparator
//! that bounds a counter by a constant.
//!
//! Two adder flavours exist. Incomplete adders only imply output 1s from
//! input 1s (3 clauses per half adder, 7 per full adder). Complete adders
//! define their outputs exactly (7 and 10 clauses).

use alloc::vec::Vec;
use core::ops::Not;

use crate::cnf::{ClauseSink, EncoderContext};
use crate::lit::Lit;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdderKind {
    /// Propagates 1s only.
    Incomplete,
    /// Propagates 1s and 0s.
    Complete,
}

/// Unsigned number given by its bits, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryNumber {
    bits: Vec<Lit>,
}

impl BinaryNumber {
    pub fn new(bits: Vec<Lit>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidConstraint(
                "binary number needs at least one bit",
            ));
        }
        Ok(BinaryNumber { bits })
    }

    pub fn from_lit(lit: Lit) -> Self {
        BinaryNumber {
            bits: alloc::vec![lit],
        }
    }

    pub fn bits(&self) -> &[Lit] {
        &self.bits
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    /// Value under an assignment of its bits.
    pub fn value(&self, mut is_true: impl FnMut(Lit) -> bool) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| is_true(b))
            .map(|(i, _)| 1u64 << i)
            .sum()
    }

    fn bit(&self, i: usize) -> Bit {
        self.bits.get(i).map_or(Bit::Const(false), |&l| Bit::Lit(l))
    }
}

/// A literal or a constant, so clauses over bits that are known to be zero
/// can be written uniformly and folded on emission.
#[derive(Debug, Clone, Copy)]
enum Bit {
    Lit(Lit),
    Const(bool),
}

impl Not for Bit {
    type Output = Bit;

    fn not(self) -> Bit {
        match self {
            Bit::Lit(l) => Bit::Lit(!l),
            Bit::Const(v) => Bit::Const(!v),
        }
    }
}

impl From<Lit> for Bit {
    fn from(l: Lit) -> Bit {
        Bit::Lit(l)
    }
}

fn emit<S: ClauseSink>(ctx: &mut EncoderContext<S>, bits: &[Bit]) -> Result<()> {
    let mut lits = Vec::with_capacity(bits.len());
    for &b in bits {
        match b {
            Bit::Const(true) => return Ok(()),
            Bit::Const(false) => {}
            Bit::Lit(l) => lits.push(l),
        }
    }
    ctx.emit_clause(&lits)
}

/// Carry output: a fresh variable, or constant 0 when the carry would leave
/// the counter's width.
fn carry_bit<S: ClauseSink>(ctx: &mut EncoderContext<S>, allowed: bool) -> Result<Bit> {
    Ok(if allowed {
        Bit::Lit(ctx.fresh_var()?)
    } else {
        Bit::Const(false)
    })
}

fn lit_of(b: Bit) -> Option<Lit> {
    match b {
        Bit::Lit(l) => Some(l),
        Bit::Const(_) => None,
    }
}

/// Adds two bits. Returns the sum bit and, when `carry_out` is set, the
/// carry bit; otherwise the carry is forced to 0.
pub fn half_adder<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    kind: AdderKind,
    a: Lit,
    b: Lit,
    carry_out: bool,
) -> Result<(Lit, Option<Lit>)> {
    let s = ctx.fresh_var()?;
    let c = carry_bit(ctx, carry_out)?;
    let (a, b, sb) = (Bit::from(a), Bit::from(b), Bit::from(s));
    match kind {
        AdderKind::Incomplete => {
            emit(ctx, &[!a, !b, c])?;
            emit(ctx, &[!a, b, sb])?;
            emit(ctx, &[a, !b, sb])?;
        }
        AdderKind::Complete => {
            emit(ctx, &[a, b, !sb])?;
            emit(ctx, &[!a, !b, !sb])?;
            emit(ctx, &[a, !b, sb])?;
            emit(ctx, &[!a, b, sb])?;
            emit(ctx, &[!a, !b, c])?;
            emit(ctx, &[a, !c])?;
            emit(ctx, &[b, !c])?;
        }
    }
    Ok((s, lit_of(c)))
}

/// Adds three bits; outputs as for [`half_adder`].
pub fn full_adder<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    kind: AdderKind,
    a: Lit,
    b: Lit,
    cin: Lit,
    carry_out: bool,
) -> Result<(Lit, Option<Lit>)> {
    let s = ctx.fresh_var()?;
    let co = carry_bit(ctx, carry_out)?;
    let (a, b, c, s_) = (Bit::from(a), Bit::from(b), Bit::from(cin), Bit::from(s));
    match kind {
        AdderKind::Incomplete => {
            emit(ctx, &[!a, !b, co])?;
            emit(ctx, &[!a, !c, co])?;
            emit(ctx, &[!b, !c, co])?;
            emit(ctx, &[!a, b, c, s_])?;
            emit(ctx, &[a, !b, c, s_])?;
            emit(ctx, &[a, b, !c, s_])?;
            emit(ctx, &[!a, !b, !c, s_])?;
        }
        AdderKind::Complete => {
            // a minimum prime cover of the full-adder relation
            emit(ctx, &[c, !s_, !co])?;
            emit(ctx, &[!c, s_, co])?;
            emit(ctx, &[a, b, !co])?;
            emit(ctx, &[!a, !b, co])?;
            emit(ctx, &[a, b, c, !s_])?;
            emit(ctx, &[a, !b, c, s_])?;
            emit(ctx, &[a, !b, !c, !s_])?;
            emit(ctx, &[!a, b, c, s_])?;
            emit(ctx, &[!a, b, !c, !s_])?;
            emit(ctx, &[!a, !b, !c, s_])?;
        }
    }
    Ok((s, lit_of(co)))
}

/// Ripple-carry addition of `x` and `y`. The result has at most `max_width`
/// bits; a carry out of the top bit is forced to 0.
pub fn ripple_add<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    kind: AdderKind,
    x: &BinaryNumber,
    y: &BinaryNumber,
    max_width: usize,
) -> Result<BinaryNumber> {
    debug_assert!(x.width() <= max_width && y.width() <= max_width);
    let width = x.width().max(y.width());
    let mut bits = Vec::with_capacity(width + 1);
    let mut carry: Option<Lit> = None;
    for i in 0..width {
        let may_carry = i + 1 < max_width;
        let ops: Vec<Lit> = [x.bits.get(i).copied(), y.bits.get(i).copied(), carry]
            .into_iter()
            .flatten()
            .collect();
        let (s, c) = match ops[..] {
            [a] => (a, None),
            [a, b] => half_adder(ctx, kind, a, b, may_carry)?,
            [a, b, c] => full_adder(ctx, kind, a, b, c, may_carry)?,
            _ => unreachable!("at least one operand per position"),
        };
        bits.push(s);
        carry = c;
    }
    bits.extend(carry);
    Ok(BinaryNumber { bits })
}

/// Bit length of `k`: the smallest width whose counter can hold `k`.
pub fn counter_width(k: u64) -> usize {
    (u64::BITS - k.leading_zeros()) as usize
}

/// Sum of `xs` as a binary counter of at most `max_width` bits, built from
/// incomplete adders: one input is returned as is, two go through a half
/// adder, three through a full adder, and longer inputs are split in halves
/// (first half of length `⌈len/2⌉`) whose sums are added by ripple carry.
///
/// In every model the counter's value is at least the number of true
/// inputs, so bounding the counter from above bounds the inputs.
pub fn build_incomplete_sum<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    xs: &[Lit],
    max_width: usize,
) -> Result<BinaryNumber> {
    if xs.is_empty() || max_width == 0 {
        return Err(Error::InvalidConstraint(
            "sum needs inputs and a positive width",
        ));
    }
    let kind = AdderKind::Incomplete;
    match *xs {
        [a] => Ok(BinaryNumber::from_lit(a)),
        [a, b] => {
            let (s, c) = half_adder(ctx, kind, a, b, max_width > 1)?;
            Ok(BinaryNumber {
                bits: [Some(s), c].into_iter().flatten().collect(),
            })
        }
        [a, b, c] => {
            let (s, co) = full_adder(ctx, kind, a, b, c, max_width > 1)?;
            Ok(BinaryNumber {
                bits: [Some(s), co].into_iter().flatten().collect(),
            })
        }
        _ => {
            let (left, right) = xs.split_at(xs.len().div_ceil(2));
            let l = build_incomplete_sum(ctx, left, max_width)?;
            let r = build_incomplete_sum(ctx, right, max_width)?;
            ripple_add(ctx, kind, &l, &r, max_width)
        }
    }
}

/// Forbids every value of `t` above `k`.
///
/// Bits of `t` above the width of `k` get unit clauses `¬t_i`. Then for each
/// 0-bit `j` of `k`, scanning from the top, one clause says `t_j` cannot be
/// 1 while `t` agrees with every 1-bit of `k` above `j`.
pub fn encode_leq_const<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    t: &BinaryNumber,
    k: u64,
) -> Result<()> {
    let kw = counter_width(k);
    for i in (kw..t.width()).rev() {
        ctx.emit_clause(&[!t.bits[i]])?;
    }
    let mut clause = Vec::with_capacity(kw);
    for j in (0..kw).rev() {
        if k >> j & 1 == 1 {
            continue;
        }
        clause.clear();
        clause.extend(
            (j + 1..kw)
                .rev()
                .filter(|&i| k >> i & 1 == 1)
                .map(|i| !t.bit(i)),
        );
        clause.push(!t.bit(j));
        emit(ctx, &clause)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::test_util::raw;
    use super::*;
    use crate::cnf::CnfFormula;
    use alloc::vec;

    fn holds(f: &CnfFormula, bits: u32) -> bool {
        f.clauses().iter().all(|c| {
            c.lits()
                .iter()
                .any(|l| (bits >> l.var().index() & 1 == 1) == l.is_positive())
        })
    }

    fn var(i: u32) -> Lit {
        crate::lit::Var::new(i).unwrap().positive()
    }

    #[test]
    fn complete_half_adder_truth_table() {
        let mut ctx = EncoderContext::new(2).unwrap();
        let (s, c) = half_adder(&mut ctx, AdderKind::Complete, var(1), var(2), true).unwrap();
        assert_eq!((s, c), (var(3), Some(var(4))));
        let f = ctx.finish(vec![]);
        assert_eq!(f.num_clauses(), 7);
        let models: Vec<u32> = (0..16).filter(|&m| holds(&f, m)).collect();
        assert_eq!(models.len(), 4);
        for m in models {
            let (a, b, s, c) = (m & 1, m >> 1 & 1, m >> 2 & 1, m >> 3 & 1);
            assert_eq!((s, c), (a ^ b, a & b));
        }
    }

    #[test]
    fn complete_full_adder_truth_table() {
        let mut ctx = EncoderContext::new(3).unwrap();
        full_adder(&mut ctx, AdderKind::Complete, var(1), var(2), var(3), true).unwrap();
        let f = ctx.finish(vec![]);
        assert_eq!(f.num_clauses(), 10);
        for m in 0u32..32 {
            let (a, b, c, s, co) = (m & 1, m >> 1 & 1, m >> 2 & 1, m >> 3 & 1, m >> 4 & 1);
            let sum = a + b + c;
            assert_eq!(holds(&f, m), s == sum & 1 && co == sum >> 1, "row {m:05b}");
        }
    }

    #[test]
    fn incomplete_adder_clause_counts() {
        let mut ctx = EncoderContext::new(3).unwrap();
        half_adder(&mut ctx, AdderKind::Incomplete, var(1), var(2), true).unwrap();
        assert_eq!(ctx.sink().len(), 3);
        full_adder(
            &mut ctx,
            AdderKind::Incomplete,
            var(1),
            var(2),
            var(3),
            true,
        )
        .unwrap();
        assert_eq!(ctx.sink().len(), 10);
    }

    #[test]
    fn incomplete_adders_bound_the_sum_from_above() {
        let mut ctx = EncoderContext::new(3).unwrap();
        full_adder(
            &mut ctx,
            AdderKind::Incomplete,
            var(1),
            var(2),
            var(3),
            true,
        )
        .unwrap();
        let f = ctx.finish(vec![]);
        for m in 0u32..32 {
            if holds(&f, m) {
                let inputs = (m & 7).count_ones();
                assert!((m >> 3 & 1) + 2 * (m >> 4 & 1) >= inputs);
            }
        }
    }

    #[test]
    fn dropped_carry_forbids_overflow() {
        let mut ctx = EncoderContext::new(2).unwrap();
        let (_, c) = half_adder(&mut ctx, AdderKind::Complete, var(1), var(2), false).unwrap();
        assert!(c.is_none());
        let f = ctx.finish(vec![]);
        assert_eq!(f.num_vars(), 3);
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
    }

    #[test]
    fn sum_of_one_and_three() {
        let mut ctx = EncoderContext::new(3).unwrap();
        let t = build_incomplete_sum(&mut ctx, &[var(1)], 2).unwrap();
        assert_eq!(t.bits(), &[var(1)]);
        assert_eq!(ctx.sink().len(), 0);
        let t = build_incomplete_sum(&mut ctx, &[var(1), var(2), var(3)], 2).unwrap();
        assert_eq!(t.width(), 2);
        assert_eq!(ctx.sink().len(), 7);
    }

    #[test]
    fn sum_of_four() {
        // HA(x1,x2), HA(x3,x4), then bit 0 through a half adder and bit 1
        // through a full adder whose carry is the third bit
        let mut ctx = EncoderContext::new(4).unwrap();
        let t = build_incomplete_sum(&mut ctx, &[var(1), var(2), var(3), var(4)], 3).unwrap();
        assert_eq!(t.width(), 3);
        assert_eq!(ctx.sink().len(), 3 + 3 + 3 + 7);
        assert_eq!(ctx.num_vars(), 4 + 2 + 2 + 2 + 2);
    }

    #[test]
    fn comparator_examples() {
        let t2 = BinaryNumber::new(vec![var(1), var(2)]).unwrap();
        let mut ctx = EncoderContext::new(3).unwrap();
        encode_leq_const(&mut ctx, &t2, 2).unwrap();
        assert_eq!(raw(&ctx.clone().finish(vec![])), vec![vec![-2, -1]]);

        let t3 = BinaryNumber::new(vec![var(1), var(2), var(3)]).unwrap();
        let mut ctx = EncoderContext::new(3).unwrap();
        encode_leq_const(&mut ctx, &t3, 7).unwrap();
        assert_eq!(ctx.sink().len(), 0);

        let mut ctx = EncoderContext::new(3).unwrap();
        encode_leq_const(&mut ctx, &t3, 0).unwrap();
        assert_eq!(raw(&ctx.finish(vec![])), vec![vec![-3], vec![-2], vec![-1]]);

        // narrow counter against a wide bound: vacuous
        let t1 = BinaryNumber::from_lit(var(1));
        let mut ctx = EncoderContext::new(1).unwrap();
        encode_leq_const(&mut ctx, &t1, 2).unwrap();
        assert_eq!(ctx.sink().len(), 0);
    }

    #[test]
    fn comparator_exact_for_all_small_bounds() {
        for width in 1..=5u32 {
            for k in 0..(1u64 << (width + 1)) {
                let t = BinaryNumber::new((1..=width).map(var).collect()).unwrap();
                let mut ctx = EncoderContext::new(width).unwrap();
                encode_leq_const(&mut ctx, &t, k).unwrap();
                let f = ctx.finish(vec![]);
                for m in 0u32..1 << width {
                    assert_eq!(holds(&f, m), u64::from(m) <= k, "w={width} k={k} t={m}");
                }
            }
        }
    }

    #[test]
    fn widths() {
        assert_eq!(
            [0, 1, 2, 3, 4, 5, 7, 8].map(counter_width),
            [0, 1, 2, 2, 3, 3, 3, 4]
        );
    }
}
