//! At-most-k encodings.
//!
//! Every encoder takes an [`AtMostK`] and an [`EncoderContext`] and appends
//! clauses to the context's sink. Problem literals are used as given;
//! auxiliary variables come from [`EncoderContext::fresh_var`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::cnf::{ClauseCounter, ClauseSink, CnfFormula, EncoderContext};
use crate::lit::{Lit, Var};
use crate::{Error, Result};

pub mod adder;
mod binary_adder;
mod bisect;
mod pairwise;
mod parallel;
mod product;
mod sequential;

pub use adder::{build_incomplete_sum, encode_leq_const, AdderKind, BinaryNumber};
pub use binary_adder::{encode_binary_adder, encode_binary_adder_with, IntermediateBounds};
pub use bisect::encode_bisect;
pub use pairwise::encode_pairwise;
pub use parallel::encode_parallel_counter;
pub use product::encode_product;
pub use sequential::encode_sequential_counter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EncodingId {
    Pairwise,
    Bisect,
    Product,
    SequentialCounter,
    ParallelCounter,
    BinaryAdder,
}

impl EncodingId {
    pub const ALL: [EncodingId; 6] = [
        EncodingId::Pairwise,
        EncodingId::Bisect,
        EncodingId::Product,
        EncodingId::SequentialCounter,
        EncodingId::ParallelCounter,
        EncodingId::BinaryAdder,
    ];

    /// Short lowercase name used on the command line and in DIMACS comments.
    pub fn name(self) -> &'static str {
        match self {
            EncodingId::Pairwise => "pw",
            EncodingId::Bisect => "bs",
            EncodingId::Product => "pd",
            EncodingId::SequentialCounter => "sc",
            EncodingId::ParallelCounter => "pc",
            EncodingId::BinaryAdder => "ba",
        }
    }

    /// True for the encodings that only handle at-most-one.
    pub fn amo_only(self) -> bool {
        matches!(
            self,
            EncodingId::Pairwise | EncodingId::Bisect | EncodingId::Product
        )
    }

    /// Whether `(n, k)` is a combination this encoding accepts.
    pub fn supports(self, n: usize, k: usize) -> bool {
        n >= 1 && (!self.amo_only() || k == 1)
    }

    /// The bounds `k` that [`oracle`](crate::oracle) sweeps treat as
    /// non-degenerate for `n` inputs: `k = 1` for the at-most-one encodings,
    /// `1..n` otherwise.
    pub fn sweep_bounds(self, n: usize) -> core::ops::Range<usize> {
        if n < 2 {
            1..1
        } else if self.amo_only() {
            1..2
        } else {
            1..n
        }
    }
}

impl fmt::Display for EncodingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown encoding `{0}` (expected one of pw, bs, pd, sc, pc, ba)")]
pub struct UnknownEncoding(pub alloc::string::String);

impl FromStr for EncodingId {
    type Err = UnknownEncoding;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        EncodingId::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownEncoding(s.into()))
    }
}

/// The constraint "at most `k` of `lits` are true".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtMostK {
    lits: Vec<Lit>,
    k: usize,
}

impl AtMostK {
    /// Fails on an empty literal list or when two literals share a variable.
    /// `k` may exceed `lits.len()`, in which case the constraint is vacuous.
    pub fn new(lits: Vec<Lit>, k: usize) -> Result<Self> {
        if lits.is_empty() {
            return Err(Error::InvalidConstraint(
                "at-most-k needs at least one literal",
            ));
        }
        let mut vars: Vec<Var> = lits.iter().map(|l| l.var()).collect();
        vars.sort_unstable();
        if vars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidConstraint(
                "literals must have distinct variables",
            ));
        }
        Ok(AtMostK { lits, k })
    }

    /// At most `k` of the variables `1..=n`.
    pub fn over_first(n: usize, k: usize) -> Result<Self> {
        if n as u64 >= u64::from(Var::MAX_ID) {
            return Err(Error::VarOverflow);
        }
        let lits = (1..=n as u32)
            .map(|i| Var::new(i).expect("in range").positive())
            .collect();
        Self::new(lits, k)
    }

    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    pub fn n(&self) -> usize {
        self.lits.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// What an encoder did with a constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Clauses were emitted for a non-degenerate constraint.
    Encoded,
    /// `k >= n`: nothing to enforce, nothing emitted.
    TriviallyTrue,
    /// `k = 0`: every input was forced false by a unit clause.
    AllFalse,
}

/// Rejects `k != 1` for the at-most-one encodings.
pub(crate) fn require_amo(encoding: EncodingId, c: &AtMostK) -> Result<()> {
    if c.k() != 1 {
        return Err(Error::UnsupportedBound { encoding, k: c.k() });
    }
    Ok(())
}

/// Handles `k = 0` and `k >= n` for the counting encodings. Returns `None`
/// when the constraint needs a real encoding.
pub(crate) fn degenerate<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    c: &AtMostK,
) -> Result<Option<Outcome>> {
    if c.k() == 0 {
        for &x in c.lits() {
            ctx.emit_clause(&[!x])?;
        }
        return Ok(Some(Outcome::AllFalse));
    }
    if c.k() >= c.n() {
        return Ok(Some(Outcome::TriviallyTrue));
    }
    Ok(None)
}

pub fn encode<S: ClauseSink>(
    ctx: &mut EncoderContext<S>,
    encoding: EncodingId,
    c: &AtMostK,
) -> Result<Outcome> {
    match encoding {
        EncodingId::Pairwise => encode_pairwise(ctx, c),
        EncodingId::Bisect => encode_bisect(ctx, c),
        EncodingId::Product => encode_product(ctx, c),
        EncodingId::SequentialCounter => encode_sequential_counter(ctx, c),
        EncodingId::ParallelCounter => encode_parallel_counter(ctx, c),
        EncodingId::BinaryAdder => encode_binary_adder(ctx, c),
    }
}

/// Emits the single clause `lits[0] ∨ … ∨ lits[n-1]`.
pub fn encode_at_least_one<S: ClauseSink>(ctx: &mut EncoderContext<S>, lits: &[Lit]) -> Result<()> {
    ctx.emit_clause(lits)
}

/// Comment line recorded at the top of a standalone at-most-k formula.
pub fn header_comment(encoding: EncodingId, n: usize, k: usize) -> alloc::string::String {
    format!("amk encoding={encoding} n={n} k={k} xvars=1..{n}")
}

/// Encodes "at most `k` of variables `1..=n`" into a standalone formula.
pub fn build_formula(encoding: EncodingId, n: usize, k: usize) -> Result<(CnfFormula, Outcome)> {
    let c = AtMostK::over_first(n, k)?;
    let mut ctx = EncoderContext::new(n as u32)?;
    let outcome = encode(&mut ctx, encoding, &c)?;
    Ok((ctx.finish(vec![header_comment(encoding, n, k)]), outcome))
}

/// Exact size of an encoding instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub encoding: EncodingId,
    pub n: usize,
    pub k: usize,
    pub aux_vars: usize,
    pub clauses: usize,
}

/// Runs the encoder against a counting sink.
pub fn count_report(encoding: EncodingId, n: usize, k: usize) -> Result<CountReport> {
    let c = AtMostK::over_first(n, k)?;
    let mut ctx = EncoderContext::with_sink(n as u32, ClauseCounter::default())?;
    encode(&mut ctx, encoding, &c)?;
    Ok(CountReport {
        encoding,
        n,
        k,
        aux_vars: ctx.num_vars() as usize - n,
        clauses: ctx.sink().clauses,
    })
}


#[cfg(test)]
mod tests {
    use super::test_util::*;
    use super::*;

    #[test]
    fn names_round_trip() {
        for e in EncodingId::ALL {
            assert_eq!(e.name().parse::<EncodingId>().unwrap(), e);
        }
        assert_eq!("BA".parse::<EncodingId>().unwrap(), EncodingId::BinaryAdder);
        assert!("tot".parse::<EncodingId>().is_err());
    }

    #[test]
    fn constraint_validation() {
        assert!(AtMostK::new(vec![], 0).is_err());
        assert!(AtMostK::new(vec![lit(1), lit(-1)], 1).is_err());
        assert!(AtMostK::new(vec![lit(1), lit(-2)], 5).is_ok());
    }

    #[test]
    fn amo_only_encodings_reject_other_bounds() {
        for e in [
            EncodingId::Pairwise,
            EncodingId::Bisect,
            EncodingId::Product,
        ] {
            for k in [0, 2, 3] {
                assert_eq!(
                    count_report(e, 5, k),
                    Err(Error::UnsupportedBound { encoding: e, k })
                );
            }
        }
        let err = count_report(EncodingId::Bisect, 3, 2).unwrap_err();
        assert_eq!(
            alloc::string::ToString::to_string(&err),
            "bs supports k=1 only (got k=2)"
        );
    }

    #[test]
    fn degenerate_bounds() {
        for e in [
            EncodingId::SequentialCounter,
            EncodingId::ParallelCounter,
            EncodingId::BinaryAdder,
        ] {
            let (f, o) = build_formula(e, 4, 4).unwrap();
            assert_eq!(
                (o, f.num_clauses(), f.num_vars()),
                (Outcome::TriviallyTrue, 0, 4)
            );
            let (f, o) = build_formula(e, 4, 9).unwrap();
            assert_eq!((o, f.num_clauses()), (Outcome::TriviallyTrue, 0));
            let (f, o) = build_formula(e, 3, 0).unwrap();
            assert_eq!(o, Outcome::AllFalse);
            assert_eq!(raw(&f), vec![vec![-1], vec![-2], vec![-3]]);
            let (f, _) = build_formula(e, 1, 1).unwrap();
            assert_eq!(f.num_clauses(), 0);
        }
    }

    #[test]
    fn at_least_one_clause() {
        let mut ctx = EncoderContext::new(3).unwrap();
        encode_at_least_one(&mut ctx, &[lit(1), lit(2), lit(3)]).unwrap();
        encode_at_least_one(&mut ctx, &[lit(2)]).unwrap();
        let f = ctx.finish(vec![]);
        assert_eq!(raw(&f), vec![vec![1, 2, 3], vec![2]]);
    }

    #[test]
    fn exactly_one_by_composition() {
        for e in EncodingId::ALL {
            for n in 1..=8usize {
                let c = AtMostK::over_first(n, 1).unwrap();
                let mut ctx = EncoderContext::new(n as u32).unwrap();
                encode_at_least_one(&mut ctx, c.lits()).unwrap();
                encode(&mut ctx, e, &c).unwrap();
                let f = ctx.finish(vec![]);
                let aux = f.num_vars() as usize - n;
                for inputs in 0u32..1 << n {
                    let extendable = (0u32..1 << aux).any(|a| {
                        let bits = u64::from(inputs) | (u64::from(a) << n);
                        f.clauses().iter().all(|c| {
                            c.lits()
                                .iter()
                                .any(|l| (bits >> l.var().index() & 1 == 1) == l.is_positive())
                        })
                    });
                    assert_eq!(extendable, inputs.count_ones() == 1, "{e} n={n} {inputs:b}");
                }
            }
        }
    }

    #[test]
    fn header_comment_format() {
        let (f, _) = build_formula(EncodingId::Pairwise, 3, 1).unwrap();
        assert_eq!(
            f.comments(),
            &[alloc::string::String::from(
                "amk encoding=pw n=3 k=1 xvars=1..3"
            )]
        );
    }

    #[test]
    fn every_allocated_variable_is_used() {
        for e in EncodingId::ALL {
            for n in 2..=30 {
                for k in e.sweep_bounds(n) {
                    let (f, _) = build_formula(e, n, k).unwrap();
                    assert_eq!(f.max_referenced_var(), f.num_vars(), "{e} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn count_report_matches_emission() {
        for e in EncodingId::ALL {
            for n in 1..=25 {
                for k in 0..=n + 1 {
                    if !e.supports(n, k) {
                        continue;
                    }
                    let (f, _) = build_formula(e, n, k).unwrap();
                    let r = count_report(e, n, k).unwrap();
                    assert_eq!(r.clauses, f.num_clauses());
                    assert_eq!(r.aux_vars, f.num_vars() as usize - n);
                }
            }
        }
    }
}
