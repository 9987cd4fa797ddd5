use crate::cnf::{ClauseSink, EncoderContext};
use crate::lit::Lit;
use crate::Result;

use super::pairwise::amo_pairwise;
use super::{require_amo, AtMostK, EncodingId, Outcome};

/// Splits the inputs in two halves with a commander `b` for the first half
/// and `¬b` for the second, then recurses. Falls back to pairwise at `n <= 4`.
pub fn encode_bisect<S: ClauseSink>(ctx: &mut EncoderContext<S>, c: &AtMostK) -> Result<Outcome> {
    require_amo(EncodingId::Bisect, c)?;
    amo_bisect(ctx, c.lits())?;
    Ok(if c.n() == 1 {
        Outcome::TriviallyTrue
    } else {
        Outcome::Encoded
    })
}

fn amo_bisect<S: ClauseSink>(ctx: &mut EncoderContext<S>, xs: &[Lit]) -> Result<()> {
    if xs.len() <= 4 {
        return amo_pairwise(ctx, xs);
    }
    let (left, right) = xs.split_at(xs.len() / 2);
    let b = ctx.fresh_var()?;
    for &x in left {
        ctx.emit_clause(&[!x, b])?;
    }
    for &x in right {
        ctx.emit_clause(&[!x, !b])?;
    }
    amo_bisect(ctx, left)?;
    amo_bisect(ctx, right)
}
