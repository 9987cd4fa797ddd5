use crate::cnf::{ClauseSink, EncoderContext};
use crate::lit::Lit;
use crate::Result;

use super::{require_amo, AtMostK, EncodingId, Outcome};

/// One binary clause `¬xi ∨ ¬xj` per pair `i < j`. No auxiliaries.
pub fn encode_pairwise<S: ClauseSink>(ctx: &mut EncoderContext<S>, c: &AtMostK) -> Result<Outcome> {
    require_amo(EncodingId::Pairwise, c)?;
    amo_pairwise(ctx, c.lits())?;
    Ok(if c.n() == 1 {
        Outcome::TriviallyTrue
    } else {
        Outcome::Encoded
    })
}

pub(crate) fn amo_pairwise<S: ClauseSink>(ctx: &mut EncoderContext<S>, xs: &[Lit]) -> Result<()> {
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            ctx.emit_clause(&[!a, !b])?;
        }
    }
    Ok(())
}
