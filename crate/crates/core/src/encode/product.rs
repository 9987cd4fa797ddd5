use alloc::vec::Vec;

use crate::cnf::{ClauseSink, EncoderContext};
use crate::lit::Lit;
use crate::Result;

use super::pairwise::amo_pairwise;
use super::{require_amo, AtMostK, EncodingId, Outcome};

/// Places the inputs row-major on an `m × m` grid (`m = ⌈√n⌉`), with a
/// variable per row and per column, and recurses on both. Cells past `n` are
/// constant false and produce no clauses. Falls back to pairwise at `n <= 4`.
pub fn encode_product<S: ClauseSink>(ctx: &mut EncoderContext<S>, c: &AtMostK) -> Result<Outcome> {
    require_amo(EncodingId::Product, c)?;
    amo_product(ctx, c.lits())?;
    Ok(if c.n() == 1 {
        Outcome::TriviallyTrue
    } else {
        Outcome::Encoded
    })
}

pub(crate) fn ceil_sqrt(n: usize) -> usize {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

fn amo_product<S: ClauseSink>(ctx: &mut EncoderContext<S>, xs: &[Lit]) -> Result<()> {
    if xs.len() <= 4 {
        return amo_pairwise(ctx, xs);
    }
    let m = ceil_sqrt(xs.len());
    let rows = (0..m)
        .map(|_| ctx.fresh_var())
        .collect::<Result<Vec<_>>>()?;
    let cols = (0..m)
        .map(|_| ctx.fresh_var())
        .collect::<Result<Vec<_>>>()?;
    for (idx, &x) in xs.iter().enumerate() {
        ctx.emit_clause(&[!x, rows[idx / m]])?;
        ctx.emit_clause(&[!x, cols[idx % m]])?;
    }
    amo_product(ctx, &rows)?;
    amo_product(ctx, &cols)
}
