//! Pigeonhole instances: `P` pigeons, `H` holes of capacity `K`.
//!
//! Pigeon `p` in hole `h` is variable `(p - 1) * H + h`. Every pigeon gets
//! an at-least-one clause and an at-most-one constraint over its row; every
//! hole gets an at-most-K constraint over its column.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cnf::{ClauseSink, CnfFormula, EncoderContext};
use crate::encode::{count_report, encode, encode_at_least_one, AtMostK, EncodingId};
use crate::lit::{Lit, Var};
use crate::propagate::Assignment;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PigeonholeInstance {
    pub pigeons: usize,
    pub holes: usize,
    pub capacity: usize,
    /// Encoding of each pigeon's at-most-one.
    pub amo: EncodingId,
    /// Encoding of each hole's at-most-K.
    pub amk: EncodingId,
}

impl PigeonholeInstance {
    pub fn new(
        pigeons: usize,
        holes: usize,
        capacity: usize,
        amo: EncodingId,
        amk: EncodingId,
    ) -> Result<Self> {
        let inst = PigeonholeInstance {
            pigeons,
            holes,
            capacity,
            amo,
            amk,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.pigeons == 0 || self.holes == 0 || self.capacity == 0 {
            return Err(Error::InvalidInstance("P, H and K must be at least 1"));
        }
        if self
            .pigeons
            .checked_mul(self.holes)
            .is_none_or(|v| v >= Var::MAX_ID as usize)
        {
            return Err(Error::VarOverflow);
        }
        if self.amk.amo_only() && self.capacity != 1 {
            return Err(Error::UnsupportedBound {
                encoding: self.amk,
                k: self.capacity,
            });
        }
        Ok(())
    }

    /// Row label in the form `P-H-K`.
    pub fn label(&self) -> alloc::string::String {
        format!("{}-{}-{}", self.pigeons, self.holes, self.capacity)
    }

    pub fn is_satisfiable(&self) -> bool {
        self.pigeons <= self.holes.saturating_mul(self.capacity)
    }

    pub fn num_placement_vars(&self) -> usize {
        self.pigeons * self.holes
    }

    /// Placement variable for pigeon `p` and hole `h`, both 1-based.
    pub fn var(&self, p: usize, h: usize) -> Var {
        debug_assert!((1..=self.pigeons).contains(&p) && (1..=self.holes).contains(&h));
        Var::new(((p - 1) * self.holes + h) as u32).expect("validated size")
    }

    fn row(&self, p: usize) -> Vec<Lit> {
        (1..=self.holes)
            .map(|h| self.var(p, h).positive())
            .collect()
    }

    fn column(&self, h: usize) -> Vec<Lit> {
        (1..=self.pigeons)
            .map(|p| self.var(p, h).positive())
            .collect()
    }

    /// Emits all constraints into `ctx`, which must have been created with
    /// `P * H` problem variables.
    pub fn encode_into<S: ClauseSink>(&self, ctx: &mut EncoderContext<S>) -> Result<()> {
        self.validate()?;
        for p in 1..=self.pigeons {
            let row = self.row(p);
            encode_at_least_one(ctx, &row)?;
            encode(ctx, self.amo, &AtMostK::new(row, 1)?)?;
        }
        for h in 1..=self.holes {
            encode(ctx, self.amk, &AtMostK::new(self.column(h), self.capacity)?)?;
        }
        Ok(())
    }

    /// Number of clauses `generate` will emit, from per-constraint counts.
    pub fn expected_clauses(&self) -> Result<usize> {
        let row = count_report(self.amo, self.holes, 1)?.clauses;
        let col = count_report(self.amk, self.pigeons, self.capacity)?.clauses;
        Ok(self.pigeons * (1 + row) + self.holes * col)
    }

    /// Checks a placement: every pigeon in exactly one hole, no hole above
    /// capacity. Unassigned placement variables count as false.
    pub fn verify_model(&self, model: &Assignment) -> bool {
        let placed = |p, h| model.value(self.var(p, h)) == Some(true);
        let rows_ok =
            (1..=self.pigeons).all(|p| (1..=self.holes).filter(|&h| placed(p, h)).count() == 1);
        let cols_ok = (1..=self.holes)
            .all(|h| (1..=self.pigeons).filter(|&p| placed(p, h)).count() <= self.capacity);
        rows_ok && cols_ok
    }
}

pub fn generate_pigeonhole(inst: &PigeonholeInstance) -> Result<CnfFormula> {
    inst.validate()?;
    let mut ctx = EncoderContext::new(inst.num_placement_vars() as u32)?;
    inst.encode_into(&mut ctx)?;
    let comment = format!(
        "pigeonhole P={} H={} K={} amo={} amk={} bvars=1..{}",
        inst.pigeons,
        inst.holes,
        inst.capacity,
        inst.amo,
        inst.amk,
        inst.num_placement_vars()
    );
    Ok(ctx.finish(vec![comment]))
}
