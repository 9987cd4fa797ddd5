//! Compilation of at-most-k cardinality constraints to CNF.
//!
//! Six encodings are provided (pairwise, bisect, product, sequential counter,
//! parallel counter and binary adder), together with a unit-propagation engine
//! and brute-force oracles used to check them. Everything here is `no_std`
//! and only needs `alloc`; file and process IO live in the companion `amk`
//! crate.

#![no_std]

extern crate alloc;

pub mod cnf;
pub mod dimacs;
pub mod encode;
mod error;
pub mod lit;
pub mod oracle;
pub mod pigeonhole;
pub mod propagate;

pub use cnf::{Clause, ClauseCounter, ClauseSink, CnfFormula, EncoderContext};
pub use dimacs::DimacsError;
pub use encode::{count_report, encode, AtMostK, CountReport, EncodingId, Outcome};
pub use error::Error;
pub use lit::{Lit, Var};
pub use oracle::{check_ac_by_up, oracle_equivalent, AcReport, AcWitness};
pub use pigeonhole::PigeonholeInstance;
pub use propagate::{unit_propagate, Assignment, UpOutcome, UpStatus};

pub type Result<T, E = Error> = core::result::Result<T, E>;
