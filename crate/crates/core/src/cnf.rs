//! Clauses, formulas and the encoder context that hands out fresh variables.

use alloc::string::String;
use alloc::vec::Vec;

use crate::lit::{Lit, Var};
use crate::{Error, Result};

/// A non-empty disjunction of literals with no duplicates and no
/// complementary pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause(Vec<Lit>);

impl Clause {
    /// Builds a clause, removing repeated literals (first occurrence wins).
    ///
    /// Returns `Ok(None)` for a tautology and `Err(Error::EmptyClause)` when
    /// `lits` is empty.
    pub fn new(lits: &[Lit]) -> Result<Option<Clause>> {
        if lits.is_empty() {
            return Err(Error::EmptyClause);
        }
        let mut sorted = lits.to_vec();
        sorted.sort_unstable_by_key(|l| (l.var(), l.is_positive()));
        let mut has_dup = false;
        for w in sorted.windows(2) {
            if w[0].var() == w[1].var() {
                if w[0] != w[1] {
                    return Ok(None);
                }
                has_dup = true;
            }
        }
        if !has_dup {
            return Ok(Some(Clause(lits.to_vec())));
        }
        let mut out: Vec<Lit> = Vec::with_capacity(lits.len());
        for &l in lits {
            if !out.contains(&l) {
                out.push(l);
            }
        }
        Ok(Some(Clause(out)))
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; clauses are never empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_var(&self) -> Var {
        self.0
            .iter()
            .map(|l| l.var())
            .max()
            .expect("clause is non-empty")
    }
}

/// Destination for clauses produced by an encoder.
pub trait ClauseSink {
    fn add_clause(&mut self, clause: Clause);
}

impl ClauseSink for Vec<Clause> {
    fn add_clause(&mut self, clause: Clause) {
        self.push(clause);
    }
}

/// Sink that only tallies what it receives.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ClauseCounter {
    pub clauses: usize,
    pub literals: usize,
}

impl ClauseSink for ClauseCounter {
    fn add_clause(&mut self, clause: Clause) {
        self.clauses += 1;
        self.literals += clause.len();
    }
}

/// Fresh-variable allocator plus clause sink.
///
/// Problem variables occupy ids `1..=n`; every call to
/// [`fresh_var`](Self::fresh_var) hands out the next id after them.
#[derive(Debug, Clone)]
pub struct EncoderContext<S = Vec<Clause>> {
    next_var: u32,
    sink: S,
}

impl EncoderContext<Vec<Clause>> {
    pub fn new(num_problem_vars: u32) -> Result<Self> {
        Self::with_sink(num_problem_vars, Vec::new())
    }

    /// Closes the context into a formula over every allocated variable.
    pub fn finish(self, comments: Vec<String>) -> CnfFormula {
        CnfFormula {
            num_vars: self.next_var - 1,
            clauses: self.sink,
            comments,
        }
    }
}

impl<S: ClauseSink> EncoderContext<S> {
    pub fn with_sink(num_problem_vars: u32, sink: S) -> Result<Self> {
        if num_problem_vars >= Var::MAX_ID {
            return Err(Error::VarOverflow);
        }
        Ok(EncoderContext {
            next_var: num_problem_vars + 1,
            sink,
        })
    }

    /// Id the next call to `fresh_var` will return.
    pub fn next_var(&self) -> u32 {
        self.next_var
    }

    /// Number of variables allocated so far, problem variables included.
    pub fn num_vars(&self) -> u32 {
        self.next_var - 1
    }

    pub fn fresh_var(&mut self) -> Result<Lit> {
        let var = Var::new(self.next_var).ok_or(Error::VarOverflow)?;
        self.next_var += 1;
        Ok(var.positive())
    }

    /// Appends `lits` as a clause. Duplicates are removed and tautologies are
    /// dropped without error.
    pub fn emit_clause(&mut self, lits: &[Lit]) -> Result<()> {
        debug_assert!(lits.iter().all(|l| l.var().id() < self.next_var));
        if let Some(clause) = Clause::new(lits)? {
            self.sink.add_clause(clause);
        }
        Ok(())
    }

    pub fn sink(&self) -> &S {
        &self.sink
    }

    pub fn into_sink(self) -> S {
        self.sink
    }
}

/// A finalized CNF formula.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
    comments: Vec<String>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>, comments: Vec<String>) -> Result<Self> {
        if num_vars > Var::MAX_ID {
            return Err(Error::VarOverflow);
        }
        if clauses.iter().any(|c| c.max_var().id() > num_vars) {
            return Err(Error::InvalidConstraint(
                "clause references a variable beyond num_vars",
            ));
        }
        Ok(CnfFormula {
            num_vars,
            clauses,
            comments,
        })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn comments(&self) -> &[String] {
        &self.comments
    }

    /// Largest variable id any clause mentions (0 for no clauses).
    pub fn max_referenced_var(&self) -> u32 {
        self.clauses
            .iter()
            .map(|c| c.max_var().id())
            .max()
            .unwrap_or(0)
    }

    /// Copy of the formula with clause `index` deleted.
    pub fn without_clause(&self, index: usize) -> CnfFormula {
        let mut clauses = self.clauses.clone();
        clauses.remove(index);
        CnfFormula {
            num_vars: self.num_vars,
            clauses,
            comments: self.comments.clone(),
        }
    }

    /// Copy of the formula keeping only the clauses accepted by `keep`.
    pub fn retain_clauses(&self, mut keep: impl FnMut(usize, &Clause) -> bool) -> CnfFormula {
        let clauses = self
            .clauses
            .iter()
            .enumerate()
            .filter(|(i, c)| keep(*i, c))
            .map(|(_, c)| c.clone())
            .collect();
        CnfFormula {
            num_vars: self.num_vars,
            clauses,
            comments: self.comments.clone(),
        }
    }
}
