//! Unit propagation over a [`CnfFormula`].

use alloc::vec;
use alloc::vec::Vec;

use crate::cnf::CnfFormula;
use crate::lit::{Lit, Var};

/// Partial assignment of the variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<Option<bool>>,
}

impl Assignment {
    pub fn new(num_vars: u32) -> Self {
        Assignment {
            values: vec![None; num_vars as usize],
        }
    }

    /// Assignment making every literal in `lits` true; `None` if two of them
    /// clash or one is out of range.
    pub fn from_lits(num_vars: u32, lits: &[Lit]) -> Option<Self> {
        let mut a = Assignment::new(num_vars);
        for &l in lits {
            if l.var().id() > num_vars || !a.assign(l) {
                return None;
            }
        }
        Some(a)
    }

    pub fn num_vars(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn value(&self, var: Var) -> Option<bool> {
        self.values.get(var.index()).copied().flatten()
    }

    pub fn lit_value(&self, lit: Lit) -> Option<bool> {
        self.value(lit.var()).map(|v| v == lit.is_positive())
    }

    /// Makes `lit` true. Returns false, leaving the assignment unchanged, if
    /// its variable already has the opposite value.
    pub fn assign(&mut self, lit: Lit) -> bool {
        let slot = &mut self.values[lit.var().index()];
        match *slot {
            Some(v) => v == lit.is_positive(),
            None => {
                *slot = Some(lit.is_positive());
                true
            }
        }
    }

    pub fn unassign(&mut self, var: Var) {
        self.values[var.index()] = None;
    }

    /// Literals currently true, in variable order.
    pub fn true_lits(&self) -> impl Iterator<Item = Lit> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|b| Lit::new(Var::new(i as u32 + 1).expect("in range"), b)))
    }

    pub fn first_unassigned(&self) -> Option<Var> {
        self.values
            .iter()
            .position(Option::is_none)
            .map(|i| Var::new(i as u32 + 1).expect("in range"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpStatus {
    Fixpoint,
    Conflict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpOutcome {
    pub status: UpStatus,
    /// Literals derived beyond the seed, in derivation order.
    pub forced: Vec<Lit>,
    /// Seed plus forced literals.
    pub assignment: Assignment,
}

impl UpOutcome {
    pub fn is_conflict(&self) -> bool {
        self.status == UpStatus::Conflict
    }
}

/// Occurrence lists for repeated propagation over one formula.
#[derive(Debug, Clone)]
pub struct Propagator<'a> {
    formula: &'a CnfFormula,
    /// Clause indices per literal, indexed by [`lit_slot`].
    occurs: Vec<Vec<u32>>,
}

fn lit_slot(l: Lit) -> usize {
    2 * l.var().index() + usize::from(!l.is_positive())
}

enum ClauseState {
    Satisfied,
    Unit(Lit),
    Falsified,
    Open,
}

impl<'a> Propagator<'a> {
    pub fn new(formula: &'a CnfFormula) -> Self {
        let mut occurs = vec![Vec::new(); 2 * formula.num_vars() as usize];
        for (i, c) in formula.clauses().iter().enumerate() {
            for &l in c.lits() {
                occurs[lit_slot(l)].push(i as u32);
            }
        }
        Propagator { formula, occurs }
    }

    pub fn formula(&self) -> &'a CnfFormula {
        self.formula
    }

    fn state(&self, clause: usize, a: &Assignment) -> ClauseState {
        let mut unassigned = None;
        let mut open = 0;
        for &l in self.formula.clauses()[clause].lits() {
            match a.lit_value(l) {
                Some(true) => return ClauseState::Satisfied,
                Some(false) => {}
                None => {
                    open += 1;
                    unassigned = Some(l);
                }
            }
        }
        match (open, unassigned) {
            (0, _) => ClauseState::Falsified,
            (1, Some(l)) => ClauseState::Unit(l),
            _ => ClauseState::Open,
        }
    }

    /// Propagates from scratch: every clause is inspected once, then the
    /// consequences of each new literal.
    pub fn propagate(&self, a: &mut Assignment, forced: &mut Vec<Lit>) -> UpStatus {
        let mut queue = Vec::new();
        for i in 0..self.formula.num_clauses() {
            match self.state(i, a) {
                ClauseState::Falsified => return UpStatus::Conflict,
                ClauseState::Unit(l) => {
                    a.assign(l);
                    forced.push(l);
                    queue.push(l);
                }
                _ => {}
            }
        }
        self.drain(a, forced, queue)
    }

    /// Propagates the consequences of `lit`, which must already be true in
    /// `a`, assuming `a` was at a fixpoint before it was set.
    pub fn propagate_from(&self, a: &mut Assignment, lit: Lit, forced: &mut Vec<Lit>) -> UpStatus {
        self.drain(a, forced, vec![lit])
    }

    fn drain(&self, a: &mut Assignment, forced: &mut Vec<Lit>, mut queue: Vec<Lit>) -> UpStatus {
        while let Some(l) = queue.pop() {
            for &ci in &self.occurs[lit_slot(!l)] {
                match self.state(ci as usize, a) {
                    ClauseState::Falsified => return UpStatus::Conflict,
                    ClauseState::Unit(u) => {
                        a.assign(u);
                        forced.push(u);
                        queue.push(u);
                    }
                    _ => {}
                }
            }
        }
        UpStatus::Fixpoint
    }
}

/// Least fixpoint of unit resolution from `seed`, or a conflict.
pub fn unit_propagate(f: &CnfFormula, seed: &Assignment) -> UpOutcome {
    let mut assignment = seed.clone();
    let mut forced = Vec::new();
    let status = Propagator::new(f).propagate(&mut assignment, &mut forced);
    UpOutcome {
        status,
        forced,
        assignment,
    }
}
