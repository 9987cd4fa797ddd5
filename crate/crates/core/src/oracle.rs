//! Brute-force checks of encodings: projection equivalence against
//! popcount and arc consistency under unit propagation.

use alloc::vec::Vec;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cnf::CnfFormula;
use crate::encode::{build_formula, EncodingId};
use crate::lit::{Lit, Var};
use crate::propagate::{Assignment, Propagator, UpStatus};
use crate::{Error, Result};

/// Largest `n` for which [`oracle_equivalent`] enumerates all inputs.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Largest `n` for which [`check_ac_by_up`] tries every k-subset.
pub const AC_EXHAUSTIVE_LIMIT: usize = 10;

/// Number of random seeds tried above [`AC_EXHAUSTIVE_LIMIT`].
pub const AC_SAMPLES: usize = 1000;

pub const DEFAULT_AC_SEED: u64 = 0x5eed_a11c;

/// Whether `seed` extends to a model of the propagator's formula: DPLL with
/// unit propagation, branching on the lowest unassigned variable.
pub fn extendable(prop: &Propagator<'_>, seed: &Assignment) -> bool {
    let mut a = seed.clone();
    let mut scratch = Vec::new();
    if prop.propagate(&mut a, &mut scratch) == UpStatus::Conflict {
        return false;
    }
    search(prop, a)
}

fn search(prop: &Propagator<'_>, a: Assignment) -> bool {
    let Some(var) = a.first_unassigned() else {
        return true;
    };
    let mut scratch = Vec::new();
    for lit in [var.positive(), var.negative()] {
        let mut branch = a.clone();
        branch.assign(lit);
        scratch.clear();
        if prop.propagate_from(&mut branch, lit, &mut scratch) == UpStatus::Fixpoint
            && search(prop, branch)
        {
            return true;
        }
    }
    false
}

/// An input assignment on which a formula and `popcount <= k` disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Values of inputs `1..=n`.
    pub inputs: Vec<bool>,
    /// Whether the formula admitted an extension.
    pub extendable: bool,
}

impl Counterexample {
    pub fn popcount(&self) -> usize {
        self.inputs.iter().filter(|&&b| b).count()
    }
}

/// Compares `f` (inputs on variables `1..=n`) with "at most `k` true" on
/// every input assignment; returns the first disagreement.
pub fn find_counterexample(f: &CnfFormula, n: usize, k: usize) -> Result<Option<Counterexample>> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OracleLimit {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let prop = Propagator::new(f);
    for bits in 0u32..1 << n {
        let inputs: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        let lits: Vec<Lit> = inputs
            .iter()
            .enumerate()
            .map(|(i, &b)| Lit::new(Var::new(i as u32 + 1).expect("small"), b))
            .collect();
        let seed = Assignment::from_lits(f.num_vars(), &lits).expect("distinct inputs");
        let ext = extendable(&prop, &seed);
        if ext != (bits.count_ones() as usize <= k) {
            return Ok(Some(Counterexample {
                inputs,
                extendable: ext,
            }));
        }
    }
    Ok(None)
}

/// True iff the encoding of `at most k of 1..=n` is satisfiable over exactly
/// the input assignments with at most `k` ones.
pub fn oracle_equivalent(encoding: EncodingId, n: usize, k: usize) -> Result<bool> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OracleLimit {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let (f, _) = build_formula(encoding, n, k)?;
    Ok(find_counterexample(&f, n, k)?.is_none())
}

/// Evidence that an encoding is not arc consistent under unit propagation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcWitness {
    /// With the inputs in `seed` (1-based) set true, input `input` was left
    /// unassigned.
    Unforced { seed: Vec<u32>, input: u32 },
    /// Setting the inputs in `seed` true led to a conflict, although the
    /// constraint allows it.
    Conflict { seed: Vec<u32> },
}

impl AcWitness {
    pub fn seed(&self) -> &[u32] {
        match self {
            AcWitness::Unforced { seed, .. } | AcWitness::Conflict { seed } => seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcReport {
    pub encoding: EncodingId,
    pub n: usize,
    pub k: usize,
    pub achieves_ac: bool,
    /// Seeds examined (all of them if `exhaustive`).
    pub seeds_tested: usize,
    pub exhaustive: bool,
    pub witness: Option<AcWitness>,
}

/// Sets `k` inputs true and checks that unit propagation forces every other
/// input false; every k-subset for `n <= 10`, otherwise
/// [`AC_SAMPLES`] random ones from [`DEFAULT_AC_SEED`].
pub fn check_ac_by_up(encoding: EncodingId, n: usize, k: usize) -> Result<AcReport> {
    check_ac_by_up_seeded(encoding, n, k, DEFAULT_AC_SEED)
}

pub fn check_ac_by_up_seeded(
    encoding: EncodingId,
    n: usize,
    k: usize,
    rng_seed: u64,
) -> Result<AcReport> {
    let (f, _) = build_formula(encoding, n, k)?;
    let prop = Propagator::new(&f);
    let k_eff = k.min(n);
    let exhaustive = n <= AC_EXHAUSTIVE_LIMIT;

    let mut report = AcReport {
        encoding,
        n,
        k,
        achieves_ac: true,
        seeds_tested: 0,
        exhaustive,
        witness: None,
    };
    let mut check = |subset: &[usize]| -> Option<AcWitness> {
        report.seeds_tested += 1;
        let seed: Vec<u32> = subset.iter().map(|&i| i as u32 + 1).collect();
        let lits: Vec<Lit> = seed
            .iter()
            .map(|&v| Var::new(v).expect("small").positive())
            .collect();
        let mut a = Assignment::from_lits(f.num_vars(), &lits).expect("distinct inputs");
        let mut forced = Vec::new();
        if prop.propagate(&mut a, &mut forced) == UpStatus::Conflict {
            return Some(AcWitness::Conflict { seed });
        }
        (1..=n as u32)
            .find(|&v| a.value(Var::new(v).expect("small")).is_none())
            .map(|input| AcWitness::Unforced { seed, input })
    };

    let witness = if exhaustive {
        let mut found = None;
        for_each_subset(n, k_eff, |s| {
            found = check(s);
            found.is_none()
        });
        found
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        (0..AC_SAMPLES).find_map(|_| {
            let mut s = index::sample(&mut rng, n, k_eff).into_vec();
            s.sort_unstable();
            check(&s)
        })
    };
    report.achieves_ac = witness.is_none();
    report.witness = witness;
    Ok(report)
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order until it
/// returns false.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
