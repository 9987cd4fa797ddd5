use core::fmt;
use core::num::{NonZeroI32, NonZeroU32};
use core::ops::Not;

/// A propositional variable, numbered from 1 as in DIMACS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(NonZeroU32);

impl Var {
    /// Largest id that still fits a signed DIMACS literal.
    pub const MAX_ID: u32 = i32::MAX as u32;

    pub fn new(id: u32) -> Option<Var> {
        if id > Self::MAX_ID {
            return None;
        }
        NonZeroU32::new(id).map(Var)
    }

    pub fn id(self) -> u32 {
        self.0.get()
    }

    /// Zero-based index, handy for dense tables.
    pub fn index(self) -> usize {
        self.0.get() as usize - 1
    }

    pub fn positive(self) -> Lit {
        Lit::new(self, true)
    }

    pub fn negative(self) -> Lit {
        Lit::new(self, false)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A signed variable reference, stored as its DIMACS integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(NonZeroI32);

impl Lit {
    pub fn new(var: Var, positive: bool) -> Lit {
        let id = var.id() as i32;
        let v = if positive { id } else { -id };
        Lit(NonZeroI32::new(v).expect("nonzero var id"))
    }

    pub fn from_dimacs(value: i32) -> Option<Lit> {
        if value == i32::MIN {
            return None;
        }
        NonZeroI32::new(value).map(Lit)
    }

    pub fn to_dimacs(self) -> i32 {
        self.0.get()
    }

    pub fn var(self) -> Var {
        Var(NonZeroU32::new(self.0.get().unsigned_abs()).expect("nonzero literal"))
    }

    pub fn is_positive(self) -> bool {
        self.0.get() > 0
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(-self.0)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn var_bounds() {
        assert!(Var::new(0).is_none());
        assert!(Var::new(Var::MAX_ID + 1).is_none());
        assert_eq!(
            Var::new(Var::MAX_ID).unwrap().negative().to_dimacs(),
            -i32::MAX
        );
        assert!(Lit::from_dimacs(i32::MIN).is_none());
        assert!(Lit::from_dimacs(0).is_none());
    }

    proptest! {
        #[test]
        fn negation_is_an_involution(v in 1..=i32::MAX) {
            let lit = Lit::from_dimacs(v).unwrap();
            prop_assert_eq!(!!lit, lit);
            prop_assert_ne!(!lit, lit);
            prop_assert_eq!((!lit).var(), lit.var());
            prop_assert!(lit.is_positive() && !(!lit).is_positive());
        }
    }
}
