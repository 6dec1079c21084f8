//! Monomial primes `(x_i : i ∈ S)` and sets of them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::monomial::VarSet;

/// The prime ideal generated by a subset of the variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    vars: usize,
    members: VarSet,
}

impl MonomialPrime {
    pub fn new(vars: usize, members: VarSet) -> Self {
        debug_assert!(members.is_subset(VarSet::full(vars)));
        MonomialPrime { vars, members }
    }

    /// `𝔪 = (x_1, .., x_n)`.
    pub fn maximal(vars: usize) -> Self {
        MonomialPrime::new(vars, VarSet::full(vars))
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn members(&self) -> VarSet {
        self.members
    }

    pub fn height(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.members == VarSet::full(self.vars)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.members.contains(i)
    }
}

/// Canonical order: by height, then by the sorted member list.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .cmp(&other.vars)
            .then(self.height().cmp(&other.height()))
            .then_with(|| self.members.iter().cmp(other.members.iter()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A deduplicated, canonically ordered set of monomial primes.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AssSet(BTreeSet<MonomialPrime>);

impl AssSet {
    pub fn new() -> Self {
        AssSet(BTreeSet::new())
    }

    pub fn insert(&mut self, p: MonomialPrime) -> bool {
        self.0.insert(p)
    }

    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.0.contains(p)
    }

    pub fn contains_maximal(&self) -> bool {
        self.0.iter().any(MonomialPrime::is_maximal)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &AssSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &AssSet) -> AssSet {
        AssSet(self.0.union(&other.0).copied().collect())
    }

    /// The set without `𝔪`.
    pub fn without_maximal(&self) -> AssSet {
        AssSet(self.0.iter().filter(|p| !p.is_maximal()).copied().collect())
    }
}

impl FromIterator<MonomialPrime> for AssSet {
    fn from_iter<T: IntoIterator<Item = MonomialPrime>>(iter: T) -> Self {
        AssSet(iter.into_iter().collect())
    }
}

impl Extend<MonomialPrime> for AssSet {
    fn extend<T: IntoIterator<Item = MonomialPrime>>(&mut self, iter: T) {
        self.0.extend(iter)
    }
}

impl fmt::Display for AssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for AssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
