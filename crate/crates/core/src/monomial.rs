//! Exponent-vector monomials and variable sets.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::IdealError;

/// Largest supported number of ambient variables. Variable sets are stored
/// as a `u64` bitmask.
pub const MAX_VARS: usize = 64;

/// Exponent type. Arithmetic is checked; overflow is reported as
/// [`IdealError::ExponentOverflow`] instead of wrapping.
pub type Exponent = u32;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// Variables are indexed from 0 internally; rendering uses `x1..xn`.
/// The derived `Ord` is ascending lexicographic on exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exponent; 8]>);

impl Monomial {
    pub fn new(exponents: impl Into<Vec<Exponent>>) -> Self {
        Monomial(SmallVec::from_vec(exponents.into()))
    }

    pub fn from_slice(exponents: &[Exponent]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    /// The unit monomial `1` in `vars` variables.
    pub fn one(vars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, vars))
    }

    /// The variable `x_{index+1}`.
    pub fn var(vars: usize, index: usize) -> Self {
        Self::pure_power(vars, index, 1)
    }

    pub fn pure_power(vars: usize, index: usize, exp: Exponent) -> Self {
        let mut m = Self::one(vars);
        m.0[index] = exp;
        m
    }

    /// Product of the variables in `set`.
    pub fn squarefree(vars: usize, set: VarSet) -> Self {
        let mut m = Self::one(vars);
        for i in set.iter() {
            m.0[i] = 1;
        }
        m
    }

    #[inline]
    pub fn vars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> Exponent {
        self.0[index]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        let mut s = VarSet::EMPTY;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                s.insert(i);
            }
        }
        s
    }

    /// `Some(i)` if the monomial is `x_i^a` with `a >= 1`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.vars(), other.vars());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, IdealError> {
        debug_assert_eq!(self.vars(), other.vars());
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(b).ok_or(IdealError::ExponentOverflow)?;
        }
        Ok(Monomial(out))
    }

    /// Multiply by `x_index`.
    pub fn mul_var(&self, index: usize) -> Result<Monomial, IdealError> {
        let mut out = self.clone();
        out.0[index] = out.0[index]
            .checked_add(1)
            .ok_or(IdealError::ExponentOverflow)?;
        Ok(out)
    }

    /// Divide by `x_index`, or `None` when `x_index` does not divide.
    pub fn div_var(&self, index: usize) -> Option<Monomial> {
        if self.0[index] == 0 {
            return None;
        }
        let mut out = self.clone();
        out.0[index] -= 1;
        Some(out)
    }

    /// Exact quotient `self / other`, `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// Set the exponents of every variable outside `keep` to zero.
    pub fn restrict(&self, keep: VarSet) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &e)| if keep.contains(i) { e } else { 0 })
                .collect(),
        )
    }

    pub(crate) fn set_exponent(&mut self, index: usize, exp: Exponent) {
        self.0[index] = exp;
    }

    /// Compare in reverse-lexicographic order with `x_1 > x_2 > ... > x_n`:
    /// `self > other` iff the last nonzero entry of `self - other` is negative.
    pub fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A set of variable indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(pub u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// `{0, .., vars-1}`.
    pub fn full(vars: usize) -> VarSet {
        if vars >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << vars) - 1)
        }
    }

    pub fn singleton(i: usize) -> VarSet {
        VarSet(1u64 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> VarSet {
        let mut s = VarSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Every subset of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VarSet(cur))
        })
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_degree() {
        let m = Monomial::new(vec![3, 1, 0, 2]);
        assert_eq!(m.to_string(), "x1^3*x2*x4^2");
        assert_eq!(m.degree(), 6);
        assert_eq!(Monomial::one(3).to_string(), "1");
    }

    #[test]
    fn divisibility_and_colon() {
        let a = Monomial::new(vec![1, 1, 0]);
        let b = Monomial::new(vec![2, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.colon(&a), Monomial::new(vec![1, 0, 1]));
        assert_eq!(a.colon(&b), Monomial::one(3));
        assert_eq!(b.checked_div(&a), Some(Monomial::new(vec![1, 0, 1])));
        assert_eq!(a.checked_div(&b), None);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Monomial::new(vec![u32::MAX, 0]);
        assert_eq!(
            big.checked_mul(&Monomial::var(2, 0)),
            Err(IdealError::ExponentOverflow)
        );
    }

    #[test]
    fn revlex_matches_convention() {
        // x1x2 > x1x3 > x2x3
        let a = Monomial::new(vec![1, 1, 0]);
        let b = Monomial::new(vec![1, 0, 1]);
        let c = Monomial::new(vec![0, 1, 1]);
        assert_eq!(a.cmp_revlex(&b), Ordering::Greater);
        assert_eq!(b.cmp_revlex(&c), Ordering::Greater);
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = VarSet::from_indices([0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VarSet::EMPTY.subsets().count(), 1);
    }
}
