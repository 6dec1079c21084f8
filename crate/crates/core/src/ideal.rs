//! Monomial ideals represented by their minimal generating sets.
//!
//! Every [`MonomialIdeal`] stores `G(I)`, the unique antichain of minimal
//! generators, sorted in descending lexicographic order of exponent vectors.
//! Because `G(I)` is unique, structural equality is ideal equality.
//! The zero ideal is not representable.

use std::collections::HashSet;
use std::fmt;

use crate::error::IdealError;
use crate::monomial::{Exponent, Monomial, VarSet, MAX_VARS};
use crate::prime::MonomialPrime;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

/// Summary statistics of a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealStats {
    pub support: VarSet,
    pub gcd: Monomial,
    pub equigenerated: bool,
    /// Common total degree of the generators, if there is one.
    pub degree: Option<u64>,
    pub squarefree: bool,
    pub full_supported: bool,
}

/// The factorization `I = cofactor * core` with `gcd(core) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stripped {
    pub core: MonomialIdeal,
    pub cofactor: Monomial,
}

/// Reduce `gens` to the divisibility antichain generating the same ideal.
pub fn minimalize(gens: Vec<Monomial>, vars: usize) -> Result<MonomialIdeal, IdealError> {
    if gens.is_empty() {
        return Err(IdealError::Empty);
    }
    if vars > MAX_VARS {
        return Err(IdealError::TooManyVars {
            max: MAX_VARS,
            found: vars,
        });
    }
    if let Some(bad) = gens.iter().find(|g| g.vars() != vars) {
        return Err(IdealError::VarsMismatch {
            expected: vars,
            found: bad.vars(),
        });
    }
    Ok(MonomialIdeal::from_gens_unchecked(vars, antichain(gens)))
}

/// Minimal elements under divisibility, sorted descending lex.
pub(crate) fn antichain(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut keyed: Vec<(u64, Monomial)> = gens.into_iter().map(|g| (g.degree(), g)).collect();
    keyed.sort_unstable();
    keyed.dedup_by(|a, b| a.1 == b.1);

    let mut out: Vec<Monomial> = if keyed.first().map(|k| k.0) == keyed.last().map(|k| k.0) {
        // Single degree: distinct monomials are pairwise incomparable.
        keyed.into_iter().map(|(_, g)| g).collect()
    } else {
        let mut kept: Vec<(u64, VarSet, Monomial)> = Vec::with_capacity(keyed.len());
        for (deg, g) in keyed {
            let supp = g.support();
            let dominated = kept
                .iter()
                .any(|(kd, ks, k)| *kd < deg && ks.is_subset(supp) && k.divides(&g));
            if !dominated {
                kept.push((deg, supp, g));
            }
        }
        kept.into_iter().map(|(_, _, g)| g).collect()
    };
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

impl MonomialIdeal {
    /// Caller guarantees `gens` is a nonempty, canonically sorted antichain.
    pub(crate) fn from_gens_unchecked(vars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(!gens.is_empty());
        MonomialIdeal { vars, gens }
    }

    pub fn new(gens: Vec<Monomial>, vars: usize) -> Result<Self, IdealError> {
        minimalize(gens, vars)
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(vars)],
        }
    }

    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal {
            vars: u.vars(),
            gens: vec![u],
        }
    }

    /// The prime generated by the variables of `p`. The empty prime yields
    /// the unit ideal.
    pub fn from_prime(p: &MonomialPrime) -> Self {
        if p.is_empty() {
            return Self::unit(p.vars());
        }
        let gens = p
            .members()
            .iter()
            .map(|i| Monomial::var(p.vars(), i))
            .collect();
        MonomialIdeal::from_gens_unchecked(p.vars(), antichain(gens))
    }

    /// The maximal ideal `(x_1, .., x_n)`.
    pub fn maximal(vars: usize) -> Self {
        Self::from_prime(&MonomialPrime::maximal(vars))
    }

    #[inline]
    pub fn vars(&self) -> usize {
        self.vars
    }

    #[inline]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    fn check_vars(&self, other_vars: usize) -> Result<(), IdealError> {
        if self.vars != other_vars {
            return Err(IdealError::VarsMismatch {
                expected: self.vars,
                found: other_vars,
            });
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<(), IdealError> {
        if index >= self.vars {
            return Err(IdealError::VarOutOfRange {
                index,
                vars: self.vars,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_vars(other.vars)?;
        let mut seen = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                seen.insert(g.checked_mul(h)?);
            }
        }
        Ok(MonomialIdeal::from_gens_unchecked(
            self.vars,
            antichain(seen.into_iter().collect()),
        ))
    }

    /// `I^k` by repeated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, k: usize) -> Result<MonomialIdeal, IdealError> {
        let mut acc = MonomialIdeal::unit(self.vars);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// The powers `I^1, .., I^k`.
    pub fn powers(&self, k: usize) -> Result<Vec<MonomialIdeal>, IdealError> {
        let mut out = Vec::with_capacity(k);
        let mut acc = self.clone();
        for i in 0..k {
            if i > 0 {
                acc = acc.multiply(self)?;
            }
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// `(I : u)`.
    pub fn colon_monomial(&self, u: &Monomial) -> Result<MonomialIdeal, IdealError> {
        self.check_vars(u.vars())?;
        let gens = self.gens.iter().map(|g| g.colon(u)).collect();
        Ok(MonomialIdeal::from_gens_unchecked(
            self.vars,
            antichain(gens),
        ))
    }

    /// `(I : J)`, the intersection of `(I : w)` over the generators `w` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_vars(other.vars)?;
        let mut acc: Option<MonomialIdeal> = None;
        for w in &other.gens {
            let c = self.colon_monomial(w)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("ideals are nonempty"))
    }

    /// `I[i] = (I : x_i^∞)`, obtained by zeroing the `i`-th exponent.
    pub fn saturate_var(&self, index: usize) -> Result<MonomialIdeal, IdealError> {
        self.check_index(index)?;
        let mut keep = VarSet::full(self.vars);
        keep.remove(index);
        Ok(self.localize(keep))
    }

    /// Saturate by every variable outside `keep`: the localization at the
    /// prime on `keep`, contracted back to the polynomial ring.
    pub fn localize(&self, keep: VarSet) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.restrict(keep)).collect();
        MonomialIdeal::from_gens_unchecked(self.vars, antichain(gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_vars(other.vars)?;
        let mut seen = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                seen.insert(g.lcm(h));
            }
        }
        Ok(MonomialIdeal::from_gens_unchecked(
            self.vars,
            antichain(seen.into_iter().collect()),
        ))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_vars(other.vars)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(MonomialIdeal::from_gens_unchecked(
            self.vars,
            antichain(gens),
        ))
    }

    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    pub fn gcd(&self) -> Monomial {
        let mut it = self.gens.iter();
        let first = it.next().expect("ideals are nonempty").clone();
        it.fold(first, |acc, g| acc.gcd(g))
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<Exponent> {
        let mut out = vec![0; self.vars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Common degree of the generators, if any.
    pub fn degree(&self) -> Option<u64> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.degree().is_some()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_full_supported(&self) -> bool {
        self.support() == VarSet::full(self.vars)
    }

    pub fn stats(&self) -> IdealStats {
        let support = self.support();
        let degree = self.degree();
        IdealStats {
            support,
            gcd: self.gcd(),
            equigenerated: degree.is_some(),
            degree,
            squarefree: self.is_squarefree(),
            full_supported: support == VarSet::full(self.vars),
        }
    }

    /// Split off `gcd(I)`.
    pub fn strip(&self) -> Stripped {
        let cofactor = self.gcd();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.checked_div(&cofactor)
                    .expect("gcd divides every generator")
            })
            .collect();
        Stripped {
            core: MonomialIdeal::from_gens_unchecked(self.vars, antichain(gens)),
            cofactor,
        }
    }

    /// The same generators viewed in a ring with `vars >= self.vars()`
    /// variables; the new variables are appended.
    pub fn extend_vars(&self, vars: usize) -> Result<MonomialIdeal, IdealError> {
        if vars < self.vars {
            return Err(IdealError::VarsMismatch {
                expected: self.vars,
                found: vars,
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e.resize(vars, 0);
                Monomial::new(e)
            })
            .collect();
        minimalize(gens, vars)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_slice(e)
    }

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| m(g)).collect(), vars).unwrap()
    }

    fn height_one_ideal() -> MonomialIdeal {
        ideal(3, &[&[3, 1, 1], &[2, 2, 1], &[3, 2, 0]])
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    pub(crate) fn counterexample() -> MonomialIdeal {
        ideal(
            4,
            &[
                &[1, 1, 1, 0],
                &[0, 2, 1, 0],
                &[0, 1, 2, 0],
                &[1, 1, 0, 1],
                &[0, 2, 0, 1],
                &[0, 1, 0, 2],
                &[1, 0, 1, 1],
                &[0, 0, 2, 1],
                &[0, 0, 1, 2],
                &[0, 1, 1, 1],
            ],
        )
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1, 1], &[2, 1]]).generators(), &[m(&[1, 1])]);
        assert_eq!(height_one_ideal().len(), 3);
        assert_eq!(
            ideal(2, &[&[1, 0], &[0, 1], &[1, 1]]).generators(),
            &[m(&[1, 0]), m(&[0, 1])]
        );
    }

    #[test]
    fn minimalize_errors() {
        assert_eq!(minimalize(vec![], 2), Err(IdealError::Empty));
        assert_eq!(
            minimalize(vec![m(&[1, 0]), m(&[1])], 2),
            Err(IdealError::VarsMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn unit_absorbs_everything() {
        let i = ideal(2, &[&[0, 0], &[3, 1]]);
        assert!(i.is_unit());
        assert!(i.contains(&m(&[5, 7])));
    }

    #[test]
    fn contains_examples() {
        let i = height_one_ideal();
        assert!(!i.contains(&m(&[2, 1, 1])));
        for g in i.generators() {
            assert!(i.contains(&g.mul_var(0).unwrap()));
        }
    }

    #[test]
    fn square_of_triangle() {
        let sq = triangle().power(2).unwrap();
        let expected = ideal(
            3,
            &[
                &[2, 2, 0],
                &[2, 0, 2],
                &[0, 2, 2],
                &[2, 1, 1],
                &[1, 2, 1],
                &[1, 1, 2],
            ],
        );
        assert_eq!(sq, expected);
        assert_eq!(triangle().power(1).unwrap(), triangle());
        assert!(triangle().power(0).unwrap().is_unit());
        assert_eq!(
            triangle().multiply(&MonomialIdeal::unit(3)).unwrap(),
            triangle()
        );
    }

    #[test]
    fn colon_examples() {
        let i = counterexample();
        assert_eq!(
            i.colon_monomial(&m(&[0, 0, 1, 1])).unwrap(),
            MonomialIdeal::maximal(4)
        );
        assert_eq!(i.colon_monomial(&Monomial::one(4)).unwrap(), i);
        assert_eq!(
            triangle().colon_monomial(&m(&[1, 0, 0])).unwrap(),
            ideal(3, &[&[0, 1, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn colon_ideal_examples() {
        let x1x2 = ideal(2, &[&[1, 1]]);
        let max = MonomialIdeal::maximal(2);
        assert_eq!(x1x2.colon_ideal(&max).unwrap(), x1x2);
        let e = counterexample();
        assert_eq!(e.colon_ideal(&MonomialIdeal::unit(4)).unwrap(), e);
        let ee = e.colon_ideal(&e).unwrap();
        assert!(e.is_subset_of(&ee));
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(
            counterexample().saturate_var(0).unwrap(),
            ideal(4, &[&[0, 1, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 1]])
        );
        assert_eq!(
            ideal(2, &[&[2, 1]]).saturate_var(0).unwrap(),
            ideal(2, &[&[0, 1]])
        );
        assert!(matches!(
            triangle().saturate_var(3),
            Err(IdealError::VarOutOfRange { .. })
        ));
    }

    #[test]
    fn intersection_examples() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        let p12 = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let p13 = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let p23 = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let all = p12.intersect(&p13).unwrap().intersect(&p23).unwrap();
        assert_eq!(all, triangle());
        assert_eq!(
            triangle().intersect(&MonomialIdeal::unit(3)).unwrap(),
            triangle()
        );
    }

    #[test]
    fn stats_examples() {
        let s = height_one_ideal().stats();
        assert_eq!(s.gcd, m(&[2, 1, 0]));
        assert_eq!(s.degree, Some(5));
        assert!(s.full_supported);
        assert!(!s.squarefree);

        let s = counterexample().stats();
        assert!(s.gcd.is_one());
        assert_eq!(s.degree, Some(3));

        let s = ideal(3, &[&[1, 1, 0]]).stats();
        assert_eq!(s.support, VarSet::from_indices([0, 1]));
        assert!(s.squarefree);
        assert!(!s.full_supported);
    }

    #[test]
    fn strip_examples() {
        let st = height_one_ideal().strip();
        assert_eq!(st.cofactor, m(&[2, 1, 0]));
        assert_eq!(st.core, ideal(3, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]));

        let st = triangle().strip();
        assert!(st.cofactor.is_one());
        assert_eq!(st.core, triangle());

        let u = m(&[2, 0, 3]);
        let st = MonomialIdeal::principal(u.clone()).strip();
        assert_eq!(st.cofactor, u);
        assert!(st.core.is_unit());
    }
}
