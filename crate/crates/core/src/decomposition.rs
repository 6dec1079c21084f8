//! Associated and minimal primes of monomial ideals.
//!
//! Three independent routes compute `Ass(I)`:
//!
//! * [`associated_primes`] takes the radicals of an irredundant irreducible
//!   decomposition, built by adding one generator at a time.
//! * [`box_oracle_ass`] scans every monomial `m ∉ I` in the box bounded by
//!   the generator exponents and keeps the colons `(I : m)` that are prime.
//! * [`associated_primes_localized`] tests each candidate prime `P_S` by
//!   saturating away the variables outside `S` and searching for a socle
//!   element of the localized ideal. This is the fast route used for large
//!   powers.

use std::collections::{HashMap, HashSet};

use crate::error::IdealError;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exponent, Monomial, VarSet};
use crate::prime::{AssSet, MonomialPrime};

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ S)` with all `a_i >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    vars: usize,
    /// `(index, exponent)` pairs sorted by index.
    entries: Vec<(usize, Exponent)>,
}

impl IrreducibleComponent {
    pub fn new(vars: usize, mut entries: Vec<(usize, Exponent)>) -> Self {
        entries.sort_unstable();
        debug_assert!(entries.iter().all(|&(i, a)| i < vars && a >= 1));
        IrreducibleComponent { vars, entries }
    }

    pub fn entries(&self) -> &[(usize, Exponent)] {
        &self.entries
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(
            self.vars,
            VarSet::from_indices(self.entries.iter().map(|e| e.0)),
        )
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .entries
            .iter()
            .map(|&(i, a)| Monomial::pure_power(self.vars, i, a))
            .collect();
        MonomialIdeal::new(gens, self.vars).expect("components are nonempty")
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.entries
            .iter()
            .all(|&(i, a)| other.entries.iter().any(|&(j, b)| j == i && b <= a))
    }
}

impl std::fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.to_ideal())
    }
}

impl std::fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<(), IdealError> {
    if ideal.is_unit() {
        Err(IdealError::UnitIdeal)
    } else {
        Ok(())
    }
}

/// A component as a dense vector: `c[i] = a > 0` stands for `x_i^a`, and
/// `c[i] = 0` for a variable that does not occur.
type Dense = Vec<Exponent>;

fn dense_contains(c: &[Exponent], g: &Monomial) -> bool {
    c.iter().zip(g.exponents()).any(|(&a, &e)| a > 0 && e >= a)
}

/// `c ⊆ d` as ideals.
fn dense_subset(c: &[Exponent], d: &[Exponent]) -> bool {
    c.iter().zip(d).all(|(&a, &b)| a == 0 || (b > 0 && b <= a))
}

/// An irredundant irreducible decomposition of a proper ideal.
///
/// Generators are added one at a time. Sums distribute over intersections
/// of monomial ideals, so `(∩ C) + (g) = ∩ (C + (g))`, and when `g ∉ C`
/// the sum `C + (g)` splits as `∩_{j ∈ supp g} (C + (x_j^{g_j}))`.
/// Redundant components are dropped after every step.
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
) -> Result<Vec<IrreducibleComponent>, IdealError> {
    require_proper(ideal)?;
    let vars = ideal.vars();
    let mut gens = ideal.generators().to_vec();
    gens.sort_by_key(Monomial::degree);

    let first = &gens[0];
    let mut comps: Vec<Dense> = first
        .support()
        .iter()
        .map(|j| {
            let mut c = vec![0; vars];
            c[j] = first.exponent(j);
            c
        })
        .collect();

    for g in &gens[1..] {
        let (keep, split): (Vec<Dense>, Vec<Dense>) =
            comps.into_iter().partition(|c| dense_contains(c, g));
        let mut fresh: Vec<Dense> = Vec::new();
        for c in &split {
            for j in g.support().iter() {
                let mut d = c.clone();
                // g ∉ c, so g_j < c_j whenever c_j > 0.
                d[j] = g.exponent(j);
                fresh.push(d);
            }
        }
        fresh.sort_unstable();
        fresh.dedup();
        // A new component is redundant if it contains a kept one or another
        // new one. Kept components stay irredundant: every new component
        // contains a split one, which no kept component contains.
        let minimal: Vec<Dense> = fresh
            .iter()
            .filter(|d| {
                !keep.iter().any(|k| dense_subset(k, d))
                    && !fresh.iter().any(|e| e != *d && dense_subset(e, d))
            })
            .cloned()
            .collect();
        comps = keep;
        comps.extend(minimal);
    }

    let mut out: Vec<IrreducibleComponent> = comps
        .into_iter()
        .map(|c| {
            let entries = c
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| (i, a))
                .collect();
            IrreducibleComponent::new(vars, entries)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `Ass(R/I)` as the radicals of an irredundant irreducible decomposition.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    Ok(irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect())
}

/// Number of monomials scanned by [`box_oracle_ass`].
pub fn box_size(ideal: &MonomialIdeal) -> u128 {
    ideal
        .max_exponents()
        .iter()
        .map(|&e| e as u128 + 1)
        .product()
}

/// Brute-force `Ass(I)`: every prime of the form `(I : m)` with `m` in the
/// exponent box `[0, max_i]`.
pub fn box_oracle_ass(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    require_proper(ideal)?;
    let vars = ideal.vars();
    let bounds = ideal.max_exponents();
    // Generators flattened row-major so the scan does not allocate.
    let flat: Vec<Exponent> = ideal
        .generators()
        .iter()
        .flat_map(|g| g.exponents().iter().copied())
        .collect();
    let mut out = AssSet::new();
    let mut cur = vec![0 as Exponent; vars];
    let mut supports = Vec::with_capacity(ideal.len());
    loop {
        if let Some(p) = colon_prime(&flat, vars, &cur, &mut supports) {
            out.insert(MonomialPrime::new(vars, p));
        }
        // odometer
        let mut k = 0;
        loop {
            if k == vars {
                return Ok(out);
            }
            if cur[k] < bounds[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// `Some(P)` if `m ∉ I` and `(I : m)` is the prime `P`.
fn colon_prime(
    flat: &[Exponent],
    vars: usize,
    m: &[Exponent],
    supports: &mut Vec<u64>,
) -> Option<VarSet> {
    supports.clear();
    let mut linear = 0u64;
    for g in flat.chunks_exact(vars) {
        let mut supp = 0u64;
        let mut degree = 0u64;
        for (i, (&a, &b)) in g.iter().zip(m).enumerate() {
            if a > b {
                supp |= 1 << i;
                degree += (a - b) as u64;
            }
        }
        match degree {
            0 => return None,
            1 => linear |= supp,
            _ => supports.push(supp),
        }
    }
    supports
        .iter()
        .all(|&s| s & linear != 0)
        .then_some(VarSet(linear))
}

/// Inclusion-minimal variable sets meeting the support of every generator.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    require_proper(ideal)?;
    let mut transversals: Vec<VarSet> = vec![VarSet::EMPTY];
    for g in ideal.generators() {
        let edge = g.support();
        let mut next: Vec<VarSet> = Vec::new();
        for &t in &transversals {
            if !t.intersection(edge).is_empty() {
                next.push(t);
            } else {
                for v in edge.iter() {
                    let mut u = t;
                    u.insert(v);
                    next.push(u);
                }
            }
        }
        next.sort_unstable_by_key(|s| (s.len(), s.0));
        next.dedup();
        let mut minimal: Vec<VarSet> = Vec::with_capacity(next.len());
        for s in next {
            if !minimal.iter().any(|m| m.is_subset(s)) {
                minimal.push(s);
            }
        }
        transversals = minimal;
    }
    Ok(transversals
        .into_iter()
        .map(|s| MonomialPrime::new(ideal.vars(), s))
        .collect())
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize, IdealError> {
    Ok(minimal_primes(ideal)?
        .iter()
        .map(MonomialPrime::height)
        .min()
        .expect("a proper ideal has a minimal prime"))
}

/// Whether `𝔪 ∈ Ass(I)`.
pub fn max_ideal_associated(ideal: &MonomialIdeal) -> Result<bool, IdealError> {
    require_proper(ideal)?;
    Ok(socle_witness(ideal, VarSet::full(ideal.vars())).is_some())
}

/// A monomial `m` in the variables `keep` with `m ∉ I` and `x_i m ∈ I` for
/// every `i ∈ keep`, if one exists.
///
/// The generators of `ideal` must only involve variables in `keep`; then a
/// witness `m` gives `(I : m) = (x_i : i ∈ keep)`.
pub fn socle_witness(ideal: &MonomialIdeal, keep: VarSet) -> Option<Monomial> {
    debug_assert!(ideal.support().is_subset(keep));
    if ideal.is_unit() {
        return None;
    }
    if let Some(m) = low_degree_socle(ideal, keep) {
        return Some(m);
    }
    let order: Vec<usize> = keep.iter().collect();
    let mut witness = Monomial::one(ideal.vars());
    let found = SocleSearch { order: &order }.run(
        ideal.generators().to_vec(),
        Vec::new(),
        order.len(),
        &mut witness,
    );
    found.then_some(witness)
}

/// For an ideal generated in degree `d`, look for socle elements of degree
/// `d - 1` of the form `g / x_i`. A quick positive check only.
fn low_degree_socle(ideal: &MonomialIdeal, keep: VarSet) -> Option<Monomial> {
    ideal.degree()?;
    let gens: HashSet<&Monomial> = ideal.generators().iter().collect();
    for g in ideal.generators() {
        for i in g.support().iter() {
            let m = g.div_var(i).expect("i in support");
            let all_in = keep
                .iter()
                .all(|j| m.mul_var(j).map(|u| gens.contains(&u)).unwrap_or(false));
            if all_in {
                return Some(m);
            }
        }
    }
    None
}

struct SocleSearch<'a> {
    order: &'a [usize],
}

/// Keep the generators with `x_v`-exponent at most `a`, with that exponent
/// cleared.
fn slice(gens: &[Monomial], v: usize, a: Exponent) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponent(v) <= a)
        .map(|g| {
            let mut h = g.clone();
            h.set_exponent(v, 0);
            h
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl SocleSearch<'_> {
    /// Find `m` in the first `depth` variables of `order` with `m ∉ A`,
    /// `x_i m ∈ A` for those variables, and `m ∈ B` for every `B` in `bs`.
    /// Variables beyond `depth` have already been sliced away.
    fn run(
        &self,
        a: Vec<Monomial>,
        bs: Vec<Vec<Monomial>>,
        depth: usize,
        witness: &mut Monomial,
    ) -> bool {
        if a.iter().any(Monomial::is_one) || bs.iter().any(Vec::is_empty) {
            return false;
        }
        if depth == 0 {
            // `a` has no unit generator, so it is the zero ideal here, and
            // every `B` contains 1.
            return a.is_empty();
        }
        let v = self.order[depth - 1];
        let mut values: Vec<Exponent> =
            a.iter().map(|g| g.exponent(v)).filter(|&e| e > 0).collect();
        values.sort_unstable();
        values.dedup();
        for e in values {
            let lower = slice(&a, v, e - 1);
            let mut next_bs: Vec<Vec<Monomial>> = bs.iter().map(|b| slice(b, v, e - 1)).collect();
            next_bs.push(slice(&a, v, e));
            if self.run(lower, next_bs, depth - 1, witness) {
                witness.set_exponent(v, e - 1);
                return true;
            }
        }
        false
    }
}

/// `Ass(I)` by testing every candidate prime on the support of `I`
/// through localization and a socle search.
pub fn associated_primes_localized(ideal: &MonomialIdeal) -> Result<AssSet, IdealError> {
    require_proper(ideal)?;
    let vars = ideal.vars();
    let mut cache: HashMap<VarSet, bool> = HashMap::new();
    let mut out = AssSet::new();
    for s in ideal.support().subsets() {
        if s.is_empty() {
            continue;
        }
        let local = ideal.localize(s);
        if local.is_unit() {
            continue;
        }
        let hit = *cache
            .entry(s)
            .or_insert_with(|| socle_witness(&local, s).is_some());
        if hit {
            out.insert(MonomialPrime::new(vars, s));
        }
    }
    Ok(out)
}

/// `Ass(I^k)` through the localized route, using that localization
/// commutes with powers: `(I^k)_S = (I_S)^k`.
pub fn associated_primes_of_power(ideal: &MonomialIdeal, k: usize) -> Result<AssSet, IdealError> {
    require_proper(ideal)?;
    let vars = ideal.vars();
    let mut out = AssSet::new();
    for s in ideal.support().subsets() {
        if s.is_empty() {
            continue;
        }
        let local = ideal.localize(s);
        if local.is_unit() {
            continue;
        }
        let local_power = local.power(k)?;
        if socle_witness(&local_power, s).is_some() {
            out.insert(MonomialPrime::new(vars, s));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::minimalize;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| Monomial::from_slice(g)).collect(), vars).unwrap()
    }

    fn prime(vars: usize, members: &[usize]) -> MonomialPrime {
        MonomialPrime::new(vars, VarSet::from_indices(members.iter().copied()))
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    fn intersect_all(comps: &[IrreducibleComponent]) -> MonomialIdeal {
        comps
            .iter()
            .map(IrreducibleComponent::to_ideal)
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let d = irreducible_decomposition(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(
            d,
            vec![
                IrreducibleComponent::new(2, vec![(0, 1)]),
                IrreducibleComponent::new(2, vec![(1, 1)]),
            ]
        );

        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.contains(&IrreducibleComponent::new(2, vec![(0, 1)])));
        assert!(d.contains(&IrreducibleComponent::new(2, vec![(0, 2), (1, 1)])));
        assert_eq!(intersect_all(&d), i);

        let d = irreducible_decomposition(&triangle()).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(intersect_all(&d), triangle());
    }

    #[test]
    fn decomposition_rejects_unit() {
        assert_eq!(
            irreducible_decomposition(&MonomialIdeal::unit(2)),
            Err(IdealError::UnitIdeal)
        );
        assert_eq!(
            box_oracle_ass(&MonomialIdeal::unit(2)),
            Err(IdealError::UnitIdeal)
        );
    }

    #[test]
    fn decomposition_is_irredundant() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 2, 1], &[0, 1, 3], &[3, 0, 2]]);
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(intersect_all(&d), i);
        for k in 0..d.len() {
            let rest: Vec<_> = d
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, c)| c.clone())
                .collect();
            if !rest.is_empty() {
                assert_ne!(intersect_all(&rest), i);
            }
        }
    }

    #[test]
    fn triangle_ass() {
        let expected: AssSet = [prime(3, &[0, 1]), prime(3, &[0, 2]), prime(3, &[1, 2])]
            .into_iter()
            .collect();
        assert_eq!(associated_primes(&triangle()).unwrap(), expected);
        assert_eq!(box_oracle_ass(&triangle()).unwrap(), expected);
        assert_eq!(associated_primes_localized(&triangle()).unwrap(), expected);

        let sq = triangle().power(2).unwrap();
        let mut with_max = expected.clone();
        with_max.insert(MonomialPrime::maximal(3));
        assert_eq!(box_oracle_ass(&sq).unwrap(), with_max);
        assert_eq!(associated_primes(&sq).unwrap(), with_max);
        assert_eq!(
            sq.colon_monomial(&Monomial::from_slice(&[1, 1, 1]))
                .unwrap(),
            MonomialIdeal::maximal(3)
        );
    }

    #[test]
    fn prime_is_its_own_ass() {
        let p = prime(4, &[0, 2]);
        let i = MonomialIdeal::from_prime(&p);
        let expected: AssSet = [p].into_iter().collect();
        assert_eq!(associated_primes(&i).unwrap(), expected);
        assert_eq!(box_oracle_ass(&i).unwrap(), expected);
    }

    #[test]
    fn heights() {
        let e12 = ideal(3, &[&[3, 1, 1], &[2, 2, 1], &[3, 2, 0]]);
        assert_eq!(height(&e12).unwrap(), 1);
        assert!(minimal_primes(&e12).unwrap().contains(&prime(3, &[0])));
        let e13 = ideal(
            4,
            &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]],
        );
        assert_eq!(height(&e13).unwrap(), 2);
        assert_eq!(height(&MonomialIdeal::maximal(5)).unwrap(), 5);
    }

    #[test]
    fn maximal_ideal_membership() {
        let e219 = crate::fixtures::counterexample();
        assert!(max_ideal_associated(&e219).unwrap());
        assert!(associated_primes(&e219).unwrap().contains_maximal());
        assert!(!max_ideal_associated(&triangle()).unwrap());
        assert!(max_ideal_associated(&triangle().power(2).unwrap()).unwrap());
        assert!(!max_ideal_associated(&ideal(3, &[&[2, 1, 1]])).unwrap());
    }

    #[test]
    fn socle_witness_is_a_witness() {
        let sq = triangle().power(2).unwrap();
        let m = socle_witness(&sq, VarSet::full(3)).unwrap();
        assert_eq!(sq.colon_monomial(&m).unwrap(), MonomialIdeal::maximal(3));
        // non-equigenerated input exercises the slice search
        let i = ideal(2, &[&[3, 0], &[1, 1], &[0, 2]]);
        let m = socle_witness(&i, VarSet::full(2)).unwrap();
        assert_eq!(i.colon_monomial(&m).unwrap(), MonomialIdeal::maximal(2));
    }
}
