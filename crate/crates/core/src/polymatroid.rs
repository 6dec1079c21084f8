//! Polymatroidal ideals: exchange properties, constructors, the linear
//! relation graph and the analytic spread.

use std::collections::{BTreeSet, HashSet};

use crate::error::PolymatroidError;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Exponent, Monomial, VarSet};
use crate::prime::MonomialPrime;

/// Equigenerated in degree `d`: a degree-`d` monomial lies in the ideal iff
/// it is a minimal generator.
fn generator_set(ideal: &MonomialIdeal) -> HashSet<&Monomial> {
    ideal.generators().iter().collect()
}

/// Exchange property: for all `u, v ∈ G(I)` and `i` with
/// `deg_i(u) > deg_i(v)` there is `j` with `deg_j(u) < deg_j(v)` and
/// `x_j u / x_i ∈ I`. Ideals not generated in a single degree are rejected.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    if !ideal.is_equigenerated() {
        return false;
    }
    let set = generator_set(ideal);
    let gens = ideal.generators();
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            for i in 0..ideal.vars() {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let w = u.div_var(i).expect("deg_i(u) > 0");
                let ok = (0..ideal.vars()).any(|j| {
                    u.exponent(j) < v.exponent(j)
                        && w.mul_var(j).map(|x| set.contains(&x)).unwrap_or(false)
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree() && is_polymatroidal(ideal)
}

/// Strong exchange: every admissible swap `x_j u / x_i` is itself a
/// minimal generator.
pub fn has_strong_exchange(ideal: &MonomialIdeal) -> bool {
    if !ideal.is_equigenerated() {
        return false;
    }
    let set = generator_set(ideal);
    let n = ideal.vars();
    let gens = ideal.generators();
    for u in gens {
        for v in gens {
            for i in (0..n).filter(|&i| u.exponent(i) > v.exponent(i)) {
                let w = u.div_var(i).expect("deg_i(u) > 0");
                for j in (0..n).filter(|&j| u.exponent(j) < v.exponent(j)) {
                    match w.mul_var(j) {
                        Ok(x) if set.contains(&x) => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// The Veronese-type ideal `I(d; a_1..a_n)`: all degree-`d` monomials with
/// `deg_j <= a_j`.
pub fn veronese_type(
    vars: usize,
    degree: u32,
    caps: &[Exponent],
) -> Result<MonomialIdeal, PolymatroidError> {
    if caps.len() != vars {
        return Err(PolymatroidError::CapsLength {
            expected: vars,
            found: caps.len(),
        });
    }
    if let Some(&cap) = caps.iter().find(|&&a| a < 1 || a > degree) {
        return Err(PolymatroidError::BadCap { cap, degree });
    }
    capped_monomials(vars, degree, caps)
}

/// Every degree-`degree` monomial with `deg_j <= caps[j]`, without the
/// `1 <= a_j <= d` restriction of Veronese type (zero caps are allowed).
pub fn capped_monomials(
    vars: usize,
    degree: u32,
    caps: &[Exponent],
) -> Result<MonomialIdeal, PolymatroidError> {
    let sum: u64 = caps.iter().map(|&a| a as u64).sum();
    if sum < degree as u64 {
        return Err(PolymatroidError::CapsTooSmall { sum, degree });
    }
    let mut gens = Vec::new();
    let mut cur = vec![0 as Exponent; vars];
    enumerate_capped(&mut cur, 0, degree, caps, &mut gens);
    Ok(minimalize(gens, vars)?)
}

fn enumerate_capped(
    cur: &mut Vec<Exponent>,
    pos: usize,
    remaining: u32,
    caps: &[Exponent],
    out: &mut Vec<Monomial>,
) {
    if pos == cur.len() {
        if remaining == 0 {
            out.push(Monomial::from_slice(cur));
        }
        return;
    }
    let tail: u64 = caps[pos + 1..].iter().map(|&a| a as u64).sum();
    let hi = caps[pos].min(remaining);
    for e in 0..=hi {
        if (remaining - e) as u64 > tail {
            continue;
        }
        cur[pos] = e;
        enumerate_capped(cur, pos + 1, remaining - e, caps, out);
    }
    cur[pos] = 0;
}

/// The product of the given primes.
pub fn transversal(primes: &[MonomialPrime]) -> Result<MonomialIdeal, PolymatroidError> {
    let first = primes.first().ok_or(PolymatroidError::NoPrimes)?;
    let mut acc = MonomialIdeal::from_prime(first);
    for p in &primes[1..] {
        acc = acc.multiply(&MonomialIdeal::from_prime(p))?;
    }
    Ok(acc)
}

/// The linear relation graph `Γ_I`: `{i, j}` is an edge iff
/// `x_i u_k = x_j u_l` for some minimal generators `u_k, u_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGraph {
    pub vars: usize,
    pub vertices: VarSet,
    /// Edges as `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub components: Vec<VarSet>,
}

impl RelationGraph {
    /// Number of vertices, `r`.
    pub fn r(&self) -> usize {
        self.vertices.len()
    }

    /// Number of connected components, `s`.
    pub fn s(&self) -> usize {
        self.components.len()
    }
}

pub fn relation_graph(ideal: &MonomialIdeal) -> RelationGraph {
    let n = ideal.vars();
    let set = generator_set(ideal);
    let mut edges = BTreeSet::new();
    // x_i u = x_j v  <=>  v = u * x_i / x_j
    for u in ideal.generators() {
        for j in u.support().iter() {
            let w = u.div_var(j).expect("j in support");
            for i in (0..n).filter(|&i| i != j) {
                if let Ok(v) = w.mul_var(i) {
                    if set.contains(&v) {
                        edges.insert((i.min(j), i.max(j)));
                    }
                }
            }
        }
    }

    let mut vertices = VarSet::EMPTY;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for &(i, j) in &edges {
        vertices.insert(i);
        vertices.insert(j);
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut by_root: Vec<(usize, VarSet)> = Vec::new();
    for v in vertices.iter() {
        let root = find(&mut parent, v);
        match by_root.iter_mut().find(|(r, _)| *r == root) {
            Some((_, c)) => c.insert(v),
            None => by_root.push((root, VarSet::singleton(v))),
        }
    }
    let components = by_root.into_iter().map(|(_, c)| c).collect();
    RelationGraph {
        vars: n,
        vertices,
        edges,
        components,
    }
}

/// `ℓ(I) = r - s + 1` from the linear relation graph. Only defined here for
/// polymatroidal ideals; an empty graph gives `ℓ = 1`.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize, PolymatroidError> {
    if !is_polymatroidal(ideal) {
        return Err(PolymatroidError::NotPolymatroidal);
    }
    let g = relation_graph(ideal);
    Ok(g.r() + 1 - g.s())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| Monomial::from_slice(g)).collect(), vars).unwrap()
    }

    fn prime(vars: usize, members: &[usize]) -> MonomialPrime {
        MonomialPrime::new(vars, VarSet::from_indices(members.iter().copied()))
    }

    #[test]
    fn exchange_examples() {
        assert!(is_polymatroidal(&fixtures::counterexample()));
        assert!(!is_polymatroidal(&ideal(2, &[&[2, 0], &[0, 2]])));
        assert!(is_polymatroidal(
            &veronese_type(4, 3, &[2, 1, 3, 2]).unwrap()
        ));
        assert!(!is_polymatroidal(&ideal(2, &[&[2, 0], &[0, 1]])));
    }

    #[test]
    fn matroidal_examples() {
        assert!(is_matroidal(&fixtures::squarefree_veronese()));
        assert!(!is_matroidal(&fixtures::counterexample()));
        assert!(!is_matroidal(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])));
    }

    #[test]
    fn strong_exchange_examples() {
        assert!(has_strong_exchange(&fixtures::triangle()));
        assert!(has_strong_exchange(&ideal(3, &[&[2, 1, 0]])));
        assert!(has_strong_exchange(
            &veronese_type(4, 2, &[1, 1, 1, 1]).unwrap()
        ));
        assert!(!has_strong_exchange(&fixtures::counterexample()));
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(
            veronese_type(3, 2, &[1, 1, 1]).unwrap(),
            fixtures::triangle()
        );
        assert_eq!(
            veronese_type(4, 3, &[1, 1, 1, 1]).unwrap(),
            fixtures::squarefree_veronese()
        );
        assert_eq!(
            veronese_type(2, 2, &[2, 1]).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1]])
        );
        assert!(matches!(
            veronese_type(3, 4, &[1, 1, 1]),
            Err(PolymatroidError::CapsTooSmall { .. })
        ));
        assert!(matches!(
            veronese_type(2, 2, &[0, 2]),
            Err(PolymatroidError::BadCap { .. })
        ));
    }

    #[test]
    fn transversal_examples() {
        let t = transversal(&[prime(5, &[0, 1]), prime(5, &[2, 3, 4])]).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.generators().iter().all(|g| g.degree() == 2));
        assert_eq!(
            transversal(&[prime(2, &[0, 1])]).unwrap(),
            MonomialIdeal::maximal(2)
        );
        assert_eq!(
            transversal(&[prime(2, &[0, 1]), prime(2, &[0, 1])]).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(transversal(&[]), Err(PolymatroidError::NoPrimes));
    }

    #[test]
    fn relation_graph_examples() {
        let g = relation_graph(&fixtures::triangle());
        assert_eq!(g.edges, [(0, 1), (0, 2), (1, 2)].into_iter().collect());
        assert_eq!((g.r(), g.s()), (3, 1));

        let t = transversal(&[prime(4, &[0, 1]), prime(4, &[2, 3])]).unwrap();
        let g = relation_graph(&t);
        assert_eq!(g.edges, [(0, 1), (2, 3)].into_iter().collect());
        assert_eq!((g.r(), g.s()), (4, 2));

        let g = relation_graph(&ideal(3, &[&[1, 2, 0]]));
        assert_eq!((g.r(), g.s()), (0, 0));
    }

    #[test]
    fn spread_examples() {
        assert_eq!(analytic_spread(&fixtures::triangle()), Ok(3));
        assert_eq!(analytic_spread(&ideal(3, &[&[1, 2, 0]])), Ok(1));
        assert_eq!(analytic_spread(&fixtures::squarefree_veronese()), Ok(4));
        assert_eq!(
            analytic_spread(&ideal(2, &[&[2, 0], &[0, 2]])),
            Err(PolymatroidError::NotPolymatroidal)
        );
    }

    #[test]
    fn relation_graph_ignores_cofactor() {
        let j = fixtures::counterexample();
        let alpha = Monomial::from_slice(&[2, 0, 1, 0]);
        let aj = MonomialIdeal::principal(alpha).multiply(&j).unwrap();
        assert_eq!(relation_graph(&aj), relation_graph(&j));
    }
}
