//! Depth of `R/I` for ideals with linear quotients.
//!
//! If `u_1, .., u_t` is an ordering of `G(I)` such that every colon
//! `(u_1, .., u_{j-1}) : u_j` is generated by `q_j` variables, then with
//! `q(I) = max q_j` the quotient has projective dimension `q(I) + 1` and
//! depth `n - q(I) - 1`.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::DepthError;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientOrder {
    /// Descending reverse-lexicographic, `x_1 > .. > x_n`.
    RevLex,
    /// Descending lexicographic.
    Lex,
}

impl QuotientOrder {
    fn name(self) -> &'static str {
        match self {
            QuotientOrder::RevLex => "reverse-lexicographic",
            QuotientOrder::Lex => "lexicographic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientCertificate {
    pub ordering: QuotientOrder,
    pub order: Vec<Monomial>,
    /// Variables generating `(u_1..u_{j-1}) : u_j` for `j = 2..t`.
    pub colon_vars: Vec<VarSet>,
    /// `q_2, .., q_t`.
    pub q_values: Vec<usize>,
    /// `max q_j`, or 0 for a principal ideal.
    pub q: usize,
}

/// Variables generating `(prefix) : u`, or `None` if that colon needs a
/// generator of degree at least 2.
fn linear_colon(prefix: &[Monomial], u: &Monomial, scratch: &mut Vec<VarSet>) -> Option<VarSet> {
    scratch.clear();
    let mut linear = VarSet::EMPTY;
    for w in prefix {
        let q = w.colon(u);
        let supp = q.support();
        if q.degree() == 1 {
            linear = linear.union(supp);
        } else {
            scratch.push(supp);
        }
    }
    scratch
        .iter()
        .all(|s| !s.intersection(linear).is_empty())
        .then_some(linear)
}

fn certify(
    order: Vec<Monomial>,
    ordering: QuotientOrder,
) -> Result<LinearQuotientCertificate, DepthError> {
    let check = |j: usize, scratch: &mut Vec<VarSet>| {
        linear_colon(&order[..j], &order[j], scratch).ok_or(DepthError::ColonNotLinear {
            position: j + 1,
            order: ordering.name(),
        })
    };
    #[cfg(feature = "parallel")]
    let colon_vars: Result<Vec<VarSet>, DepthError> = (1..order.len())
        .into_par_iter()
        .map_init(Vec::new, |scratch, j| check(j, scratch))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let colon_vars: Result<Vec<VarSet>, DepthError> = {
        let mut scratch = Vec::new();
        (1..order.len()).map(|j| check(j, &mut scratch)).collect()
    };
    let colon_vars = colon_vars?;
    let q_values: Vec<usize> = colon_vars.iter().map(|v| v.len()).collect();
    let q = q_values.iter().copied().max().unwrap_or(0);
    Ok(LinearQuotientCertificate {
        ordering,
        order,
        colon_vars,
        q_values,
        q,
    })
}

/// Certify linear quotients, trying descending reverse-lex order first and
/// descending lex order second.
pub fn linear_quotients(ideal: &MonomialIdeal) -> Result<LinearQuotientCertificate, DepthError> {
    if ideal.is_unit() {
        return Err(DepthError::UnitIdeal);
    }
    let sort_by_degree_then = |cmp: fn(&Monomial, &Monomial) -> std::cmp::Ordering| {
        let mut order = ideal.generators().to_vec();
        order.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| cmp(b, a)));
        order
    };
    let revlex = sort_by_degree_then(Monomial::cmp_revlex);
    match certify(revlex, QuotientOrder::RevLex) {
        Ok(cert) => Ok(cert),
        Err(first) => {
            let lex = sort_by_degree_then(Monomial::cmp);
            certify(lex, QuotientOrder::Lex).map_err(|_| first)
        }
    }
}

/// `depth R/I = n - q(I) - 1`.
pub fn depth_of_quotient(ideal: &MonomialIdeal) -> Result<usize, DepthError> {
    let cert = linear_quotients(ideal)?;
    Ok(ideal.vars() - cert.q - 1)
}

/// Projective dimension of `R/I`, `q(I) + 1`.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize, DepthError> {
    Ok(linear_quotients(ideal)?.q + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ideal::minimalize;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| Monomial::from_slice(g)).collect(), vars).unwrap()
    }

    #[test]
    fn triangle_certificate() {
        let cert = linear_quotients(&fixtures::triangle()).unwrap();
        assert_eq!(cert.ordering, QuotientOrder::RevLex);
        assert_eq!(
            cert.order,
            vec![
                Monomial::from_slice(&[1, 1, 0]),
                Monomial::from_slice(&[1, 0, 1]),
                Monomial::from_slice(&[0, 1, 1]),
            ]
        );
        assert_eq!(cert.q_values, vec![1, 1]);
        assert_eq!(cert.q, 1);
    }

    #[test]
    fn depth_examples() {
        let sq = fixtures::maximal_square();
        assert_eq!(linear_quotients(&sq).unwrap().q, 2);
        assert_eq!(depth_of_quotient(&sq), Ok(0));
        assert_eq!(depth_of_quotient(&fixtures::squarefree_veronese()), Ok(2));
        assert_eq!(depth_of_quotient(&fixtures::counterexample()), Ok(0));
    }

    #[test]
    fn principal_ideal() {
        let p = ideal(4, &[&[1, 2, 0, 0]]);
        assert_eq!(linear_quotients(&p).unwrap().q, 0);
        assert_eq!(depth_of_quotient(&p), Ok(3));
        assert_eq!(projective_dimension(&p), Ok(1));
    }

    #[test]
    fn auslander_buchsbaum() {
        let i = fixtures::height_one_ideal();
        assert_eq!(
            depth_of_quotient(&i).unwrap() + projective_dimension(&i).unwrap(),
            3
        );
    }

    #[test]
    fn non_linear_colon_is_reported() {
        // (x1x2, x3x4): the colon x1x2 : x3x4 is (x1x2).
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(matches!(
            linear_quotients(&i),
            Err(DepthError::ColonNotLinear { position: 2, .. })
        ));
        assert_eq!(
            linear_quotients(&MonomialIdeal::unit(2)),
            Err(DepthError::UnitIdeal)
        );
    }
}
