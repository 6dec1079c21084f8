//! The worked examples used throughout the test suites and by
//! `verify-paper`.

use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::polymatroid::capped_monomials;

fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
    minimalize(gens.iter().map(|g| Monomial::from_slice(g)).collect(), vars)
        .expect("fixture generators are well formed")
}

/// `(x1^3x2x3, x1^2x2^2x3, x1^3x2^2)`, height 1 with `astab = dstab = 2`.
pub fn height_one_ideal() -> MonomialIdeal {
    ideal(3, &[&[3, 1, 1], &[2, 2, 1], &[3, 2, 0]])
}

/// The squarefree Veronese ideal of degree 3 in 4 variables.
pub fn squarefree_veronese() -> MonomialIdeal {
    ideal(
        4,
        &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]],
    )
}

/// `(x1, x2, x3)^2`, whose quotient has depth 0.
pub fn maximal_square() -> MonomialIdeal {
    MonomialIdeal::maximal(3).power(2).expect("small exponents")
}

/// `(x1x2, x1x3, x2x3)`: `astab = 2` while every saturation has `astab = 1`.
pub fn triangle() -> MonomialIdeal {
    ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
}

/// The polymatroidal ideal in 4 variables with `dstab = 1` and `astab = 2`.
pub fn counterexample() -> MonomialIdeal {
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

/// The family generalizing [`counterexample`] to `n >= 4` variables:
/// `x2x3..xn` together with `(x2..xn / x_k) * x_j` for every `k >= 2` and
/// every `j != k`. Expected `dstab = 1` and `astab = n - 2`.
pub fn counterexample_family(n: usize) -> MonomialIdeal {
    assert!(n >= 4, "the family starts at n = 4");
    let mut base = vec![1u32; n];
    base[0] = 0;
    let mut gens = vec![Monomial::from_slice(&base)];
    for k in 1..n {
        for j in (0..n).filter(|&j| j != k) {
            let mut e = base.clone();
            e[k] = 0;
            e[j] += 1;
            gens.push(Monomial::from_slice(&e));
        }
    }
    minimalize(gens, n).expect("fixture generators are well formed")
}

/// `I(n-1; 1,..,1) + I(n-1; 0,2,..,2)`. Agrees with [`counterexample_family`] for
/// `n = 4` and is strictly larger for `n >= 5`.
pub fn veronese_sum(n: usize) -> MonomialIdeal {
    assert!(n >= 2);
    let d = (n - 1) as u32;
    let squarefree = capped_monomials(n, d, &vec![1; n]).expect("caps sum to n");
    let mut caps = vec![2; n];
    caps[0] = 0;
    let doubled = capped_monomials(n, d, &caps).expect("caps sum to 2n - 2");
    squarefree.sum(&doubled).expect("same ambient ring")
}

/// `(x1x3x4, x1x4x5, x1x3x5, x2x3x4, x2x4x5, x2x3x5)` in 5 variables.
pub fn five_vars_terminal() -> MonomialIdeal {
    ideal(
        5,
        &[
            &[1, 0, 1, 1, 0],
            &[1, 0, 0, 1, 1],
            &[1, 0, 1, 0, 1],
            &[0, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1],
            &[0, 1, 1, 0, 1],
        ],
    )
}
