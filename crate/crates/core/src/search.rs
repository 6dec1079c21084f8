//! Corpus generation and counterexample hunting.
//!
//! Candidates are subsets of a pool of degree-`d` monomials whose exponents
//! are capped. Subsets are identified by bitmasks over the pool, which is
//! sorted descending lexicographically; a subset therefore already is its
//! canonical generator list, and distinct subsets are distinct ideals.
//!
//! Sampling is reproducible: a `ChaCha8Rng` seeded with `seed_from_u64(seed)`
//! draws, for each of the `count` samples, a subset size uniformly from
//! `min(2, pool)..=pool` and then a uniform subset of that size via
//! `rand::seq::index::sample`. Non-polymatroidal draws are dropped, and
//! repeated draws are emitted once, at their first occurrence.

use std::collections::HashSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{SearchError, StabilityError};
use crate::fixtures;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exponent, Monomial};
use crate::polymatroid::{capped_monomials, is_matroidal, is_polymatroidal};
use crate::stability::{astab_with, full_report, theorem_oracles, AssMethod, Claim, Outcome};

/// Largest pool for which exhaustive mode is allowed (`2^24` subsets).
pub const MAX_EXHAUSTIVE_POOL: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    pub vars: usize,
    pub degree: u32,
    /// Exponent cap applied to every variable.
    pub cap: Exponent,
    pub mode: SearchMode,
}

impl SearchSpace {
    pub fn exhaustive(vars: usize, degree: u32, cap: Exponent) -> Self {
        SearchSpace {
            vars,
            degree,
            cap,
            mode: SearchMode::Exhaustive,
        }
    }

    pub fn sampled(vars: usize, degree: u32, cap: Exponent, count: usize, seed: u64) -> Self {
        SearchSpace {
            vars,
            degree,
            cap,
            mode: SearchMode::Sampled { count, seed },
        }
    }

    /// The candidate monomials, sorted descending lexicographically.
    pub fn pool(&self) -> Result<Vec<Monomial>, SearchError> {
        if self.vars == 0 || self.vars > crate::monomial::MAX_VARS {
            return Err(SearchError::InvalidSpace(format!(
                "number of variables must be in 1..={}",
                crate::monomial::MAX_VARS
            )));
        }
        if self.degree == 0 || self.cap == 0 {
            return Err(SearchError::InvalidSpace(
                "degree and cap must be positive".into(),
            ));
        }
        let caps = vec![self.cap; self.vars];
        match capped_monomials(self.vars, self.degree, &caps) {
            Ok(ideal) => Ok(ideal.generators().to_vec()),
            Err(e) => Err(SearchError::InvalidSpace(e.to_string())),
        }
    }

    fn validate(&self) -> Result<Vec<Monomial>, SearchError> {
        let pool = self.pool()?;
        if self.mode == SearchMode::Exhaustive && pool.len() > MAX_EXHAUSTIVE_POOL {
            return Err(SearchError::PoolTooLarge {
                pool: pool.len(),
                max: MAX_EXHAUSTIVE_POOL,
            });
        }
        Ok(pool)
    }
}

fn subset(pool: &[Monomial], vars: usize, mask: u32) -> MonomialIdeal {
    let gens = (0..pool.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| pool[i].clone())
        .collect();
    MonomialIdeal::from_gens_unchecked(vars, gens)
}

/// Every nonempty subset of `pool` accepted by `keep`, in mask order.
fn exhaustive<F>(pool: &[Monomial], vars: usize, keep: F) -> Vec<MonomialIdeal>
where
    F: Fn(&MonomialIdeal) -> bool + Sync,
{
    let masks = 1u32..(1u32 << pool.len());
    let pick = |mask| {
        let ideal = subset(pool, vars, mask);
        keep(&ideal).then_some(ideal)
    };
    #[cfg(feature = "parallel")]
    {
        masks.into_par_iter().filter_map(pick).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        masks.filter_map(pick).collect()
    }
}

/// All full-supported matroidal ideals generated in degree `d` in `n`
/// variables. The gcd is not restricted, so `(x1x2, x1x3)` is included.
pub fn enumerate_matroidal(n: usize, d: u32) -> Result<Vec<MonomialIdeal>, SearchError> {
    if d as usize > n {
        return Err(SearchError::InvalidSpace(format!(
            "degree {d} exceeds the {n} variables"
        )));
    }
    let pool = SearchSpace::exhaustive(n, d, 1).validate()?;
    Ok(exhaustive(&pool, n, |i| {
        i.is_full_supported() && is_matroidal(i)
    }))
}

/// Polymatroidal ideals drawn from `space`: every one in exhaustive mode,
/// a seeded sample otherwise (see the module docs for the algorithm).
pub fn sample_polymatroidal(space: &SearchSpace) -> Result<Vec<MonomialIdeal>, SearchError> {
    let pool = space.validate()?;
    match space.mode {
        SearchMode::Exhaustive => Ok(exhaustive(&pool, space.vars, is_polymatroidal)),
        SearchMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for _ in 0..count {
                let size = rng.random_range(pool.len().min(2)..=pool.len());
                let mut picks = index::sample(&mut rng, pool.len(), size).into_vec();
                picks.sort_unstable();
                if !seen.insert(picks.clone()) {
                    continue;
                }
                let gens = picks.iter().map(|&i| pool[i].clone()).collect();
                let ideal = MonomialIdeal::from_gens_unchecked(space.vars, gens);
                if is_polymatroidal(&ideal) {
                    out.push(ideal);
                }
            }
            Ok(out)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntHit {
    pub ideal: MonomialIdeal,
    pub astab: usize,
    pub dstab: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntReport {
    pub space: SearchSpace,
    /// Number of polymatroidal ideals examined.
    pub examined: usize,
    pub hits: Vec<HuntHit>,
}

fn examine(ideal: &MonomialIdeal) -> Result<Option<HuntHit>, SearchError> {
    let report = full_report(ideal)?;
    if report.indices_agree() {
        return Ok(None);
    }
    let again = astab_with(ideal, AssMethod::BoxOracle)?;
    if again != report.astab {
        return Err(SearchError::CrossCheck {
            ideal: ideal.to_string(),
            detail: format!(
                "astab {} with the localized method but {again} with the box oracle",
                report.astab
            ),
        });
    }
    Ok(Some(HuntHit {
        ideal: ideal.clone(),
        astab: report.astab,
        dstab: report.dstab,
    }))
}

/// Every ideal of `space` with `astab != dstab`. Each hit is confirmed by
/// recomputing `astab` with the box oracle; a disagreement is an error.
pub fn hunt(space: &SearchSpace) -> Result<HuntReport, SearchError> {
    let ideals = sample_polymatroidal(space)?;
    #[cfg(feature = "parallel")]
    let results: Vec<Result<Option<HuntHit>, SearchError>> =
        ideals.par_iter().map(examine).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<Option<HuntHit>, SearchError>> = ideals.iter().map(examine).collect();
    let mut hits = Vec::new();
    for r in results {
        hits.extend(r?);
    }
    Ok(HuntReport {
        space: *space,
        examined: ideals.len(),
        hits,
    })
}

/// All full-supported matroidal ideals with at most `max_vars` variables,
/// over every degree.
pub fn matroidal_corpus(max_vars: usize) -> Result<Vec<MonomialIdeal>, SearchError> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        for d in 1..=n as u32 {
            out.extend(enumerate_matroidal(n, d)?);
        }
    }
    Ok(out)
}

/// Exhaustive polymatroidal spaces small enough to push every member
/// through every check.
pub const POLYMATROIDAL_SPACES: [(usize, u32, Exponent); 5] =
    [(2, 3, 3), (3, 2, 2), (3, 3, 2), (4, 2, 2), (4, 3, 2)];

pub fn polymatroidal_corpus() -> Result<Vec<MonomialIdeal>, SearchError> {
    let mut out = Vec::new();
    for (n, d, cap) in POLYMATROIDAL_SPACES {
        out.extend(sample_polymatroidal(&SearchSpace::exhaustive(n, d, cap))?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub items: Vec<SuiteItem>,
    /// Refuted open questions and conjectures; informational.
    pub findings: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(SuiteItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn push_result(&mut self, name: &str, r: Result<(bool, String), StabilityError>) {
        match r {
            Ok((passed, detail)) => self.push(name, passed, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

fn indices(
    ideal: &MonomialIdeal,
    expect: (usize, usize),
) -> Result<(bool, String), StabilityError> {
    let r = full_report(ideal)?;
    Ok((
        (r.astab, r.dstab) == expect && r.checks.all(),
        format!(
            "astab = {}, dstab = {}, height = {}",
            r.astab, r.dstab, r.height
        ),
    ))
}

/// The bundled fixtures plus every theorem check over the exhaustive
/// matroidal corpora with at most five variables.
pub fn verify_paper() -> SuiteReport {
    let mut suite = SuiteReport::default();

    suite.push_result(
        "height-one ideal",
        full_report(&fixtures::height_one_ideal()).map(|r| {
            (
                (r.astab, r.dstab, r.height) == (2, 2, 1),
                format!(
                    "astab = {}, dstab = {}, height = {}",
                    r.astab, r.dstab, r.height
                ),
            )
        }),
    );
    suite.push_result(
        "squarefree Veronese I(3;1,1,1,1)",
        full_report(&fixtures::squarefree_veronese()).map(|r| {
            (
                (r.astab, r.dstab, r.height, r.spread) == (3, 3, 2, 4) && r.cofactor.is_one(),
                format!(
                    "astab = {}, dstab = {}, height = {}, ℓ = {}",
                    r.astab, r.dstab, r.height, r.spread
                ),
            )
        }),
    );
    let sq = fixtures::maximal_square();
    let depth = crate::depth::depth_of_quotient(&sq);
    suite.push(
        "depth of (x1,x2,x3)^2",
        depth == Ok(0),
        format!("depth = {depth:?}"),
    );
    suite.push_result(
        "triangle and its saturations",
        theorem_oracles(&fixtures::triangle()).map(|t| {
            (
                t.report.astab == 2 && t.saturation_astab == [1, 1, 1] && t.all_hold(),
                format!(
                    "astab = {}, saturations {:?}",
                    t.report.astab, t.saturation_astab
                ),
            )
        }),
    );
    suite.push_result(
        "counterexample",
        theorem_oracles(&fixtures::counterexample()).map(|t| {
            let refuted = matches!(t.outcome(Claim::IndicesAgree), Outcome::Refuted(_));
            (
                (t.report.astab, t.report.dstab) == (2, 1) && refuted && t.all_hold(),
                format!(
                    "astab = {}, dstab = {}, astab = dstab refuted: {refuted}",
                    t.report.astab, t.report.dstab
                ),
            )
        }),
    );
    for n in 4..=6 {
        let family = fixtures::counterexample_family(n);
        let polymatroidal = is_polymatroidal(&family);
        suite.push_result(
            &format!("counterexample family, n = {n}"),
            indices(&family, (n - 2, 1)).map(|(ok, d)| (ok && polymatroidal, d)),
        );
    }
    suite.push_result(
        "five-variable terminal ideal",
        full_report(&fixtures::five_vars_terminal()).map(|r| {
            (
                r.indices_agree() && r.checks.all(),
                format!("astab = dstab = {}", r.astab),
            )
        }),
    );

    match matroidal_corpus(5) {
        Ok(corpus) => {
            #[cfg(feature = "parallel")]
            let results: Vec<_> = corpus.par_iter().map(theorem_oracles).collect();
            #[cfg(not(feature = "parallel"))]
            let results: Vec<_> = corpus.iter().map(theorem_oracles).collect();
            let mut failures = Vec::new();
            for (ideal, r) in corpus.iter().zip(results) {
                match r {
                    Ok(t) => {
                        for (claim, outcome) in &t.checks {
                            match outcome {
                                Outcome::Fail(d) => {
                                    failures.push(format!("{}: ({ideal}): {d}", claim.name()))
                                }
                                Outcome::Refuted(d) => suite
                                    .findings
                                    .push(format!("{}: ({ideal}): {d}", claim.name())),
                                _ => {}
                            }
                        }
                    }
                    Err(e) => failures.push(format!("({ideal}): {e}")),
                }
            }
            let detail = if failures.is_empty() {
                format!("{} ideals, every applicable claim holds", corpus.len())
            } else {
                failures.join("; ")
            };
            suite.push("matroidal corpora, n <= 5", failures.is_empty(), detail);
        }
        Err(e) => suite.push("matroidal corpora, n <= 5", false, e.to_string()),
    }
    suite
}
