//! Per-power profiles of `Ass(I^k)` and `depth R/I^k`, the stability
//! indices `astab` and `dstab`, and executable checks of the known
//! theorems about them for polymatroidal ideals.
//!
//! For a polymatroidal ideal `I` both indices are strictly below the
//! analytic spread `ℓ(I)`, `Ass(I^k)` only grows with `k`, `depth R/I^k`
//! only shrinks, and the limit depth is `n - ℓ(I)`. The driver therefore
//! computes powers up to the horizon `k_max = max(ℓ(I) - 1, 1)` and reads
//! both indices off the profiles.

use crate::decomposition::{associated_primes, associated_primes_of_power, box_oracle_ass, height};
use crate::depth::{depth_of_quotient, linear_quotients};
use crate::error::{DepthError, IdealError, StabilityError};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::polymatroid::{
    analytic_spread, has_strong_exchange, is_matroidal, is_polymatroidal, relation_graph,
    transversal, veronese_type,
};
use crate::prime::{AssSet, MonomialPrime};

/// Which algorithm computes `Ass(I^k)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum AssMethod {
    /// Localize at each candidate prime, then search for a socle element.
    #[default]
    Localized,
    /// Radicals of an irredundant irreducible decomposition.
    Decomposition,
    /// Exhaustive colon scan over the exponent box.
    BoxOracle,
}

impl AssMethod {
    pub fn name(self) -> &'static str {
        match self {
            AssMethod::Localized => "localized",
            AssMethod::Decomposition => "decomposition",
            AssMethod::BoxOracle => "box-oracle",
        }
    }
}

/// `Ass(I^k)` with the chosen method.
pub fn ass_of_power(
    ideal: &MonomialIdeal,
    k: usize,
    method: AssMethod,
) -> Result<AssSet, IdealError> {
    match method {
        AssMethod::Localized => associated_primes_of_power(ideal, k),
        AssMethod::Decomposition => associated_primes(&ideal.power(k)?),
        AssMethod::BoxOracle => box_oracle_ass(&ideal.power(k)?),
    }
}

/// Raw per-power data for any proper monomial ideal, without any
/// stabilization claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profiles {
    pub ass_profile: Vec<AssSet>,
    pub depth_profile: Vec<Result<usize, DepthError>>,
}

pub fn profiles(ideal: &MonomialIdeal, k_max: usize) -> Result<Profiles, StabilityError> {
    profiles_with(ideal, k_max, AssMethod::default())
}

pub fn profiles_with(
    ideal: &MonomialIdeal,
    k_max: usize,
    method: AssMethod,
) -> Result<Profiles, StabilityError> {
    if k_max == 0 {
        return Err(StabilityError::ZeroHorizon);
    }
    if ideal.is_unit() {
        return Err(IdealError::UnitIdeal.into());
    }
    let powers = ideal.powers(k_max)?;
    let ass_profile = (1..=k_max)
        .map(|k| match method {
            AssMethod::Localized => associated_primes_of_power(ideal, k),
            AssMethod::Decomposition => associated_primes(&powers[k - 1]),
            AssMethod::BoxOracle => box_oracle_ass(&powers[k - 1]),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let depth_profile = powers.iter().map(depth_of_quotient).collect();
    Ok(Profiles {
        ass_profile,
        depth_profile,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub polymatroidal: bool,
    pub matroidal: bool,
    pub strong_exchange: bool,
    pub max_in_stable_ass: bool,
}

/// Consistency checks evaluated while building a report. All hold for a
/// polymatroidal ideal; a `false` means a bug or a genuine surprise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossChecks {
    /// `Ass(I^k) ⊆ Ass(I^{k+1})` along the profile.
    pub persistence: bool,
    /// `depth R/I^{k+1} <= depth R/I^k` along the profile.
    pub depth_nonincreasing: bool,
    /// Last profile depth equals `n - ℓ(I)`.
    pub limit_depth: bool,
    /// `𝔪 ∈ Ass^∞(I)` iff `ℓ(I) = n`.
    pub spread_criterion: bool,
    /// `depth R/I^k = 0` iff `𝔪 ∈ Ass(I^k)`, for every computed power.
    pub depth_zero_iff_maximal: bool,
}

impl CrossChecks {
    pub fn all(&self) -> bool {
        self.persistence
            && self.depth_nonincreasing
            && self.limit_depth
            && self.spread_criterion
            && self.depth_zero_iff_maximal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub ideal: MonomialIdeal,
    /// `gcd(I)`; the indices are computed on `I / gcd(I)`.
    pub cofactor: Monomial,
    pub core: MonomialIdeal,
    pub height: usize,
    /// Analytic spread `ℓ(I)`.
    pub spread: usize,
    pub k_max: usize,
    /// `|G(I^k)|` for `k = 1..=k_max`.
    pub power_sizes: Vec<usize>,
    pub ass_profile: Vec<AssSet>,
    pub depth_profile: Vec<usize>,
    pub astab: usize,
    pub dstab: usize,
    pub stable_ass: AssSet,
    pub limit_depth: usize,
    pub flags: Flags,
    pub checks: CrossChecks,
    pub method: AssMethod,
}

impl StabilityReport {
    pub fn vars(&self) -> usize {
        self.ideal.vars()
    }

    /// Whether `astab(I) = dstab(I)`.
    pub fn indices_agree(&self) -> bool {
        self.astab == self.dstab
    }
}

/// `k_max = max(ℓ - 1, 1)`.
pub fn horizon(spread: usize) -> usize {
    spread.saturating_sub(1).max(1)
}

fn require_polymatroidal(ideal: &MonomialIdeal) -> Result<(), StabilityError> {
    if ideal.is_unit() {
        return Err(IdealError::UnitIdeal.into());
    }
    if !is_polymatroidal(ideal) {
        return Err(StabilityError::NotPolymatroidal);
    }
    Ok(())
}

fn spread_of(ideal: &MonomialIdeal) -> usize {
    analytic_spread(ideal).expect("caller checked polymatroidality")
}

/// `Ass(I^k)` for `k = 1..=k_max`, computed on the gcd-free core and merged
/// with the primes of the cofactor: `Ass(I^k) = Ass(α) ∪ Ass(J^k)`.
fn ass_profile_stripped(
    ideal: &MonomialIdeal,
    k_max: usize,
    method: AssMethod,
) -> Result<Vec<AssSet>, IdealError> {
    let st = ideal.strip();
    let vars = ideal.vars();
    let cofactor_ass: AssSet = st
        .cofactor
        .support()
        .iter()
        .map(|i| MonomialPrime::new(vars, VarSet::singleton(i)))
        .collect();
    if st.core.is_unit() {
        return Ok(vec![cofactor_ass; k_max]);
    }
    (1..=k_max)
        .map(|k| Ok(cofactor_ass.union(&ass_of_power(&st.core, k, method)?)))
        .collect()
}

/// `depth R/I^k` for `k = 1..=k_max`. Multiplying by a monomial does not
/// change the depth of the quotient, so the core is used when it is proper.
/// Also returns `|G(I^k)|`, which multiplication by `gcd(I)^k` preserves.
fn depth_profile_stripped(
    ideal: &MonomialIdeal,
    k_max: usize,
) -> Result<(Vec<usize>, Vec<usize>), StabilityError> {
    let st = ideal.strip();
    let base = if st.core.is_unit() { ideal } else { &st.core };
    let powers = base.powers(k_max)?;
    let depths = powers
        .iter()
        .enumerate()
        .map(|(k, p)| {
            depth_of_quotient(p).map_err(|source| StabilityError::Depth {
                power: k + 1,
                source,
            })
        })
        .collect::<Result<_, _>>()?;
    Ok((depths, powers.iter().map(MonomialIdeal::len).collect()))
}

fn first_index_equal<T: PartialEq>(profile: &[T], target: &T) -> usize {
    profile
        .iter()
        .position(|x| x == target)
        .map(|p| p + 1)
        .expect("target taken from the profile")
}

/// `astab(I)` of a polymatroidal ideal.
pub fn astab(ideal: &MonomialIdeal) -> Result<usize, StabilityError> {
    astab_with(ideal, AssMethod::default())
}

pub fn astab_with(ideal: &MonomialIdeal, method: AssMethod) -> Result<usize, StabilityError> {
    require_polymatroidal(ideal)?;
    let k_max = horizon(spread_of(ideal));
    let profile = ass_profile_stripped(ideal, k_max, method)?;
    Ok(first_index_equal(&profile, &profile[k_max - 1]))
}

/// `dstab(I)` of a polymatroidal ideal: the first power whose depth reaches
/// the limit `n - ℓ(I)`.
pub fn dstab(ideal: &MonomialIdeal) -> Result<usize, StabilityError> {
    require_polymatroidal(ideal)?;
    let spread = spread_of(ideal);
    let k_max = horizon(spread);
    let (profile, _) = depth_profile_stripped(ideal, k_max)?;
    let limit = ideal.vars().saturating_sub(spread);
    Ok(profile
        .iter()
        .position(|&d| d == limit)
        .map(|p| p + 1)
        .unwrap_or_else(|| first_index_equal(&profile, &profile[k_max - 1])))
}

pub fn full_report(ideal: &MonomialIdeal) -> Result<StabilityReport, StabilityError> {
    full_report_with(ideal, AssMethod::default())
}

pub fn full_report_with(
    ideal: &MonomialIdeal,
    method: AssMethod,
) -> Result<StabilityReport, StabilityError> {
    require_polymatroidal(ideal)?;
    let n = ideal.vars();
    let st = ideal.strip();
    let spread = spread_of(ideal);
    let k_max = horizon(spread);
    let ass_profile = ass_profile_stripped(ideal, k_max, method)?;
    let (depth_profile, power_sizes) = depth_profile_stripped(ideal, k_max)?;
    let stable_ass = ass_profile[k_max - 1].clone();
    let limit_depth = depth_profile[k_max - 1];
    let astab = first_index_equal(&ass_profile, &stable_ass);
    let expected_limit = n.saturating_sub(spread);
    let dstab = depth_profile
        .iter()
        .position(|&d| d == expected_limit)
        .map(|p| p + 1)
        .unwrap_or_else(|| first_index_equal(&depth_profile, &limit_depth));

    let checks = CrossChecks {
        persistence: ass_profile.windows(2).all(|w| w[0].is_subset(&w[1])),
        depth_nonincreasing: depth_profile.windows(2).all(|w| w[1] <= w[0]),
        limit_depth: limit_depth == expected_limit,
        spread_criterion: stable_ass.contains_maximal() == (spread == n),
        depth_zero_iff_maximal: ass_profile
            .iter()
            .zip(&depth_profile)
            .all(|(a, &d)| (d == 0) == a.contains_maximal()),
    };
    let flags = Flags {
        polymatroidal: true,
        matroidal: is_matroidal(ideal),
        strong_exchange: has_strong_exchange(ideal),
        max_in_stable_ass: stable_ass.contains_maximal(),
    };
    Ok(StabilityReport {
        ideal: ideal.clone(),
        cofactor: st.cofactor,
        core: st.core,
        height: height(ideal)?,
        spread,
        k_max,
        power_sizes,
        ass_profile,
        depth_profile,
        astab,
        dstab,
        stable_ass,
        limit_depth,
        flags,
        checks,
        method,
    })
}

/// A claim about stability indices that can be evaluated on an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `astab, dstab < ℓ` when `ℓ >= 2`, and both profiles are already
    /// stable one power past the horizon.
    SpreadBound,
    /// `lim depth R/I^k = n - ℓ(I)`.
    LimitDepth,
    /// `Ass(I^k)` nondecreasing and `depth R/I^k` nonincreasing.
    Persistence,
    /// `𝔪 ∈ Ass^∞(I)` iff `ℓ(I) = n`.
    SpreadCriterion,
    /// `depth R/I^k = 0` iff `𝔪 ∈ Ass(I^k)`.
    DepthZeroIffMaximal,
    /// Degree 2: `astab = dstab`.
    DegreeTwo,
    /// Matroidal of degree 2: `astab = dstab <= 2`.
    DegreeTwoMatroidal,
    /// `n = 4`, matroidal: `astab = dstab`.
    FourVarsMatroidal,
    /// `n = 4`, matroidal of degree `d`: `astab, dstab <= d`.
    FourVarsDegreeBound,
    /// `n = 4`, `𝔪 ∉ Ass^∞`: `astab = dstab`.
    FourVarsNoMaximal,
    /// `n = 5`, matroidal: `astab = dstab`.
    FiveVarsMatroidal,
    /// Strong exchange: `astab = dstab`.
    StrongExchange,
    /// Full-supported, gcd 1, strong exchange: Veronese type with caps the
    /// maximal generator exponents.
    StrongExchangeVeronese,
    /// `𝔪 ∈ Ass^∞`: `dstab = min{k : 𝔪 ∈ Ass(I^k)} <= astab`; `astab = 1`
    /// forces `dstab = 1`; `dstab = n - 1` forces `astab = n - 1`.
    MaximalDstabBound,
    /// `astab(I[i]) <= astab(I)` for every `i`.
    SaturationBound,
    /// `𝔪 ∉ Ass^∞` or `𝔪 ∈ Ass(I)`: `astab = max_i astab(I[i])`.
    SaturationMax,
    /// `n = 3`, `𝔪 ∉ Ass^∞`: `astab = dstab = 1`.
    ThreeVarsNoMaximal,
    /// Full-supported, degree 2: `q(I) >= n - 2`, and depth 1 when
    /// `𝔪 ∉ Ass(I)`.
    DegreeTwoQuotients,
    /// Full-supported matroidal of degree `d`: `depth R/I = d - 1`.
    MatroidalDepth,
    /// Matroidal: `s <= d`; full-supported with gcd 1 also has every
    /// variable in `Γ_I` and `s = d` iff `dstab = 1`.
    ComponentBound,
    /// Full-supported matroidal, gcd 1: `dstab = 1` iff `I` is the product
    /// of the primes on the components of `Γ_I`, with `s = d`.
    TransversalCharacterization,
    /// Full-supported matroidal of degree `n - 1` with gcd 1 is squarefree
    /// Veronese.
    CodegreeOneVeronese,
    /// `n = 5`, matroidal of degree 3, full-supported, gcd 1: `astab != 1`.
    FiveVarsDegreeThree,
    /// Open question: matroidal ideals satisfy `astab, dstab <= d`.
    /// Violations are findings, not failures.
    MatroidalDegreeQuestion,
    /// Conjecture `astab = dstab` for polymatroidal ideals. Violations are
    /// counterexamples, not failures.
    IndicesAgree,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::SpreadBound => "spread-bound",
            Claim::LimitDepth => "limit-depth",
            Claim::Persistence => "persistence",
            Claim::SpreadCriterion => "spread-criterion",
            Claim::DepthZeroIffMaximal => "depth-zero-iff-maximal",
            Claim::DegreeTwo => "degree-two",
            Claim::DegreeTwoMatroidal => "degree-two-matroidal",
            Claim::FourVarsMatroidal => "four-vars-matroidal",
            Claim::FourVarsDegreeBound => "four-vars-degree-bound",
            Claim::FourVarsNoMaximal => "four-vars-no-maximal",
            Claim::FiveVarsMatroidal => "five-vars-matroidal",
            Claim::StrongExchange => "strong-exchange",
            Claim::StrongExchangeVeronese => "strong-exchange-veronese",
            Claim::MaximalDstabBound => "maximal-dstab-bound",
            Claim::SaturationBound => "saturation-bound",
            Claim::SaturationMax => "saturation-max",
            Claim::ThreeVarsNoMaximal => "three-vars-no-maximal",
            Claim::DegreeTwoQuotients => "degree-two-quotients",
            Claim::MatroidalDepth => "matroidal-depth",
            Claim::ComponentBound => "component-bound",
            Claim::TransversalCharacterization => "transversal-characterization",
            Claim::CodegreeOneVeronese => "codegree-one-veronese",
            Claim::FiveVarsDegreeThree => "five-vars-degree-three",
            Claim::MatroidalDegreeQuestion => "matroidal-degree-question",
            Claim::IndicesAgree => "indices-agree",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    NotApplicable,
    /// A proven statement failed: a bug, or a wrong theorem.
    Fail(String),
    /// A conjecture or open question failed on this ideal.
    Refuted(String),
}

impl Outcome {
    fn check(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
        if cond {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::NotApplicable => "n/a",
            Outcome::Fail(_) => "FAIL",
            Outcome::Refuted(_) => "refuted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub report: StabilityReport,
    /// `astab(I[i])` for each variable; 1 for a unit saturation.
    pub saturation_astab: Vec<usize>,
    pub checks: Vec<(Claim, Outcome)>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &(Claim, Outcome)> {
        self.checks.iter().filter(|(_, o)| o.is_fail())
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn outcome(&self, claim: Claim) -> &Outcome {
        &self
            .checks
            .iter()
            .find(|(c, _)| *c == claim)
            .expect("every claim is evaluated")
            .1
    }
}

/// Evaluate every claim whose hypotheses `I` satisfies.
pub fn theorem_oracles(ideal: &MonomialIdeal) -> Result<TheoremReport, StabilityError> {
    theorem_oracles_with(ideal, AssMethod::default())
}

pub fn theorem_oracles_with(
    ideal: &MonomialIdeal,
    method: AssMethod,
) -> Result<TheoremReport, StabilityError> {
    let report = full_report_with(ideal, method)?;
    let n = ideal.vars();
    let stats = ideal.stats();
    let d = stats
        .degree
        .expect("polymatroidal ideals are equigenerated") as usize;
    let (astab, dstab, spread) = (report.astab, report.dstab, report.spread);
    let matroidal = report.flags.matroidal;
    let max_stable = report.flags.max_in_stable_ass;
    let gcd_one = stats.gcd.is_one();
    let full = stats.full_supported;
    let na = || Outcome::NotApplicable;
    let agree = |what: &str| {
        Outcome::check(astab == dstab, || {
            format!("{what}: astab = {astab}, dstab = {dstab}")
        })
    };

    let saturation_astab = (0..n)
        .map(|i| {
            let sat = ideal.saturate_var(i)?;
            if sat.is_unit() {
                Ok(1)
            } else {
                astab_with(&sat, method)
            }
        })
        .collect::<Result<Vec<usize>, StabilityError>>()?;

    let mut checks = Vec::new();

    // One power past the horizon must not change anything.
    let next = report.k_max + 1;
    let next_ass = {
        let st = ideal.strip();
        if st.core.is_unit() {
            report.stable_ass.clone()
        } else {
            let cof: AssSet = st
                .cofactor
                .support()
                .iter()
                .map(|i| MonomialPrime::new(n, VarSet::singleton(i)))
                .collect();
            cof.union(&ass_of_power(&st.core, next, method)?)
        }
    };
    let next_depth = depth_profile_stripped(ideal, next)?.0[next - 1];
    checks.push((
        Claim::SpreadBound,
        Outcome::check(
            (spread < 2 || (astab < spread && dstab < spread))
                && next_ass == report.stable_ass
                && next_depth == report.limit_depth,
            || {
                format!(
                    "ℓ = {spread}, astab = {astab}, dstab = {dstab}, Ass(I^{next}) = {next_ass}, depth = {next_depth}"
                )
            },
        ),
    ));
    checks.push((
        Claim::LimitDepth,
        Outcome::check(report.checks.limit_depth, || {
            format!(
                "limit depth {} but n - ℓ = {}",
                report.limit_depth,
                n - spread
            )
        }),
    ));
    checks.push((
        Claim::Persistence,
        Outcome::check(
            report.checks.persistence && report.checks.depth_nonincreasing,
            || {
                format!(
                    "profiles {:?} / {:?}",
                    report.ass_profile, report.depth_profile
                )
            },
        ),
    ));
    checks.push((
        Claim::SpreadCriterion,
        Outcome::check(report.checks.spread_criterion, || {
            format!("ℓ = {spread}, 𝔪 in stable set: {max_stable}")
        }),
    ));
    checks.push((
        Claim::DepthZeroIffMaximal,
        Outcome::check(report.checks.depth_zero_iff_maximal, || {
            format!(
                "profiles {:?} / {:?}",
                report.ass_profile, report.depth_profile
            )
        }),
    ));

    checks.push((
        Claim::DegreeTwo,
        if d == 2 { agree("degree 2") } else { na() },
    ));
    checks.push((
        Claim::DegreeTwoMatroidal,
        if d == 2 && matroidal {
            Outcome::check(astab == dstab && astab <= 2, || {
                format!("astab = {astab}, dstab = {dstab}")
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::FourVarsMatroidal,
        if n == 4 && matroidal {
            agree("n = 4 matroidal")
        } else {
            na()
        },
    ));
    checks.push((
        Claim::FourVarsDegreeBound,
        if n == 4 && matroidal {
            Outcome::check(astab <= d && dstab <= d, || {
                format!("d = {d}, astab = {astab}, dstab = {dstab}")
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::FourVarsNoMaximal,
        if n == 4 && !max_stable {
            agree("n = 4, 𝔪 not stable")
        } else {
            na()
        },
    ));
    checks.push((
        Claim::FiveVarsMatroidal,
        if n == 5 && matroidal {
            agree("n = 5 matroidal")
        } else {
            na()
        },
    ));
    checks.push((
        Claim::StrongExchange,
        if report.flags.strong_exchange {
            agree("strong exchange")
        } else {
            na()
        },
    ));
    checks.push((
        Claim::StrongExchangeVeronese,
        if report.flags.strong_exchange && full && gcd_one {
            let caps: Vec<u32> = ideal.max_exponents();
            match veronese_type(n, d as u32, &caps) {
                Ok(v) => Outcome::check(v == *ideal, || {
                    format!("Veronese type with caps {caps:?} is ({v})")
                }),
                Err(e) => Outcome::Fail(e.to_string()),
            }
        } else {
            na()
        },
    ));
    checks.push((
        Claim::MaximalDstabBound,
        if max_stable {
            let first_max = report
                .ass_profile
                .iter()
                .position(AssSet::contains_maximal)
                .map(|p| p + 1);
            Outcome::check(
                first_max == Some(dstab)
                    && dstab <= astab
                    && (astab != 1 || dstab == 1)
                    && (dstab + 1 != n || astab + 1 == n),
                || format!("first power with 𝔪: {first_max:?}, astab = {astab}, dstab = {dstab}"),
            )
        } else {
            na()
        },
    ));
    let max_sat = saturation_astab.iter().copied().max().unwrap_or(1);
    checks.push((
        Claim::SaturationBound,
        Outcome::check(saturation_astab.iter().all(|&a| a <= astab), || {
            format!("astab = {astab}, saturations {saturation_astab:?}")
        }),
    ));
    checks.push((
        Claim::SaturationMax,
        if !max_stable || report.ass_profile[0].contains_maximal() {
            Outcome::check(astab == max_sat, || {
                format!("astab = {astab}, saturations {saturation_astab:?}")
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::ThreeVarsNoMaximal,
        if n == 3 && !max_stable {
            Outcome::check(astab == 1 && dstab == 1, || {
                format!("astab = {astab}, dstab = {dstab}")
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::DegreeTwoQuotients,
        if d == 2 && full {
            let q = linear_quotients(ideal)
                .map_err(|source| StabilityError::Depth { power: 1, source })?
                .q;
            let depth1 = report.depth_profile[0];
            Outcome::check(
                q + 2 >= n && (report.ass_profile[0].contains_maximal() || depth1 == 1),
                || format!("q = {q}, depth R/I = {depth1}"),
            )
        } else {
            na()
        },
    ));
    checks.push((
        Claim::MatroidalDepth,
        if matroidal && full {
            Outcome::check(report.depth_profile[0] + 1 == d, || {
                format!("d = {d}, depth R/I = {}", report.depth_profile[0])
            })
        } else {
            na()
        },
    ));
    let graph = relation_graph(ideal);
    checks.push((
        Claim::ComponentBound,
        if matroidal {
            let s = graph.s();
            let strong = !(full && gcd_one)
                || (graph.vertices == VarSet::full(n) && ((s == d) == (dstab == 1)));
            Outcome::check(s <= d && strong, || {
                format!(
                    "s = {s}, d = {d}, vertices {:?}, dstab = {dstab}",
                    graph.vertices
                )
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::TransversalCharacterization,
        if matroidal && full && gcd_one {
            let primes: Vec<MonomialPrime> = graph
                .components
                .iter()
                .map(|&c| MonomialPrime::new(n, c))
                .collect();
            let product = transversal(&primes).ok();
            let is_product = graph.s() == d && product.as_ref() == Some(ideal);
            Outcome::check((dstab == 1) == is_product, || {
                format!("dstab = {dstab}, product of component primes: {is_product}")
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::CodegreeOneVeronese,
        if matroidal && full && gcd_one && n >= 2 && d + 1 == n {
            let v = veronese_type(n, d as u32, &vec![1; n]).ok();
            Outcome::check(v.as_ref() == Some(ideal), || {
                "not squarefree Veronese".into()
            })
        } else {
            na()
        },
    ));
    checks.push((
        Claim::FiveVarsDegreeThree,
        if n == 5 && matroidal && d == 3 && full && gcd_one {
            Outcome::check(astab != 1, || "astab = 1".into())
        } else {
            na()
        },
    ));
    checks.push((
        Claim::MatroidalDegreeQuestion,
        if matroidal {
            if astab <= d && dstab <= d {
                Outcome::Pass
            } else {
                Outcome::Refuted(format!("d = {d}, astab = {astab}, dstab = {dstab}"))
            }
        } else {
            na()
        },
    ));
    checks.push((
        Claim::IndicesAgree,
        if astab == dstab {
            Outcome::Pass
        } else {
            Outcome::Refuted(format!("astab = {astab}, dstab = {dstab}"))
        },
    ));

    Ok(TheoremReport {
        report,
        saturation_astab,
        checks,
    })
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
    fn astab_examples() {
        assert_eq!(astab(&fixtures::triangle()), Ok(2));
        assert_eq!(astab(&fixtures::squarefree_veronese()), Ok(3));
        assert_eq!(astab(&ideal(3, &[&[1, 2, 0]])), Ok(1));
        assert_eq!(
            astab(&ideal(2, &[&[2, 0], &[0, 2]])),
            Err(StabilityError::NotPolymatroidal)
        );
    }

    #[test]
    fn dstab_examples() {
        assert_eq!(dstab(&fixtures::counterexample()), Ok(1));
        assert_eq!(dstab(&fixtures::height_one_ideal()), Ok(2));
        assert_eq!(dstab(&MonomialIdeal::maximal(4)), Ok(1));
    }

    #[test]
    fn triangle_profiles() {
        let p = profiles(&fixtures::triangle(), 2).unwrap();
        assert_eq!(p.ass_profile[0].len(), 3);
        assert!(!p.ass_profile[0].contains_maximal());
        assert_eq!(p.ass_profile[1].len(), 4);
        assert!(p.ass_profile[1].contains_maximal());
        assert_eq!(p.depth_profile, vec![Ok(1), Ok(0)]);
    }

    #[test]
    fn principal_profiles_are_constant() {
        let i = ideal(3, &[&[2, 0, 1]]);
        let p = profiles(&i, 4).unwrap();
        assert!(p.ass_profile.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(p.depth_profile, vec![Ok(2); 4]);
        assert_eq!(profiles(&i, 0), Err(StabilityError::ZeroHorizon));
    }

    #[test]
    fn reports_on_fixtures() {
        let r = full_report(&fixtures::height_one_ideal()).unwrap();
        assert_eq!((r.astab, r.dstab, r.height), (2, 2, 1));
        assert!(r.checks.all());
        let r = full_report(&fixtures::squarefree_veronese()).unwrap();
        assert_eq!((r.astab, r.dstab, r.height), (3, 3, 2));
        let r = full_report(&fixtures::counterexample()).unwrap();
        assert_eq!((r.astab, r.dstab), (2, 1));
        assert!(r.flags.polymatroidal);
        assert!(!r.indices_agree());
        assert!(r.checks.all());
    }

    #[test]
    fn methods_agree_on_fixtures() {
        for i in [
            fixtures::height_one_ideal(),
            fixtures::counterexample(),
            fixtures::squarefree_veronese(),
        ] {
            let a = full_report_with(&i, AssMethod::Localized).unwrap();
            let b = full_report_with(&i, AssMethod::Decomposition).unwrap();
            let c = full_report_with(&i, AssMethod::BoxOracle).unwrap();
            assert_eq!(a.ass_profile, b.ass_profile);
            assert_eq!(a.ass_profile, c.ass_profile);
        }
    }

    #[test]
    fn counterexample_is_flagged() {
        let t = theorem_oracles(&fixtures::counterexample()).unwrap();
        assert!(t.all_hold(), "{:?}", t.failures().collect::<Vec<_>>());
        assert!(matches!(
            t.outcome(Claim::IndicesAgree),
            Outcome::Refuted(_)
        ));
    }

    #[test]
    fn saturation_hypotheses_matter() {
        let t = theorem_oracles(&fixtures::triangle()).unwrap();
        assert_eq!(t.report.astab, 2);
        assert_eq!(t.saturation_astab, vec![1, 1, 1]);
        assert_eq!(t.outcome(Claim::SaturationMax), &Outcome::NotApplicable);
        assert!(t.all_hold());
    }
}
