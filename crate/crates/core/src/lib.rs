//! Stability of associated primes and depth along powers of monomial
//! ideals, with the machinery for polymatroidal ideals.
//!
//! * [`ideal`]: exact monomial-ideal arithmetic on minimal generating sets.
//! * [`decomposition`]: associated and minimal primes, by three independent
//!   routes.
//! * [`polymatroid`]: exchange properties, Veronese-type and transversal
//!   constructors, the linear relation graph and analytic spread.
//! * [`depth`]: depth of `R/I` through linear quotients.
//! * [`stability`]: per-power profiles, `astab`, `dstab` and the theorem
//!   checks.
//! * [`search`]: corpus enumeration, sampling and counterexample hunts.
//! * [`format`]: the ideal text format and report rendering.

pub mod decomposition;
pub mod depth;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod ideal;
pub mod monomial;
pub mod polymatroid;
pub mod prime;
pub mod search;
pub mod stability;

pub use error::{
    DepthError, IdealError, ParseError, PolymatroidError, SearchError, StabilityError,
};
pub use ideal::{minimalize, IdealStats, MonomialIdeal, Stripped};
pub use monomial::{Exponent, Monomial, VarSet};
pub use prime::{AssSet, MonomialPrime};
pub use stability::{AssMethod, StabilityReport};
