//! Executable kernel for alternative set theory.
//!
//! The crate provides exact, desk-scale models of the theory's working
//! parts:
//!
//! - [`hf`] — canonical hereditarily finite sets: the set universe, von
//!   Neumann numerals, regularity witnesses, and an induction-schema
//!   checker.
//! - [`poly`] / [`omega`] — a non-Archimedean linearly ordered field of
//!   exact rational functions in a formal infinite element ω: infinite
//!   numbers, infinitesimals, infinite nearness, standard parts, and
//!   prolongation of definable sequences.
//! - [`horizon`] — three-valued membership for σ-classes and π-classes
//!   under a concrete witness budget, feasibility cuts with a vague band,
//!   and the operational semiset test.
//! - [`continuum`] — indiscernibility relations over coordinate grids:
//!   monads, figures, connectedness, and non-transitivity witnesses.
//! - [`motion`] — continuity and observability checks for sampled motions,
//!   plus the halving-walk endpoint computation.
//!
//! Everything is exact: scalars are arbitrary-precision rationals (or
//! ω-rationals), never floats. The algebra substrate is generic over the
//! scalar type via `num-traits`; the aliases below fix the concrete types
//! the kernel ships with.
//!
//! ```
//! use altset::{rat, Omega};
//! use num_traits::One;
//!
//! let w = Omega::omega();
//! let near_one = Omega::one() + w.inv().unwrap(); // 1 + 1/ω
//! assert!(near_one.is_bounded() && !near_one.is_infinitesimal());
//! assert!(near_one.infinitely_near(&Omega::one()));
//! assert_eq!(near_one.standard_part().unwrap(), rat(1, 1));
//! ```

pub mod continuum;
pub mod hf;
pub mod horizon;
pub mod motion;
pub mod omega;
pub mod poly;
pub mod text;

/// Exact arbitrary-precision rational — the kernel's standard scalar.
pub type Rat = num_rational::BigRational;

/// Polynomial in ω with exact rational coefficients.
pub type Poly = poly::Polynomial<Rat>;

/// Exact rational function of ω — the kernel's number type.
pub type Omega = omega::OmegaRational<Rat>;

/// Point with exact rational coordinates (witnessed-scale geometry).
pub type QPoint = continuum::Point<Rat>;

/// Point with ω-valued coordinates (ideal-scale geometry).
pub type OmegaPoint = continuum::Point<Omega>;

pub use continuum::{Connectivity, IndiscernibilitySpec, Point};
pub use hf::HFSet;
pub use horizon::{ClassFamily, FamilyKind, Horizon, Membership, Verdict};
pub use motion::MotionTrace;
pub use omega::{Classification, DefinableSequence, OmegaRational};
pub use poly::Polynomial;

/// Shorthand for an exact rational from an integer pair.
///
/// Panics on a zero denominator; for parsing user input use
/// [`text::parse_rat`].
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}
