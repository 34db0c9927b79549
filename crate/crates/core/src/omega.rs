//! Exact rational functions of a formal infinite element ω.
//!
//! `OmegaRational` values form a non-Archimedean linearly ordered field:
//! ω is greater than every standard number, `1/ω` is a positive
//! infinitesimal, and every element is classified exactly as
//! infinitesimal, bounded, or infinite by comparing numerator and
//! denominator degrees. Infinite nearness (`≐`, difference infinitesimal)
//! is an equivalence on bounded elements, and each bounded element has a
//! unique standard part — the canonical representative of its monad.
//!
//! The order is eventual dominance: `x < y` exactly when `x − y` is
//! negative for all sufficiently large substitutions of ω, which the
//! canonical form decides by the sign of one leading coefficient.
//!
//! Definable sequences are rules `n ↦ num(n)/den(n)`; prolongation reads
//! the same rule at ω, extending the sequence beyond every standard index.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Polynomial, Scalar};
use crate::{Omega, Poly, Rat};

/// Cap on the linear scan of the sequence-denominator root guard.
const ROOT_SCAN_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("infinite element has no standard part")]
    InfiniteArgument,
    #[error("sequence denominator vanishes at index {index}")]
    DenominatorRoot { index: u64 },
    #[error("cannot bound the denominator's integer roots at desk scale")]
    RootGuardInconclusive,
}

/// A ratio of polynomials in ω, kept in canonical form: numerator and
/// denominator share no factor and the denominator is monic, so structural
/// equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaRational<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> OmegaRational<T> {
    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self, OmegaError> {
        if den.is_zero() {
            return Err(OmegaError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return OmegaRational {
                num,
                den: Polynomial::one(),
            };
        }
        // a constant on either side is already coprime with the other
        let coprime = num.degree() == Some(0) || den.degree() == Some(0);
        let (num, den) = if coprime {
            (num, den)
        } else {
            let g = Polynomial::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                let (n, _) = num.div_rem(&g).expect("gcd divides");
                let (d, _) = den.div_rem(&g).expect("gcd divides");
                (n, d)
            }
        };
        let lead = den.leading().expect("non-zero denominator").clone();
        if lead.is_one() {
            OmegaRational { num, den }
        } else {
            let inv = T::one() / lead;
            OmegaRational {
                num: num.scaled(&inv),
                den: den.scaled(&inv),
            }
        }
    }

    /// Embeds a polynomial (denominator 1).
    pub fn from_poly(num: Polynomial<T>) -> Self {
        OmegaRational {
            num,
            den: Polynomial::one(),
        }
    }

    /// Embeds a scalar constant.
    pub fn from_scalar(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The generator ω itself.
    pub fn omega() -> Self {
        Self::from_poly(Polynomial::variable())
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.den
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, OmegaError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Checked division; errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, OmegaError> {
        Ok(self.clone() * rhs.inv()?)
    }
}

impl<T: Scalar + PartialOrd> OmegaRational<T> {
    /// Sign under the eventual-dominance order: the sign of the numerator's
    /// leading coefficient (the canonical denominator is monic, hence
    /// eventually positive).
    pub fn sign(&self) -> Ordering {
        match self.num.leading() {
            None => Ordering::Equal,
            Some(lead) => lead
                .partial_cmp(&T::zero())
                .expect("totally ordered scalar"),
        }
    }

    /// Total order by eventual dominance: the result of comparing `x` and
    /// `y` at every sufficiently large substitution of ω.
    pub fn compare(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self.clone() - other.clone()).sign()
    }

    /// Absolute value under the same order.
    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Exact trichotomy of the element's scale.
    ///
    /// Infinitesimal: smaller in magnitude than `1/n` for every standard
    /// `n ≥ 1` (equivalently, numerator degree below denominator degree, or
    /// zero). Infinite: larger than every standard `n`. Bounded: not
    /// infinite. The degree criteria decide the defining quantifiers
    /// exactly under the eventual-dominance order.
    pub fn classify(&self) -> Classification {
        let num_deg = match self.num.degree() {
            None => {
                return Classification {
                    is_infinitesimal: true,
                    is_bounded: true,
                    is_infinite: false,
                }
            }
            Some(d) => d,
        };
        let den_deg = self.den.degree().expect("non-zero denominator");
        Classification {
            is_infinitesimal: num_deg < den_deg,
            is_bounded: num_deg <= den_deg,
            is_infinite: num_deg > den_deg,
        }
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.classify().is_infinitesimal
    }

    pub fn is_bounded(&self) -> bool {
        self.classify().is_bounded
    }

    pub fn is_infinite(&self) -> bool {
        self.classify().is_infinite
    }

    /// Infinite nearness `≐`: the difference is infinitesimal.
    pub fn infinitely_near(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_infinitesimal()
    }

    /// The unique standard scalar infinitely near a bounded element: the
    /// ratio of leading coefficients at equal degree, zero below it. This
    /// is the canonical representative of the element's monad.
    pub fn standard_part(&self) -> Result<T, OmegaError> {
        let num_deg = match self.num.degree() {
            None => return Ok(T::zero()),
            Some(d) => d,
        };
        let den_deg = self.den.degree().expect("non-zero denominator");
        match num_deg.cmp(&den_deg) {
            Ordering::Less => Ok(T::zero()),
            Ordering::Equal => {
                let n = self.num.leading().expect("non-zero").clone();
                let d = self.den.leading().expect("non-zero").clone();
                Ok(n / d)
            }
            Ordering::Greater => Err(OmegaError::InfiniteArgument),
        }
    }
}

impl<T: Scalar + PartialOrd> PartialOrd for OmegaRational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl<T: Scalar + Ord> Ord for OmegaRational<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl<T: Scalar> Zero for OmegaRational<T> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for OmegaRational<T> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<T: Scalar> Add for OmegaRational<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::reduced(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<T: Scalar> Sub for OmegaRational<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for OmegaRational<T> {
    type Output = Self;

    fn neg(self) -> Self {
        OmegaRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<T: Scalar> Mul for OmegaRational<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

/// Panics on a zero divisor; use [`OmegaRational::checked_div`] to get an
/// error instead.
impl<T: Scalar> Div for OmegaRational<T> {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

/// Canonical form `(<poly>)/(<poly>)`; re-parses to an equal value.
impl<T> fmt::Display for OmegaRational<T>
where
    T: Signed + Clone + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl std::str::FromStr for Omega {
    type Err = crate::text::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::text::parse_omega(s)
    }
}

/// Scale trichotomy of an ω-field element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_infinitesimal: bool,
    pub is_bounded: bool,
    pub is_infinite: bool,
}

/// Space-separated labels, e.g. `infinitesimal bounded`.
impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinitesimal {
            write!(f, "infinitesimal ")?;
        }
        if self.is_infinite {
            write!(f, "infinite")
        } else {
            write!(f, "bounded")
        }
    }
}

/// A rule `n ↦ num(n)/den(n)` defined at every index `n ∈ {0, 1, 2, …}`.
///
/// Construction verifies that the denominator has no non-negative integer
/// root, so evaluation is total; prolongation then extends the same rule
/// past every standard index by reading it at ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinableSequence {
    rule: Omega,
}

impl DefinableSequence {
    pub fn new(rule: Omega) -> Result<Self, OmegaError> {
        if let Some(n) = nonneg_integer_root(rule.denominator())? {
            return Err(OmegaError::DenominatorRoot { index: n });
        }
        Ok(DefinableSequence { rule })
    }

    pub fn rule(&self) -> &Omega {
        &self.rule
    }

    /// The sequence value at a standard index.
    pub fn eval(&self, n: u64) -> Rat {
        let x = Rat::from_integer(n.into());
        self.rule.numerator().eval(&x) / self.rule.denominator().eval(&x)
    }

    /// Prolongs the rule beyond the horizon: the value at the infinite
    /// index ω.
    pub fn prolong(&self) -> Omega {
        self.rule.clone()
    }
}

/// Finds a non-negative integer root of `p` (non-zero, rational
/// coefficients), exactly for degree ≤ 2; higher degrees scan candidate
/// divisors up to the Cauchy root bound. If that bound exceeds the scan
/// cap the guard gives up conservatively rather than accept a possibly
/// undefined sequence.
fn nonneg_integer_root(p: &Poly) -> Result<Option<u64>, OmegaError> {
    debug_assert!(!p.is_zero());
    if p.degree() == Some(0) {
        return Ok(None);
    }
    // clear denominators: integer coefficients with the same roots
    let mut scale = BigInt::one();
    for c in p.coeffs() {
        scale = num_integer::Integer::lcm(&scale, c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c.numer() * &scale) / c.denom())
        .collect();
    if ints[0].is_zero() {
        return Ok(Some(0));
    }
    match ints.len() - 1 {
        1 => {
            // a1*n + a0 = 0  =>  n = -a0/a1
            let root = Rat::new(-&ints[0], ints[1].clone());
            Ok(as_nonneg_u64(&root))
        }
        2 => {
            let (a, b, c) = (&ints[2], &ints[1], &ints[0]);
            let disc = b * b - BigInt::from(4) * a * c;
            if disc.is_negative() {
                return Ok(None);
            }
            let s = disc.sqrt();
            if &s * &s != disc {
                return Ok(None);
            }
            for sign in [1i32, -1] {
                let root = Rat::new(-b + BigInt::from(sign) * &s, BigInt::from(2) * a);
                if let Some(n) = as_nonneg_u64(&root) {
                    return Ok(Some(n));
                }
            }
            Ok(None)
        }
        _ => {
            // every real root r satisfies |r| < 1 + max|a_i|/|a_d|, and an
            // integer root must divide the constant coefficient
            let lead = ints.last().expect("non-empty").magnitude().clone();
            let max_mag = ints
                .iter()
                .map(|c| c.magnitude().clone())
                .max()
                .expect("non-empty");
            let bound = BigInt::from(max_mag / &lead) + 2;
            let bound = if bound > BigInt::from(ROOT_SCAN_CAP) {
                return Err(OmegaError::RootGuardInconclusive);
            } else {
                u64::try_from(bound).expect("within cap")
            };
            let c0 = &ints[0];
            for r in 1..=bound {
                let cand = BigInt::from(r);
                if !(c0 % &cand).is_zero() {
                    continue;
                }
                if eval_bigint(&ints, &cand).is_zero() {
                    return Ok(Some(r));
                }
            }
            Ok(None)
        }
    }
}

fn as_nonneg_u64(r: &Rat) -> Option<u64> {
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    u64::try_from(r.to_integer()).ok()
}

fn eval_bigint(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
