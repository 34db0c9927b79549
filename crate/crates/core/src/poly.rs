//! Dense univariate polynomials over a generic scalar.
//!
//! This is the representation substrate for the ω-field: an [`crate::Omega`]
//! value is a ratio of two polynomials in the formal infinite element ω.
//! Coefficients are any [`Scalar`]; the kernel instantiates exact
//! arbitrary-precision rationals (see [`crate::Poly`]), while the generic
//! layer also admits `f64`/`f32` for quick numeric work.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};

use crate::Rat;

/// Coefficient scalar for polynomial arithmetic.
///
/// `Num` supplies ring and (for the division paths) field operations;
/// every coefficient type used here must be an exact or approximate field.
/// `poly_gcd` is a hook so exact scalars can run the gcd over integers,
/// where coefficient growth is tame.
pub trait Scalar: Num + Clone + Neg<Output = Self> {
    fn poly_gcd(a: &Polynomial<Self>, b: &Polynomial<Self>) -> Polynomial<Self> {
        euclidean_gcd(a, b)
    }
}

impl Scalar for f64 {}
impl Scalar for f32 {}

impl Scalar for Rat {
    fn poly_gcd(a: &Polynomial<Rat>, b: &Polynomial<Rat>) -> Polynomial<Rat> {
        if a.is_zero() || b.is_zero() {
            return euclidean_gcd(a, b);
        }
        let g = primitive_prs_gcd(to_primitive_ints(a), to_primitive_ints(b));
        Polynomial::new(g.into_iter().map(Rat::from_integer).collect()).into_monic()
    }
}

/// Textbook Euclidean gcd with monic renormalization at every step.
fn euclidean_gcd<T: Scalar>(a: &Polynomial<T>, b: &Polynomial<T>) -> Polynomial<T> {
    let mut a = a.clone().into_monic();
    let mut b = b.clone().into_monic();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("non-zero divisor");
        a = b;
        b = r.into_monic();
    }
    a
}

/// Clears denominators and strips the content: an integer coefficient
/// vector with the same roots, primitive, no trailing zeros.
fn to_primitive_ints(p: &Polynomial<Rat>) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for c in p.coeffs() {
        scale = scale.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_one() && !content.is_zero() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    ints
}

/// Primitive pseudo-remainder sequence over ℤ.
fn primitive_prs_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_pseudo_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (both non-empty, `deg a ≥ deg b`),
/// reduced to its primitive part.
fn primitive_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lead = b.last().expect("non-zero divisor");
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let head = r.last().expect("non-empty").clone();
        let shift = r.len() - 1 - db;
        for c in &mut r {
            *c *= lead;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= bc * &head;
        }
        trim_int(&mut r);
        if r.len() > db + shift {
            // the leading term must have cancelled
            unreachable!("pseudo-division failed to reduce the degree");
        }
    }
    let content = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_one() && !content.is_zero() {
        for c in &mut r {
            *c /= &content;
        }
    }
    r
}

/// A dense polynomial; `coeffs[i]` is the coefficient of degree `i`.
///
/// Invariant: the leading coefficient is non-zero. The zero polynomial is
/// the empty coefficient vector, so structural equality is semantic
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Zero> Polynomial<T> {
    /// Builds a polynomial from low-to-high coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c·x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        if c.is_zero() {
            return Polynomial { coeffs: Vec::new() };
        }
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(T::zero());
        }
        coeffs.push(c);
        Polynomial { coeffs }
    }
}

impl<T: Zero + One> Polynomial<T> {
    /// The identity monomial `x` (the generator ω in the ω-field).
    pub fn variable() -> Self {
        Polynomial {
            coeffs: vec![T::zero(), T::one()],
        }
    }
}

impl<T> Polynomial<T> {
    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Low-to-high coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Zero + Clone> Polynomial<T> {
    /// Coefficient of degree `i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }
}

impl<T: Scalar> Polynomial<T> {
    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &T) -> Self {
        if c.is_zero() {
            return Polynomial { coeffs: Vec::new() };
        }
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division; returns `(quotient, remainder)` with
    /// `deg r < deg d`. `None` when the divisor is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        if divisor.is_zero() {
            return None;
        }
        let d = divisor.coeffs.len();
        if self.coeffs.len() < d {
            return Some((Polynomial { coeffs: Vec::new() }, self.clone()));
        }
        let lead = divisor.coeffs[d - 1].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len() - d + 1];
        for i in (0..quot.len()).rev() {
            let head = rem[i + d - 1].clone();
            if head.is_zero() {
                continue;
            }
            let q = head / lead.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let cur = rem[i + j].clone();
                rem[i + j] = cur - dc.clone() * q.clone();
            }
            quot[i] = q;
        }
        Some((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`; otherwise the
    /// result is monic.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        T::poly_gcd(a, b)
    }

    /// Scales so the leading coefficient is one (zero stays zero).
    pub fn into_monic(self) -> Self {
        match self.coeffs.last() {
            None => self,
            Some(lead) if lead.is_one() => self,
            Some(lead) => {
                let inv = T::one() / lead.clone();
                self.scaled(&inv)
            }
        }
    }
}

impl<T: Scalar> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            let cur = long[i].clone();
            long[i] = cur + c;
        }
        Polynomial::new(long)
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial { coeffs: Vec::new() };
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let cur = out[i + j].clone();
                out[i + j] = cur + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Prints in descending degree with `w` as the variable, e.g.
/// `3*w^2 - w + 1/2`. The zero polynomial prints as `0`.
impl<T> fmt::Display for Polynomial<T>
where
    T: Signed + Clone + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "w")?;
                    } else {
                        write!(f, "w^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Poly, Rat};

    fn p(coeffs: &[i64]) -> Poly {
        Polynomial::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 1]); // w + 1
        let b = p(&[-1, 1]); // w - 1
        assert_eq!(a.clone() * b.clone(), p(&[-1, 0, 1])); // w^2 - 1
        assert_eq!(a.clone() + b.clone(), p(&[0, 2]));
        assert_eq!(a.clone() - a.clone(), Poly::zero());
        assert_eq!(-b.clone(), p(&[1, -1]));
    }

    #[test]
    fn div_rem_identity() {
        let a = p(&[2, 0, 3, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.clone() * b.clone() + r.clone(), a);
        assert!(r.degree() < b.degree());
        assert!(a.div_rem(&Poly::zero()).is_none());
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let common = p(&[1, 1]);
        let a = common.clone() * p(&[-2, 1]);
        let b = common.clone() * p(&[3, 0, 1]);
        let g = Polynomial::gcd(&a, &b);
        assert_eq!(g, common);
        assert!(g.leading().unwrap().is_one());
        assert_eq!(Polynomial::gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, -1, 2]); // 2w^2 - w + 1
        assert_eq!(a.eval(&rat(3, 1)), rat(16, 1));
        // same polynomial over f64
        let af = Polynomial::new(vec![1.0, -1.0, 2.0]);
        assert_eq!(af.eval(&3.0), 16.0);
    }

    #[test]
    fn display_descending_terms() {
        let a = Polynomial::new(vec![rat(1, 2), rat(-1, 1), rat(3, 1)]);
        assert_eq!(a.to_string(), "3*w^2 - w + 1/2");
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
        assert_eq!(p(&[0, -1]).to_string(), "-w");
    }
}
