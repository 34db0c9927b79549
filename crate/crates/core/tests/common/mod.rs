//! Shared proptest strategies for the kernel's domain types.

// each test binary uses its own subset of these
#![allow(dead_code)]

use altset::{Omega, OmegaRational, Poly, Polynomial, Rat};
use proptest::prelude::*;

/// Exact rationals with numerators in [-100, 100] and small denominators.
pub fn arb_rat() -> impl Strategy<Value = Rat> {
    (-100i64..=100, 1i64..=20).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

/// Polynomials of degree at most `max_deg` (possibly zero).
pub fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_rat(), 0..=max_deg + 1).prop_map(Polynomial::new)
}

/// Non-zero polynomials of degree exactly `deg`.
pub fn arb_poly_of_degree(deg: usize) -> impl Strategy<Value = Poly> {
    (
        prop::collection::vec(arb_rat(), deg),
        (1i64..=100, 1i64..=20, prop::bool::ANY),
    )
        .prop_map(|(mut coeffs, (n, d, neg))| {
            let lead = Rat::new(if neg { -n } else { n }.into(), d.into());
            coeffs.push(lead);
            Polynomial::new(coeffs)
        })
}

/// Arbitrary ω-rationals with numerator and denominator degrees ≤ 4.
pub fn arb_omega() -> impl Strategy<Value = Omega> {
    (arb_poly(4), 0usize..=4)
        .prop_flat_map(|(num, dd)| {
            arb_poly_of_degree(dd).prop_map(move |den| OmegaRational::new(num.clone(), den).unwrap())
        })
}

/// Non-zero ω-rationals.
pub fn arb_nonzero_omega() -> impl Strategy<Value = Omega> {
    arb_omega().prop_filter("non-zero", |x| !num_traits::Zero::is_zero(x))
}

/// Bounded elements: numerator degree never exceeds denominator degree
/// (degree gaps survive canonical reduction, so this is preserved).
pub fn arb_bounded_omega() -> impl Strategy<Value = Omega> {
    (0usize..=4)
        .prop_flat_map(|dd| (prop::collection::vec(arb_rat(), 0..=dd + 1), arb_poly_of_degree(dd)))
        .prop_map(|(num, den)| OmegaRational::new(Polynomial::new(num), den).unwrap())
}

/// Infinitesimal elements: numerator degree strictly below the
/// denominator's (or zero).
pub fn arb_infinitesimal_omega() -> impl Strategy<Value = Omega> {
    (1usize..=4)
        .prop_flat_map(|dd| (prop::collection::vec(arb_rat(), 0..=dd), arb_poly_of_degree(dd)))
        .prop_map(|(num, den)| OmegaRational::new(Polynomial::new(num), den).unwrap())
}
