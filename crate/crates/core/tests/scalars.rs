use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use qpbw_core::scalars::{cyclotomic_polynomial, ScalarError};
use qpbw_core::{CycloScalar, LaurentScalar, RatScalar};

fn l(terms: &[(i32, i64)]) -> LaurentScalar {
    LaurentScalar::from_int_terms(terms)
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn multiplication_example() {
    let a = l(&[(1, 1), (-1, -1)]);
    let b = l(&[(1, 1), (-1, 1)]);
    assert_eq!(&a * &b, l(&[(2, 1), (-2, -1)]));
}

#[test]
fn cancellation_example() {
    let a = l(&[(1, 1), (0, -1)]);
    let b = l(&[(0, 1), (1, -1)]);
    assert!((&a + &b).is_zero());
}

#[test]
fn exact_division_example() {
    let a = l(&[(2, 1), (-2, -1)]);
    let b = LaurentScalar::q_minus_q_inv();
    assert_eq!(a.exact_div(&b).unwrap(), l(&[(1, 1), (-1, 1)]));
    assert!(matches!(
        LaurentScalar::q().exact_div(&l(&[(1, 1), (0, 1)])),
        Err(ScalarError::NotDivisible { .. })
    ));
}

#[test]
fn quotient_by_q_minus_one() {
    let r = LaurentScalar::q_minus_q_inv().exact_quotient_q_minus_one().unwrap();
    assert_eq!(r, l(&[(0, 1), (-1, 1)]));
    assert_eq!(r.eval_at_one(), int(2));
    let sq = l(&[(2, 1), (1, -2), (0, 1)]);
    assert_eq!(sq.exact_quotient_q_minus_one().unwrap(), l(&[(1, 1), (0, -1)]));
    assert!(LaurentScalar::q_pow(2).exact_quotient_q_minus_one().is_err());
}

#[test]
fn specialization_examples() {
    assert_eq!(l(&[(5, 1), (0, -3)]).eval_at_one(), int(-2));
    assert_eq!(CycloScalar::from_laurent(&LaurentScalar::q_pow(3), 3), CycloScalar::one());
    // q - q^2 with q^2 = -q - 1 gives 2q + 1.
    let v = CycloScalar::from_laurent(&LaurentScalar::q_minus_q_inv(), 3);
    assert_eq!(v.residue(), l(&[(1, 2), (0, 1)]));
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_polynomial(3), l(&[(2, 1), (1, 1), (0, 1)]));
    assert_eq!(cyclotomic_polynomial(4), l(&[(2, 1), (0, 1)]));
    assert_eq!(cyclotomic_polynomial(6), l(&[(2, 1), (1, -1), (0, 1)]));
    assert_eq!(cyclotomic_polynomial(5), l(&[(4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]));
}

#[test]
fn canonical_text() {
    assert_eq!(l(&[(2, 1), (0, -2), (-1, 3)]).to_string(), "q^2 - 2 + 3*q^-1");
    assert_eq!(LaurentScalar::q_minus_q_inv().to_string(), "q - q^-1");
    assert_eq!(LaurentScalar::zero().to_string(), "0");
}

#[test]
fn rational_functions_normalize() {
    let num = l(&[(2, 1), (-2, -1)]);
    let den = LaurentScalar::q_minus_q_inv();
    let r = RatScalar::new(num, den).unwrap();
    assert_eq!(r, RatScalar::from(l(&[(1, 1), (-1, 1)])));
    assert!(RatScalar::new(LaurentScalar::one(), LaurentScalar::zero()).is_err());
    let x = RatScalar::from(LaurentScalar::q_minus_q_inv());
    assert_eq!(&x * &x.inverse().unwrap(), RatScalar::one());
    assert!(x.inverse().unwrap().to_laurent().is_none());
}

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    proptest::collection::vec((-5i32..=5, -7i64..=7), 0..5).prop_map(|t| LaurentScalar::from_int_terms(&t))
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn exact_div_inverts_mul(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in laurent(), b in laurent(), level in 2u32..9) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
        let phi = |x: &LaurentScalar| CycloScalar::from_laurent(x, level);
        prop_assert_eq!(phi(&(&a * &b)), &phi(&a) * &phi(&b));
        prop_assert_eq!(phi(&(&a + &b)), &phi(&a) + &phi(&b));
    }

    #[test]
    fn rational_field_inverses(a in laurent(), b in laurent()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let r = RatScalar::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&r * &r.inverse().unwrap(), RatScalar::one());
        prop_assert_eq!(&r * &RatScalar::from(b), RatScalar::from(a));
    }
}
