//! Exact coefficient rings: Laurent polynomials in q, rational functions in
//! q, and cyclotomic residues at a primitive root of unity.

mod cyclo;
mod laurent;
pub(crate) mod poly;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use cyclo::{cyclotomic_polynomial, CycloScalar};
pub use laurent::LaurentScalar;
pub use rational::RatScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{dividend} is not divisible by {divisor} in the Laurent ring")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// Coefficient ring of the algebras handled by the rewriting engine.
///
/// Every ring receives the generic Laurent coefficients through
/// [`Coefficient::from_laurent`]; the context carries whatever the ring needs
/// for that (the cyclotomic level, for instance).
pub trait Coefficient:
    Clone + Eq + Debug + Display + Zero + One + Neg<Output = Self> + Send + Sync + 'static
{
    type Context: Clone + Debug + PartialEq + Send + Sync + 'static;

    fn from_laurent(value: &LaurentScalar, ctx: &Self::Context) -> Self;
    fn from_rational(value: &BigRational) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Option<Self>;

    /// Sign and magnitude text for use as a term coefficient; the magnitude
    /// is empty for 1 and parenthesized when it is a sum.
    fn term_text(&self) -> (bool, String);
}

fn laurent_term_text(v: &LaurentScalar) -> (bool, String) {
    match v.as_monomial() {
        Some((e, c)) => {
            let neg = c < &BigRational::zero();
            let mag = if neg { -v.clone() } else { v.clone() };
            if e == 0 && mag.is_one() {
                (neg, String::new())
            } else {
                (neg, mag.to_string())
            }
        }
        None => {
            let neg = v.leading_is_negative();
            let mag = if neg { -v.clone() } else { v.clone() };
            (neg, format!("({mag})"))
        }
    }
}

impl Coefficient for LaurentScalar {
    type Context = ();

    fn from_laurent(value: &LaurentScalar, _: &()) -> Self {
        value.clone()
    }
    fn from_rational(value: &BigRational) -> Self {
        LaurentScalar::constant(value.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        LaurentScalar::inverse(self)
    }
    fn term_text(&self) -> (bool, String) {
        laurent_term_text(self)
    }
}

impl Coefficient for RatScalar {
    type Context = ();

    fn from_laurent(value: &LaurentScalar, _: &()) -> Self {
        value.clone().into()
    }
    fn from_rational(value: &BigRational) -> Self {
        RatScalar::constant(value.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        RatScalar::inverse(self)
    }
    fn term_text(&self) -> (bool, String) {
        if self.denominator().is_one() {
            return laurent_term_text(self.numerator());
        }
        let neg = self.numerator().leading_is_negative();
        let num = if neg {
            -self.numerator().clone()
        } else {
            self.numerator().clone()
        };
        let (_, num_text) = laurent_term_text(&num);
        let den = format!("({})^-1", self.denominator());
        if num_text.is_empty() {
            (neg, den)
        } else {
            (neg, format!("{num_text}*{den}"))
        }
    }
}

impl Coefficient for CycloScalar {
    /// The level ℓ.
    type Context = u32;

    fn from_laurent(value: &LaurentScalar, level: &u32) -> Self {
        CycloScalar::from_laurent(value, *level)
    }
    fn from_rational(value: &BigRational) -> Self {
        CycloScalar::constant(value.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        CycloScalar::inverse(self)
    }
    fn term_text(&self) -> (bool, String) {
        laurent_term_text(&self.residue())
    }
}

/// Where to specialize the parameter q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecializationTarget {
    AtOne,
    /// A primitive ℓ-th root of unity.
    AtRoot(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Rational(BigRational),
    Cyclotomic(CycloScalar),
}

pub fn specialize_scalar(a: &LaurentScalar, target: SpecializationTarget) -> Specialized {
    match target {
        SpecializationTarget::AtOne => Specialized::Rational(a.eval_at_one()),
        SpecializationTarget::AtRoot(level) => {
            Specialized::Cyclotomic(CycloScalar::from_laurent(a, level))
        }
    }
}
