use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentScalar;
use super::poly;
use super::ScalarError;

/// Rational function in q: `numerator / denominator`.
///
/// The denominator is a polynomial with nonzero constant term, monic in its
/// highest power, and coprime to the numerator; powers of q live in the
/// numerator. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatScalar {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl RatScalar {
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentScalar, den: LaurentScalar) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (nl, np) = num.split();
        let (dl, dp) = den.split();
        let g = poly::gcd(&np, &dp);
        let (np, _) = poly::div_rem(&np, &g);
        let (dp, _) = poly::div_rem(&dp, &g);
        let lead = dp.last().unwrap().recip();
        RatScalar {
            num: LaurentScalar::from_split(nl - dl, poly::scale(&np, &lead)),
            den: LaurentScalar::from_split(0, poly::scale(&dp, &lead)),
        }
    }

    pub fn numerator(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentScalar {
        &self.den
    }

    /// The Laurent polynomial equal to this value, if there is one.
    pub fn to_laurent(&self) -> Option<LaurentScalar> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentScalar::constant(c).into()
    }
}

impl From<LaurentScalar> for RatScalar {
    fn from(value: LaurentScalar) -> Self {
        RatScalar {
            num: value,
            den: LaurentScalar::one(),
        }
    }
}

impl fmt::Display for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})*({})^-1", self.num, self.den)
        }
    }
}

impl Zero for RatScalar {
    fn zero() -> Self {
        LaurentScalar::zero().into()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatScalar {
    fn one() -> Self {
        LaurentScalar::one().into()
    }
}

fn add_impl(a: &RatScalar, b: &RatScalar, sign: bool) -> RatScalar {
    let b_num = if sign { b.num.clone() } else { -&b.num };
    if a.den == b.den {
        return RatScalar::reduce(&a.num + &b_num, a.den.clone());
    }
    RatScalar::reduce(&a.num * &b.den + &b_num * &a.den, &a.den * &b.den)
}

fn mul_impl(a: &RatScalar, b: &RatScalar) -> RatScalar {
    if a.den.is_one() && b.den.is_one() {
        return (&a.num * &b.num).into();
    }
    RatScalar::reduce(&a.num * &b.num, &a.den * &b.den)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RatScalar> for &RatScalar {
            type Output = RatScalar;
            fn $method(self, rhs: &RatScalar) -> RatScalar {
                $body(self, rhs)
            }
        }
        impl $tr<RatScalar> for RatScalar {
            type Output = RatScalar;
            fn $method(self, rhs: RatScalar) -> RatScalar {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, true));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, false));
forward_binop!(Mul, mul, mul_impl);

impl Neg for RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        RatScalar {
            num: -self.num,
            den: self.den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> LaurentScalar {
        LaurentScalar::from_int_terms(t)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let r = RatScalar::new(l(&[(2, 1), (-2, -1)]), LaurentScalar::q_minus_q_inv()).unwrap();
        assert_eq!(r.to_laurent(), Some(l(&[(1, 1), (-1, 1)])));
    }

    #[test]
    fn inverse_of_q_minus_q_inv() {
        let r: RatScalar = LaurentScalar::q_minus_q_inv().into();
        let inv = r.inverse().unwrap();
        // q / (q^2 - 1)
        assert_eq!(inv.numerator(), &LaurentScalar::q());
        assert_eq!(inv.denominator(), &l(&[(2, 1), (0, -1)]));
        assert_eq!(&inv * &r, RatScalar::one());
        assert_eq!(inv.to_string(), "(q)*(q^2 - 1)^-1");
    }

    #[test]
    fn denominator_normalization() {
        // 1 / (2q) = 1/2 q^-1 with denominator 1
        let r = RatScalar::new(LaurentScalar::one(), l(&[(1, 2)])).unwrap();
        assert_eq!(r.denominator(), &LaurentScalar::one());
        assert_eq!(r.numerator().to_string(), "1/2*q^-1");
        // -1 / (1 - q): denominator made monic
        let r = RatScalar::new(LaurentScalar::one(), l(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(r.denominator(), &l(&[(1, 1), (0, -1)]));
        assert_eq!(r.numerator(), &l(&[(0, -1)]));
    }
}
