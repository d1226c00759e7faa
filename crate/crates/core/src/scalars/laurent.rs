use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Poly};
use super::ScalarError;

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest exponent upward; both ends are nonzero,
/// and zero has `low == 0` with no coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentScalar {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentScalar {
    fn normalized(mut low: i32, mut coeffs: Vec<BigRational>) -> Self {
        poly::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        low += lead_zeros as i32;
        LaurentScalar { low, coeffs }
    }

    /// Builds a scalar from (exponent, coefficient) pairs; repeats are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::normalized(low, coeffs)
    }

    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(BigInt::from(c)))))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::normalized(0, vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i32) -> Self {
        LaurentScalar {
            low: e,
            coeffs: vec![BigRational::one()],
        }
    }

    /// q − q⁻¹
    pub fn q_minus_q_inv() -> Self {
        Self::from_int_terms(&[(1, 1), (-1, -1)])
    }

    /// The symmetric quantum integer [k]_q = q^{k-1} + q^{k-3} + … + q^{1-k}.
    pub fn quantum_integer(k: u32) -> Self {
        Self::from_int_terms(
            &(0..k as i32).map(|i| (k as i32 - 1 - 2 * i, 1)).collect::<Vec<_>>(),
        )
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn coefficient(&self, e: i32) -> BigRational {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn min_exponent(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// `Some((e, c))` when the scalar is the single term c·q^e.
    pub fn as_monomial(&self) -> Option<(i32, &BigRational)> {
        (self.coeffs.len() == 1).then(|| (self.low, &self.coeffs[0]))
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((0, c)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some()
    }

    pub fn inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(LaurentScalar {
            low: -e,
            coeffs: vec![c.recip()],
        })
    }

    pub(crate) fn split(&self) -> (i32, Poly) {
        (self.low, self.coeffs.clone())
    }

    pub(crate) fn from_split(low: i32, p: Poly) -> Self {
        Self::normalized(low, p)
    }

    /// Exact quotient `self / b` in the Laurent ring.
    pub fn exact_div(&self, b: &Self) -> Result<Self, ScalarError> {
        if b.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both stored forms have nonzero constant term, so a Laurent quotient
        // exists iff the polynomial parts divide.
        let (q, r) = poly::div_rem(&self.coeffs, &b.coeffs);
        if !r.is_empty() {
            return Err(ScalarError::NotDivisible {
                dividend: self.to_string(),
                divisor: b.to_string(),
            });
        }
        Ok(Self::normalized(self.low - b.low, q))
    }

    /// `self / (q − 1)`, defined exactly when `self` vanishes at q = 1.
    pub fn exact_quotient_q_minus_one(&self) -> Result<Self, ScalarError> {
        self.exact_div(&Self::from_int_terms(&[(1, 1), (0, -1)]))
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Substitutes q ↦ q⁻¹.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Sign of the highest-exponent coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_negative())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            if e == 0 {
                write_rational(f, &mag)?;
                continue;
            }
            if !unit {
                write_rational(f, &mag)?;
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar {
            low: 0,
            coeffs: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        Self::q_pow(0)
    }
}

fn add_impl(a: &LaurentScalar, b: &LaurentScalar, sign: bool) -> LaurentScalar {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign { b.clone() } else { -b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.max_exponent().unwrap().max(b.max_exponent().unwrap());
    let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if sign {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentScalar::normalized(low, coeffs)
}

fn mul_impl(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    if a.is_zero() || b.is_zero() {
        return LaurentScalar::zero();
    }
    LaurentScalar::normalized(a.low + b.low, poly::mul(&a.coeffs, &b.coeffs))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: &LaurentScalar) -> LaurentScalar {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: LaurentScalar) -> LaurentScalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: &LaurentScalar) -> LaurentScalar {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, true));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, false));
forward_binop!(Mul, mul, mul_impl);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(mut self) -> LaurentScalar {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> LaurentScalar {
        LaurentScalar::from_int_terms(t)
    }

    #[test]
    fn display_canonical() {
        assert_eq!(l(&[(2, 1), (0, -2), (-1, 3)]).to_string(), "q^2 - 2 + 3*q^-1");
        assert_eq!(LaurentScalar::q_minus_q_inv().to_string(), "q - q^-1");
        assert_eq!(l(&[(1, -1)]).to_string(), "-q");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
        let half = LaurentScalar::from_terms([(1, BigRational::new(1.into(), 2.into()))]);
        assert_eq!(half.to_string(), "1/2*q");
    }

    #[test]
    fn normalization_is_structural() {
        let a = l(&[(3, 1), (-2, 0)]);
        assert_eq!(a, LaurentScalar::q_pow(3));
        assert_eq!(l(&[(1, 1), (1, -1)]), LaurentScalar::zero());
    }

    #[test]
    fn quantum_integer_two() {
        assert_eq!(LaurentScalar::quantum_integer(2), l(&[(1, 1), (-1, 1)]));
        assert_eq!(LaurentScalar::quantum_integer(1), LaurentScalar::one());
    }
}
