use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{word_cmp, word_text, FreeAlgError, Letter};
use crate::scalars::{Coefficient, LaurentScalar, RatScalar};

/// Finite linear combination of words; no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeElement<L: Letter, S: Coefficient> {
    terms: BTreeMap<Vec<L>, S>,
}

impl<L: Letter, S: Coefficient> Default for FreeElement<L, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Letter, S: Coefficient> FreeElement<L, S> {
    pub fn zero() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn letter(l: L) -> Self {
        Self::monomial(vec![l], S::one())
    }

    pub fn word(w: Vec<L>) -> Self {
        Self::monomial(w, S::one())
    }

    pub fn monomial(w: Vec<L>, c: S) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<L>, S)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Vec<L>, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<L>, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Vec<L>, S)> {
        self.terms.into_iter()
    }

    /// Terms in canonical order: monomial order, descending.
    pub fn sorted_terms(&self) -> Vec<(&Vec<L>, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| word_cmp(b.0, a.0));
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[L]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    /// The scalar value, if the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Vec::new() as &Vec<L>).cloned(),
            _ => None,
        }
    }

    /// Largest word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.mul_ref(c))))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coefficients<T: Coefficient>(&self, f: impl Fn(&S) -> T) -> FreeElement<L, T> {
        FreeElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Extends `image` multiplicatively (or antimultiplicatively when
    /// `reverse` is set) and linearly.
    pub fn substitute<M: Letter>(
        &self,
        reverse: bool,
        mut image: impl FnMut(&L) -> FreeElement<M, S>,
    ) -> FreeElement<M, S> {
        let mut out = FreeElement::zero();
        for (w, c) in &self.terms {
            let mut acc = FreeElement::scalar(c.clone());
            let letters: Box<dyn Iterator<Item = &L>> = if reverse {
                Box::new(w.iter().rev())
            } else {
                Box::new(w.iter())
            };
            for l in letters {
                acc = &acc * &image(l);
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        out
    }

    /// The word with letters reversed, linearly extended.
    pub fn reversed(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let mut r = w.clone();
            r.reverse();
            (r, c.clone())
        }))
    }

    /// xy − yx
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl<L: Letter> FreeElement<L, RatScalar> {
    /// The same element over the Laurent ring, or the first coefficient
    /// that is not a Laurent polynomial.
    pub fn to_integer_form(&self) -> Result<FreeElement<L, LaurentScalar>, FreeAlgError> {
        let mut out = FreeElement::zero();
        for (w, c) in self.terms() {
            match c.to_laurent() {
                Some(l) => out.add_term(w.clone(), l),
                None => {
                    return Err(FreeAlgError::NotInIntegerForm {
                        coefficient: c.to_string(),
                        word: word_text(w),
                    })
                }
            }
        }
        Ok(out)
    }

    pub fn is_integer_form(&self) -> bool {
        self.terms().all(|(_, c)| c.denominator().is_one())
    }
}

impl<L: Letter> FreeElement<L, LaurentScalar> {
    pub fn to_rational(&self) -> FreeElement<L, RatScalar> {
        self.map_coefficients(|c| RatScalar::from(c.clone()))
    }
}

impl<L: Letter, S: Coefficient> Add for &FreeElement<L, S> {
    type Output = FreeElement<L, S>;
    fn add(self, rhs: Self) -> FreeElement<L, S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<L: Letter, S: Coefficient> Sub for &FreeElement<L, S> {
    type Output = FreeElement<L, S>;
    fn sub(self, rhs: Self) -> FreeElement<L, S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<L: Letter, S: Coefficient> Mul for &FreeElement<L, S> {
    type Output = FreeElement<L, S>;
    fn mul(self, rhs: Self) -> FreeElement<L, S> {
        let mut out = FreeElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = Vec::with_capacity(u.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(v);
                out.add_term(w, a.mul_ref(b));
            }
        }
        out
    }
}

impl<L: Letter, S: Coefficient> Neg for &FreeElement<L, S> {
    type Output = FreeElement<L, S>;
    fn neg(self) -> FreeElement<L, S> {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<L: Letter, S: Coefficient> $tr for FreeElement<L, S> {
            type Output = FreeElement<L, S>;
            fn $method(self, rhs: Self) -> FreeElement<L, S> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<L: Letter, S: Coefficient> Neg for FreeElement<L, S> {
    type Output = FreeElement<L, S>;
    fn neg(self) -> FreeElement<L, S> {
        -&self
    }
}

pub(crate) fn write_terms<'a, K: 'a, S: Coefficient + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (&'a K, &'a S)>,
    key_text: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut empty = true;
    for (k, c) in terms {
        let (neg, mag) = c.term_text();
        let body = key_text(k);
        let text = match (mag.is_empty(), body.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => body,
            (false, true) => mag,
            (false, false) => format!("{mag}*{body}"),
        };
        match (empty, neg) {
            (true, true) => write!(f, "-{text}")?,
            (true, false) => write!(f, "{text}")?,
            (false, true) => write!(f, " - {text}")?,
            (false, false) => write!(f, " + {text}")?,
        }
        empty = false;
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

impl<L: Letter, S: Coefficient> fmt::Display for FreeElement<L, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.sorted_terms(), |w: &Vec<L>| word_text(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Generator;

    type E = FreeElement<Generator, RatScalar>;

    fn b(i: usize, j: usize) -> E {
        E::letter(Generator::beta(i, j))
    }

    #[test]
    fn free_product_and_scaling() {
        let x = b(1, 1);
        let y = b(1, 2);
        let p = &x * &y;
        assert_eq!(p.len(), 1);
        assert_eq!(
            p.coefficient(&[Generator::beta(1, 1), Generator::beta(1, 2)]),
            RatScalar::one()
        );
        let two = RatScalar::from(LaurentScalar::from_int(2));
        let three = RatScalar::from(LaurentScalar::from_int(3));
        let six = &x.scale(&two) * &y.scale(&three);
        assert_eq!(six, p.scale(&RatScalar::from(LaurentScalar::from_int(6))));
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn display_order_and_signs() {
        let g21 = E::letter(Generator::gamma(2, 1));
        let c11 = E::letter(Generator::gamma(1, 1));
        let c22 = E::letter(Generator::gamma(2, 2));
        let qq = RatScalar::from(LaurentScalar::q_minus_q_inv());
        let e = &(&(&g21 * &b(1, 2)) + &(&c11 * &b(2, 2)).scale(&qq)) - &(&b(1, 1) * &c22).scale(&qq);
        assert_eq!(
            e.to_string(),
            "g[2,1]*b[1,2] + (q - q^-1)*g[1,1]*b[2,2] - (q - q^-1)*b[1,1]*g[2,2]"
        );
        assert_eq!(E::zero().to_string(), "0");
        assert_eq!(E::one().to_string(), "1");
        let neg = E::scalar(RatScalar::from(LaurentScalar::q_pow(-1))).scale(&-RatScalar::one());
        assert_eq!(neg.to_string(), "-q^-1");
    }

    #[test]
    fn integer_form_detection() {
        let inv = RatScalar::from(LaurentScalar::q_minus_q_inv()).inverse().unwrap();
        assert!(b(1, 2).scale(&inv).to_integer_form().is_err());
        assert!(b(1, 2).to_integer_form().is_ok());
    }
}
