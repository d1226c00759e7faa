use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::element::write_terms;
use super::{word_text, FreeAlgError, FreeElement, Letter};
use crate::scalars::Coefficient;

/// Element of a tensor power A^{⊗d} of a free algebra, stored as a map
/// from d-tuples of words to coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement<L: Letter, S: Coefficient> {
    degree: usize,
    terms: BTreeMap<Vec<Vec<L>>, S>,
}

impl<L: Letter, S: Coefficient> TensorElement<L, S> {
    pub fn zero(degree: usize) -> Self {
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::pure(vec![Vec::new(); degree], S::one())
    }

    pub fn pure(legs: Vec<Vec<L>>, c: S) -> Self {
        let mut t = Self::zero(legs.len());
        t.add_term(legs, c);
        t
    }

    /// x₁ ⊗ x₂ ⊗ … ⊗ x_d
    pub fn from_elements(factors: &[&FreeElement<L, S>]) -> Self {
        let mut acc: Vec<(Vec<Vec<L>>, S)> = vec![(Vec::new(), S::one())];
        for f in factors {
            let mut next = Vec::new();
            for (legs, c) in &acc {
                for (w, d) in f.terms() {
                    let mut l = legs.clone();
                    l.push(w.clone());
                    next.push((l, c.mul_ref(d)));
                }
            }
            acc = next;
        }
        let mut t = Self::zero(factors.len());
        for (legs, c) in acc {
            t.add_term(legs, c);
        }
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, legs: Vec<Vec<L>>, c: S) {
        assert_eq!(legs.len(), self.degree, "tensor leg count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Vec<L>>, &S)> {
        self.terms.iter()
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

    fn check_degree(&self, other: &Self) -> Result<(), FreeAlgError> {
        if self.degree != other.degree {
            return Err(FreeAlgError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Legwise concatenation: (u⊗v)(u′⊗v′) = uu′ ⊗ vv′.
    pub fn mul(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let legs = a
                    .iter()
                    .zip(b)
                    .map(|(u, v)| {
                        let mut w = u.clone();
                        w.extend_from_slice(v);
                        w
                    })
                    .collect();
                out.add_term(legs, x.mul_ref(y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.mul_ref(c));
        }
        out
    }

    /// Applies a linear map to one leg, which may change nothing else.
    pub fn map_leg(&self, leg: usize, mut f: impl FnMut(&[L]) -> FreeElement<L, S>) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, c) in &self.terms {
            for (w, d) in f(&k[leg]).into_terms() {
                let mut legs = k.clone();
                legs[leg] = w;
                out.add_term(legs, c.mul_ref(&d));
            }
        }
        out
    }

    /// Replaces leg `leg` by the tensor (of degree `m`) produced by `f`,
    /// giving an element of degree `degree - 1 + m`.
    pub fn expand_leg(
        &self,
        leg: usize,
        m: usize,
        mut f: impl FnMut(&[L]) -> TensorElement<L, S>,
    ) -> Self {
        let mut out = Self::zero(self.degree - 1 + m);
        for (k, c) in &self.terms {
            let image = f(&k[leg]);
            assert_eq!(image.degree, m);
            for (sub, d) in image.terms() {
                let mut legs = Vec::with_capacity(out.degree);
                legs.extend_from_slice(&k[..leg]);
                legs.extend(sub.iter().cloned());
                legs.extend_from_slice(&k[leg + 1..]);
                out.add_term(legs, c.mul_ref(d));
            }
        }
        out
    }

    /// Collapses leg `leg` through a scalar-valued linear map.
    pub fn contract_leg(&self, leg: usize, mut f: impl FnMut(&[L]) -> S) -> Self {
        let mut out = Self::zero(self.degree - 1);
        for (k, c) in &self.terms {
            let s = f(&k[leg]);
            if s.is_zero() {
                continue;
            }
            let mut legs = k.clone();
            legs.remove(leg);
            out.add_term(legs, c.mul_ref(&s));
        }
        out
    }

    /// Multiplies the legs together (the multiplication map m: A^{⊗d} → A).
    pub fn multiply_legs(&self) -> FreeElement<L, S> {
        FreeElement::from_terms(self.terms.iter().map(|(k, c)| (k.concat(), c.clone())))
    }
}

impl<L: Letter, S: Coefficient> fmt::Display for TensorElement<L, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev(), |legs: &Vec<Vec<L>>| {
            let parts: Vec<String> = legs
                .iter()
                .map(|w| {
                    if w.is_empty() {
                        "1".to_string()
                    } else {
                        word_text(w)
                    }
                })
                .collect();
            format!("[{}]", parts.join(" ⊗ "))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Generator;
    use crate::scalars::RatScalar;
    use num_traits::One;

    type T = TensorElement<Generator, RatScalar>;

    #[test]
    fn legwise_product() {
        let b11 = Generator::beta(1, 1);
        let b12 = Generator::beta(1, 2);
        let b22 = Generator::beta(2, 2);
        let x = T::pure(vec![vec![b11], vec![b12]], RatScalar::one());
        let y = T::pure(vec![vec![b12], vec![b22]], RatScalar::one());
        let p = x.mul(&y).unwrap();
        assert_eq!(p, T::pure(vec![vec![b11, b12], vec![b12, b22]], RatScalar::one()));
        assert_eq!(T::one(2).mul(&x).unwrap(), x);
        let z = T::one(3);
        assert!(matches!(
            x.mul(&z),
            Err(FreeAlgError::DegreeMismatch { left: 2, right: 3 })
        ));
    }
}
