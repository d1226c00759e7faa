use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::freealg::{FreeElement, Generator, Letter};
use crate::rewrite::Lattice;
use crate::scalars::LaurentScalar;

/// Monomial in the commuting generators: exponents of the off-diagonal
/// letters plus a vector in the diagonal lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommutativeMonomial {
    off: BTreeMap<Generator, u32>,
    diag: Vec<i32>,
}

impl CommutativeMonomial {
    pub fn one(lattice: &Lattice) -> Self {
        CommutativeMonomial {
            off: BTreeMap::new(),
            diag: vec![0; lattice.rank],
        }
    }

    pub fn from_word(w: &[Generator], lattice: &Lattice) -> Self {
        let mut m = Self::one(lattice);
        for x in w {
            match x.toral() {
                Some((k, e)) => m.diag[k - 1] += e,
                None => *m.off.entry(*x).or_insert(0) += 1,
            }
        }
        lattice.normalize(&mut m.diag);
        m
    }

    fn mul(&self, other: &Self, lattice: &Lattice) -> Self {
        let mut m = self.clone();
        for (x, e) in &other.off {
            *m.off.entry(*x).or_insert(0) += e;
        }
        for (a, b) in m.diag.iter_mut().zip(&other.diag) {
            *a += b;
        }
        lattice.normalize(&mut m.diag);
        m
    }

    pub fn degree(&self, x: &Generator) -> u32 {
        self.off.get(x).copied().unwrap_or(0)
    }

    pub fn diagonal(&self) -> &[i32] {
        &self.diag
    }

    /// Canonical word: off-diagonal γ's, the diagonal letters, then
    /// off-diagonal β's, each block in generator order.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        let (gammas, betas): (Vec<_>, Vec<_>) = self
            .off
            .iter()
            .partition(|(x, _)| x.row() > x.col());
        let push = |w: &mut Vec<Generator>, x: Generator, e: u32| {
            for _ in 0..e {
                w.push(x);
            }
        };
        for (x, e) in gammas {
            push(&mut w, *x, *e);
        }
        for (k, &e) in self.diag.iter().enumerate() {
            let x = if e > 0 {
                Generator::beta(k + 1, k + 1)
            } else {
                Generator::gamma(k + 1, k + 1)
            };
            push(&mut w, x, e.unsigned_abs());
        }
        for (x, e) in betas {
            push(&mut w, *x, *e);
        }
        w
    }
}

impl fmt::Display for CommutativeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}^{}", w[i], j - i)?;
            } else {
                write!(f, "{}", w[i])?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Polynomial in the barred generators with rational coefficients, in the
/// commutative quotient of the presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativeElement {
    lattice: Lattice,
    terms: BTreeMap<CommutativeMonomial, BigRational>,
}

impl CommutativeElement {
    pub fn zero(lattice: Lattice) -> Self {
        CommutativeElement {
            lattice,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(lattice: Lattice, c: BigRational) -> Self {
        let mut e = Self::zero(lattice);
        e.add_term(CommutativeMonomial::one(&lattice), c);
        e
    }

    pub fn one(lattice: Lattice) -> Self {
        Self::constant(lattice, BigRational::one())
    }

    pub fn generator(lattice: Lattice, x: Generator) -> Self {
        let mut e = Self::zero(lattice);
        e.add_term(CommutativeMonomial::from_word(&[x], &lattice), BigRational::one());
        e
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn add_term(&mut self, m: CommutativeMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CommutativeMonomial, &BigRational)> {
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

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.lattice);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Canonical representative in the noncommutative algebra, with constant
    /// Laurent coefficients.
    pub fn lift(&self) -> FreeElement<Generator, LaurentScalar> {
        FreeElement::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.word(), LaurentScalar::constant(c.clone()))),
        )
    }
}

impl fmt::Display for CommutativeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_one = m.word().is_empty();
            if mag.is_one() {
                if is_one {
                    f.write_str("1")?;
                } else {
                    write!(f, "{m}")?;
                }
            } else {
                let text = if mag.is_integer() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                };
                if is_one {
                    f.write_str(&text)?;
                } else {
                    write!(f, "{text}*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &CommutativeElement {
    type Output = CommutativeElement;
    fn add(self, rhs: Self) -> CommutativeElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &CommutativeElement {
    type Output = CommutativeElement;
    fn neg(self) -> CommutativeElement {
        self.scale_int(-1)
    }
}

impl Sub for &CommutativeElement {
    type Output = CommutativeElement;
    fn sub(self, rhs: Self) -> CommutativeElement {
        self + &(-rhs)
    }
}

impl Mul for &CommutativeElement {
    type Output = CommutativeElement;
    fn mul(self, rhs: Self) -> CommutativeElement {
        let mut out = CommutativeElement::zero(self.lattice);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b, &self.lattice), x * y);
            }
        }
        out
    }
}
