use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentScalar;
use super::poly::{self, Poly};

fn modulus(level: u32) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    guard
        .entry(level)
        .or_insert_with(|| Arc::new(poly::cyclotomic(level)))
        .clone()
}

/// The cyclotomic polynomial Φ_ℓ rendered as a Laurent scalar.
pub fn cyclotomic_polynomial(level: u32) -> LaurentScalar {
    LaurentScalar::from_split(0, (*modulus(level)).clone())
}

/// Element of Q[q]/(Φ_ℓ), i.e. of Q(ε) for a primitive ℓ-th root of unity ε.
///
/// `level == 0` marks a rational constant not yet bound to a level (the
/// values produced by `zero()`/`one()`); it adopts the level of whatever it
/// is combined with.
#[derive(Clone, Debug)]
pub struct CycloScalar {
    level: u32,
    residue: Poly,
}

impl CycloScalar {
    /// Reduces a Laurent polynomial at a primitive ℓ-th root of unity.
    pub fn from_laurent(value: &LaurentScalar, level: u32) -> Self {
        assert!(level >= 1, "cyclotomic level must be positive");
        let mut folded = vec![BigRational::zero(); level as usize];
        for (e, c) in value.terms() {
            folded[e.rem_euclid(level as i32) as usize] += c;
        }
        poly::trim(&mut folded);
        Self::reduced(level, folded)
    }

    fn reduced(level: u32, p: Poly) -> Self {
        if level == 0 {
            return CycloScalar { level, residue: p };
        }
        let m = modulus(level);
        let residue = if p.len() >= m.len() {
            poly::div_rem(&p, &m).1
        } else {
            p
        };
        CycloScalar { level, residue }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = vec![c];
        poly::trim(&mut p);
        CycloScalar {
            level: 0,
            residue: p,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// The residue as a polynomial in q of degree below deg Φ_ℓ.
    pub fn residue(&self) -> LaurentScalar {
        LaurentScalar::from_split(0, self.residue.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.residue.is_empty() {
            return None;
        }
        if self.residue.len() == 1 {
            return Some(CycloScalar {
                level: self.level,
                residue: vec![self.residue[0].recip()],
            });
        }
        let m = modulus(self.level);
        poly::inverse_mod(&self.residue, &m).map(|residue| CycloScalar {
            level: self.level,
            residue,
        })
    }

    fn joint_level(a: &Self, b: &Self) -> u32 {
        match (a.level, b.level) {
            (0, l) | (l, 0) => l,
            (x, y) => {
                assert_eq!(x, y, "mixing cyclotomic levels {x} and {y}");
                x
            }
        }
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue
    }
}

impl Eq for CycloScalar {}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue())
    }
}

impl Zero for CycloScalar {
    fn zero() -> Self {
        CycloScalar {
            level: 0,
            residue: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }
}

impl One for CycloScalar {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

fn add_impl(a: &CycloScalar, b: &CycloScalar, sign: bool) -> CycloScalar {
    let level = CycloScalar::joint_level(a, b);
    let residue = if sign {
        poly::add(&a.residue, &b.residue)
    } else {
        poly::sub(&a.residue, &b.residue)
    };
    CycloScalar { level, residue }
}

fn mul_impl(a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
    let level = CycloScalar::joint_level(a, b);
    CycloScalar::reduced(level, poly::mul(&a.residue, &b.residue))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                $body(self, rhs)
            }
        }
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: CycloScalar) -> CycloScalar {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, true));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, false));
forward_binop!(Mul, mul, mul_impl);

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            level: self.level,
            residue: self.residue.into_iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_cubed_is_one_at_level_three() {
        let v = CycloScalar::from_laurent(&LaurentScalar::q_pow(3), 3);
        assert_eq!(v, CycloScalar::one());
    }

    #[test]
    fn inverse_round_trip() {
        let x = CycloScalar::from_laurent(&LaurentScalar::from_int_terms(&[(1, 2), (0, 1)]), 5);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, CycloScalar::one());
    }
}
