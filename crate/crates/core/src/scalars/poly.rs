//! Dense univariate polynomials over Q, used by the scalar types for
//! division, gcd and cyclotomic reduction.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in increasing degree; no trailing zeros. Zero is empty.
pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &Poly, c: &BigRational) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division: returns (quotient, remainder). `b` must be nonzero.
pub(crate) fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn make_monic(p: &Poly) -> Poly {
    match p.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Inverse of `a` modulo `m`, if gcd(a, m) = 1.
pub(crate) fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    // Extended Euclid tracking only the coefficient of `a`.
    let (_, a0) = div_rem(a, m);
    let mut r0 = m.clone();
    let mut r1 = a0;
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let inv = r0[0].recip();
    let (_, out) = div_rem(&scale(&s0, &inv), m);
    Some(out)
}

/// The ℓ-th cyclotomic polynomial, by dividing x^ℓ − 1 by Φ_d for d | ℓ, d < ℓ.
pub(crate) fn cyclotomic(level: u32) -> Poly {
    assert!(level >= 1);
    let mut p = vec![BigRational::zero(); level as usize + 1];
    p[0] = -BigRational::one();
    p[level as usize] = BigRational::one();
    for d in 1..level {
        if level.is_multiple_of(d) {
            let (q, r) = div_rem(&p, &cyclotomic(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(cs: &[i64]) -> Poly {
        let mut v: Poly = cs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        trim(&mut v);
        v
    }

    #[test]
    fn cyclotomic_small_levels() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(5), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn gcd_and_inverse() {
        // (x-1)(x+2) and (x-1)(x+3)
        let a = mul(&p(&[-1, 1]), &p(&[2, 1]));
        let b = mul(&p(&[-1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        let m = cyclotomic(3);
        let x = p(&[0, 1]);
        let inv = inverse_mod(&x, &m).unwrap();
        let (_, r) = div_rem(&mul(&x, &inv), &m);
        assert_eq!(r, p(&[1]));
        assert!(inverse_mod(&p(&[1, 1, 1]), &m).is_none());
    }
}
