use crate::freealg::{FreeElement, Generator, Letter, MatrixEntry};
use crate::scalars::LaurentScalar;

type LElem<L> = FreeElement<L, LaurentScalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangle {
    Upper,
    Lower,
}

fn entry<L: Letter>(f: &impl Fn(usize, usize) -> Option<L>, i: usize, j: usize) -> LElem<L> {
    f(i, j).map_or_else(FreeElement::zero, FreeElement::letter)
}

fn sc<L: Letter>(c: LaurentScalar) -> LElem<L> {
    FreeElement::scalar(c)
}

/// The four q-matrix families for the matrix with entries `f(i, j)`
/// (`None` meaning 0), each written as `lhs − rhs`:
/// t_ij t_ik − q t_ik t_ij (j<k); t_ik t_hk − q t_hk t_ik (i<h);
/// t_il t_jk − t_jk t_il and t_ik t_jl − t_jl t_ik − (q − q⁻¹) t_il t_jk
/// (i<j, k<l). Instances that vanish are dropped.
pub fn qmatrix_relations_with<L: Letter>(
    n: usize,
    f: impl Fn(usize, usize) -> Option<L>,
) -> Vec<LElem<L>> {
    let t = |i, j| entry(&f, i, j);
    let q = sc::<L>(LaurentScalar::q());
    let qq = sc::<L>(LaurentScalar::q_minus_q_inv());
    let mut out = Vec::new();
    let mut push = |r: LElem<L>| {
        if !r.is_zero() {
            out.push(r);
        }
    };
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                push(&(&t(i, j) * &t(i, k)) - &(&q * &(&t(i, k) * &t(i, j))));
            }
        }
    }
    for k in 1..=n {
        for i in 1..=n {
            for h in i + 1..=n {
                push(&(&t(i, k) * &t(h, k)) - &(&q * &(&t(h, k) * &t(i, k))));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    push(&(&t(i, l) * &t(j, k)) - &(&t(j, k) * &t(i, l)));
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    let comm = &(&t(i, k) * &t(j, l)) - &(&t(j, l) * &t(i, k));
                    push(&comm - &(&qq * &(&t(i, l) * &t(j, k))));
                }
            }
        }
    }
    out
}

/// q-matrix relations of the generic matrix T = (t_ij).
pub fn full_qmatrix_relations(n: usize) -> Vec<LElem<MatrixEntry>> {
    qmatrix_relations_with(n, |i, j| Some(MatrixEntry::new(i, j)))
}

/// q-matrix relations of B (upper) or Γ (lower), entries outside the
/// triangle set to zero.
pub fn qmatrix_relations(n: usize, triangle: Triangle) -> Vec<LElem<Generator>> {
    qmatrix_relations_with(n, |i, j| triangle_entry(triangle, i, j))
}

pub(crate) fn triangle_entry(triangle: Triangle, i: usize, j: usize) -> Option<Generator> {
    match triangle {
        Triangle::Upper if i <= j => Some(Generator::beta(i, j)),
        Triangle::Lower if i >= j => Some(Generator::gamma(i, j)),
        _ => None,
    }
}

/// Number of inversions, by direct pair counting.
pub fn inversions(perm: &[usize]) -> usize {
    let mut c = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                c += 1;
            }
        }
    }
    c
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out.sort();
    out
}

/// det_q = Σ_σ (−q)^{l(σ)} t_{1σ(1)} ⋯ t_{nσ(n)}.
pub fn quantum_determinant_with<L: Letter>(
    n: usize,
    f: impl Fn(usize, usize) -> Option<L>,
) -> LElem<L> {
    let mut det = FreeElement::zero();
    for p in permutations(n) {
        let mut term = FreeElement::one();
        for (i, &pi) in p.iter().enumerate() {
            term = &term * &entry(&f, i + 1, pi);
            if term.is_zero() {
                break;
            }
        }
        let l = inversions(&p) as i32;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let c = LaurentScalar::from_int_terms(&[(l, sign)]);
        det = &det + &term.scale(&c);
    }
    det
}

pub fn full_quantum_determinant(n: usize) -> LElem<MatrixEntry> {
    quantum_determinant_with(n, |i, j| Some(MatrixEntry::new(i, j)))
}

pub fn quantum_determinant(n: usize, triangle: Triangle) -> LElem<Generator> {
    quantum_determinant_with(n, |i, j| triangle_entry(triangle, i, j))
}

fn kd(a: usize, b: usize) -> i32 {
    i32::from(a == b)
}

/// One instance of the expanded mixed β/γ relation, as `lhs − rhs`:
/// q^{δij} γ_ik β_js + [i>j](q − q⁻¹) γ_jk β_is
///   − q^{δks} β_js γ_ik − [s>k](q − q⁻¹) β_jk γ_is.
pub fn mixed_relation(i: usize, k: usize, j: usize, s: usize) -> LElem<Generator> {
    mixed_relation_shifted(i, k, j, s, 0)
}

/// The same instance with the cross terms carrying the extra factor
/// q^{δis − δjk}. This variant is false once n ≥ 3: the shift is nonzero
/// exactly when a cross term contains a diagonal letter, and there the
/// vector representation forces exponent 0.
pub fn shifted_mixed_relation(i: usize, k: usize, j: usize, s: usize) -> LElem<Generator> {
    mixed_relation_shifted(i, k, j, s, kd(i, s) - kd(j, k))
}

fn mixed_relation_shifted(i: usize, k: usize, j: usize, s: usize, shift: i32) -> LElem<Generator> {
    let b = |r, c| entry(&|r, c| triangle_entry(Triangle::Upper, r, c), r, c);
    let g = |r, c| entry(&|r, c| triangle_entry(Triangle::Lower, r, c), r, c);
    let qp = |e: i32| sc::<Generator>(LaurentScalar::q_pow(e));
    let cross = sc::<Generator>(LaurentScalar::q_minus_q_inv() * LaurentScalar::q_pow(shift));

    let mut lhs = &qp(kd(i, j)) * &(&g(i, k) * &b(j, s));
    if i > j {
        lhs = &lhs + &(&cross * &(&g(j, k) * &b(i, s)));
    }
    let mut rhs = &qp(kd(k, s)) * &(&b(j, s) * &g(i, k));
    if s > k {
        rhs = &rhs + &(&cross * &(&b(j, k) * &g(i, s)));
    }
    &lhs - &rhs
}

/// All instances over i, k, j, s ∈ 1..n, dropping those that vanish.
pub fn mixed_relations(n: usize) -> Vec<LElem<Generator>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for k in 1..=n {
            for j in 1..=n {
                for s in 1..=n {
                    let r = mixed_relation(i, k, j, s);
                    if !r.is_zero() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// β_kk γ_kk − 1 and γ_kk β_kk − 1.
pub fn diagonal_inverse_relations(n: usize) -> Vec<LElem<Generator>> {
    let mut out = Vec::new();
    for k in 1..=n {
        let b = FreeElement::letter(Generator::beta(k, k));
        let g = FreeElement::letter(Generator::gamma(k, k));
        out.push(&(&b * &g) - &FreeElement::one());
        out.push(&(&g * &b) - &FreeElement::one());
    }
    out
}

/// β_11⋯β_nn − 1 and γ_11⋯γ_nn − 1.
pub fn determinant_relations(n: usize) -> Vec<LElem<Generator>> {
    let mut pb = FreeElement::one();
    let mut pg = FreeElement::one();
    for k in 1..=n {
        pb = &pb * &FreeElement::letter(Generator::beta(k, k));
        pg = &pg * &FreeElement::letter(Generator::gamma(k, k));
    }
    vec![&pb - &FreeElement::one(), &pg - &FreeElement::one()]
}
