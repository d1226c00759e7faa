use num_traits::{One, Zero};

use super::PresentationError;
use crate::freealg::{FreeElement, Generator, Letter, MatrixEntry};
use crate::scalars::{Coefficient, LaurentScalar};

/// Square matrix of Laurent scalars; indices are 0-based internally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    dim: usize,
    entries: Vec<LaurentScalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RVariant {
    Standard,
    Op,
}

impl ScalarMatrix {
    pub fn zero(dim: usize) -> Self {
        ScalarMatrix {
            dim,
            entries: vec![LaurentScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = LaurentScalar::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentScalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentScalar) {
        self.entries[r * self.dim + c] = v;
    }
}

/// Position of e_a ⊗ e_b's basis vector in the n²-dimensional space
/// (1-based a, b; basis order 11, 12, …, 1n, 21, …).
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    (a - 1) * n + (b - 1)
}

/// The R-matrix Σ q^{δ_ij} e_ii⊗e_jj + (q − q⁻¹) Σ_{i<j} e_ij⊗e_ji, or its
/// opposite with e_ji⊗e_ij in the second sum.
pub fn build_r_matrix(n: usize, variant: RVariant) -> ScalarMatrix {
    let mut r = ScalarMatrix::zero(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let d = pair_index(n, i, j);
            r.set(d, d, LaurentScalar::q_pow(i32::from(i == j)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            // e_ij ⊗ e_ji maps e_j⊗e_i to e_i⊗e_j.
            let (row, col) = match variant {
                RVariant::Standard => (pair_index(n, i, j), pair_index(n, j, i)),
                RVariant::Op => (pair_index(n, j, i), pair_index(n, i, j)),
            };
            r.set(row, col, LaurentScalar::q_minus_q_inv());
        }
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Full,
    UpperB,
    LowerGamma,
    /// (q^{±δ_hk} χ_hk) for χ the entries of B or Γ.
    Scaled { upper: bool, sign: i8 },
    /// D_β B D_β⁻¹ or D_γ⁻¹ Γ D_γ.
    Conjugated { upper: bool },
    LPlus,
    LMinus,
}

/// n×n matrix of algebra elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix<L: Letter, S: Coefficient> {
    n: usize,
    kind: MatrixKind,
    entries: Vec<FreeElement<L, S>>,
}

impl<L: Letter, S: Coefficient> GeneratorMatrix<L, S> {
    /// Entries from a 1-based index function.
    pub fn from_fn(
        n: usize,
        kind: MatrixKind,
        mut f: impl FnMut(usize, usize) -> FreeElement<L, S>,
    ) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        GeneratorMatrix { n, kind, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// Entry (i, j), 1-based.
    pub fn get(&self, i: usize, j: usize) -> &FreeElement<L, S> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }
}

impl<S: Coefficient> GeneratorMatrix<MatrixEntry, S> {
    pub fn full(n: usize) -> Self {
        Self::from_fn(n, MatrixKind::Full, |i, j| {
            FreeElement::letter(MatrixEntry::new(i, j))
        })
    }
}

fn gen<S: Coefficient>(g: Generator) -> FreeElement<Generator, S> {
    FreeElement::letter(g)
}

impl<S: Coefficient> GeneratorMatrix<Generator, S> {
    /// B = (β_ij), upper triangular.
    pub fn upper_b(n: usize) -> Self {
        Self::from_fn(n, MatrixKind::UpperB, |i, j| {
            if i <= j {
                gen(Generator::beta(i, j))
            } else {
                FreeElement::zero()
            }
        })
    }

    /// Γ = (γ_ij), lower triangular.
    pub fn lower_gamma(n: usize) -> Self {
        Self::from_fn(n, MatrixKind::LowerGamma, |i, j| {
            if i >= j {
                gen(Generator::gamma(i, j))
            } else {
                FreeElement::zero()
            }
        })
    }

    /// B^D = D_β B D_β⁻¹ or Γ^D = D_γ⁻¹ Γ D_γ.
    pub fn conjugated(n: usize, upper: bool) -> Self {
        Self::from_fn(n, MatrixKind::Conjugated { upper }, |i, j| {
            if upper && i <= j {
                &(&gen(Generator::beta(i, i)) * &gen(Generator::beta(i, j)))
                    * &gen(Generator::gamma(j, j))
            } else if !upper && i >= j {
                &(&gen(Generator::beta(i, i)) * &gen(Generator::gamma(i, j)))
                    * &gen(Generator::gamma(j, j))
            } else {
                FreeElement::zero()
            }
        })
    }

    /// X^± = (q^{±δ_hk} χ_hk) for X = B (upper) or Γ.
    pub fn scaled(n: usize, upper: bool, sign: i8, ctx: &S::Context) -> Self {
        let base = if upper {
            Self::upper_b(n)
        } else {
            Self::lower_gamma(n)
        };
        Self::from_fn(n, MatrixKind::Scaled { upper, sign }, |i, j| {
            if i == j {
                base.get(i, j)
                    .scale(&S::from_laurent(&LaurentScalar::q_pow(sign as i32), ctx))
            } else {
                base.get(i, j).clone()
            }
        })
    }
}

/// Which compact RTT-type identity to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RttForm {
    /// R X₂ Y₁ = Y₁ X₂ R
    TwoOne,
    /// R X₁ Y₂ = Y₂ X₁ R
    OneTwo,
}

/// Dense n²×n² matrix of algebra elements.
struct ElementMatrix<L: Letter, S: Coefficient> {
    dim: usize,
    entries: Vec<FreeElement<L, S>>,
}

impl<L: Letter, S: Coefficient> ElementMatrix<L, S> {
    fn from_scalars(m: &ScalarMatrix, ctx: &S::Context) -> Self {
        ElementMatrix {
            dim: m.dim,
            entries: m
                .entries
                .iter()
                .map(|c| FreeElement::scalar(S::from_laurent(c, ctx)))
                .collect(),
        }
    }

    /// X ⊗ I when `first`, else I ⊗ X:
    /// (X⊗I)_{(a,b),(c,d)} = X_ac δ_bd, (I⊗X)_{(a,b),(c,d)} = δ_ac X_bd.
    fn embed(x: &GeneratorMatrix<L, S>, first: bool) -> Self {
        let n = x.n;
        let dim = n * n;
        let mut entries = vec![FreeElement::zero(); dim * dim];
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    for d in 1..=n {
                        let v = if first {
                            if b == d {
                                x.get(a, c).clone()
                            } else {
                                continue;
                            }
                        } else if a == c {
                            x.get(b, d).clone()
                        } else {
                            continue;
                        };
                        entries[pair_index(n, a, b) * dim + pair_index(n, c, d)] = v;
                    }
                }
            }
        }
        ElementMatrix { dim, entries }
    }

    fn mul(&self, other: &Self) -> Self {
        let dim = self.dim;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = FreeElement::zero();
                for k in 0..dim {
                    let a = &self.entries[i * dim + k];
                    let b = &other.entries[k * dim + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        ElementMatrix { dim, entries }
    }
}

/// Entrywise relations of a compact identity, as the n⁴ entries of
/// `lhs − rhs` in row-major order over the basis pairs (ij, kl).
pub fn expand_rtt<L: Letter, S: Coefficient>(
    r: &ScalarMatrix,
    x: &GeneratorMatrix<L, S>,
    y: &GeneratorMatrix<L, S>,
    form: RttForm,
    ctx: &S::Context,
) -> Result<Vec<FreeElement<L, S>>, PresentationError> {
    if x.n != y.n || r.dim != x.n * x.n {
        return Err(PresentationError::DimensionMismatch {
            r: r.dim,
            x: x.n,
            y: y.n,
        });
    }
    let rm = ElementMatrix::from_scalars(r, ctx);
    let (lhs, rhs) = match form {
        RttForm::TwoOne => {
            let x2 = ElementMatrix::embed(x, false);
            let y1 = ElementMatrix::embed(y, true);
            (rm.mul(&x2.mul(&y1)), y1.mul(&x2).mul(&rm))
        }
        RttForm::OneTwo => {
            let x1 = ElementMatrix::embed(x, true);
            let y2 = ElementMatrix::embed(y, false);
            (rm.mul(&x1.mul(&y2)), y2.mul(&x1).mul(&rm))
        }
    };
    Ok(lhs
        .entries
        .iter()
        .zip(&rhs.entries)
        .map(|(a, b)| a - b)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_matrix_n1() {
        let r = build_r_matrix(1, RVariant::Standard);
        assert_eq!(r.dim(), 1);
        assert_eq!(r.get(0, 0), &LaurentScalar::q());
    }

    #[test]
    fn r_matrix_n2_positions() {
        let qq = LaurentScalar::q_minus_q_inv();
        let r = build_r_matrix(2, RVariant::Standard);
        let diag: Vec<_> = (0..4).map(|i| r.get(i, i).clone()).collect();
        let one = LaurentScalar::one();
        assert_eq!(diag, vec![LaurentScalar::q(), one.clone(), one, LaurentScalar::q()]);
        // row (1,2) = index 1, column (2,1) = index 2
        assert_eq!(r.get(1, 2), &qq);
        assert!(r.get(2, 1).is_zero());
        let op = build_r_matrix(2, RVariant::Op);
        assert_eq!(op.get(2, 1), &qq);
        assert!(op.get(1, 2).is_zero());
    }
}
