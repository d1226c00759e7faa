use rayon::prelude::*;

use super::maps::psi;
use super::{beta, gamma, DerivedTable, JimboGenerators, RElem, RootSign, RootVectors, StructError};
use crate::freealg::{FreeElement, Generator};
use crate::presentations::{build_r_matrix, expand_rtt, GeneratorMatrix, MatrixKind, RVariant, RttForm};
use crate::report::{Check, Report};
use crate::scalars::RatScalar;

type LMatrix = GeneratorMatrix<Generator, RatScalar>;

/// L⁺ (upper) and L⁻ (lower) with entries in normal form.
pub struct LOperators {
    pub plus: LMatrix,
    pub minus: LMatrix,
}

impl LOperators {
    /// L⁺_ii = G_i, L⁺_ij = G_i Ḟ⁺_ji, L⁻_ii = G_i⁻¹, L⁻_ji = −Ė⁺_ij G_i⁻¹
    /// for i < j.
    pub fn new(jg: &JimboGenerators, rv: &RootVectors) -> Result<Self, StructError> {
        let n = jg.n();
        let mut err = None;
        let mut nf = |e: RElem| match jg.nf(&e) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                FreeElement::zero()
            }
        };
        let plus = LMatrix::from_fn(n, MatrixKind::LPlus, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => jg.g(i).clone(),
            std::cmp::Ordering::Less => nf(jg.g(i) * &rv.f_dot(RootSign::Plus, j, i)),
            std::cmp::Ordering::Greater => FreeElement::zero(),
        });
        let minus = LMatrix::from_fn(n, MatrixKind::LMinus, |j, i| match j.cmp(&i) {
            std::cmp::Ordering::Equal => jg.g_inv(i).clone(),
            std::cmp::Ordering::Greater => nf(-(&rv.e_dot(RootSign::Plus, i, j) * jg.g_inv(i))),
            std::cmp::Ordering::Less => FreeElement::zero(),
        });
        match err {
            Some(e) => Err(e.into()),
            None => Ok(LOperators { plus, minus }),
        }
    }

    pub fn table(&self) -> DerivedTable {
        let n = self.plus.n();
        let mut t = DerivedTable {
            n,
            generators: Vec::new(),
        };
        for i in 1..=n {
            for j in i..=n {
                t.push(format!("L+_{i},{j}"), self.plus.get(i, j).clone());
                t.push(format!("L-_{j},{i}"), self.minus.get(j, i).clone());
            }
        }
        t
    }
}

/// Builds L^± and checks the three RLL identities entrywise, the diagonal
/// inverses, and both directions of the comparison with β, γ through Ψ.
pub fn l_operator_matrices(n: usize) -> Result<(LMatrix, LMatrix, Report), StructError> {
    let jg = JimboGenerators::new(n)?;
    let rv = RootVectors::new(&jg)?;
    let ops = LOperators::new(&jg, &rv)?;
    let (lp, lm) = (&ops.plus, &ops.minus);
    let mut report = Report::new();

    let r = build_r_matrix(n, RVariant::Standard);
    for (label, x, y) in [("++", lp, lp), ("--", lm, lm), ("+-", lp, lm)] {
        let rels = expand_rtt(&r, x, y, RttForm::OneTwo, &()).map_err(StructError::from)?;
        let checks: Vec<Check> = rels
            .par_iter()
            .enumerate()
            .map(|(idx, e)| {
                let (row, col) = (idx / (n * n), idx % (n * n));
                Check::zero(format!("RLL{label}[{row},{col}]"), "rll", jg.nf(e))
            })
            .collect();
        report.extend(checks.into_iter().collect());
    }

    for k in 1..=n {
        let one = FreeElement::one();
        report.push(Check::zero(
            format!("L+[{k},{k}]*L-[{k},{k}]"),
            "l-diagonal-inverse",
            jg.nf(&(&(lp.get(k, k) * lm.get(k, k)) - &one)),
        ));
        report.push(Check::zero(
            format!("L-[{k},{k}]*L+[{k},{k}]"),
            "l-diagonal-inverse",
            jg.nf(&(&(lm.get(k, k) * lp.get(k, k)) - &one)),
        ));
    }

    let map = psi(n)?;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| (i, j)))
        .collect();
    let checks: Vec<Check> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let p_plus = map.apply(&(&(&beta(j, j) * &gamma(j, i)) * &gamma(i, i)));
            let p_minus = map.apply(&(&(&beta(i, i) * &beta(i, j)) * &gamma(j, j)));
            let inv_g = map.apply(&(&(&gamma(i, i) * lp.get(i, j)) * lp.get(j, j)));
            let inv_b = map.apply(&(&(lm.get(j, j) * lm.get(j, i)) * &beta(i, i)));
            [
                Check::zero(
                    format!("L+[{i},{j}] = psi(g[{j},{j}]^-1 g[{j},{i}] g[{i},{i}])"),
                    "l-operator-psi",
                    p_plus.map(|v| &v - lp.get(i, j)),
                ),
                Check::zero(
                    format!("L-[{j},{i}] = psi(b[{i},{i}] b[{i},{j}] b[{j},{j}]^-1)"),
                    "l-operator-psi",
                    p_minus.map(|v| &v - lm.get(j, i)),
                ),
                Check::zero(
                    format!("g[{j},{i}] = psi(L+[{i},{i}]^-1 L+[{i},{j}] L+[{j},{j}])"),
                    "l-operator-inversion",
                    inv_g.map(|v| &v - &gamma(j, i)),
                ),
                Check::zero(
                    format!("b[{i},{j}] = psi(L-[{j},{j}] L-[{j},{i}] L-[{i},{i}]^-1)"),
                    "l-operator-inversion",
                    inv_b.map(|v| &v - &beta(i, j)),
                ),
            ]
        })
        .collect();
    report.extend(checks.into_iter().collect());
    let LOperators { plus, minus } = ops;
    Ok((plus, minus, report))
}
