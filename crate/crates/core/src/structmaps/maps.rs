use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    beta, e_sym, f_sym, g_inv_sym, g_sym, gamma, neg_q_pow, qq, qq_inv, JimboElement,
    JimboGenerators, JimboSymbol, RElem, RootSign, RootVectors, StructError,
};
use crate::freealg::{FreeElement, Generator, Letter, MatrixEntry};
use crate::presentations::{full_qmatrix_relations, Flavor, PresentationSpec};
use crate::report::{Check, Report};
use crate::rewrite::RewriteError;
use crate::scalars::RatScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapDirection {
    Homomorphism,
    Antihomomorphism,
}

/// Map from the free algebra on `D` into the FRT algebra, given on
/// generators and checked against a relation set.
#[derive(Clone, Debug)]
pub struct AlgebraMap<D: Letter> {
    direction: MapDirection,
    presentation: Arc<PresentationSpec>,
    images: BTreeMap<D, RElem>,
    report: Report,
}

impl<D: Letter> AlgebraMap<D> {
    pub fn direction(&self) -> MapDirection {
        self.direction
    }

    pub fn images(&self) -> &BTreeMap<D, RElem> {
        &self.images
    }

    pub fn image(&self, x: &D) -> Option<&RElem> {
        self.images.get(x)
    }

    pub fn generating_set(&self) -> Vec<String> {
        self.images.keys().map(ToString::to_string).collect()
    }

    /// Checks run when the map was built.
    pub fn report(&self) -> &Report {
        &self.report
    }

    pub fn apply(&self, e: &FreeElement<D, RatScalar>) -> Result<RElem, RewriteError> {
        let reverse = self.direction == MapDirection::Antihomomorphism;
        let raw = e.substitute(reverse, |x| self.images.get(x).cloned().unwrap_or_else(FreeElement::zero));
        self.presentation.rat_system().normal_form(&raw)
    }
}

fn validate<D: Letter>(
    direction: MapDirection,
    images: &BTreeMap<D, RElem>,
    relations: &[(String, FreeElement<D, RatScalar>)],
    presentation: &PresentationSpec,
) -> Result<Report, StructError> {
    let reverse = direction == MapDirection::Antihomomorphism;
    let sys = presentation.rat_system();
    let results: Vec<(Check, Option<StructError>)> = relations
        .par_iter()
        .map(|(tag, r)| {
            let raw = r.substitute(reverse, |x| images.get(x).cloned().unwrap_or_else(FreeElement::zero));
            let name = r.to_string();
            match sys.normal_form(&raw) {
                Ok(v) if v.is_zero() => (Check::pass(name, tag.clone()), None),
                Ok(v) => {
                    let err = StructError::ValidationFailed {
                        relation: name.clone(),
                        image: v.to_string(),
                    };
                    (Check::fail(name, tag.clone(), v.to_string()), Some(err))
                }
                Err(e) => (Check::fail(name, tag.clone(), e.to_string()), Some(e.into())),
            }
        })
        .collect();
    let mut report = Report::new();
    for (c, err) in results {
        if let Some(e) = err {
            return Err(e);
        }
        report.push(c);
    }
    Ok(report)
}

/// Validated homomorphism; every relation, tagged with its family name,
/// must map to 0.
pub fn build_algebra_map<D: Letter>(
    images: BTreeMap<D, RElem>,
    relations: &[(String, FreeElement<D, RatScalar>)],
    presentation: Arc<PresentationSpec>,
) -> Result<AlgebraMap<D>, StructError> {
    let report = validate(MapDirection::Homomorphism, &images, relations, &presentation)?;
    Ok(AlgebraMap {
        direction: MapDirection::Homomorphism,
        presentation,
        images,
        report,
    })
}

/// Each FRT generator written in the Jimbo symbols: the diagonal and
/// simple ones from the Borel embeddings, the rest by
/// β_ij = (q − q⁻¹)⁻¹ [β_ik, β_kj] β_kk⁻¹ and
/// γ_ji = (q − q⁻¹)⁻¹ [γ_ki, γ_jk] γ_kk⁻¹ with k = i+1.
pub fn frt_in_jimbo(n: usize) -> BTreeMap<Generator, JimboElement> {
    let mut out: BTreeMap<Generator, JimboElement> = BTreeMap::new();
    for i in 1..=n {
        out.insert(Generator::beta(i, i), g_sym(i));
        out.insert(Generator::gamma(i, i), g_inv_sym(i));
    }
    for len in 1..n {
        for i in 1..=n - len {
            let j = i + len;
            let (b, g) = if len == 1 {
                (
                    (&e_sym(i) * &g_sym(j)).scale(&-qq()),
                    (&g_inv_sym(j) * &f_sym(i)).scale(&qq()),
                )
            } else {
                let k = i + 1;
                let bk = |r, c| &out[&Generator::beta(r, c)];
                let gk = |r, c| &out[&Generator::gamma(r, c)];
                let b = &bk(i, k).commutator(bk(k, j)) * &g_inv_sym(k);
                let g = &gk(k, i).commutator(gk(j, k)) * &g_sym(k);
                (b.scale(&qq_inv()), g.scale(&qq_inv()))
            };
            out.insert(Generator::beta(i, j), b);
            out.insert(Generator::gamma(j, i), g);
        }
    }
    out
}

fn required_symbols(n: usize) -> Vec<JimboSymbol> {
    let mut v = Vec::new();
    for i in 1..=n as u16 {
        v.push(JimboSymbol::G(i));
        v.push(JimboSymbol::GInv(i));
        if (i as usize) < n {
            v.push(JimboSymbol::E(i));
            v.push(JimboSymbol::F(i));
        }
    }
    v
}

/// Antihomomorphism given on E_i, F_i, G_i^{±1}; the image of each FRT
/// generator is obtained through its expression in those symbols, and the
/// map is validated on every defining relation of the GL presentation.
pub fn build_algebra_antimap(
    images: &BTreeMap<JimboSymbol, RElem>,
    presentation: Arc<PresentationSpec>,
) -> Result<AlgebraMap<Generator>, StructError> {
    let n = presentation.n();
    if n < 2 {
        return Err(StructError::InvalidRank(n));
    }
    if let Some(s) = required_symbols(n).into_iter().find(|s| !images.contains_key(s)) {
        return Err(StructError::MissingImage(s.to_string()));
    }
    let sys = presentation.rat_system();
    let jg = JimboGenerators::new(n)?;
    let mut report = Report::new();
    let mut table = BTreeMap::new();
    for (x, expr) in frt_in_jimbo(n) {
        let back = jg.realize(&expr)?;
        let diff = &back - &FreeElement::letter(x);
        report.push(Check::zero(format!("{x} from symbols"), "frt-expression", sys.normal_form(&diff)));
        let img = sys.normal_form(&expr.substitute(true, |s| images[s].clone()))?;
        table.insert(x, img);
    }
    if let Some(c) = report.failures().next() {
        return Err(StructError::ValidationFailed {
            relation: c.name.clone(),
            image: c.witness.clone().unwrap_or_default(),
        });
    }
    let relations: Vec<(String, RElem)> = presentation
        .all_relations()
        .map(|(tag, r)| (tag.to_string(), r.to_rational()))
        .collect();
    report.extend(validate(MapDirection::Antihomomorphism, &table, &relations, &presentation)?);
    Ok(AlgebraMap {
        direction: MapDirection::Antihomomorphism,
        presentation,
        images: table,
        report,
    })
}

/// Ψ: E_i ↦ E_i, F_i ↦ F_i, G_i^{±1} ↦ G_i^{∓1}.
pub fn psi(n: usize) -> Result<AlgebraMap<Generator>, StructError> {
    let jg = JimboGenerators::new(n)?;
    let mut images = BTreeMap::new();
    for (s, v) in jg.symbols() {
        let img = match *s {
            JimboSymbol::G(i) => jg.g_inv(i as usize).clone(),
            JimboSymbol::GInv(i) => jg.g(i as usize).clone(),
            _ => v.clone(),
        };
        images.insert(*s, img);
    }
    build_algebra_antimap(&images, jg.presentation().clone())
}

/// Ψ∘Ψ = id on the FRT generators, Ψ(E^±_ij) = (−q)^{∓(i−j+1)} E^∓_ij and
/// Ψ(F^±_ji) = (−q)^{±(i−j+1)} F^∓_ji.
pub fn check_psi_identities(n: usize) -> Result<Report, StructError> {
    let jg = JimboGenerators::new(n)?;
    let rv = RootVectors::new(&jg)?;
    let map = psi(n)?;
    let mut report = Report::new();
    for x in Generator::all(n) {
        let e = FreeElement::letter(x);
        let twice = map.apply(&e).and_then(|y| map.apply(&y));
        report.push(Check::zero(
            format!("psi^2({x})"),
            "psi-involution",
            twice.map(|y| &y - &e),
        ));
    }
    for sign in [RootSign::Plus, RootSign::Minus] {
        let s = sign.exponent();
        for i in 1..n {
            for j in i + 1..=n {
                let d = i as i32 - j as i32 + 1;
                let pe = map.apply(rv.e(sign, i, j));
                let want = rv.e(sign.opposite(), i, j).scale(&neg_q_pow(-s * d));
                report.push(Check::zero(
                    format!("psi(E{}[{i},{j}])", sign.symbol()),
                    "psi-root-vector",
                    pe.map(|v| &v - &want),
                ));
                let pf = map.apply(rv.f(sign, j, i));
                let want = rv.f(sign.opposite(), j, i).scale(&neg_q_pow(s * d));
                report.push(Check::zero(
                    format!("psi(F{}[{j},{i}])", sign.symbol()),
                    "psi-root-vector",
                    pf.map(|v| &v - &want),
                ));
            }
        }
    }
    Ok(report)
}

/// π₊ (t_ij ↦ β_ij for i ≤ j, else 0) or π₋ (t_ij ↦ γ_ij for i ≥ j),
/// validated on the q-matrix relations of the generic matrix.
pub fn projection_map(n: usize, upper: bool) -> Result<AlgebraMap<MatrixEntry>, StructError> {
    let presentation = PresentationSpec::cached(n, Flavor::GL)?;
    let mut images = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let img = match (upper, i.cmp(&j)) {
                (true, std::cmp::Ordering::Greater) | (false, std::cmp::Ordering::Less) => FreeElement::zero(),
                (true, _) => beta(i, j),
                (false, _) => gamma(i, j),
            };
            images.insert(MatrixEntry::new(i, j), img);
        }
    }
    let tag = if upper { "pi-plus" } else { "pi-minus" };
    let relations: Vec<_> = full_qmatrix_relations(n)
        .into_iter()
        .map(|r| (tag.to_string(), r.to_rational()))
        .collect();
    build_algebra_map(images, &relations, presentation)
}
