//! Coproduct, counit and antipode of the triangular presentations, and the
//! Hopf axiom checks.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::freealg::{FreeElement, Generator, GeneratorKind, MatrixEntry, TensorElement};
use crate::presentations::{full_qmatrix_relations, full_quantum_determinant, Flavor, PresentationError, PresentationSpec};
use crate::report::{Check, Report};
use crate::rewrite::{orient_relations, Lattice, RewriteError, RewriteSystem};
use crate::scalars::{Coefficient, LaurentScalar};

type Elem<S> = FreeElement<Generator, S>;
type Tensor<S> = TensorElement<Generator, S>;

/// Hopf structure maps over a coefficient ring `S`, with every tensor leg
/// kept in normal form.
pub struct HopfContext<S: Coefficient> {
    presentation: Arc<PresentationSpec>,
    system: RewriteSystem<Generator, S>,
    coproduct: BTreeMap<Generator, Tensor<S>>,
    antipode: OnceLock<Result<BTreeMap<Generator, Elem<S>>, RewriteError>>,
}

/// Δ(β_ij) = Σ_{k=i..j} β_ik ⊗ β_kj, Δ(γ_ji) = Σ_{k=i..j} γ_jk ⊗ γ_ki.
pub fn generator_coproduct<S: Coefficient>(x: Generator) -> Tensor<S> {
    let mut t = TensorElement::zero(2);
    let (r, c) = (x.row(), x.col());
    match x.kind() {
        GeneratorKind::Beta => {
            for k in r..=c {
                t.add_term(
                    vec![vec![Generator::beta(r, k)], vec![Generator::beta(k, c)]],
                    S::one(),
                );
            }
        }
        GeneratorKind::Gamma => {
            for k in c..=r {
                t.add_term(
                    vec![vec![Generator::gamma(r, k)], vec![Generator::gamma(k, c)]],
                    S::one(),
                );
            }
        }
    }
    t
}

impl HopfContext<LaurentScalar> {
    pub fn laurent(presentation: Arc<PresentationSpec>) -> Self {
        Self::new(presentation, ())
    }
}

impl<S: Coefficient> HopfContext<S> {
    /// Builds the context over the ring `S`, specializing the presentation's
    /// rules with `ctx`.
    pub fn new(presentation: Arc<PresentationSpec>, ctx: S::Context) -> Self {
        let system = presentation.system().specialize::<S>(ctx);
        Self::with_system(presentation, system)
    }

    pub fn with_system(presentation: Arc<PresentationSpec>, system: RewriteSystem<Generator, S>) -> Self {
        let coproduct = presentation
            .generators()
            .into_iter()
            .map(|g| (g, generator_coproduct(g)))
            .collect();
        HopfContext {
            presentation,
            system,
            coproduct,
            antipode: OnceLock::new(),
        }
    }

    pub fn presentation(&self) -> &PresentationSpec {
        &self.presentation
    }

    pub fn system(&self) -> &RewriteSystem<Generator, S> {
        &self.system
    }

    pub fn n(&self) -> usize {
        self.presentation.n()
    }

    fn letter(&self, x: Generator) -> Elem<S> {
        FreeElement::letter(x)
    }

    /// Δ of a word, multiplying generator coproducts left to right.
    fn word_coproduct(&self, w: &[Generator]) -> Result<Tensor<S>, RewriteError> {
        let mut acc = TensorElement::one(2);
        for x in w {
            acc = acc.mul(&self.coproduct[x]).expect("degree 2");
            acc = self.system.normal_form_tensor(&acc)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, e: &Elem<S>) -> Result<Tensor<S>, RewriteError> {
        let mut out = TensorElement::zero(2);
        for (w, c) in e.terms() {
            let t = self.word_coproduct(w)?.scale(c);
            out = out.add(&t).expect("degree 2");
        }
        Ok(out)
    }

    fn letter_counit(x: &Generator) -> S {
        if x.is_diagonal() {
            S::one()
        } else {
            S::zero()
        }
    }

    fn word_counit(w: &[Generator]) -> S {
        if w.iter().all(Generator::is_diagonal) {
            S::one()
        } else {
            S::zero()
        }
    }

    pub fn counit(&self, e: &Elem<S>) -> S {
        let mut acc = S::zero();
        for (w, c) in e.terms() {
            acc = acc.add_ref(&c.mul_ref(&Self::word_counit(w)));
        }
        acc
    }

    /// S(X) = X⁻¹ by back-substitution, increasing in |row − col|:
    /// S(β_ij) = −Σ_{i≤k<j} S(β_ik) β_kj γ_jj and
    /// S(γ_ji) = −Σ_{i<k≤j} S(γ_jk) γ_ki β_ii.
    fn build_antipode(&self) -> Result<BTreeMap<Generator, Elem<S>>, RewriteError> {
        let n = self.n();
        let mut table: BTreeMap<Generator, Elem<S>> = BTreeMap::new();
        for k in 1..=n {
            table.insert(Generator::beta(k, k), self.letter(Generator::gamma(k, k)));
            table.insert(Generator::gamma(k, k), self.letter(Generator::beta(k, k)));
        }
        for d in 1..n {
            for i in 1..=n - d {
                let j = i + d;
                let mut sb = FreeElement::zero();
                for k in i..j {
                    let t = &(&table[&Generator::beta(i, k)] * &self.letter(Generator::beta(k, j)))
                        * &self.letter(Generator::gamma(j, j));
                    sb = &sb - &t;
                }
                table.insert(Generator::beta(i, j), self.system.normal_form(&sb)?);
                let mut sg = FreeElement::zero();
                for k in i + 1..=j {
                    let t = &(&table[&Generator::gamma(j, k)] * &self.letter(Generator::gamma(k, i)))
                        * &self.letter(Generator::beta(i, i));
                    sg = &sg - &t;
                }
                table.insert(Generator::gamma(j, i), self.system.normal_form(&sg)?);
            }
        }
        Ok(table)
    }

    pub fn antipode_table(&self) -> Result<&BTreeMap<Generator, Elem<S>>, RewriteError> {
        self.antipode
            .get_or_init(|| self.build_antipode())
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn antipode(&self, e: &Elem<S>) -> Result<Elem<S>, RewriteError> {
        let table = self.antipode_table()?;
        self.system
            .normal_form(&e.substitute(true, |x| table[x].clone()))
    }

    fn coassociativity(&self, x: Generator) -> Result<bool, RewriteError> {
        let d = &self.coproduct[&x];
        let mut err = None;
        let mut expand = |leg: usize| {
            let t = d.expand_leg(leg, 2, |w| match self.word_coproduct(w) {
                Ok(t) => t,
                Err(e) => {
                    err.get_or_insert(e);
                    TensorElement::zero(2)
                }
            });
            self.system.normal_form_tensor(&t)
        };
        let left = expand(0)?;
        let right = expand(1)?;
        if let Some(e) = err {
            return Err(e);
        }
        Ok(left == right)
    }

    fn counit_axioms(&self, x: Generator) -> bool {
        let d = &self.coproduct[&x];
        let expect = TensorElement::from_elements(&[&self.letter(x)]);
        let left = d.contract_leg(0, Self::word_counit);
        let right = d.contract_leg(1, Self::word_counit);
        left == expect && right == expect
    }

    /// m(S⊗id)Δ(x) and m(id⊗S)Δ(x), both in normal form.
    fn antipode_axioms(&self, x: Generator) -> Result<(Elem<S>, Elem<S>), RewriteError> {
        let d = &self.coproduct[&x];
        let table = self.antipode_table()?;
        let s = |w: &[Generator]| FreeElement::word(w.to_vec()).substitute(true, |y| table[y].clone());
        let left = d.map_leg(0, s).multiply_legs();
        let right = d.map_leg(1, s).multiply_legs();
        Ok((self.system.normal_form(&left)?, self.system.normal_form(&right)?))
    }

    fn diagonal_product(&self) -> Elem<S> {
        (1..=self.n()).fold(FreeElement::one(), |acc, k| {
            &acc * &self.letter(Generator::beta(k, k))
        })
    }

    /// Checks coassociativity, counit and antipode axioms on every
    /// generator, that Δ, ε and S annihilate every defining relation, and
    /// that Π β_kk is grouplike (and equals 1 for sl_n).
    pub fn verify_hopf_axioms(&self) -> Report {
        let gens = self.presentation.generators();
        let per_gen: Vec<Vec<Check>> = gens
            .par_iter()
            .map(|&x| {
                let mut out = Vec::new();
                out.push(match self.coassociativity(x) {
                    Ok(ok) => Check::from_bool(
                        format!("coassociativity {x}"),
                        "coassociativity",
                        ok,
                        || "(Δ⊗id)Δ and (id⊗Δ)Δ differ".to_string(),
                    ),
                    Err(e) => Check::fail(format!("coassociativity {x}"), "coassociativity", e.to_string()),
                });
                out.push(Check::from_bool(
                    format!("counit {x}"),
                    "counit",
                    self.counit_axioms(x),
                    || format!("(ε⊗id)Δ({x}) or (id⊗ε)Δ({x}) is not {x}"),
                ));
                let unit = FreeElement::scalar(Self::letter_counit(&x));
                match self.antipode_axioms(x) {
                    Ok((l, r)) => {
                        let ok = l == unit && r == unit;
                        out.push(Check::from_bool(
                            format!("antipode {x}"),
                            "antipode",
                            ok,
                            || format!("m(S⊗id)Δ = {l}, m(id⊗S)Δ = {r}"),
                        ))
                    }
                    Err(e) => out.push(Check::fail(format!("antipode {x}"), "antipode", e.to_string())),
                }
                let eps_s = self
                    .antipode(&self.letter(x))
                    .map(|s| self.counit(&s) == Self::letter_counit(&x));
                out.push(match eps_s {
                    Ok(ok) => Check::from_bool(format!("counit of antipode {x}"), "antipode", ok, || {
                        "ε(S(x)) ≠ ε(x)".to_string()
                    }),
                    Err(e) => Check::fail(format!("counit of antipode {x}"), "antipode", e.to_string()),
                });
                out
            })
            .collect();

        let relations: Vec<(&'static str, &Elem<LaurentScalar>)> =
            self.presentation.all_relations().collect();
        let ctx = self.system.context().clone();
        let per_rel: Vec<Vec<Check>> = relations
            .par_iter()
            .enumerate()
            .map(|(idx, (family, r))| {
                let r: Elem<S> = r.map_coefficients(|c| S::from_laurent(c, &ctx));
                let mut out = Vec::new();
                let label = format!("{family} #{idx}");
                out.push(Check::zero(
                    format!("coproduct kills {label}"),
                    "coproduct-relation",
                    self.coproduct(&r),
                ));
                let eps = self.counit(&r);
                out.push(Check::from_bool(
                    format!("counit kills {label}"),
                    "counit-relation",
                    eps.is_zero(),
                    || eps.to_string(),
                ));
                out.push(Check::zero(
                    format!("antipode kills {label}"),
                    "antipode-relation",
                    self.antipode(&r),
                ));
                out
            })
            .collect();

        let mut report: Report = per_gen.into_iter().flatten().collect();
        report.checks.extend(per_rel.into_iter().flatten());

        let d = self.diagonal_product();
        let grouplike = self.coproduct(&d).and_then(|t| {
            let dd = self.system.normal_form(&d)?;
            let expect = TensorElement::from_elements(&[&dd, &dd]);
            Ok(t.sub(&expect).expect("degree 2"))
        });
        report.push(Check::zero("diagonal product is grouplike", "grouplike", grouplike));
        if self.presentation.flavor() == Flavor::SL {
            let e = &d - &FreeElement::one();
            report.push(Check::zero(
                "diagonal product is 1",
                "sl-determinant",
                self.system.normal_form(&e),
            ));
        }
        for k in 1..=self.n() {
            let x = self.letter(Generator::beta(k, k));
            let ss = self.antipode(&x).and_then(|s| self.antipode(&s));
            report.push(Check::zero(
                format!("S² fixes b[{k},{k}]"),
                "antipode",
                ss.and_then(|s| self.system.normal_form(&(&s - &x))),
            ));
        }
        report
    }
}


/// Rewrite system of the generic quantum matrix algebra, from the q-matrix
/// relations of (t_ij).
pub fn qmatrix_system(n: usize) -> Result<RewriteSystem<MatrixEntry, LaurentScalar>, RewriteError> {
    orient_relations(&full_qmatrix_relations(n), Lattice::new(0, false))
}

/// Π β_kk commutes with every generator and is grouplike, and det_q of the
/// generic matrix commutes with every t_ij.
pub fn verify_centrality(n: usize, flavor: Flavor) -> Result<Report, PresentationError> {
    let p = PresentationSpec::cached(n, flavor)?;
    let h = HopfContext::laurent(p.clone());
    let d = h.diagonal_product();
    let mut report = Report::new();
    for x in p.generators() {
        let x = FreeElement::letter(x);
        report.push(Check::zero(
            format!("[prod b[k,k], {x}]"),
            "diagonal-central",
            h.system().normal_form(&d.commutator(&x)),
        ));
    }
    let grouplike = h.coproduct(&d).and_then(|t| {
        let dd = h.system().normal_form(&d)?;
        Ok(t.sub(&TensorElement::from_elements(&[&dd, &dd])).expect("degree 2"))
    });
    report.push(Check::zero("coproduct of prod b[k,k]", "grouplike", grouplike));

    let sys = qmatrix_system(n)?;
    let det = full_quantum_determinant(n);
    for i in 1..=n {
        for j in 1..=n {
            let t = FreeElement::letter(MatrixEntry::new(i, j));
            report.push(Check::zero(
                format!("[det_q, t[{i},{j}]]"),
                "qdet-central",
                sys.normal_form(&det.commutator(&t)),
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_coproduct_shapes() {
        let t: Tensor<LaurentScalar> = generator_coproduct(Generator::beta(1, 3));
        assert_eq!(t.len(), 3);
        let t: Tensor<LaurentScalar> = generator_coproduct(Generator::gamma(2, 2));
        assert_eq!(t.len(), 1);
    }
}
