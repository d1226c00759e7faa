use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use super::SpecializeError;
use crate::freealg::{FreeElement, Generator, GeneratorKind, TensorElement};
use crate::hopf::HopfContext;
use crate::presentations::{Flavor, PresentationSpec};
use crate::report::{Check, Report};
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::scalars::CycloScalar;

type CElem = FreeElement<Generator, CycloScalar>;

/// The presentation with q specialized to a primitive ℓ-th root of unity.
pub struct SpecializedSystem {
    presentation: Arc<PresentationSpec>,
    level: u32,
    system: RewriteSystem<Generator, CycloScalar>,
    advisory: bool,
}

/// Reduces every rule coefficient modulo Φ_ℓ. Odd ℓ ≥ 3 is the supported
/// range; even ℓ needs `allow_even`, and checks run on such a system only
/// report.
pub fn specialize_root_of_unity(
    presentation: Arc<PresentationSpec>,
    level: u32,
    allow_even: bool,
) -> Result<SpecializedSystem, SpecializeError> {
    if level < 2 {
        return Err(SpecializeError::UnsupportedLevel {
            level,
            reason: "the level must be at least 2; q = 1 is the classical limit".into(),
        });
    }
    let even = level.is_multiple_of(2);
    if even && !allow_even {
        return Err(SpecializeError::UnsupportedLevel {
            level,
            reason: "even levels are only accepted with the even-level flag".into(),
        });
    }
    let system = presentation.system().specialize::<CycloScalar>(level);
    Ok(SpecializedSystem {
        presentation,
        level,
        system,
        advisory: even,
    })
}

impl SpecializedSystem {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn presentation(&self) -> &Arc<PresentationSpec> {
        &self.presentation
    }

    pub fn system(&self) -> &RewriteSystem<Generator, CycloScalar> {
        &self.system
    }

    /// Whether the level is outside the supported range, so that checks
    /// only report.
    pub fn is_advisory(&self) -> bool {
        self.advisory
    }

    pub fn gcd_with_rank(&self) -> usize {
        (self.level as usize).gcd(&self.presentation.n())
    }

    pub fn normal_form(&self, e: &CElem) -> Result<CElem, RewriteError> {
        self.system.normal_form(e)
    }

    /// x^ℓ in normal form.
    pub fn power(&self, x: &CElem) -> Result<CElem, RewriteError> {
        let mut acc = FreeElement::one();
        for _ in 0..self.level {
            acc = self.system.normal_form(&(&acc * x))?;
        }
        Ok(acc)
    }

    fn finish(&self, c: Check) -> Check {
        if self.advisory {
            c.advisory()
        } else {
            c
        }
    }
}

fn letter(x: Generator) -> CElem {
    FreeElement::letter(x)
}

/// Checks that t ↦ t^ℓ defines a Hopf map from the commutative algebra:
/// ℓ-th powers of generators commute pairwise, satisfy the diagonal (and
/// SL determinant) relations, and have the matrix coproduct.
pub fn frobenius_check(
    n: usize,
    level: u32,
    flavor: Flavor,
    allow_even: bool,
) -> Result<Report, SpecializeError> {
    let p = PresentationSpec::cached(n, flavor)?;
    let sp = specialize_root_of_unity(p.clone(), level, allow_even)?;
    let gens = Generator::all(n);
    let powers: Vec<(Generator, CElem)> = gens
        .par_iter()
        .map(|&x| sp.power(&letter(x)).map(|v| (x, v)))
        .collect::<Result<_, _>>()?;
    let pow_of = |x: Generator| &powers.iter().find(|(g, _)| *g == x).expect("generator").1;

    let mut report = Report::new();
    report.push(Check::pass(
        format!("gcd({level},{n}) = {}", sp.gcd_with_rank()),
        "level-gcd",
    ));

    let pairs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|a| (a + 1..gens.len()).map(move |b| (a, b)))
        .collect();
    let commute: Vec<Check> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (x, y) = (&powers[a], &powers[b]);
            let name = format!("[{}^{level}, {}^{level}]", x.0, y.0);
            sp.finish(Check::zero(name, "frobenius-commute", sp.normal_form(&x.1.commutator(&y.1))))
        })
        .collect();
    report.extend(commute.into_iter().collect());

    let one = CElem::one();
    for k in 1..=n {
        let prod = pow_of(Generator::beta(k, k)) * pow_of(Generator::gamma(k, k));
        report.push(sp.finish(Check::zero(
            format!("b[{k},{k}]^{level}*g[{k},{k}]^{level} = 1"),
            "frobenius-relations",
            sp.normal_form(&(&prod - &one)),
        )));
    }
    if flavor == Flavor::SL {
        for kind in [GeneratorKind::Beta, GeneratorKind::Gamma] {
            let mut prod = CElem::one();
            for k in 1..=n {
                let x = match kind {
                    GeneratorKind::Beta => Generator::beta(k, k),
                    GeneratorKind::Gamma => Generator::gamma(k, k),
                };
                prod = &prod * pow_of(x);
            }
            let c = if kind == GeneratorKind::Beta { 'b' } else { 'g' };
            report.push(sp.finish(Check::zero(
                format!("prod {c}[k,k]^{level} = 1"),
                "frobenius-relations",
                sp.normal_form(&(&prod - &one)),
            )));
        }
    }

    let hopf = HopfContext::with_system(p.clone(), sp.system.clone());
    let coproducts: Vec<Check> = powers
        .par_iter()
        .map(|(x, xl)| {
            let (r, c) = (x.row(), x.col());
            let mut want = TensorElement::zero(2);
            let range: Vec<usize> = if r <= c { (r..=c).collect() } else { (c..=r).collect() };
            for k in range {
                let (a, b) = match x.kind() {
                    GeneratorKind::Beta => (Generator::beta(r, k), Generator::beta(k, c)),
                    GeneratorKind::Gamma => (Generator::gamma(r, k), Generator::gamma(k, c)),
                };
                let t = TensorElement::from_elements(&[pow_of(a), pow_of(b)]);
                want = want.add(&t).expect("degree 2");
            }
            let got = hopf
                .coproduct(xl)
                .and_then(|d| sp.system.normal_form_tensor(&d.sub(&want).expect("degree 2")));
            sp.finish(Check::zero(format!("coproduct({x}^{level})"), "frobenius-coproduct", got))
        })
        .collect();
    report.extend(coproducts.into_iter().collect());
    Ok(report)
}

/// Whether each x^ℓ commutes with every generator. This is stronger than
/// the Frobenius morphism property, so failures are advisory.
pub fn frobenius_centrality_check(n: usize, level: u32, flavor: Flavor) -> Result<Report, SpecializeError> {
    let p = PresentationSpec::cached(n, flavor)?;
    let sp = specialize_root_of_unity(p, level, true)?;
    let gens = Generator::all(n);
    let checks: Vec<Check> = gens
        .par_iter()
        .flat_map_iter(|&x| {
            let xl = sp.power(&letter(x));
            gens.iter()
                .map(|&y| {
                    let r = xl
                        .clone()
                        .and_then(|v| sp.normal_form(&v.commutator(&letter(y))));
                    Check::zero(format!("[{x}^{level}, {y}]"), "frobenius-centrality", r).advisory()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(checks.into_iter().collect())
}
