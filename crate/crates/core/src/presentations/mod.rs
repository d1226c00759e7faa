//! Relation sets and matrices of the triangular FRT presentations: q-matrix
//! families, R-matrices, quantum determinants, RTT expansion, and the full
//! gl_n / sl_n presentations as oriented rewrite systems.

mod matrix;
mod relations;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::freealg::{FreeElement, Generator};
use crate::report::{Check, Report};
use crate::rewrite::{orient_relations, Lattice, RewriteError, RewriteSystem};
use crate::scalars::{LaurentScalar, RatScalar};

pub use matrix::{
    build_r_matrix, expand_rtt, pair_index, GeneratorMatrix, MatrixKind, RVariant, RttForm,
    ScalarMatrix,
};
pub use relations::{
    determinant_relations, diagonal_inverse_relations, full_qmatrix_relations,
    full_quantum_determinant, inversions, mixed_relation, mixed_relations, qmatrix_relations,
    qmatrix_relations_with, quantum_determinant, quantum_determinant_with, shifted_mixed_relation,
    Triangle,
};

type LElem = FreeElement<Generator, LaurentScalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    GL,
    SL,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::GL => "gl",
            Flavor::SL => "sl",
        })
    }
}

impl FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Flavor::GL),
            "sl" => Ok(Flavor::SL),
            other => Err(format!("unknown flavor '{other}' (expected gl or sl)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("incompatible dimensions: R is {r}x{r}, X is {x}x{x}, Y is {y}x{y}")]
    DimensionMismatch { r: usize, x: usize, y: usize },
    #[error("n must be at least {min}, got {n}")]
    InvalidRank { n: usize, min: usize },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("{} unresolved overlap ambiguities, first: {}", .0.len(), .0.first().map(String::as_str).unwrap_or(""))]
    NotConfluent(Vec<String>),
}

/// A named list of relations, each read as `r = 0`.
#[derive(Clone, Debug)]
pub struct RelationFamily {
    pub name: &'static str,
    /// Whether the family feeds the rewrite system; the others are
    /// realized by the diagonal lattice and only checked.
    pub oriented: bool,
    pub relations: Vec<LElem>,
}

/// The gl_n or sl_n presentation over the Laurent ring together with its
/// rewrite system.
#[derive(Debug)]
pub struct PresentationSpec {
    n: usize,
    flavor: Flavor,
    families: Vec<RelationFamily>,
    system: RewriteSystem<Generator, LaurentScalar>,
    rat_system: OnceLock<RewriteSystem<Generator, RatScalar>>,
}

/// Serializable view of a presentation.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationDocument {
    pub n: usize,
    pub flavor: Flavor,
    pub generators: Vec<String>,
    pub order: OrderDocument,
    pub lattice: LatticeDocument,
    pub families: Vec<FamilyDocument>,
    pub rules: Vec<RuleDocument>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderDocument {
    pub precedence: Vec<String>,
    pub words: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeDocument {
    pub rank: usize,
    pub quotient: Option<Vec<i32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyDocument {
    pub name: &'static str,
    pub oriented: bool,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RuleDocument {
    pub lhs: String,
    pub rhs: String,
}

fn rtt_family(n: usize, upper: bool) -> Vec<LElem> {
    let r = build_r_matrix(n, RVariant::Standard);
    let x = if upper {
        GeneratorMatrix::upper_b(n)
    } else {
        GeneratorMatrix::lower_gamma(n)
    };
    expand_rtt(&r, &x, &x, RttForm::TwoOne, &())
        .expect("square matrices of equal size")
        .into_iter()
        .filter(|e| !e.is_zero())
        .collect()
}

impl PresentationSpec {
    /// Builds and orients the presentation without running the confluence
    /// check.
    pub fn new(n: usize, flavor: Flavor) -> Result<Self, PresentationError> {
        if n < 1 {
            return Err(PresentationError::InvalidRank { n, min: 1 });
        }
        let mut families = vec![
            RelationFamily {
                name: "rtt-upper",
                oriented: true,
                relations: rtt_family(n, true),
            },
            RelationFamily {
                name: "rtt-lower",
                oriented: true,
                relations: rtt_family(n, false),
            },
            RelationFamily {
                name: "mixed",
                oriented: true,
                relations: mixed_relations(n),
            },
            RelationFamily {
                name: "diagonal-inverse",
                oriented: false,
                relations: diagonal_inverse_relations(n),
            },
        ];
        if flavor == Flavor::SL {
            families.push(RelationFamily {
                name: "sl-determinant",
                oriented: false,
                relations: determinant_relations(n),
            });
        }
        let oriented: Vec<LElem> = families
            .iter()
            .filter(|f| f.oriented)
            .flat_map(|f| f.relations.iter().cloned())
            .collect();
        let lattice = Lattice::new(n, flavor == Flavor::SL);
        let system = orient_relations(&oriented, lattice)?;
        Ok(PresentationSpec {
            n,
            flavor,
            families,
            system,
            rat_system: OnceLock::new(),
        })
    }

    /// Shared, lazily built presentation for (n, flavor).
    pub fn cached(n: usize, flavor: Flavor) -> Result<Arc<Self>, PresentationError> {
        type Cache = Mutex<HashMap<(usize, Flavor), Arc<PresentationSpec>>>;
        static CACHE: OnceLock<Cache> =
            OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.lock().unwrap().get(&(n, flavor)) {
            return Ok(p.clone());
        }
        let p = Arc::new(Self::new(n, flavor)?);
        Ok(cache
            .lock()
            .unwrap()
            .entry((n, flavor))
            .or_insert(p)
            .clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn families(&self) -> &[RelationFamily] {
        &self.families
    }

    pub fn family(&self, name: &str) -> Option<&RelationFamily> {
        self.families.iter().find(|f| f.name == name)
    }

    /// Every defining relation, oriented or not.
    pub fn all_relations(&self) -> impl Iterator<Item = (&'static str, &LElem)> {
        self.families
            .iter()
            .flat_map(|f| f.relations.iter().map(move |r| (f.name, r)))
    }

    pub fn generators(&self) -> Vec<Generator> {
        Generator::all(self.n)
    }

    pub fn system(&self) -> &RewriteSystem<Generator, LaurentScalar> {
        &self.system
    }

    /// The same rules over the fraction field Q(q).
    pub fn rat_system(&self) -> &RewriteSystem<Generator, RatScalar> {
        self.rat_system.get_or_init(|| self.system.specialize(()))
    }

    pub fn normal_form(&self, e: &LElem) -> Result<LElem, RewriteError> {
        self.system.normal_form(e)
    }

    pub fn to_document(&self) -> PresentationDocument {
        let text = |rs: &[LElem]| rs.iter().map(ToString::to_string).collect();
        PresentationDocument {
            n: self.n,
            flavor: self.flavor,
            generators: self.generators().iter().map(ToString::to_string).collect(),
            order: OrderDocument {
                precedence: self.generators().iter().map(ToString::to_string).collect(),
                words: "off-diagonal degree, then length, then lexicographic by precedence",
            },
            lattice: LatticeDocument {
                rank: self.n,
                quotient: (self.flavor == Flavor::SL).then(|| vec![1; self.n]),
            },
            families: self
                .families
                .iter()
                .map(|f| FamilyDocument {
                    name: f.name,
                    oriented: f.oriented,
                    relations: text(&f.relations),
                })
                .collect(),
            rules: self
                .system
                .rules()
                .into_iter()
                .map(|r| RuleDocument {
                    lhs: crate::freealg::word_text(&r.lhs),
                    rhs: r.rhs.to_string(),
                })
                .collect(),
            warnings: self.system.warnings().to_vec(),
        }
    }

    /// One check per overlap ambiguity class: pass when the rule set is
    /// locally confluent.
    pub fn confluence_report(&self) -> Report {
        let mut report = Report::new();
        match self.system.confluence_check() {
            Ok(amb) => {
                let overlaps = self.system.overlap_count();
                report.push(Check::from_bool(
                    format!("{} {}: {} overlaps resolve", self.flavor, self.n, overlaps),
                    "diamond-lemma",
                    amb.is_empty(),
                    || describe_ambiguities(&amb),
                ));
            }
            Err(e) => report.push(Check::fail(
                format!("{} {}: overlaps resolve", self.flavor, self.n),
                "diamond-lemma",
                format!("error: {e}"),
            )),
        }
        report
    }
}

fn describe_ambiguities(amb: &[crate::rewrite::Ambiguity<Generator, LaurentScalar>]) -> String {
    amb.iter()
        .map(|a| {
            format!(
                "{}: {}",
                crate::freealg::word_text(&a.word),
                a.difference
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Builds the presentation and certifies it with the overlap check.
pub fn build_presentation(n: usize, flavor: Flavor) -> Result<Arc<PresentationSpec>, PresentationError> {
    let p = PresentationSpec::cached(n, flavor)?;
    let amb = p.system.confluence_check()?;
    if !amb.is_empty() {
        return Err(PresentationError::NotConfluent(
            amb.iter()
                .map(|a| format!("{}: {}", crate::freealg::word_text(&a.word), a.difference))
                .collect(),
        ));
    }
    Ok(p)
}

fn b(i: usize, j: usize) -> LElem {
    FreeElement::letter(Generator::beta(i, j))
}

fn g(j: usize, i: usize) -> LElem {
    FreeElement::letter(Generator::gamma(j, i))
}

fn c(x: LaurentScalar) -> LElem {
    FreeElement::scalar(x)
}

/// The short mixed relation between β_{i,i+1} and γ_{j+1,j}, with the
/// toral symbol α_k read as β_kk, written as `lhs − rhs`.
pub fn short_mixed_relation(i: usize, j: usize) -> LElem {
    let x = b(i, i + 1);
    let y = g(j + 1, j);
    let lhs = &(&x * &y) - &(&y * &x);
    let mut coeff = LaurentScalar::zero();
    if i == j + 1 {
        coeff = &coeff + &LaurentScalar::from_int_terms(&[(0, 1), (-1, -1)]);
    }
    if i + 1 == j {
        coeff = &coeff + &LaurentScalar::from_int_terms(&[(0, 1), (1, -1)]);
    }
    let mut rhs = &c(coeff) * &(&x * &y);
    if i == j {
        let toral = &(&b(i, i) * &g(i + 1, i + 1)) - &(&g(i, i) * &b(i + 1, i + 1));
        rhs = &rhs - &(&c(LaurentScalar::q_minus_q_inv()) * &toral);
    }
    &lhs - &rhs
}

/// β_ik β_kj − β_kj β_ik − (q − q⁻¹) β_kk β_ij for i < k < j.
pub fn beta_recursion(i: usize, k: usize, j: usize) -> LElem {
    let comm = &(&b(i, k) * &b(k, j)) - &(&b(k, j) * &b(i, k));
    &comm - &(&c(LaurentScalar::q_minus_q_inv()) * &(&b(k, k) * &b(i, j)))
}

/// γ_ki γ_jk − γ_jk γ_ki − (q − q⁻¹) γ_kk γ_ji for j > k > i.
pub fn gamma_recursion(j: usize, k: usize, i: usize) -> LElem {
    let comm = &(&g(k, i) * &g(j, k)) - &(&g(j, k) * &g(k, i));
    &comm - &(&c(LaurentScalar::q_minus_q_inv()) * &(&g(k, k) * &g(j, i)))
}

/// Checks that the short presentation's relations, and the recursions
/// expressing the non-simple generators, hold in the full GL system.
pub fn cross_check_short_presentation(n: usize) -> Result<Report, PresentationError> {
    if n < 2 {
        return Err(PresentationError::InvalidRank { n, min: 2 });
    }
    let p = PresentationSpec::cached(n, Flavor::GL)?;
    let sys = p.system();
    let mut report = Report::new();
    for i in 1..n {
        for j in 1..n {
            report.push(Check::zero(
                format!("short mixed i={i} j={j}"),
                "short-mixed",
                sys.normal_form(&short_mixed_relation(i, j)),
            ));
        }
    }
    for k in 1..=n {
        let e = &(&b(k, k) * &g(k, k)) - &LElem::one();
        report.push(Check::zero(
            format!("diagonal inverse k={k}"),
            "diagonal-inverse",
            sys.normal_form(&e),
        ));
    }
    for i in 1..=n {
        for k in i + 1..=n {
            for j in k + 1..=n {
                report.push(Check::zero(
                    format!("beta recursion ({i},{k},{j})"),
                    "beta-recursion",
                    sys.normal_form(&beta_recursion(i, k, j)),
                ));
                report.push(Check::zero(
                    format!("gamma recursion ({j},{k},{i})"),
                    "gamma-recursion",
                    sys.normal_form(&gamma_recursion(j, k, i)),
                ));
            }
        }
    }
    Ok(report)
}

/// Compares the RTT-derived rules with the q-matrix families: the entries of
/// R B₂ B₁ − B₁ B₂ R and its Γ analogue reduce to 0 in the system oriented
/// from the q-matrix and mixed families, and every q-matrix relation
/// reduces to 0 in the presentation's own system.
pub fn cross_check_rtt(n: usize) -> Result<Report, PresentationError> {
    let p = PresentationSpec::cached(n, Flavor::GL)?;
    let mut family_rels = qmatrix_relations(n, Triangle::Upper);
    family_rels.extend(qmatrix_relations(n, Triangle::Lower));
    family_rels.extend(mixed_relations(n));
    let family_sys = orient_relations(&family_rels, Lattice::new(n, false))?;
    let mut report = Report::new();
    for (upper, label) in [(true, "B"), (false, "G")] {
        for (idx, e) in rtt_family(n, upper).iter().enumerate() {
            report.push(Check::zero(
                format!("RTT({label},{label}) entry #{idx}"),
                "rtt-to-qmatrix",
                family_sys.normal_form(e),
            ));
        }
    }
    for (t, label) in [(Triangle::Upper, "B"), (Triangle::Lower, "G")] {
        for (idx, e) in qmatrix_relations(n, t).iter().enumerate() {
            report.push(Check::zero(
                format!("q-matrix {label} #{idx}"),
                "qmatrix-to-rtt",
                p.normal_form(e),
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flavor_parse_roundtrip() {
        assert_eq!("gl".parse::<Flavor>().unwrap(), Flavor::GL);
        assert_eq!("SL".parse::<Flavor>().unwrap(), Flavor::SL);
        assert!("so".parse::<Flavor>().is_err());
        assert_eq!(Flavor::SL.to_string(), "sl");
    }

    #[test]
    fn n1_is_a_laurent_algebra() {
        let p = PresentationSpec::new(1, Flavor::GL).unwrap();
        assert_eq!(p.system().rule_count(), 0);
        let nf = p.normal_form(&g(1, 1)).unwrap();
        assert_eq!(nf, g(1, 1));
        let one = p.normal_form(&(&b(1, 1) * &g(1, 1))).unwrap();
        assert_eq!(one, LElem::one());
    }
}
