//! Jimbo generators, quantum root vectors, the antiautomorphism Ψ and the
//! L-operators, all realized inside the FRT presentation of gl_n over Q(q).

mod loperators;
mod maps;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::freealg::{FreeElement, Generator, Letter};
use crate::presentations::{Flavor, PresentationError, PresentationSpec};
use crate::report::{Check, Report};
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::scalars::{LaurentScalar, RatScalar};

pub use loperators::{l_operator_matrices, LOperators};
pub use maps::{
    build_algebra_antimap, build_algebra_map, check_psi_identities, frt_in_jimbo, projection_map,
    psi, AlgebraMap, MapDirection,
};

/// Element of the FRT algebra over Q(q).
pub type RElem = FreeElement<Generator, RatScalar>;
/// Noncommutative polynomial in the Jimbo symbols.
pub type JimboElement = FreeElement<JimboSymbol, RatScalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructError {
    #[error("n must be at least 2, got {0}")]
    InvalidRank(usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("relation {relation} maps to {image}, not 0")]
    ValidationFailed { relation: String, image: String },
    #[error("no image for generator {0}")]
    MissingImage(String),
}

/// Letters E_i, F_i, G_i, G_i⁻¹ of the Jimbo presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JimboSymbol {
    E(u16),
    F(u16),
    G(u16),
    GInv(u16),
}

impl fmt::Display for JimboSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JimboSymbol::E(i) => write!(f, "E[{i}]"),
            JimboSymbol::F(i) => write!(f, "F[{i}]"),
            JimboSymbol::G(i) => write!(f, "G[{i}]"),
            JimboSymbol::GInv(i) => write!(f, "G[{i}]^-1"),
        }
    }
}

impl Letter for JimboSymbol {}

pub fn e_sym(i: usize) -> JimboElement {
    FreeElement::letter(JimboSymbol::E(i as u16))
}

pub fn f_sym(i: usize) -> JimboElement {
    FreeElement::letter(JimboSymbol::F(i as u16))
}

pub fn g_sym(i: usize) -> JimboElement {
    FreeElement::letter(JimboSymbol::G(i as u16))
}

pub fn g_inv_sym(i: usize) -> JimboElement {
    FreeElement::letter(JimboSymbol::GInv(i as u16))
}

/// Superscript of a quantum root vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootSign {
    Plus,
    Minus,
}

impl RootSign {
    pub fn exponent(self) -> i32 {
        match self {
            RootSign::Plus => 1,
            RootSign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            RootSign::Plus => RootSign::Minus,
            RootSign::Minus => RootSign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            RootSign::Plus => '+',
            RootSign::Minus => '-',
        }
    }
}

pub(crate) fn rat(l: LaurentScalar) -> RatScalar {
    l.into()
}

pub(crate) fn q_pow(e: i32) -> RatScalar {
    rat(LaurentScalar::q_pow(e))
}

/// (−q)^e
pub(crate) fn neg_q_pow(e: i32) -> RatScalar {
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    rat(LaurentScalar::from_int_terms(&[(e, sign)]))
}

pub(crate) fn qq() -> RatScalar {
    rat(LaurentScalar::q_minus_q_inv())
}

pub(crate) fn qq_inv() -> RatScalar {
    qq().inverse().expect("q - q^-1 is invertible")
}

pub(crate) fn beta(i: usize, j: usize) -> RElem {
    FreeElement::letter(Generator::beta(i, j))
}

pub(crate) fn gamma(j: usize, i: usize) -> RElem {
    FreeElement::letter(Generator::gamma(j, i))
}

/// [x, y]_a = xy − a·yx
pub fn q_bracket<L: Letter>(
    x: &FreeElement<L, RatScalar>,
    y: &FreeElement<L, RatScalar>,
    a: &RatScalar,
) -> FreeElement<L, RatScalar> {
    &(x * y) - &(y * x).scale(a)
}

/// Named element stored in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedGenerator {
    pub name: String,
    #[serde(serialize_with = "display_string")]
    pub definition: RElem,
}

fn display_string<T: fmt::Display, Z: Serializer>(v: &T, s: Z) -> Result<Z::Ok, Z::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedTable {
    pub n: usize,
    pub generators: Vec<DerivedGenerator>,
}

impl DerivedTable {
    pub fn get(&self, name: &str) -> Option<&RElem> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| &g.definition)
    }

    fn push(&mut self, name: String, definition: RElem) {
        self.generators.push(DerivedGenerator { name, definition });
    }
}

/// E_i, F_i, G_i^{±1} as elements of the FRT algebra, via the inverses of
/// the embeddings of the Borel halves.
pub struct JimboGenerators {
    presentation: Arc<PresentationSpec>,
    table: BTreeMap<JimboSymbol, RElem>,
}

impl JimboGenerators {
    pub fn new(n: usize) -> Result<Self, StructError> {
        if n < 2 {
            return Err(StructError::InvalidRank(n));
        }
        let presentation = PresentationSpec::cached(n, Flavor::GL)?;
        let sys = presentation.rat_system();
        let mut table = BTreeMap::new();
        for i in 1..=n {
            table.insert(JimboSymbol::G(i as u16), beta(i, i));
            table.insert(JimboSymbol::GInv(i as u16), gamma(i, i));
        }
        for i in 1..n {
            let e = (&beta(i, i + 1) * &gamma(i + 1, i + 1)).scale(&-qq_inv());
            let f = (&beta(i + 1, i + 1) * &gamma(i + 1, i)).scale(&qq_inv());
            table.insert(JimboSymbol::E(i as u16), sys.normal_form(&e)?);
            table.insert(JimboSymbol::F(i as u16), sys.normal_form(&f)?);
        }
        Ok(JimboGenerators {
            presentation,
            table,
        })
    }

    pub fn n(&self) -> usize {
        self.presentation.n()
    }

    pub fn presentation(&self) -> &Arc<PresentationSpec> {
        &self.presentation
    }

    pub fn system(&self) -> &RewriteSystem<Generator, RatScalar> {
        self.presentation.rat_system()
    }

    pub fn symbols(&self) -> &BTreeMap<JimboSymbol, RElem> {
        &self.table
    }

    pub fn get(&self, s: JimboSymbol) -> &RElem {
        &self.table[&s]
    }

    pub fn e(&self, i: usize) -> &RElem {
        self.get(JimboSymbol::E(i as u16))
    }

    pub fn f(&self, i: usize) -> &RElem {
        self.get(JimboSymbol::F(i as u16))
    }

    pub fn g(&self, i: usize) -> &RElem {
        self.get(JimboSymbol::G(i as u16))
    }

    pub fn g_inv(&self, i: usize) -> &RElem {
        self.get(JimboSymbol::GInv(i as u16))
    }

    pub fn nf(&self, e: &RElem) -> Result<RElem, RewriteError> {
        self.system().normal_form(e)
    }

    /// Substitutes the derived generators and normal-forms.
    pub fn realize(&self, x: &JimboElement) -> Result<RElem, RewriteError> {
        self.nf(&x.substitute(false, |s| self.table[s].clone()))
    }

    /// K_j = G_j G_{j+1}⁻¹
    pub fn k(&self, j: usize) -> Result<RElem, RewriteError> {
        self.nf(&(self.g(j) * self.g_inv(j + 1)))
    }

    /// L_i = G_1⋯G_i
    pub fn l(&self, i: usize) -> Result<RElem, RewriteError> {
        let mut acc = RElem::one();
        for k in 1..=i {
            acc = &acc * self.g(k);
        }
        self.nf(&acc)
    }
}

/// E_i, F_i, G_i^{±1}, K_j and L_i as a named table.
pub fn derived_generators(n: usize) -> Result<DerivedTable, StructError> {
    let jg = JimboGenerators::new(n)?;
    let mut t = DerivedTable {
        n,
        generators: Vec::new(),
    };
    for i in 1..n {
        t.push(format!("E_{i}"), jg.e(i).clone());
        t.push(format!("F_{i}"), jg.f(i).clone());
    }
    for i in 1..=n {
        t.push(format!("G_{i}"), jg.g(i).clone());
        t.push(format!("G_{i}^-1"), jg.g_inv(i).clone());
    }
    for j in 1..n {
        t.push(format!("K_{j}"), jg.k(j)?);
    }
    for i in 1..=n {
        t.push(format!("L_{i}"), jg.l(i)?);
    }
    Ok(t)
}

/// E^±_{i,j} as a polynomial in the E_k, bracketing at `split(i, j)`.
pub fn root_e_symbolic_split(
    sign: RootSign,
    i: usize,
    j: usize,
    split: &impl Fn(usize, usize) -> usize,
) -> JimboElement {
    if j == i + 1 {
        return e_sym(i);
    }
    let k = split(i, j);
    let a = root_e_symbolic_split(sign, i, k, split);
    let b = root_e_symbolic_split(sign, k, j, split);
    q_bracket(&a, &b, &q_pow(sign.exponent()))
}

/// F^±_{j,i} as a polynomial in the F_k, bracketing at `split(i, j)`.
pub fn root_f_symbolic_split(
    sign: RootSign,
    j: usize,
    i: usize,
    split: &impl Fn(usize, usize) -> usize,
) -> JimboElement {
    if j == i + 1 {
        return f_sym(i);
    }
    let k = split(i, j);
    let a = root_f_symbolic_split(sign, j, k, split);
    let b = root_f_symbolic_split(sign, k, i, split);
    q_bracket(&a, &b, &q_pow(-sign.exponent()))
}

fn first_split(i: usize, _j: usize) -> usize {
    i + 1
}

pub fn root_e_symbolic(sign: RootSign, i: usize, j: usize) -> JimboElement {
    root_e_symbolic_split(sign, i, j, &first_split)
}

pub fn root_f_symbolic(sign: RootSign, j: usize, i: usize) -> JimboElement {
    root_f_symbolic_split(sign, j, i, &first_split)
}

/// All E^±_{i,j} and F^±_{j,i} (i < j) realized in normal form.
pub struct RootVectors {
    n: usize,
    e: BTreeMap<(RootSign, usize, usize), RElem>,
    f: BTreeMap<(RootSign, usize, usize), RElem>,
}

impl RootVectors {
    pub fn new(jg: &JimboGenerators) -> Result<Self, StructError> {
        let n = jg.n();
        let mut e = BTreeMap::new();
        let mut f = BTreeMap::new();
        for sign in [RootSign::Plus, RootSign::Minus] {
            let a = q_pow(sign.exponent());
            let b = q_pow(-sign.exponent());
            for len in 1..n {
                for i in 1..=n - len {
                    let j = i + len;
                    let (ev, fv) = if len == 1 {
                        (jg.e(i).clone(), jg.f(i).clone())
                    } else {
                        let ev = jg.nf(&q_bracket(jg.e(i), &e[&(sign, i + 1, j)], &a))?;
                        let fv = jg.nf(&q_bracket(&f[&(sign, j, i + 1)], jg.f(i), &b))?;
                        (ev, fv)
                    };
                    e.insert((sign, i, j), ev);
                    f.insert((sign, j, i), fv);
                }
            }
        }
        Ok(RootVectors { n, e, f })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self, sign: RootSign, i: usize, j: usize) -> &RElem {
        &self.e[&(sign, i, j)]
    }

    pub fn f(&self, sign: RootSign, j: usize, i: usize) -> &RElem {
        &self.f[&(sign, j, i)]
    }

    /// Ė^±_{i,j} = (q − q⁻¹) E^±_{i,j}
    pub fn e_dot(&self, sign: RootSign, i: usize, j: usize) -> RElem {
        self.e(sign, i, j).scale(&qq())
    }

    /// Ḟ^±_{j,i} = (q − q⁻¹) F^±_{j,i}
    pub fn f_dot(&self, sign: RootSign, j: usize, i: usize) -> RElem {
        self.f(sign, j, i).scale(&qq())
    }
}

/// E^±, F^± and their dotted rescalings as a named table.
pub fn quantum_root_vectors(n: usize) -> Result<DerivedTable, StructError> {
    let jg = JimboGenerators::new(n)?;
    let rv = RootVectors::new(&jg)?;
    let mut t = DerivedTable {
        n,
        generators: Vec::new(),
    };
    for sign in [RootSign::Plus, RootSign::Minus] {
        let s = sign.symbol();
        for i in 1..n {
            for j in i + 1..=n {
                t.push(format!("E{s}_{i},{j}"), rv.e(sign, i, j).clone());
                t.push(format!("F{s}_{j},{i}"), rv.f(sign, j, i).clone());
                t.push(format!("Edot{s}_{i},{j}"), rv.e_dot(sign, i, j));
                t.push(format!("Fdot{s}_{j},{i}"), rv.f_dot(sign, j, i));
            }
        }
    }
    Ok(t)
}

fn kd(a: usize, b: usize) -> i32 {
    i32::from(a == b)
}

type NamedRelation = (String, &'static str, JimboElement);

fn jimbo_relations(n: usize) -> Vec<NamedRelation> {
    let mut out: Vec<NamedRelation> = Vec::new();
    let one = JimboElement::one();
    for i in 1..=n {
        out.push((format!("G{i}*G{i}^-1"), "jimbo-toral", &(&g_sym(i) * &g_inv_sym(i)) - &one));
        out.push((format!("G{i}^-1*G{i}"), "jimbo-toral", &(&g_inv_sym(i) * &g_sym(i)) - &one));
        for j in i + 1..=n {
            out.push((format!("[G{i},G{j}]"), "jimbo-toral", g_sym(i).commutator(&g_sym(j))));
        }
    }
    for i in 1..=n {
        for j in 1..n {
            let ge = &(&g_sym(i) * &e_sym(j)) * &g_inv_sym(i);
            let we = q_pow(kd(i, j) - kd(i, j + 1));
            out.push((format!("G{i}E{j}G{i}^-1"), "jimbo-conjugation", &ge - &e_sym(j).scale(&we)));
            let gf = &(&g_sym(i) * &f_sym(j)) * &g_inv_sym(i);
            let wf = q_pow(kd(i, j + 1) - kd(i, j));
            out.push((format!("G{i}F{j}G{i}^-1"), "jimbo-conjugation", &gf - &f_sym(j).scale(&wf)));
        }
    }
    for i in 1..n {
        for j in 1..n {
            let mut r = e_sym(i).commutator(&f_sym(j));
            if i == j {
                let toral = &(&g_sym(i) * &g_inv_sym(i + 1)) - &(&g_inv_sym(i) * &g_sym(i + 1));
                r = &r - &toral.scale(&qq_inv());
            }
            out.push((format!("[E{i},F{j}]"), "jimbo-ef", r));
        }
    }
    let two = rat(LaurentScalar::quantum_integer(2));
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 && i < j {
                out.push((format!("[E{i},E{j}]"), "jimbo-distant", e_sym(i).commutator(&e_sym(j))));
                out.push((format!("[F{i},F{j}]"), "jimbo-distant", f_sym(i).commutator(&f_sym(j))));
            }
            if i.abs_diff(j) == 1 {
                for (x, y, name) in [(e_sym(i), e_sym(j), "E"), (f_sym(i), f_sym(j), "F")] {
                    let r = &(&(&(&x * &x) * &y) - &(&(&x * &y) * &x).scale(&two)) + &(&(&y * &x) * &x);
                    out.push((format!("serre {name}{i}{name}{i}{name}{j}"), "jimbo-serre", r));
                }
            }
        }
    }
    out
}

/// Every relation of the Jimbo presentation, evaluated on the derived
/// generators and normal-formed.
pub fn verify_jimbo_presentation(n: usize) -> Result<Report, StructError> {
    let jg = JimboGenerators::new(n)?;
    let rels = jimbo_relations(n);
    Ok(rels
        .par_iter()
        .map(|(name, tag, r)| Check::zero(name.clone(), *tag, jg.realize(r)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}

/// β_ij = (−q)^{j−i} G_j Ė^−_ij and γ_ji = −(−q)^{i−j} Ḟ^−_ji G_j⁻¹ for
/// i < j, plus independence of the root vectors from the bracketing.
pub fn check_rootvector_identities(n: usize) -> Result<Report, StructError> {
    let jg = JimboGenerators::new(n)?;
    let rv = RootVectors::new(&jg)?;
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut report: Report = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let e = i as i32 - j as i32;
            let rb = &beta(i, j) - &(jg.g(j) * &rv.e_dot(RootSign::Minus, i, j)).scale(&neg_q_pow(-e));
            let rg = &gamma(j, i) + &(&rv.f_dot(RootSign::Minus, j, i) * jg.g_inv(j)).scale(&neg_q_pow(e));
            [
                Check::zero(format!("beta[{i},{j}]"), "root-vector-beta", jg.nf(&rb)),
                Check::zero(format!("gamma[{j},{i}]"), "root-vector-gamma", jg.nf(&rg)),
            ]
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    report.extend(check_splitting_independence(&jg, &rv)?);
    Ok(report)
}

/// Compares E^±_{i,j}, F^±_{j,i} bracketed at every intermediate k with
/// the stored k = i+1 versions.
pub fn check_splitting_independence(
    jg: &JimboGenerators,
    rv: &RootVectors,
) -> Result<Report, StructError> {
    let n = jg.n();
    let mut report = Report::new();
    for sign in [RootSign::Plus, RootSign::Minus] {
        for i in 1..n {
            for j in i + 2..=n {
                for k in i + 1..j {
                    let split = |a: usize, b: usize| if (a, b) == (i, j) { k } else { a + 1 };
                    let e = jg.realize(&root_e_symbolic_split(sign, i, j, &split))?;
                    let f = jg.realize(&root_f_symbolic_split(sign, j, i, &split))?;
                    let s = sign.symbol();
                    report.push(Check::zero(
                        format!("E{s}[{i},{j}] split at {k}"),
                        "root-vector-splitting",
                        jg.nf(&(&e - rv.e(sign, i, j))),
                    ));
                    report.push(Check::zero(
                        format!("F{s}[{j},{i}] split at {k}"),
                        "root-vector-splitting",
                        jg.nf(&(&f - rv.f(sign, j, i))),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// E_i and F_i have coefficients outside the Laurent ring; the FRT
/// generators and the normal forms of all their pairwise products do not.
pub fn check_integer_form(n: usize) -> Result<Report, StructError> {
    let jg = JimboGenerators::new(n)?;
    let mut report = Report::new();
    for i in 1..n {
        for (name, x) in [(format!("E{i}"), jg.e(i)), (format!("F{i}"), jg.f(i))] {
            report.push(Check::from_bool(name, "integer-form", !x.is_integer_form(), || {
                format!("{x} unexpectedly has Laurent coefficients")
            }));
        }
    }
    let gens = Generator::all(n);
    let products: Vec<(Generator, Generator)> = gens
        .iter()
        .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
        .collect();
    let checks: Vec<Check> = products
        .par_iter()
        .map(|&(x, y)| {
            let p = &FreeElement::letter(x) * &FreeElement::letter(y);
            let name = format!("{x}*{y}");
            match jg.nf(&p) {
                Ok(nf) => Check::from_bool(name, "integer-form", nf.is_integer_form(), || nf.to_string()),
                Err(e) => Check::fail(name, "integer-form", format!("error: {e}")),
            }
        })
        .collect();
    for x in &gens {
        let e = FreeElement::<Generator, RatScalar>::letter(*x);
        report.push(Check::from_bool(x.to_string(), "integer-form", e.is_integer_form(), || e.to_string()));
    }
    report.extend(checks.into_iter().collect());
    Ok(report)
}
