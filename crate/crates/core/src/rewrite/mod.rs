//! Noncommutative straightening: relations oriented into rewrite rules under
//! a degree-first monomial order, normal forms, and overlap (diamond lemma)
//! confluence checks.
//!
//! Toral letters never appear in rules. They are collapsed into a vector of
//! the diagonal lattice, and moving one past a non-toral letter `x` costs the
//! scalar q^{⟨v, c(x)⟩}, where c(x) is the weight of `x`:
//! D(v) · x = q^{⟨v, c(x)⟩} x · D(v).

mod confluence;
mod orient;
mod word;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use serde::Serialize;
use thiserror::Error;

use crate::freealg::{FreeElement, Letter, TensorElement};
use crate::scalars::{Coefficient, LaurentScalar};

pub use confluence::Ambiguity;
pub use orient::orient_relations;
pub use word::Lattice;
pub(crate) use word::{side, LatWord, Sym};

/// Default bound on rule applications per normal-form computation.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

static STEP_BUDGET_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Sets the budget given to every rewrite system built afterwards; 0
/// restores [`DEFAULT_STEP_BUDGET`].
pub fn set_default_step_budget(budget: usize) {
    STEP_BUDGET_OVERRIDE.store(budget, AtomicOrdering::Relaxed);
}

pub fn default_step_budget() -> usize {
    match STEP_BUDGET_OVERRIDE.load(AtomicOrdering::Relaxed) {
        0 => DEFAULT_STEP_BUDGET,
        b => b,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("step budget {budget} exhausted while reducing {word}")]
    NonTermination { budget: usize, word: String },
    #[error("leading coefficient {coefficient} of {relation} is not a unit")]
    NonUnitLeadingCoefficient { relation: String, coefficient: String },
    #[error("relation {relation} has leading word {leading}, which is not a pair of non-toral letters")]
    UnsupportedRelationShape { relation: String, leading: String },
    #[error("{relation} does not commute a toral letter past {letter} by a power of q")]
    NonMonomialCommutation { relation: String, letter: String },
    #[error("conflicting weights for {letter} at index {index}: {first} and {second}")]
    InconsistentWeight {
        letter: String,
        index: usize,
        first: i32,
        second: i32,
    },
    #[error("no relation fixes the commutation of {letter} with toral index {index}")]
    UndeterminedWeight { letter: String, index: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Reduce the leftmost reducible position first.
    #[default]
    Leftmost,
    /// Reduce the rightmost reducible position first.
    Rightmost,
}

/// The degree-first order on words: number of non-toral letters, then
/// length, then lexicographic by the letters' `Ord` (the generator
/// precedence).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MonomialOrder;

impl MonomialOrder {
    pub fn compare<L: Letter>(&self, a: &[L], b: &[L]) -> Ordering {
        crate::freealg::word_cmp(a, b)
    }
}

/// A rule `lhs → rhs` in free-word form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<L: Letter, S: Coefficient> {
    pub lhs: Vec<L>,
    pub rhs: FreeElement<L, S>,
}

type LatTerms<L, S> = Vec<(LatWord<L>, S)>;

/// An oriented rule set together with the diagonal lattice and the weight
/// table of the non-toral letters.
#[derive(Clone, Debug)]
pub struct RewriteSystem<L: Letter, S: Coefficient> {
    lattice: Lattice,
    weights: BTreeMap<L, Vec<i32>>,
    rules: BTreeMap<(L, L), LatTerms<L, S>>,
    ctx: S::Context,
    q_table: Vec<S>,
    step_budget: usize,
    warnings: Vec<String>,
}

const Q_TABLE_RADIUS: i32 = 24;

fn q_table<S: Coefficient>(ctx: &S::Context) -> Vec<S> {
    (-Q_TABLE_RADIUS..=Q_TABLE_RADIUS)
        .map(|k| S::from_laurent(&LaurentScalar::q_pow(k), ctx))
        .collect()
}

/// Statistics of one normal-form computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    pub steps: usize,
}

impl<L: Letter, S: Coefficient> RewriteSystem<L, S> {
    pub(crate) fn from_parts(
        lattice: Lattice,
        weights: BTreeMap<L, Vec<i32>>,
        rules: BTreeMap<(L, L), LatTerms<L, S>>,
        ctx: S::Context,
        warnings: Vec<String>,
    ) -> Self {
        RewriteSystem {
            lattice,
            weights,
            rules,
            q_table: q_table::<S>(&ctx),
            ctx,
            step_budget: default_step_budget(),
            warnings,
        }
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn context(&self) -> &S::Context {
        &self.ctx
    }

    pub fn weights(&self) -> &BTreeMap<L, Vec<i32>> {
        &self.weights
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn step_budget(&self) -> usize {
        self.step_budget
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// The pair rules as free-word rules, ordered by left-hand side.
    pub fn rules(&self) -> Vec<RewriteRule<L, S>> {
        let mut out: Vec<_> = self
            .rules
            .iter()
            .map(|((x, y), rhs)| RewriteRule {
                lhs: vec![x.clone(), y.clone()],
                rhs: FreeElement::from_terms(rhs.iter().map(|(w, c)| (w.to_letters(), c.clone()))),
            })
            .collect();
        out.sort_by(|a, b| crate::freealg::word_cmp(&a.lhs, &b.lhs));
        out
    }

    /// Removes the rule with the given left-hand side (used to build
    /// deliberately incomplete systems).
    pub fn without_rule(mut self, x: &L, y: &L) -> Self {
        self.rules.remove(&(x.clone(), y.clone()));
        self
    }

    pub(crate) fn qpow(&self, k: i32) -> S {
        if (-Q_TABLE_RADIUS..=Q_TABLE_RADIUS).contains(&k) {
            self.q_table[(k + Q_TABLE_RADIUS) as usize].clone()
        } else {
            S::from_laurent(&LaurentScalar::q_pow(k), &self.ctx)
        }
    }

    fn pairing(&self, v: &[i32], x: &L) -> i32 {
        let c = &self.weights[x];
        v.iter().zip(c).map(|(a, b)| a * b).sum()
    }

    pub(crate) fn to_lattice(&self, w: &[L]) -> LatWord<L> {
        LatWord::from_letters(w, &self.lattice)
    }

    /// First reducible position under the strategy.
    pub(crate) fn find_redex(&self, w: &LatWord<L>, strategy: Strategy) -> Option<usize> {
        let n = w.0.len();
        if n < 2 {
            return None;
        }
        let reducible = |p: usize| match (&w.0[p], &w.0[p + 1]) {
            (Sym::Plain(x), Sym::Diag(_)) => side(x) == Ordering::Greater,
            (Sym::Diag(_), Sym::Plain(y)) => side(y) == Ordering::Less,
            (Sym::Plain(x), Sym::Plain(y)) => self.rules.contains_key(&(x.clone(), y.clone())),
            (Sym::Diag(_), Sym::Diag(_)) => false,
        };
        match strategy {
            Strategy::Leftmost => (0..n - 1).find(|&p| reducible(p)),
            Strategy::Rightmost => (0..n - 1).rev().find(|&p| reducible(p)),
        }
    }

    /// One rewrite step at position `p` (which must be reducible).
    pub(crate) fn rewrite_at(&self, w: &LatWord<L>, p: usize) -> LatTerms<L, S> {
        match (&w.0[p], &w.0[p + 1]) {
            (Sym::Plain(x), Sym::Diag(v)) => {
                let c = self.qpow(-self.pairing(v, x));
                let mid = [Sym::Diag(v.clone()), Sym::Plain(x.clone())];
                vec![(w.splice(p, &mid, &self.lattice), c)]
            }
            (Sym::Diag(v), Sym::Plain(y)) => {
                let c = self.qpow(self.pairing(v, y));
                let mid = [Sym::Plain(y.clone()), Sym::Diag(v.clone())];
                vec![(w.splice(p, &mid, &self.lattice), c)]
            }
            (Sym::Plain(x), Sym::Plain(y)) => self.rules[&(x.clone(), y.clone())]
                .iter()
                .map(|(r, c)| (w.splice(p, &r.0, &self.lattice), c.clone()))
                .collect(),
            _ => unreachable!("not a redex"),
        }
    }

    /// Normal form of a lattice-form linear combination. Words are processed
    /// largest first, so each word is reduced at most once.
    pub(crate) fn reduce_terms(
        &self,
        input: impl IntoIterator<Item = (LatWord<L>, S)>,
        strategy: Strategy,
        stats: &mut ReductionStats,
    ) -> Result<LatTerms<L, S>, RewriteError> {
        let mut queue: BTreeMap<LatWord<L>, S> = BTreeMap::new();
        for (w, c) in input {
            accumulate(&mut queue, w, c);
        }
        let mut out = Vec::new();
        while let Some((w, c)) = queue.pop_last() {
            match self.find_redex(&w, strategy) {
                None => out.push((w, c)),
                Some(p) => {
                    stats.steps += 1;
                    if stats.steps > self.step_budget {
                        return Err(RewriteError::NonTermination {
                            budget: self.step_budget,
                            word: crate::freealg::word_text(&w.to_letters()),
                        });
                    }
                    for (w2, d) in self.rewrite_at(&w, p) {
                        accumulate(&mut queue, w2, c.mul_ref(&d));
                    }
                }
            }
        }
        Ok(out)
    }

    fn lattice_terms<'a>(
        &'a self,
        e: &'a FreeElement<L, S>,
    ) -> impl Iterator<Item = (LatWord<L>, S)> + 'a {
        e.terms().map(|(w, c)| (self.to_lattice(w), c.clone()))
    }

    pub(crate) fn from_lattice_terms(terms: LatTerms<L, S>) -> FreeElement<L, S> {
        FreeElement::from_terms(terms.into_iter().map(|(w, c)| (w.to_letters(), c)))
    }

    pub fn normal_form(&self, e: &FreeElement<L, S>) -> Result<FreeElement<L, S>, RewriteError> {
        self.normal_form_with(e, Strategy::Leftmost)
    }

    pub fn normal_form_with(
        &self,
        e: &FreeElement<L, S>,
        strategy: Strategy,
    ) -> Result<FreeElement<L, S>, RewriteError> {
        self.normal_form_stats(e, strategy).map(|(x, _)| x)
    }

    pub fn normal_form_stats(
        &self,
        e: &FreeElement<L, S>,
        strategy: Strategy,
    ) -> Result<(FreeElement<L, S>, ReductionStats), RewriteError> {
        let mut stats = ReductionStats::default();
        let terms = self.reduce_terms(self.lattice_terms(e), strategy, &mut stats)?;
        Ok((Self::from_lattice_terms(terms), stats))
    }

    /// True when `e` reduces to zero.
    pub fn reduces_to_zero(&self, e: &FreeElement<L, S>) -> Result<bool, RewriteError> {
        Ok(self.normal_form(e)?.is_zero())
    }

    /// Normal form of each tensor leg.
    pub fn normal_form_tensor(
        &self,
        t: &TensorElement<L, S>,
    ) -> Result<TensorElement<L, S>, RewriteError> {
        let mut cache: HashMap<Vec<L>, FreeElement<L, S>> = HashMap::new();
        let mut current = t.clone();
        for leg in 0..t.degree() {
            let mut err = None;
            current = current.map_leg(leg, |w| {
                if let Some(x) = cache.get(w) {
                    return x.clone();
                }
                let x = match self.normal_form(&FreeElement::word(w.to_vec())) {
                    Ok(x) => x,
                    Err(e) => {
                        err.get_or_insert(e);
                        FreeElement::zero()
                    }
                };
                cache.insert(w.to_vec(), x.clone());
                x
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        Ok(current)
    }

    /// True when the word is already in normal form.
    pub fn is_irreducible(&self, w: &[L]) -> bool {
        let lw = self.to_lattice(w);
        lw.to_letters() == w && self.find_redex(&lw, Strategy::Leftmost).is_none()
    }
}

impl<L: Letter> RewriteSystem<L, LaurentScalar> {
    /// The same system with every coefficient mapped into another ring.
    pub fn specialize<T: Coefficient>(&self, ctx: T::Context) -> RewriteSystem<L, T> {
        let rules = self
            .rules
            .iter()
            .map(|(k, rhs)| {
                let mapped = rhs
                    .iter()
                    .map(|(w, c)| (w.clone(), T::from_laurent(c, &ctx)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                (k.clone(), mapped)
            })
            .collect();
        let mut sys = RewriteSystem::from_parts(
            self.lattice,
            self.weights.clone(),
            rules,
            ctx,
            self.warnings.clone(),
        );
        sys.step_budget = self.step_budget;
        sys
    }
}

pub(crate) fn accumulate<L: Letter, S: Coefficient>(
    map: &mut BTreeMap<LatWord<L>, S>,
    w: LatWord<L>,
    c: S,
) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add_ref(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}
