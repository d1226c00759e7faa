use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{side, LatWord, ReductionStats, RewriteError, RewriteSystem, Strategy, Sym};
use crate::freealg::{FreeElement, Letter};
use crate::scalars::Coefficient;

/// An overlap `abc` whose two one-step reductions have different normal
/// forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity<L: Letter, S: Coefficient> {
    pub word: Vec<L>,
    pub left: FreeElement<L, S>,
    pub right: FreeElement<L, S>,
    pub difference: FreeElement<L, S>,
}

impl<L: Letter, S: Coefficient> RewriteSystem<L, S> {
    fn alphabet(&self) -> Vec<Sym<L>> {
        let mut plain: BTreeSet<L> = self.weights.keys().cloned().collect();
        for ((x, y), rhs) in &self.rules {
            plain.insert(x.clone());
            plain.insert(y.clone());
            for (w, _) in rhs {
                for s in &w.0 {
                    if let Sym::Plain(z) = s {
                        plain.insert(z.clone());
                    }
                }
            }
        }
        let mut out: Vec<Sym<L>> = plain.into_iter().map(Sym::Plain).collect();
        if !self.weights.is_empty() {
            for k in 1..=self.lattice.rank {
                for e in [1, -1] {
                    let v = self.lattice.unit(k, e);
                    if v.iter().any(|&x| x != 0) {
                        out.push(Sym::Diag(v));
                    }
                }
            }
        }
        out
    }

    fn is_redex(&self, a: &Sym<L>, b: &Sym<L>) -> bool {
        match (a, b) {
            (Sym::Plain(x), Sym::Diag(_)) => side(x) == Ordering::Greater,
            (Sym::Diag(_), Sym::Plain(y)) => side(y) == Ordering::Less,
            (Sym::Plain(x), Sym::Plain(y)) => self.rules.contains_key(&(x.clone(), y.clone())),
            (Sym::Diag(_), Sym::Diag(_)) => false,
        }
    }

    /// All overlap words `abc` where both `ab` and `bc` are reducible.
    pub(crate) fn overlaps(&self) -> Vec<LatWord<L>> {
        let alpha = self.alphabet();
        let mut out = Vec::new();
        for a in &alpha {
            for b in &alpha {
                if !self.is_redex(a, b) {
                    continue;
                }
                for c in &alpha {
                    if self.is_redex(b, c) {
                        out.push(LatWord(vec![a.clone(), b.clone(), c.clone()]));
                    }
                }
            }
        }
        out
    }

    fn resolve(&self, w: &LatWord<L>, at: usize) -> Result<FreeElement<L, S>, RewriteError> {
        let mut stats = ReductionStats::default();
        let step = self.rewrite_at(w, at);
        let terms = self.reduce_terms(step, Strategy::Leftmost, &mut stats)?;
        Ok(Self::from_lattice_terms(terms))
    }

    /// Reduces both sides of every overlap ambiguity and returns those whose
    /// normal forms differ. Empty means locally confluent, hence (with
    /// termination) confluent.
    pub fn confluence_check(&self) -> Result<Vec<Ambiguity<L, S>>, RewriteError> {
        let overlaps = self.overlaps();
        let results: Vec<Result<Option<Ambiguity<L, S>>, RewriteError>> = overlaps
            .par_iter()
            .map(|w| {
                let left = self.resolve(w, 0)?;
                let right = self.resolve(w, 1)?;
                if left == right {
                    return Ok(None);
                }
                let difference = &left - &right;
                Ok(Some(Ambiguity {
                    word: w.to_letters(),
                    left,
                    right,
                    difference,
                }))
            })
            .collect();
        let mut out = Vec::new();
        for r in results {
            if let Some(a) = r? {
                out.push(a);
            }
        }
        Ok(out)
    }

    pub fn overlap_count(&self) -> usize {
        self.overlaps().len()
    }

    /// Knuth–Bendix style completion: orients each nonzero overlap
    /// difference as a new rule, for at most `max_rounds` rounds. Returns the
    /// number of rules added. Off unless called explicitly.
    pub fn complete(&mut self, max_rounds: usize) -> Result<usize, RewriteError> {
        let mut added = 0;
        for _ in 0..max_rounds {
            let amb = self.confluence_check()?;
            if amb.is_empty() {
                break;
            }
            for a in amb {
                let mut stats = ReductionStats::default();
                let terms: Vec<_> = a
                    .difference
                    .terms()
                    .map(|(w, c)| (self.to_lattice(w), c.clone()))
                    .collect();
                let reduced = self.reduce_terms(terms, Strategy::Leftmost, &mut stats)?;
                let Some((lead, lc)) = reduced.first().cloned() else {
                    continue;
                };
                let [Sym::Plain(x), Sym::Plain(y)] = lead.0.as_slice() else {
                    return Err(RewriteError::UnsupportedRelationShape {
                        relation: a.difference.to_string(),
                        leading: crate::freealg::word_text(&lead.to_letters()),
                    });
                };
                let Some(inv) = lc.inverse() else {
                    return Err(RewriteError::NonUnitLeadingCoefficient {
                        relation: a.difference.to_string(),
                        coefficient: lc.to_string(),
                    });
                };
                let rhs = reduced[1..]
                    .iter()
                    .map(|(w, c)| (w.clone(), -c.mul_ref(&inv)))
                    .collect();
                self.rules.insert((x.clone(), y.clone()), rhs);
                added += 1;
            }
        }
        Ok(added)
    }
}
