use std::collections::BTreeMap;

use num_traits::One;

use super::{
    accumulate, LatTerms, LatWord, Lattice, ReductionStats, RewriteError, RewriteSystem, Strategy,
    Sym,
};
use crate::freealg::{word_text, FreeElement, Letter};
use crate::scalars::LaurentScalar;

type Weights<L> = BTreeMap<L, Vec<Option<i32>>>;

/// Orients relations (each read as `r = 0`) into a rewrite system.
///
/// Binomials of the form `a·D(v)x + b·xD(v)` fix the weights of the
/// non-toral letters; what survives reduction by those weights is
/// interreduced, in increasing order of leading word, into pair rules
/// `leading word → leading word − r / leading coefficient`. Relations that
/// vanish identically are skipped with a warning.
pub fn orient_relations<L: Letter>(
    relations: &[FreeElement<L, LaurentScalar>],
    lattice: Lattice,
) -> Result<RewriteSystem<L, LaurentScalar>, RewriteError> {
    let mut warnings = Vec::new();
    let mut lat_relations: Vec<(usize, LatTerms<L, LaurentScalar>)> = Vec::new();
    for (i, r) in relations.iter().enumerate() {
        let mut map = BTreeMap::new();
        for (w, c) in r.terms() {
            accumulate(&mut map, LatWord::from_letters(w, &lattice), c.clone());
        }
        if map.is_empty() {
            let msg = format!("relation {i} ({r}) vanishes identically; skipped");
            log::warn!("{msg}");
            warnings.push(msg);
            continue;
        }
        lat_relations.push((i, map.into_iter().rev().collect()));
    }

    let weights = extract_weights(relations, &lat_relations, &lattice)?;
    let mut sys = RewriteSystem::from_parts(lattice, weights, BTreeMap::new(), (), warnings);
    let budget = sys.step_budget;
    let mut stats = ReductionStats::default();

    let mut pending = Vec::new();
    for (i, terms) in lat_relations {
        stats.steps = 0;
        let reduced = sys.reduce_terms(terms, Strategy::Leftmost, &mut stats)?;
        if !reduced.is_empty() {
            pending.push((i, reduced));
        }
    }
    pending.sort_by(|a, b| a.1[0].0.cmp(&b.1[0].0));

    for (i, terms) in pending {
        stats.steps = 0;
        let reduced = sys.reduce_terms(terms, Strategy::Leftmost, &mut stats)?;
        let Some((lead, lc)) = reduced.first().cloned() else {
            continue;
        };
        let (x, y) = match lead.0.as_slice() {
            [Sym::Plain(x), Sym::Plain(y)] => (x.clone(), y.clone()),
            _ => {
                return Err(RewriteError::UnsupportedRelationShape {
                    relation: relations[i].to_string(),
                    leading: word_text(&lead.to_letters()),
                })
            }
        };
        let Some(inv) = lc.inverse() else {
            return Err(RewriteError::NonUnitLeadingCoefficient {
                relation: relations[i].to_string(),
                coefficient: lc.to_string(),
            });
        };
        let rhs = reduced[1..]
            .iter()
            .map(|(w, c)| (w.clone(), -(c * &inv)))
            .collect();
        sys.rules.insert((x, y), rhs);
    }

    // Final interreduction of right-hand sides.
    let keys: Vec<_> = sys.rules.keys().cloned().collect();
    for k in keys {
        let rhs = sys.rules[&k].clone();
        let mut stats = ReductionStats::default();
        let reduced = sys.reduce_terms(rhs, Strategy::Leftmost, &mut stats)?;
        sys.rules.insert(k, reduced);
    }
    sys.step_budget = budget;
    Ok(sys)
}

/// Reads the weight table off the toral commutation binomials.
fn extract_weights<L: Letter>(
    relations: &[FreeElement<L, LaurentScalar>],
    lat_relations: &[(usize, LatTerms<L, LaurentScalar>)],
    lattice: &Lattice,
) -> Result<BTreeMap<L, Vec<i32>>, RewriteError> {
    let mut equations: BTreeMap<L, Vec<(Vec<i32>, i32)>> = BTreeMap::new();
    let mut has_toral = false;
    let mut letters = std::collections::BTreeSet::new();
    for (i, terms) in lat_relations {
        for (w, _) in terms {
            for s in &w.0 {
                match s {
                    Sym::Plain(x) => {
                        letters.insert(x.clone());
                    }
                    Sym::Diag(_) => has_toral = true,
                }
            }
        }
        match commutation_binomial(terms) {
            Some((x, v, Some(m))) => equations.entry(x).or_default().push((v, m)),
            Some((x, _, None)) => {
                return Err(RewriteError::NonMonomialCommutation {
                    relation: relations[*i].to_string(),
                    letter: x.to_string(),
                })
            }
            None => {}
        }
    }
    if !has_toral {
        return Ok(BTreeMap::new());
    }

    let free_coords = if lattice.quotient {
        lattice.rank - 1
    } else {
        lattice.rank
    };
    let mut table: Weights<L> = BTreeMap::new();
    for x in &letters {
        let mut c: Vec<Option<i32>> = vec![None; lattice.rank];
        let eqs = equations.get(x).map(Vec::as_slice).unwrap_or(&[]);
        for (v, m) in eqs {
            let nz: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
            if let [k] = nz[..] {
                if m % v[k] != 0 {
                    return Err(RewriteError::InconsistentWeight {
                        letter: x.to_string(),
                        index: k + 1,
                        first: *m,
                        second: v[k],
                    });
                }
                let val = m / v[k];
                match c[k] {
                    Some(old) if old != val => {
                        return Err(RewriteError::InconsistentWeight {
                            letter: x.to_string(),
                            index: k + 1,
                            first: old,
                            second: val,
                        })
                    }
                    _ => c[k] = Some(val),
                }
            }
        }
        for (k, ck) in c.iter().enumerate().take(free_coords) {
            if ck.is_none() {
                return Err(RewriteError::UndeterminedWeight {
                    letter: x.to_string(),
                    index: k + 1,
                });
            }
        }
        if lattice.quotient {
            let s: i32 = c[..free_coords].iter().map(|v| v.unwrap()).sum();
            match c[free_coords] {
                Some(old) if old != -s => {
                    return Err(RewriteError::InconsistentWeight {
                        letter: x.to_string(),
                        index: lattice.rank,
                        first: old,
                        second: -s,
                    })
                }
                _ => c[free_coords] = Some(-s),
            }
        }
        table.insert(x.clone(), c);
    }

    let weights: BTreeMap<L, Vec<i32>> = table
        .into_iter()
        .map(|(x, c)| (x, c.into_iter().map(Option::unwrap).collect()))
        .collect();
    // Every binomial, including those with several nonzero coordinates,
    // must agree with the table.
    for (x, eqs) in &equations {
        for (v, m) in eqs {
            let got: i32 = v.iter().zip(&weights[x]).map(|(a, b)| a * b).sum();
            if got != *m {
                return Err(RewriteError::InconsistentWeight {
                    letter: x.to_string(),
                    index: 0,
                    first: got,
                    second: *m,
                });
            }
        }
    }
    Ok(weights)
}

fn plain_letter<L: Letter>(w: &LatWord<L>) -> L {
    w.0.iter()
        .find_map(|s| match s {
            Sym::Plain(x) => Some(x.clone()),
            Sym::Diag(_) => None,
        })
        .unwrap()
}

fn is_commutation_shape<L: Letter>(terms: &LatTerms<L, LaurentScalar>) -> bool {
    let shape = |w: &LatWord<L>| match w.0.as_slice() {
        [Sym::Plain(x), Sym::Diag(v)] => Some((x.clone(), v.clone(), false)),
        [Sym::Diag(v), Sym::Plain(x)] => Some((x.clone(), v.clone(), true)),
        _ => None,
    };
    match (shape(&terms[0].0), shape(&terms[1].0)) {
        (Some((x, v, a)), Some((y, u, b))) => x == y && v == u && a != b,
        _ => false,
    }
}

/// For `a·D(v)x + b·xD(v)` returns (x, v, m) with D(v)x = q^m xD(v), and
/// `m = None` when the ratio is not a power of q.
fn commutation_binomial<L: Letter>(
    terms: &LatTerms<L, LaurentScalar>,
) -> Option<(L, Vec<i32>, Option<i32>)> {
    if terms.len() != 2 || !is_commutation_shape(terms) {
        return None;
    }
    let (dx, xd) = if matches!(terms[0].0 .0[0], Sym::Diag(_)) {
        (&terms[0], &terms[1])
    } else {
        (&terms[1], &terms[0])
    };
    let x = plain_letter(&dx.0);
    let Sym::Diag(v) = &dx.0 .0[0] else {
        unreachable!()
    };
    // a·Dx + b·xD = 0  ⇒  Dx = (−b/a)·xD
    let m = (-xd.1.clone())
        .exact_div(&dx.1)
        .ok()
        .and_then(|r| match r.as_monomial() {
            Some((m, c)) if c.is_one() => Some(m),
            _ => None,
        });
    Some((x, v.clone(), m))
}
