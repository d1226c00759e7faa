//! Words with the toral letters collapsed into lattice vectors.

use std::cmp::Ordering;

use crate::freealg::Letter;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Sym<L> {
    Plain(L),
    Diag(Vec<i32>),
}

/// Diagonal lattice Z^rank, optionally modulo the direction (1, …, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub rank: usize,
    pub quotient: bool,
}

impl Lattice {
    pub fn new(rank: usize, quotient: bool) -> Self {
        Lattice { rank, quotient }
    }

    /// Canonical representative: in the quotient, the last coordinate is 0.
    pub fn normalize(&self, v: &mut [i32]) {
        if self.quotient {
            if let Some(&t) = v.last() {
                for x in v.iter_mut() {
                    *x -= t;
                }
            }
        }
    }

    pub fn unit(&self, index: usize, exponent: i32) -> Vec<i32> {
        let mut v = vec![0; self.rank];
        v[index - 1] = exponent;
        self.normalize(&mut v);
        v
    }
}

/// Position of a non-toral letter relative to the block of toral letters.
pub(crate) fn side<L: Letter>(x: &L) -> Ordering {
    match L::from_toral(1, 1) {
        Some(t) => x.cmp(&t),
        None => Ordering::Less,
    }
}

fn sym_cmp<L: Letter>(a: &Sym<L>, b: &Sym<L>) -> Ordering {
    match (a, b) {
        (Sym::Plain(x), Sym::Plain(y)) => x.cmp(y),
        (Sym::Diag(u), Sym::Diag(v)) => u.cmp(v),
        (Sym::Plain(x), Sym::Diag(_)) => side(x),
        (Sym::Diag(_), Sym::Plain(y)) => side(y).reverse(),
    }
}

/// Word in lattice form, ordered by off-diagonal degree, then length, then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct LatWord<L>(pub Vec<Sym<L>>);

impl<L: Letter> LatWord<L> {
    pub fn off_degree(&self) -> usize {
        self.0.iter().filter(|s| matches!(s, Sym::Plain(_))).count()
    }

    /// Builds the canonical word: adjacent lattice letters merged, vectors
    /// normalized, zero vectors dropped.
    pub fn canonical(syms: impl IntoIterator<Item = Sym<L>>, lattice: &Lattice) -> Self {
        let mut out: Vec<Sym<L>> = Vec::new();
        for s in syms {
            match s {
                Sym::Diag(v) => {
                    if let Some(Sym::Diag(prev)) = out.last_mut() {
                        for (a, b) in prev.iter_mut().zip(&v) {
                            *a += b;
                        }
                    } else {
                        out.push(Sym::Diag(v));
                    }
                }
                p => {
                    flush_zero(&mut out, lattice);
                    out.push(p);
                }
            }
        }
        flush_zero(&mut out, lattice);
        LatWord(out)
    }

    pub fn from_letters(w: &[L], lattice: &Lattice) -> Self {
        Self::canonical(
            w.iter().map(|l| match l.toral() {
                Some((k, e)) => Sym::Diag(lattice.unit(k, e)),
                None => Sym::Plain(l.clone()),
            }),
            lattice,
        )
    }

    pub fn to_letters(&self) -> Vec<L> {
        let mut out = Vec::new();
        for s in &self.0 {
            match s {
                Sym::Plain(l) => out.push(l.clone()),
                Sym::Diag(v) => {
                    for (k, &e) in v.iter().enumerate().filter(|(_, e)| **e != 0) {
                        let l = L::from_toral(k + 1, e.signum())
                            .expect("lattice letter without toral generator");
                        for _ in 0..e.unsigned_abs() {
                            out.push(l.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// The word with `middle` substituted for positions `at..at+2`.
    pub fn splice(&self, at: usize, middle: &[Sym<L>], lattice: &Lattice) -> Self {
        Self::canonical(
            self.0[..at]
                .iter()
                .cloned()
                .chain(middle.iter().cloned())
                .chain(self.0[at + 2..].iter().cloned()),
            lattice,
        )
    }
}

fn flush_zero<L>(out: &mut Vec<Sym<L>>, lattice: &Lattice) {
    if let Some(Sym::Diag(v)) = out.last_mut() {
        lattice.normalize(v);
        if v.iter().all(|&x| x == 0) {
            out.pop();
        }
    }
}

impl<L: Letter> PartialOrd for LatWord<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Letter> Ord for LatWord<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.off_degree()
            .cmp(&other.off_degree())
            .then(self.0.len().cmp(&other.0.len()))
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match sym_cmp(a, b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}
