//! Free associative algebras over the scalar rings: generator symbols,
//! words, finite linear combinations, and tensor powers.

mod element;
mod tensor;

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

pub use element::FreeElement;
pub use tensor::TensorElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("{kind}[{row},{col}] is not a valid generator for this triangle")]
    InvalidGenerator { kind: char, row: usize, col: usize },
    #[error("tensor degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("coefficient {coefficient} of {word} is not a Laurent polynomial")]
    NotInIntegerForm { coefficient: String, word: String },
}

/// Letters of a free algebra. The `Ord` impl is the generator precedence
/// used by the monomial order.
///
/// Toral letters are invertible and mutually commuting: `toral` returns the
/// lattice index and exponent (±1), and `from_toral` inverts that. Letters of
/// alphabets with no toral part keep the defaults.
pub trait Letter: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + 'static {
    fn toral(&self) -> Option<(usize, i32)> {
        None
    }
    fn from_toral(_index: usize, _exponent: i32) -> Option<Self> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratorKind {
    Beta,
    Gamma,
}

/// β_{i,j} (i ≤ j) or γ_{j,i} (j ≥ i); 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    kind: GeneratorKind,
    row: u16,
    col: u16,
}

impl Generator {
    pub fn new(kind: GeneratorKind, row: usize, col: usize) -> Result<Self, FreeAlgError> {
        let ok = row >= 1
            && col >= 1
            && match kind {
                GeneratorKind::Beta => row <= col,
                GeneratorKind::Gamma => row >= col,
            };
        if !ok {
            return Err(FreeAlgError::InvalidGenerator {
                kind: match kind {
                    GeneratorKind::Beta => 'b',
                    GeneratorKind::Gamma => 'g',
                },
                row,
                col,
            });
        }
        Ok(Generator {
            kind,
            row: row as u16,
            col: col as u16,
        })
    }

    /// β_{i,j}; panics unless 1 ≤ i ≤ j.
    pub fn beta(i: usize, j: usize) -> Self {
        Self::new(GeneratorKind::Beta, i, j).expect("invalid beta generator")
    }

    /// γ_{j,i}; panics unless 1 ≤ i ≤ j.
    pub fn gamma(j: usize, i: usize) -> Self {
        Self::new(GeneratorKind::Gamma, j, i).expect("invalid gamma generator")
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }
    pub fn row(&self) -> usize {
        self.row as usize
    }
    pub fn col(&self) -> usize {
        self.col as usize
    }
    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    /// All β and γ generators for rank n, in precedence order.
    pub fn all(n: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                out.push(Generator::beta(i, j));
                out.push(Generator::gamma(j, i));
            }
        }
        out.sort();
        out
    }

    // Blocks: off-diagonal γ, then diagonals, then off-diagonal β.
    fn sort_key(&self) -> (u8, u16, u16, u8) {
        match (self.kind, self.is_diagonal()) {
            (GeneratorKind::Gamma, false) => (0, self.col, self.row, 0),
            (GeneratorKind::Beta, true) => (1, self.row, 0, 0),
            (GeneratorKind::Gamma, true) => (1, self.row, 0, 1),
            (GeneratorKind::Beta, false) => (2, self.row, self.col, 0),
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GeneratorKind::Beta => 'b',
            GeneratorKind::Gamma => 'g',
        };
        write!(f, "{c}[{},{}]", self.row, self.col)
    }
}

impl Letter for Generator {
    fn toral(&self) -> Option<(usize, i32)> {
        if !self.is_diagonal() {
            return None;
        }
        match self.kind {
            GeneratorKind::Beta => Some((self.row(), 1)),
            GeneratorKind::Gamma => Some((self.row(), -1)),
        }
    }

    fn from_toral(index: usize, exponent: i32) -> Option<Self> {
        match exponent {
            1 => Some(Generator::beta(index, index)),
            -1 => Some(Generator::gamma(index, index)),
            _ => None,
        }
    }
}

/// Entry t_{i,j} of a generic quantum matrix; no entry is invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixEntry {
    pub row: u16,
    pub col: u16,
}

impl MatrixEntry {
    pub fn new(row: usize, col: usize) -> Self {
        MatrixEntry {
            row: row as u16,
            col: col as u16,
        }
    }
}

impl Display for MatrixEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{},{}]", self.row, self.col)
    }
}

impl Letter for MatrixEntry {}

/// Number of non-toral letters.
pub fn off_degree<L: Letter>(w: &[L]) -> usize {
    w.iter().filter(|l| l.toral().is_none()).count()
}

/// Degree-first order on words: off-diagonal degree, then length, then
/// leftmost-precedence lexicographic.
pub fn word_cmp<L: Letter>(a: &[L], b: &[L]) -> Ordering {
    off_degree(a)
        .cmp(&off_degree(b))
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.cmp(b))
}

pub fn word_text<L: Letter>(w: &[L]) -> String {
    w.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_blocks() {
        let g21 = Generator::gamma(2, 1);
        let g31 = Generator::gamma(3, 1);
        let g32 = Generator::gamma(3, 2);
        let b11 = Generator::beta(1, 1);
        let c11 = Generator::gamma(1, 1);
        let b22 = Generator::beta(2, 2);
        let b12 = Generator::beta(1, 2);
        let b23 = Generator::beta(2, 3);
        let order = [g21, g31, g32, b11, c11, b22, b12, b23];
        for w in order.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn invalid_generators() {
        assert!(Generator::new(GeneratorKind::Beta, 2, 1).is_err());
        assert!(Generator::new(GeneratorKind::Gamma, 1, 2).is_err());
        assert!(Generator::new(GeneratorKind::Beta, 0, 1).is_err());
    }

    #[test]
    fn all_generators_count() {
        assert_eq!(Generator::all(2).len(), 6);
        assert_eq!(Generator::all(3).len(), 12);
    }
}
