//! Exact computations in the FRT-style presentations of quantum gl_n and
//! sl_n: PBW normal forms by rewriting, Hopf structure, derived Jimbo
//! generators, semiclassical limits and roots of unity.
//!
//! Everything is generic over the coefficient ring ([`scalars::Coefficient`]);
//! the aliases below fix the common choices.

pub mod freealg;
pub mod hopf;
pub mod presentations;
pub mod report;
pub mod rewrite;
pub mod scalars;
pub mod specialize;
pub mod structmaps;

pub use freealg::{FreeElement, Generator, GeneratorKind, Letter, MatrixEntry, TensorElement};
pub use scalars::{Coefficient, CycloScalar, LaurentScalar, RatScalar};

/// Element of the free algebra on β/γ generators.
pub type Element<S> = FreeElement<Generator, S>;
/// Elements over the fraction field Q(q).
pub type RatElement = Element<RatScalar>;
/// Elements over the Laurent ring Q[q, q⁻¹] (the integer form).
pub type LaurentElement = Element<LaurentScalar>;
/// Elements specialized at a root of unity.
pub type CycloElement = Element<CycloScalar>;
