//! The classical limit at q = 1 with its Poisson bracket, and
//! specialization at roots of unity with the quantum Frobenius checks.

mod commutative;
mod roots;
mod tables;

use num_rational::BigRational;
use thiserror::Error;

use crate::freealg::{FreeAlgError, FreeElement, Generator};
use crate::presentations::{PresentationError, PresentationSpec};
use crate::rewrite::RewriteError;
use crate::scalars::{LaurentScalar, RatScalar, ScalarError};

pub use commutative::{CommutativeElement, CommutativeMonomial};
pub use roots::{
    frobenius_centrality_check, frobenius_check, specialize_root_of_unity, SpecializedSystem,
};
pub use tables::{closed_form_bracket, verify_poisson_tables};

type LElem = FreeElement<Generator, LaurentScalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecializeError {
    #[error("coefficient {coefficient} of {word} has a pole at q = 1")]
    NotInIntegerForm { coefficient: String, word: String },
    #[error(transparent)]
    NotDivisible(#[from] ScalarError),
    #[error("unsupported level {level}: {reason}")]
    UnsupportedLevel { level: u32, reason: String },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

impl From<FreeAlgError> for SpecializeError {
    fn from(e: FreeAlgError) -> Self {
        match e {
            FreeAlgError::NotInIntegerForm { coefficient, word } => {
                SpecializeError::NotInIntegerForm { coefficient, word }
            }
            other => SpecializeError::NotInIntegerForm {
                coefficient: other.to_string(),
                word: String::new(),
            },
        }
    }
}

/// Elements that can be brought to a normal form with Laurent
/// coefficients.
pub trait IntegerFormInput {
    fn integer_normal_form(&self, p: &PresentationSpec) -> Result<LElem, SpecializeError>;
}

impl IntegerFormInput for FreeElement<Generator, LaurentScalar> {
    fn integer_normal_form(&self, p: &PresentationSpec) -> Result<LElem, SpecializeError> {
        Ok(p.system().normal_form(self)?)
    }
}

impl IntegerFormInput for FreeElement<Generator, RatScalar> {
    fn integer_normal_form(&self, p: &PresentationSpec) -> Result<LElem, SpecializeError> {
        Ok(p.rat_system().normal_form(self)?.to_integer_form()?)
    }
}

fn evaluate(p: &PresentationSpec, e: &LElem, f: impl Fn(&LaurentScalar) -> Result<BigRational, ScalarError>) -> Result<CommutativeElement, SpecializeError> {
    let mut out = CommutativeElement::zero(p.system().lattice());
    for (w, c) in e.terms() {
        let m = CommutativeMonomial::from_word(w, &out.lattice());
        out.add_term(m, f(c)?);
    }
    Ok(out)
}

/// x̄: the normal form's coefficients evaluated at q = 1, words made
/// commutative.
pub fn classical_limit<E: IntegerFormInput>(
    p: &PresentationSpec,
    e: &E,
) -> Result<CommutativeElement, SpecializeError> {
    let nf = e.integer_normal_form(p)?;
    evaluate(p, &nf, |c| Ok(c.eval_at_one()))
}

/// {x̄, ȳ} = (xy − yx)/(q − 1) at q = 1.
pub fn poisson_bracket<E: IntegerFormInput>(
    p: &PresentationSpec,
    x: &E,
    y: &E,
) -> Result<CommutativeElement, SpecializeError> {
    let x = x.integer_normal_form(p)?;
    let y = y.integer_normal_form(p)?;
    let comm = p.system().normal_form(&x.commutator(&y))?;
    evaluate(p, &comm, |c| Ok(c.exact_quotient_q_minus_one()?.eval_at_one()))
}

/// Bracket of two commutative elements, computed through their canonical
/// lifts.
pub fn poisson_bracket_classical(
    p: &PresentationSpec,
    x: &CommutativeElement,
    y: &CommutativeElement,
) -> Result<CommutativeElement, SpecializeError> {
    poisson_bracket(p, &x.lift(), &y.lift())
}
