use clap::ValueEnum;
use rayon::prelude::*;

use qpbw_core::hopf::{verify_centrality, HopfContext};
use qpbw_core::presentations::{
    cross_check_rtt, cross_check_short_presentation, Flavor, PresentationError, PresentationSpec,
};
use qpbw_core::report::Report;
use qpbw_core::specialize::{
    frobenius_centrality_check, frobenius_check, verify_poisson_tables, SpecializeError,
};
use qpbw_core::structmaps::{
    check_integer_form, check_psi_identities, check_rootvector_identities, l_operator_matrices,
    verify_jimbo_presentation, StructError,
};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Qmatrix,
    ShortVsFull,
    Confluence,
    Hopf,
    Jimbo,
    Rootvectors,
    Loperators,
    Poisson,
    Frobenius,
    All,
}

const ORDER: [Suite; 9] = [
    Suite::Qmatrix,
    Suite::ShortVsFull,
    Suite::Confluence,
    Suite::Hopf,
    Suite::Jimbo,
    Suite::Rootvectors,
    Suite::Loperators,
    Suite::Poisson,
    Suite::Frobenius,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Qmatrix => "qmatrix",
            Suite::ShortVsFull => "short-vs-full",
            Suite::Confluence => "confluence",
            Suite::Hopf => "hopf",
            Suite::Jimbo => "jimbo",
            Suite::Rootvectors => "rootvectors",
            Suite::Loperators => "loperators",
            Suite::Poisson => "poisson",
            Suite::Frobenius => "frobenius",
            Suite::All => "all",
        }
    }

    /// Suites stated for gl_n only.
    fn gl_only(self) -> bool {
        matches!(
            self,
            Suite::Qmatrix | Suite::ShortVsFull | Suite::Jimbo | Suite::Rootvectors | Suite::Loperators
        )
    }
}

/// Parameters shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub flavor: Flavor,
    pub ell: Option<u32>,
    pub allow_even: bool,
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::InvalidRank { .. } => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<StructError> for CliError {
    fn from(e: StructError) -> Self {
        match e {
            StructError::InvalidRank(_) => CliError::Usage(e.to_string()),
            StructError::Presentation(p) => p.into(),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<SpecializeError> for CliError {
    fn from(e: SpecializeError) -> Self {
        match e {
            SpecializeError::UnsupportedLevel { .. } => CliError::Usage(e.to_string()),
            SpecializeError::Presentation(p) => p.into(),
            other => CliError::Compute(other.to_string()),
        }
    }
}

/// Checks option combinations before anything is computed.
pub fn validate(suite: Suite, p: &SuiteParams) -> Result<(), CliError> {
    if p.n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if suite.gl_only() && p.flavor == Flavor::SL {
        return Err(CliError::Usage(format!(
            "suite '{}' is only defined for the gl flavor",
            suite.name()
        )));
    }
    if suite == Suite::Frobenius && p.ell.is_none() {
        return Err(CliError::Usage("suite 'frobenius' requires --ell".into()));
    }
    Ok(())
}

/// Runs one suite. `all` runs every suite applicable to the flavor (and
/// `frobenius` only when a level is given), concatenated in a fixed order.
pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<Report, CliError> {
    validate(suite, p)?;
    if suite == Suite::All {
        let parts: Vec<Suite> = ORDER
            .into_iter()
            .filter(|s| !(s.gl_only() && p.flavor == Flavor::SL))
            .filter(|s| *s != Suite::Frobenius || p.ell.is_some())
            .collect();
        let reports: Vec<Report> = parts
            .par_iter()
            .map(|&s| run_single(s, p))
            .collect::<Result<_, _>>()?;
        let mut out = Report::new();
        for r in reports {
            out.extend(r);
        }
        return Ok(out);
    }
    run_single(suite, p)
}

fn run_single(suite: Suite, p: &SuiteParams) -> Result<Report, CliError> {
    let n = p.n;
    let mut report = Report::new();
    match suite {
        Suite::Qmatrix => report.extend(cross_check_rtt(n)?),
        Suite::ShortVsFull => report.extend(cross_check_short_presentation(n)?),
        Suite::Confluence => report.extend(PresentationSpec::cached(n, p.flavor)?.confluence_report()),
        Suite::Hopf => {
            let pres = PresentationSpec::cached(n, p.flavor)?;
            report.extend(HopfContext::laurent(pres).verify_hopf_axioms());
            report.extend(verify_centrality(n, p.flavor)?);
        }
        Suite::Jimbo => {
            report.extend(verify_jimbo_presentation(n)?);
            report.extend(check_integer_form(n)?);
        }
        Suite::Rootvectors => {
            report.extend(check_rootvector_identities(n)?);
            report.extend(check_psi_identities(n)?);
        }
        Suite::Loperators => report.extend(l_operator_matrices(n)?.2),
        Suite::Poisson => report.extend(verify_poisson_tables(n, p.flavor)?),
        Suite::Frobenius => {
            let ell = p.ell.expect("validated");
            report.extend(frobenius_check(n, ell, p.flavor, p.allow_even)?);
            if ell % 2 == 1 {
                report.extend(frobenius_centrality_check(n, ell, p.flavor)?);
            }
        }
        Suite::All => unreachable!("expanded by run_suite"),
    }
    Ok(report)
}
