//! Text and JSON rendering of command results.

use std::fmt::Write as _;

use serde::Serialize;

use qpbw_core::presentations::{Flavor, PresentationSpec};
use qpbw_core::report::{Check, Report, Status};

use crate::suites::SuiteParams;
use crate::{Format, Outcome, SCHEMA};

/// Any document with the schema version prepended.
#[derive(Serialize)]
pub struct Versioned<T: Serialize> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Versioned<T> {
    pub fn new(body: T) -> Self {
        Versioned { schema: SCHEMA, body }
    }
}

#[derive(Serialize)]
pub struct NfDocument {
    pub schema: u32,
    pub n: usize,
    pub flavor: Flavor,
    pub input: String,
    pub normal_form: String,
}

#[derive(Serialize)]
pub struct BracketRow {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Serialize)]
pub struct BracketDocument {
    pub schema: u32,
    pub n: usize,
    pub flavor: Flavor,
    pub brackets: Vec<BracketRow>,
}

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    #[serde(skip_serializing_if = "is_zero")]
    pub warn: usize,
}

fn is_zero(v: &usize) -> bool {
    *v == 0
}

#[derive(Serialize)]
pub struct ReportDocument<'a> {
    pub schema: u32,
    pub suite: &'a str,
    pub n: usize,
    pub flavor: Flavor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    pub checks: &'a [Check],
    pub summary: Summary,
    pub duration_ms: u64,
}

fn summary(report: &Report) -> Summary {
    Summary {
        pass: report.pass_count(),
        fail: report.fail_count(),
        warn: report.checks.iter().filter(|c| c.status == Status::Warn).count(),
    }
}

/// Renders a suite report; the exit code is 0 iff no check failed.
pub fn report_outcome(suite: &str, p: &SuiteParams, report: &Report, duration_ms: u64, format: Format) -> Outcome {
    let code = if report.passed() { 0 } else { 1 };
    let output = match format {
        Format::Json => {
            let doc = ReportDocument {
                schema: SCHEMA,
                suite,
                n: p.n,
                flavor: p.flavor,
                ell: p.ell,
                checks: &report.checks,
                summary: summary(report),
                duration_ms,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => report_text(suite, p, report),
    };
    Outcome { code, output }
}

fn report_text(suite: &str, p: &SuiteParams, report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        };
        let _ = write!(out, "{status} [{}] {}", c.tag, c.name);
        if let Some(w) = &c.witness {
            let _ = write!(out, ": {w}");
        }
        out.push('\n');
    }
    let s = summary(report);
    let ell = p.ell.map(|l| format!(" ell={l}")).unwrap_or_default();
    let _ = write!(
        out,
        "suite {suite} n={} flavor={}{ell}: {} passed, {} failed",
        p.n, p.flavor, s.pass, s.fail
    );
    if s.warn > 0 {
        let _ = write!(out, ", {} advisory", s.warn);
    }
    out.push('\n');
    out
}

pub fn presentation_text(p: &PresentationSpec) -> String {
    let doc = p.to_document();
    let mut out = String::new();
    let _ = writeln!(out, "presentation {}_{}", doc.flavor, doc.n);
    let _ = writeln!(out, "generators: {}", doc.generators.join(", "));
    let _ = writeln!(out, "order: {} ({})", doc.order.precedence.join(" < "), doc.order.words);
    match &doc.lattice.quotient {
        Some(q) => {
            let _ = writeln!(out, "diagonal lattice: rank {}, quotient by {:?}", doc.lattice.rank, q);
        }
        None => {
            let _ = writeln!(out, "diagonal lattice: rank {}", doc.lattice.rank);
        }
    }
    for fam in &doc.families {
        let kind = if fam.oriented { "oriented" } else { "checked" };
        let _ = writeln!(out, "family {} ({kind}, {} relations)", fam.name, fam.relations.len());
        for r in &fam.relations {
            let _ = writeln!(out, "  {r} = 0");
        }
    }
    let _ = writeln!(out, "rules ({}):", doc.rules.len());
    for r in &doc.rules {
        let _ = writeln!(out, "  {} -> {}", r.lhs, r.rhs);
    }
    for w in &doc.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}
