//! Rendering of [`Report`]s as plain text or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::format::{InputDocument, IntLit};
use crate::lattice::FinGenAbQuotient;
use crate::spherical::{PiResult, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "structured" | "json" => Ok(ReportFormat::Structured),
            other => Err(format!("unknown format `{other}` (text or structured)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDocument {
    pub divisible_rank: usize,
    pub invariant_factors: Vec<IntLit>,
}

impl From<&FinGenAbQuotient> for QuotientDocument {
    fn from(q: &FinGenAbQuotient) -> Self {
        QuotientDocument {
            divisible_rank: q.divisible_rank(),
            invariant_factors: q.invariant_factors().iter().cloned().map(IntLit).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiDocument {
    pub p: u64,
    pub zhat_rank: usize,
    pub invariant_factors: Vec<IntLit>,
    pub rendered: String,
}

impl From<&PiResult> for PiDocument {
    fn from(pi: &PiResult) -> Self {
        PiDocument {
            p: pi.p,
            zhat_rank: pi.zhat_rank,
            invariant_factors: pi.invariant_factors.iter().cloned().map(IntLit).collect(),
            rendered: pi.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub check: String,
    pub status: String,
    pub message: String,
}

/// Every field of a [`Report`], in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputDocument,
    pub xi_circ_quotient: QuotientDocument,
    pub xi_circ_g_quotient: QuotientDocument,
    pub pi0: PiDocument,
    pub pi1: PiDocument,
    pub validation: Vec<CheckDocument>,
    pub notes: Vec<String>,
}

impl From<&Report> for ReportDocument {
    fn from(r: &Report) -> Self {
        ReportDocument {
            input: InputDocument::from_datum(&r.datum),
            xi_circ_quotient: (&r.xi_circ_quotient).into(),
            xi_circ_g_quotient: (&r.xi_circ_g_quotient).into(),
            pi0: (&r.pi0).into(),
            pi1: (&r.pi1).into(),
            validation: r
                .validation
                .iter()
                .map(|c| CheckDocument {
                    check: c.check.to_string(),
                    status: c.status.to_string(),
                    message: c.message.clone(),
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

pub fn serialize_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_text(report),
        ReportFormat::Structured => {
            let mut s = serde_json::to_string_pretty(&ReportDocument::from(report))
                .expect("report documents always serialize");
            s.push('\n');
            s
        }
    }
}

fn render_text(r: &Report) -> String {
    let sd = &r.datum;
    let mut out = String::new();
    let _ = writeln!(out, "datum: {}", sd.label());
    let _ = writeln!(
        out,
        "group: {} (character lattice rank {})",
        sd.root_datum().label(),
        sd.root_datum().rank()
    );
    let _ = writeln!(
        out,
        "weight lattice rank: {}, colors: {}, p = {}",
        sd.weight_rank(),
        sd.colors().rows(),
        sd.char_exponent()
    );
    let _ = writeln!(out, "Xi°(X)/Xi(X)   = {}", r.xi_circ_quotient);
    let _ = writeln!(out, "Xi°_G(X)/Xi(X) = {}", r.xi_circ_g_quotient);
    let _ = writeln!(out, "pi0(H)_{{p'}}    = {}", r.pi0);
    let _ = writeln!(out, "pi1(X)_{{p'}}    = {}", r.pi1);
    let _ = writeln!(out, "validation:");
    for c in &r.validation {
        let _ = writeln!(out, "  [{}] {}: {}", c.status, c.check, c.message);
    }
    if !r.notes.is_empty() {
        let _ = writeln!(out, "notes:");
        for n in &r.notes {
            let _ = writeln!(out, "  {n}");
        }
    }
    out
}
