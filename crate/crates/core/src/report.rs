//! Verification reports and their text / machine renderings.

use serde::{Deserialize, Serialize};

use crate::graded::{format_scalar, Convention, GradedSpace, TensorPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectTerm {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub word: Vec<String>,
    pub defect: Vec<DefectTerm>,
}

impl Failure {
    pub fn new(space: &GradedSpace, word: &Word, defect: &TensorPoly) -> Self {
        Failure {
            word: space.word_names(word),
            defect: defect
                .terms()
                .map(|(w, c)| DefectTerm { coeff: format_scalar(c), word: space.word_names(w) })
                .collect(),
        }
    }
}

/// Outcome of one check at one arity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub arity: usize,
    pub words: usize,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub structure: String,
    pub convention: Convention,
    pub max_arity: usize,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
}

impl Report {
    pub fn new(
        structure: impl Into<String>,
        convention: Convention,
        max_arity: usize,
        checks: Vec<CheckRecord>,
    ) -> Self {
        let pass = checks.iter().all(|c| c.failures.is_empty());
        Report { structure: structure.into(), convention, max_arity, checks, pass }
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn words_checked(&self) -> usize {
        self.checks.iter().map(|c| c.words).sum()
    }

    /// First failing record in report order.
    pub fn first_failure(&self) -> Option<(&CheckRecord, &Failure)> {
        self.checks
            .iter()
            .find_map(|c| c.failures.first().map(|f| (c, f)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Machine,
}

fn render_names(word: &[String]) -> String {
    if word.len() == 1 {
        word[0].clone()
    } else {
        format!("({})", word.join(","))
    }
}

fn render_defect(terms: &[DefectTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|t| format!("{} {}", t.coeff, render_names(&t.word)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Serializes a report. The machine format is pretty-printed JSON with the
/// fields of [`Report`] in declaration order.
pub fn emit_report(r: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Machine => {
            let mut out = serde_json::to_vec_pretty(r).expect("reports always serialize");
            out.push(b'\n');
            out
        }
        ReportFormat::Text => {
            let mut s = String::new();
            s.push_str(&format!("structure: {}\n", r.structure));
            s.push_str(&format!("convention: {}\n", r.convention));
            s.push_str(&format!("max arity: {}\n", r.max_arity));
            for c in &r.checks {
                s.push_str(&format!(
                    "{} arity {}: {} words, {} failures\n",
                    c.check,
                    c.arity,
                    c.words,
                    c.failures.len()
                ));
                for f in &c.failures {
                    s.push_str(&format!(
                        "  FAIL {}: {}\n",
                        render_names(&f.word),
                        render_defect(&f.defect)
                    ));
                }
            }
            s.push_str(if r.pass { "result: PASS\n" } else { "result: FAIL\n" });
            s.into_bytes()
        }
    }
}
