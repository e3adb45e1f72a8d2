//! Exhaustive sweeps over all basis words up to a given arity.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::{GradedSpace, TensorPoly, Word};
use crate::report::{CheckRecord, Failure, Report};

use super::coderivation::d_squared_family;
use super::stasheff::stasheff_defect_family;
use super::structure::AStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// The Stasheff identities on `V`.
    Direct,
    /// `D² = 0` on `T(↓V)`.
    Coderivation,
    Both,
}

impl CheckMode {
    fn direct(self) -> bool {
        matches!(self, CheckMode::Direct | CheckMode::Both)
    }

    fn coderivation(self) -> bool {
        matches!(self, CheckMode::Coderivation | CheckMode::Both)
    }
}

/// Evaluates `defect` on every word of arity `1..=max_arity`, in parallel
/// on the current rayon pool. Records keep lexicographic word order.
pub(crate) fn sweep<F>(
    space: &GradedSpace,
    max_arity: usize,
    check: &str,
    defect: F,
) -> Result<Vec<CheckRecord>>
where
    F: Fn(&Word) -> Result<TensorPoly> + Sync,
{
    let mut records = Vec::with_capacity(max_arity);
    for arity in 1..=max_arity {
        let words: Vec<Word> = space.words(arity).collect();
        let outcomes = words
            .par_iter()
            .map(|w| defect(w).map(|d| (!d.is_zero()).then(|| Failure::new(space, w, &d))))
            .collect::<Result<Vec<_>>>()?;
        records.push(CheckRecord {
            check: check.to_string(),
            arity,
            words: words.len(),
            failures: outcomes.into_iter().flatten().collect(),
        });
    }
    Ok(records)
}

/// Checks the structure on every basis word of arity `1..=max_arity`.
pub fn verify_structure(s: &AStructure, max_arity: usize, mode: CheckMode) -> Result<Report> {
    if max_arity < 1 {
        return Err(Error::Input("max arity must be at least 1".into()));
    }
    let space = s.space();
    let mut checks = Vec::new();
    if mode.direct() {
        let family = s.unprimed_family(max_arity)?;
        checks.extend(sweep(space, max_arity, "direct", |w| {
            let v = stasheff_defect_family(&family, w)?;
            Ok(TensorPoly::from_vector(space.clone(), &v))
        })?);
    }
    if mode.coderivation() {
        let family = s.primed_family(max_arity)?;
        checks.extend(sweep(space, max_arity, "coderivation", |w| {
            d_squared_family(&family, w)
        })?);
    }
    Ok(Report::new(s.name(), space.convention(), max_arity, checks))
}
