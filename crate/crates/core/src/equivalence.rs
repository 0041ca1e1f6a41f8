//! Equivalence, tautology, contradiction, and entailment checks.
//!
//! Every check compares full truth tables in the requested [`Mode`].
//! Failing checks carry the lowest-numbered refuting row as a witness.

use serde::Serialize;

use crate::error::Result;
use crate::formula::{Formula, Universe};
use crate::semantics::{truth_table, Interpretation, Mode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Interpretation>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn refuted(witness: Interpretation) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// `a` and `b` have identical tables over `u`.
pub fn equivalent(a: &Formula, b: &Formula, mode: Mode, u: &Universe) -> Result<Verdict> {
    let ta = truth_table(a, u, mode)?;
    let tb = truth_table(b, u, mode)?;
    Ok(match ta.first_difference(&tb) {
        None => Verdict::holds(),
        Some(row) => Verdict::refuted(ta.interpretation(row)),
    })
}

pub fn is_tautology(f: &Formula, mode: Mode, u: &Universe) -> Result<Verdict> {
    let t = truth_table(f, u, mode)?;
    Ok(match t.first_false() {
        None => Verdict::holds(),
        Some(row) => Verdict::refuted(t.interpretation(row)),
    })
}

pub fn is_contradiction(f: &Formula, mode: Mode, u: &Universe) -> Result<Verdict> {
    let t = truth_table(f, u, mode)?;
    Ok(match t.first_true() {
        None => Verdict::holds(),
        Some(row) => Verdict::refuted(t.interpretation(row)),
    })
}

/// Every row where `a` is true also makes `b` true.
pub fn entails(a: &Formula, b: &Formula, mode: Mode, u: &Universe) -> Result<Verdict> {
    let ta = truth_table(a, u, mode)?;
    let tb = truth_table(b, u, mode)?;
    Ok(match ta.first_true_where_false(&tb) {
        None => Verdict::holds(),
        Some(row) => Verdict::refuted(ta.interpretation(row)),
    })
}
