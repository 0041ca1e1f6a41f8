//! Propositional logic with two readings of `->`.
//!
//! * **Material**: `a -> b` is the truth function `~a | b`.
//! * **Relational**: `a -> b` is a relation between formulas, true iff
//!   `a & b` is logically equivalent to `a`. It is not truth-functional;
//!   its value is the same at every interpretation.
//!
//! All decision procedures enumerate truth tables, so universes are small
//! (see [`DEFAULT_MAX_LETTERS`]).
//!
//! ```
//! use logicrel::{parse, is_tautology, Mode, Universe};
//!
//! let f = parse("(p -> q) | (q -> p)").unwrap();
//! let u = Universe::new(["p", "q"]).unwrap();
//! assert!(is_tautology(&f, Mode::Material, &u).unwrap().holds);
//! assert!(!is_tautology(&f, Mode::Relational, &u).unwrap().holds);
//! ```

pub mod equivalence;
pub mod error;
pub mod formula;
pub mod parser;
pub mod relation;
pub mod semantics;

pub use equivalence::{entails, equivalent, is_contradiction, is_tautology, Verdict};
pub use error::{LogicError, ParseError, Result};
pub use formula::{Formula, Universe, DEFAULT_MAX_LETTERS, HARD_MAX_LETTERS};
pub use parser::{parse, parse_with_max_letters, render, SyntaxStyle};
pub use relation::{
    audit_paradoxes, audit_replacement, classify, classify_relation, criteria_report, hasse_dot,
    implies_rel, verify_lattice, Classification, CriteriaReport, LatticeReport, ParadoxReport,
    RelationClass, RelationKind, Status,
};
pub use semantics::{
    eliminate_implications, eval_material, eval_relational, gen_random_formula, truth_table,
    FormulaGenerator, Interpretation, Mode, TruthTable,
};
