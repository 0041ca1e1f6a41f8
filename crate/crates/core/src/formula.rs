//! Formula syntax trees and letter universes.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{LogicError, Result};
use crate::parser::{render, SyntaxStyle};

/// Default cap on the number of letters in a universe (2^20 interpretations).
pub const DEFAULT_MAX_LETTERS: usize = 20;

/// Absolute cap regardless of configuration; row indices must fit a `u64`
/// and a truth table must stay allocatable.
pub const HARD_MAX_LETTERS: usize = 30;

/// A propositional formula over letters, the constants `T`/`F`, and the
/// connectives `~ & | ->`.
///
/// Equality is structural. Two formulas may be logically equivalent without
/// being equal; see [`crate::equivalence::equivalent`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Letter(String),
    Top,
    Bottom,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Builds a letter. The name is not validated here; the parser is the
    /// only place untrusted names come from.
    pub fn letter(name: impl Into<String>) -> Self {
        Formula::Letter(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// Distinct letter names in order of first occurrence (left to right).
    pub fn letters(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        self.visit_pre(&mut |f| {
            if let Formula::Letter(name) = f {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
        });
        out
    }

    /// All subformulas in post-order; duplicates are kept and `self` is last.
    pub fn subformulas_bottom_up(&self) -> Vec<&Formula> {
        let mut out = Vec::with_capacity(self.node_count());
        fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::Letter(_) | Formula::Top | Formula::Bottom => {}
                Formula::Not(x) => walk(x, out),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
            out.push(f);
        }
        walk(self, &mut out);
        out
    }

    /// Maximum nesting depth of `->` nodes; zero iff the formula is
    /// implication-free.
    pub fn max_imp_depth(&self) -> usize {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bottom => 0,
            Formula::Not(x) => x.max_imp_depth(),
            Formula::And(a, b) | Formula::Or(a, b) => a.max_imp_depth().max(b.max_imp_depth()),
            Formula::Imp(a, b) => 1 + a.max_imp_depth().max(b.max_imp_depth()),
        }
    }

    pub fn is_implication_free(&self) -> bool {
        self.max_imp_depth() == 0
    }

    pub fn node_count(&self) -> usize {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bottom => 1,
            Formula::Not(x) => 1 + x.node_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.node_count() + b.node_count()
            }
        }
    }

    /// Height of the tree; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bottom => 0,
            Formula::Not(x) => 1 + x.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    fn visit_pre<'a>(&'a self, visit: &mut impl FnMut(&'a Formula)) {
        visit(self);
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bottom => {}
            Formula::Not(x) => x.visit_pre(visit),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.visit_pre(visit);
                b.visit_pre(visit);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, SyntaxStyle::Ascii))
    }
}

/// Returns true if `name` matches `[a-z][a-zA-Z0-9_]*`.
pub fn is_valid_letter(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z')) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered set of distinct letters. Position `k` is bit `k` of a truth
/// table row index.
///
/// Cloning is cheap; the letter list is shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    letters: Arc<[String]>,
}

impl Universe {
    /// Builds a universe capped at [`DEFAULT_MAX_LETTERS`].
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_max_letters(letters, DEFAULT_MAX_LETTERS)
    }

    /// Builds a universe capped at `max_letters` (itself clamped to
    /// [`HARD_MAX_LETTERS`]).
    pub fn with_max_letters<I, S>(letters: I, max_letters: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let max = max_letters.min(HARD_MAX_LETTERS);
        let mut out: Vec<String> = Vec::new();
        for name in letters {
            let name = name.into();
            if !is_valid_letter(&name) {
                return Err(LogicError::InvalidUniverse(format!(
                    "`{name}` is not a valid letter name"
                )));
            }
            if out.contains(&name) {
                return Err(LogicError::InvalidUniverse(format!(
                    "duplicate letter `{name}`"
                )));
            }
            out.push(name);
        }
        if out.len() > max {
            return Err(LogicError::Limit {
                what: "number of letters",
                actual: out.len(),
                max,
            });
        }
        Ok(Universe {
            letters: out.into(),
        })
    }

    pub fn empty() -> Self {
        Universe {
            letters: Arc::from(Vec::new()),
        }
    }

    /// Union of the letters of `formulas`, in first-occurrence order.
    pub fn of_formulas<'a>(
        formulas: impl IntoIterator<Item = &'a Formula>,
        max_letters: usize,
    ) -> Result<Self> {
        let mut names: Vec<&str> = Vec::new();
        for f in formulas {
            for name in f.letters() {
                if !names.contains(&name) {
                    names.push(name);
                }
            }
        }
        Self::with_max_letters(names, max_letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l == name)
    }

    /// Number of interpretations, `2^len`.
    pub fn rows(&self) -> u64 {
        1u64 << self.letters.len()
    }

    /// Fails with `UniverseMismatch` on the first letter of `f` not in
    /// this universe.
    pub fn check_covers(&self, f: &Formula) -> Result<()> {
        match f.letters().into_iter().find(|l| self.index_of(l).is_none()) {
            Some(missing) => Err(LogicError::UniverseMismatch(missing.to_owned())),
            None => Ok(()),
        }
    }
}

impl Serialize for Universe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.letters.iter())
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters.join(","))
    }
}
