//! The implication relation between formulas: `a -> b` holds iff `a & b`
//! is logically equivalent to `a`.
//!
//! This module holds the relation itself, the three equivalent criteria
//! for it, the four-way classification of formula pairs, the audit of
//! the classic material-implication paradoxes, and an exhaustive check
//! that the relation is a bounded lattice on equivalence classes.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::equivalence::{entails, equivalent, is_contradiction, is_tautology};
use crate::error::{LogicError, Result};
use crate::formula::{Formula, Universe};
use crate::semantics::{eliminate_implications, truth_table, Interpretation, Mode};

fn serialize_formula<S: Serializer>(f: &Formula, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(f)
}

/// True iff `a & b` is equivalent to `a` over `u`. Operands containing
/// `->` are reduced by [`eliminate_implications`] first.
pub fn implies_rel(a: &Formula, b: &Formula, u: &Universe) -> Result<bool> {
    let a = eliminate_implications(a, u)?;
    let b = eliminate_implications(b, u)?;
    Ok(equivalent(&Formula::and(a.clone(), b), &a, Mode::Material, u)?.holds)
}

/// Three independently computed forms of the implication criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    /// `a & b` is equivalent to `a`.
    pub and_absorb: bool,
    /// `a & ~b` is a contradiction.
    pub conj_bottom: bool,
    /// `~a | b` is a tautology.
    pub disj_top: bool,
    pub agree: bool,
}

impl CriteriaReport {
    /// Value of the relation when all three criteria agree.
    pub fn holds(&self) -> bool {
        self.agree && self.and_absorb
    }
}

pub fn criteria_report(a: &Formula, b: &Formula, u: &Universe) -> Result<CriteriaReport> {
    let a = eliminate_implications(a, u)?;
    let b = eliminate_implications(b, u)?;
    let and_absorb = equivalent(&Formula::and(a.clone(), b.clone()), &a, Mode::Material, u)?.holds;
    let conj_bottom = is_contradiction(
        &Formula::and(a.clone(), Formula::not(b.clone())),
        Mode::Material,
        u,
    )?
    .holds;
    let disj_top = is_tautology(&Formula::or(Formula::not(a), b), Mode::Material, u)?.holds;
    Ok(CriteriaReport {
        and_absorb,
        conj_bottom,
        disj_top,
        agree: and_absorb == conj_bottom && conj_bottom == disj_top,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `a & b` is a contradiction.
    Disjoint,
    /// `a & b` is satisfiable and equivalent to neither operand.
    Joint,
    /// `a & b` is equivalent to `a` but `a` is not equivalent to `b`.
    InclusionForward,
    /// `a & b` is equivalent to `b` but `a` is not equivalent to `b`.
    InclusionBackward,
    Equivalent,
}

impl RelationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::Disjoint => "disjoint",
            RelationKind::Joint => "joint",
            RelationKind::InclusionForward => "inclusion_forward",
            RelationKind::InclusionBackward => "inclusion_backward",
            RelationKind::Equivalent => "equivalent",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateFlag {
    FirstIsBottom,
    FirstIsTop,
    SecondIsBottom,
    SecondIsTop,
}

impl DegenerateFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            DegenerateFlag::FirstIsBottom => "first_is_bottom",
            DegenerateFlag::FirstIsTop => "first_is_top",
            DegenerateFlag::SecondIsBottom => "second_is_bottom",
            DegenerateFlag::SecondIsTop => "second_is_top",
        }
    }
}

/// Relation class of a formula pair. With constant operands several kinds
/// can apply at once; `kind` is then the first of Equivalent,
/// InclusionForward, InclusionBackward, Disjoint that holds, and
/// `degenerate` records which operands are constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationClass {
    pub kind: RelationKind,
    pub degenerate: Vec<DegenerateFlag>,
}

pub fn classify_relation(a: &Formula, b: &Formula, u: &Universe) -> Result<RelationClass> {
    let ta = truth_table(a, u, Mode::Relational)?;
    let tb = truth_table(b, u, Mode::Relational)?;
    let meet = truth_table(&Formula::and(a.clone(), b.clone()), u, Mode::Relational)?;

    let kind = if ta == tb {
        RelationKind::Equivalent
    } else if meet == ta {
        RelationKind::InclusionForward
    } else if meet == tb {
        RelationKind::InclusionBackward
    } else if meet.is_all_false() {
        RelationKind::Disjoint
    } else {
        RelationKind::Joint
    };

    let mut degenerate = Vec::new();
    if ta.is_all_false() {
        degenerate.push(DegenerateFlag::FirstIsBottom);
    }
    if ta.is_all_true() {
        degenerate.push(DegenerateFlag::FirstIsTop);
    }
    if tb.is_all_false() {
        degenerate.push(DegenerateFlag::SecondIsBottom);
    }
    if tb.is_all_true() {
        degenerate.push(DegenerateFlag::SecondIsTop);
    }
    Ok(RelationClass { kind, degenerate })
}

/// The three classic paradox schemas of material implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ParadoxSchema {
    /// `~a -> (a -> b)`: a false proposition implies anything.
    P1,
    /// `a -> (b -> a)`: a true proposition is implied by anything.
    P2,
    /// `(a -> b) | (b -> a)`: of any two propositions one implies the other.
    P3,
}

impl ParadoxSchema {
    pub const ALL: [ParadoxSchema; 3] = [ParadoxSchema::P1, ParadoxSchema::P2, ParadoxSchema::P3];

    pub fn instantiate(self, a: &Formula, b: &Formula) -> Formula {
        let (a, b) = (a.clone(), b.clone());
        match self {
            ParadoxSchema::P1 => Formula::imp(Formula::not(a.clone()), Formula::imp(a, b)),
            ParadoxSchema::P2 => Formula::imp(a.clone(), Formula::imp(b, a)),
            ParadoxSchema::P3 => {
                Formula::or(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
            }
        }
    }
}

impl fmt::Display for ParadoxSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParadoxSchema::P1 => "P1",
            ParadoxSchema::P2 => "P2",
            ParadoxSchema::P3 => "P3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Tautology,
    Contradiction,
    Contingent,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Tautology => "tautology",
            Status::Contradiction => "contradiction",
            Status::Contingent => "contingent",
        }
    }
}

/// Tautology / contradiction / contingent status of `f`, with the lowest
/// true row and the lowest false row where they exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub status: Status,
    pub lowest_true: Option<Interpretation>,
    pub lowest_false: Option<Interpretation>,
}

pub fn classify(f: &Formula, mode: Mode, u: &Universe) -> Result<Classification> {
    let t = truth_table(f, u, mode)?;
    let lowest_true = t.first_true().map(|r| t.interpretation(r));
    let lowest_false = t.first_false().map(|r| t.interpretation(r));
    let status = match (&lowest_true, &lowest_false) {
        (_, None) => Status::Tautology,
        (None, Some(_)) => Status::Contradiction,
        (Some(_), Some(_)) => Status::Contingent,
    };
    Ok(Classification {
        status,
        lowest_true,
        lowest_false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParadoxReport {
    pub schema: ParadoxSchema,
    #[serde(serialize_with = "serialize_formula")]
    pub formula: Formula,
    pub material_tautology: bool,
    /// Lowest row falsifying the formula materially, if any.
    pub material_witness: Option<Interpretation>,
    pub relational_tautology: bool,
    pub relational_status: Status,
    /// Lowest row falsifying the formula relationally, if any.
    pub relational_witness: Option<Interpretation>,
}

impl ParadoxReport {
    /// The schema instance is a material tautology that fails relationally.
    pub fn paradox_refuted(&self) -> bool {
        self.material_tautology && !self.relational_tautology
    }
}

/// Instantiates each paradox schema with `a`, `b` and evaluates it under
/// both modes. Results describe this instance only.
pub fn audit_paradoxes(a: &Formula, b: &Formula, u: &Universe) -> Result<Vec<ParadoxReport>> {
    ParadoxSchema::ALL
        .iter()
        .map(|&schema| {
            let formula = schema.instantiate(a, b);
            let material = is_tautology(&formula, Mode::Material, u)?;
            let relational = classify(&formula, Mode::Relational, u)?;
            Ok(ParadoxReport {
                schema,
                material_tautology: material.holds,
                material_witness: material.witness,
                relational_tautology: relational.status == Status::Tautology,
                relational_status: relational.status,
                relational_witness: relational.lowest_false,
                formula,
            })
        })
        .collect()
}

/// How `a -> b` relates to its material expansion `~a | b` under the
/// relational reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplacementReport {
    /// `a -> b` entails `~a | b`; expected to hold for every pair.
    pub inference: bool,
    /// `~a | b` entails `a -> b`.
    pub reverse_inference: bool,
    /// Lowest row refuting `reverse_inference`, if any.
    pub reverse_witness: Option<Interpretation>,
    /// `a -> b` and `~a | b` are equivalent.
    pub replacement: bool,
    /// `~a | b` is a tautology.
    pub disjunction_is_top: bool,
    pub relation_holds: bool,
    /// `~a | b` is unsatisfiable, so `reverse_inference` holds vacuously
    /// even though `disjunction_is_top` is false.
    pub vacuous_reverse: bool,
}

pub fn audit_replacement(a: &Formula, b: &Formula, u: &Universe) -> Result<ReplacementReport> {
    let imp = Formula::imp(a.clone(), b.clone());
    let disj = Formula::or(Formula::not(a.clone()), b.clone());
    let reverse = entails(&disj, &imp, Mode::Relational, u)?;
    Ok(ReplacementReport {
        inference: entails(&imp, &disj, Mode::Relational, u)?.holds,
        reverse_inference: reverse.holds,
        reverse_witness: reverse.witness,
        replacement: equivalent(&imp, &disj, Mode::Relational, u)?.holds,
        disjunction_is_top: is_tautology(&disj, Mode::Relational, u)?.holds,
        relation_holds: implies_rel(a, b, u)?,
        vacuous_reverse: is_contradiction(&disj, Mode::Relational, u)?.holds,
    })
}

/// Largest universe size accepted by [`verify_lattice`].
pub const MAX_LATTICE_LETTERS: usize = 4;

/// Largest universe size for which the pairwise and triple-wise checks
/// are exhaustive; above it they are sampled.
pub const EXHAUSTIVE_LATTICE_LETTERS: usize = 3;

pub const LATTICE_SAMPLES: u64 = 100_000;
pub const LATTICE_SAMPLE_SEED: u64 = 0x1a77_1ce5;

/// Failures kept per property; the report stays small on a broken order.
pub const MAX_FAILURES_PER_PROPERTY: usize = 8;

const LATTICE_LETTERS: [&str; MAX_LATTICE_LETTERS] = ["p", "q", "r", "s"];

/// An equivalence class of formulas over `n` letters, identified by its
/// truth table packed into the low `2^n` bits.
pub type ClassId = u32;

/// Order and lattice operations on equivalence classes.
pub trait ClassOrder {
    fn leq(&self, a: ClassId, b: ClassId) -> bool;
    fn meet(&self, a: ClassId, b: ClassId) -> ClassId;
    fn join(&self, a: ClassId, b: ClassId) -> ClassId;
    fn bottom(&self) -> ClassId;
    fn top(&self) -> ClassId;
}

/// The implication relation on classes: `a -> b` iff `a & b = a`, with
/// conjunction as meet, disjunction as join, `F` and `T` as bounds.
#[derive(Clone, Copy, Debug)]
pub struct ImplicationOrder {
    full: ClassId,
}

impl ImplicationOrder {
    pub fn new(letters: usize) -> Self {
        let rows = 1u32 << letters;
        let full = if rows == 32 {
            u32::MAX
        } else {
            (1u32 << rows) - 1
        };
        ImplicationOrder { full }
    }
}

impl ClassOrder for ImplicationOrder {
    fn leq(&self, a: ClassId, b: ClassId) -> bool {
        a & b == a
    }

    fn meet(&self, a: ClassId, b: ClassId) -> ClassId {
        a & b
    }

    fn join(&self, a: ClassId, b: ClassId) -> ClassId {
        a | b
    }

    fn bottom(&self) -> ClassId {
        0
    }

    fn top(&self) -> ClassId {
        self.full
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeCheck {
    pub property: &'static str,
    /// Number of elements, pairs, or triples examined.
    pub cases: u64,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeFailure {
    pub property: &'static str,
    /// Offending classes as table bit strings (row 0 first).
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub universe_size: usize,
    pub class_count: u64,
    pub checks: Vec<LatticeCheck>,
    pub failures: Vec<LatticeFailure>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_lattice_size(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(LogicError::Limit {
            what: "lattice universe size",
            actual: n,
            max,
        });
    }
    Ok(())
}

/// Bit string of class `c` over `n` letters, row 0 first.
pub fn class_bits(n: usize, c: ClassId) -> String {
    (0..1u32 << n)
        .map(|r| if (c >> r) & 1 == 1 { '1' } else { '0' })
        .collect()
}

struct Collector {
    n: usize,
    checks: Vec<LatticeCheck>,
    failures: Vec<LatticeFailure>,
    current: Option<(&'static str, u64, bool, usize)>,
}

impl Collector {
    fn begin(&mut self, property: &'static str, exhaustive: bool) {
        self.current = Some((property, 0, exhaustive, 0));
    }

    fn case(&mut self, ok: bool, classes: &[ClassId]) {
        let (property, cases, _, failed) = self.current.as_mut().expect("begin first");
        *cases += 1;
        if !ok && *failed < MAX_FAILURES_PER_PROPERTY {
            *failed += 1;
            let n = self.n;
            self.failures.push(LatticeFailure {
                property,
                classes: classes.iter().map(|&c| class_bits(n, c)).collect(),
            });
        }
    }

    /// Records `count` passing cases that were skipped because their
    /// premise is false.
    fn vacuous(&mut self, count: u64) {
        self.current.as_mut().expect("begin first").1 += count;
    }

    fn end(&mut self) {
        let (property, cases, exhaustive, _) = self.current.take().expect("begin first");
        self.checks.push(LatticeCheck {
            property,
            cases,
            exhaustive,
        });
    }
}

/// Checks that the implication relation is a bounded lattice on the
/// `2^(2^n)` equivalence classes of formulas over `n` letters.
pub fn verify_lattice(n: usize) -> Result<LatticeReport> {
    verify_lattice_with(n, &ImplicationOrder::new(n.min(MAX_LATTICE_LETTERS)))
}

/// [`verify_lattice`] against an arbitrary order on classes.
///
/// Reflexivity and the bounds are always checked on every class. The
/// pairwise and triple-wise laws are exhaustive for
/// `n <= EXHAUSTIVE_LATTICE_LETTERS`; above that they use
/// [`LATTICE_SAMPLES`] seeded samples, biased so that the premises of
/// each implication are usually satisfied.
pub fn verify_lattice_with(n: usize, order: &impl ClassOrder) -> Result<LatticeReport> {
    check_lattice_size(n, MAX_LATTICE_LETTERS)?;
    let class_count = 1u64 << (1u64 << n);
    let classes = || 0..class_count as ClassId;
    let exhaustive = n <= EXHAUSTIVE_LATTICE_LETTERS;
    let mut rng = ChaCha8Rng::seed_from_u64(LATTICE_SAMPLE_SEED);
    let mask = (class_count - 1) as ClassId;
    let mut out = Collector {
        n,
        checks: Vec::new(),
        failures: Vec::new(),
        current: None,
    };

    out.begin("reflexivity", true);
    for a in classes() {
        out.case(order.leq(a, a), &[a]);
    }
    out.end();

    out.begin("anti_symmetry", exhaustive);
    if exhaustive {
        for a in classes() {
            for b in classes() {
                let ok = !(order.leq(a, b) && order.leq(b, a)) || a == b;
                out.case(ok, &[a, b]);
            }
        }
    } else {
        for _ in 0..LATTICE_SAMPLES {
            let a = rng.random::<ClassId>() & mask;
            let b = if rng.random_bool(0.5) {
                a
            } else {
                rng.random::<ClassId>() & mask
            };
            let ok = !(order.leq(a, b) && order.leq(b, a)) || a == b;
            out.case(ok, &[a, b]);
        }
    }
    out.end();

    out.begin("transitivity", exhaustive);
    if exhaustive {
        for a in classes() {
            for b in classes() {
                if !order.leq(a, b) {
                    out.vacuous(class_count);
                    continue;
                }
                for c in classes() {
                    let ok = !order.leq(b, c) || order.leq(a, c);
                    out.case(ok, &[a, b, c]);
                }
            }
        }
    } else {
        for _ in 0..LATTICE_SAMPLES {
            let a = rng.random::<ClassId>() & mask;
            let b = a | (rng.random::<ClassId>() & rng.random::<ClassId>() & mask);
            let c = b | (rng.random::<ClassId>() & rng.random::<ClassId>() & mask);
            let ok = !(order.leq(a, b) && order.leq(b, c)) || order.leq(a, c);
            out.case(ok, &[a, b, c]);
        }
    }
    out.end();

    // Meet and join: bound property on pairs, extremality on triples.
    for (property, is_meet) in [("meet", true), ("join", false)] {
        out.begin(property, exhaustive);
        let bound = |a: ClassId, b: ClassId| {
            if is_meet {
                order.meet(a, b)
            } else {
                order.join(a, b)
            }
        };
        // `below(x, y)` orients the order so the meet and join cases share
        // one loop.
        let below = |x: ClassId, y: ClassId| {
            if is_meet {
                order.leq(x, y)
            } else {
                order.leq(y, x)
            }
        };
        let check = |out: &mut Collector, a: ClassId, b: ClassId, c: ClassId| {
            let m = bound(a, b);
            let is_bound = below(m, a) && below(m, b);
            let extremal = !(below(c, a) && below(c, b)) || below(c, m);
            out.case(is_bound && extremal, &[a, b, c]);
        };
        if exhaustive {
            for a in classes() {
                for b in classes() {
                    for c in classes() {
                        check(&mut out, a, b, c);
                    }
                }
            }
        } else {
            for _ in 0..LATTICE_SAMPLES {
                let a = rng.random::<ClassId>() & mask;
                let b = rng.random::<ClassId>() & mask;
                let noise = rng.random::<ClassId>() & mask;
                let c = if is_meet {
                    a & b & noise
                } else {
                    (a | b | noise) & mask
                };
                check(&mut out, a, b, c);
            }
        }
        out.end();
    }

    out.begin("bottom", true);
    for a in classes() {
        out.case(order.leq(order.bottom(), a), &[order.bottom(), a]);
    }
    out.end();

    out.begin("top", true);
    for a in classes() {
        out.case(order.leq(a, order.top()), &[a, order.top()]);
    }
    out.end();

    Ok(LatticeReport {
        universe_size: n,
        class_count,
        checks: out.checks,
        failures: out.failures,
    })
}

/// Disjunctive normal form whose table is class `c` over the first `n`
/// of `p, q, r, s`. `F` for the empty class.
pub fn class_representative(n: usize, c: ClassId) -> Formula {
    let rows: Vec<u32> = (0..1u32 << n).filter(|r| (c >> r) & 1 == 1).collect();
    if rows.len() == 1usize << n {
        return Formula::Top;
    }
    rows.iter()
        .map(|&row| {
            (0..n)
                .map(|k| {
                    let l = Formula::letter(LATTICE_LETTERS[k]);
                    if (row >> k) & 1 == 1 {
                        l
                    } else {
                        Formula::not(l)
                    }
                })
                .reduce(Formula::and)
                .unwrap_or(Formula::Top)
        })
        .reduce(Formula::or)
        .unwrap_or(Formula::Bottom)
}

/// Universe `p, q, ...` of size `n` used by the lattice tools.
pub fn lattice_universe(n: usize) -> Result<Universe> {
    check_lattice_size(n, MAX_LATTICE_LETTERS)?;
    Universe::new(LATTICE_LETTERS[..n].iter().copied())
}

/// Largest universe size accepted by [`hasse_dot`].
pub const MAX_HASSE_LETTERS: usize = 2;

/// Graphviz digraph of the covering relation of the implication order
/// over `n` letters. Each edge runs from a class to a class covering it.
pub fn hasse_dot(n: usize) -> Result<String> {
    check_lattice_size(n, MAX_HASSE_LETTERS)?;
    let order = ImplicationOrder::new(n);
    let count = 1u32 << (1u32 << n);
    let lt = |a: u32, b: u32| a != b && order.leq(a, b);
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for c in 0..count {
        out.push_str(&format!(
            "  c{c} [label=\"{}\\n{}\"];\n",
            class_bits(n, c),
            class_representative(n, c)
        ));
    }
    for a in 0..count {
        for b in 0..count {
            if lt(a, b) && !(0..count).any(|m| lt(a, m) && lt(m, b)) {
                out.push_str(&format!("  c{a} -> c{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn pq() -> Universe {
        Universe::new(["p", "q"]).unwrap()
    }

    #[test]
    fn implies_rel_examples() {
        let u = pq();
        assert!(implies_rel(&f("p"), &f("p | q"), &u).unwrap());
        assert!(!implies_rel(&f("p"), &f("q"), &u).unwrap());
        assert!(implies_rel(&f("F"), &f("p"), &u).unwrap());
        assert!(implies_rel(&f("p & q"), &f("p"), &u).unwrap());
        assert!(implies_rel(&f("p"), &f("T"), &u).unwrap());
    }

    #[test]
    fn implies_rel_eliminates_nested_operands() {
        let u = pq();
        // `p -> q` reduces to F, and F implies anything.
        assert!(implies_rel(&f("p -> q"), &f("q"), &u).unwrap());
        // `p -> p` reduces to T, which implies only tautologies.
        assert!(!implies_rel(&f("p -> p"), &f("q"), &u).unwrap());
    }

    #[test]
    fn criteria_examples() {
        let u = pq();
        let all = |v| CriteriaReport {
            and_absorb: v,
            conj_bottom: v,
            disj_top: v,
            agree: true,
        };
        assert_eq!(
            criteria_report(&f("p & q"), &f("p"), &u).unwrap(),
            all(true)
        );
        assert_eq!(criteria_report(&f("p"), &f("q"), &u).unwrap(), all(false));
        assert_eq!(criteria_report(&f("p"), &f("T"), &u).unwrap(), all(true));
        assert!(criteria_report(&f("p"), &f("T"), &u).unwrap().holds());
    }

    #[test]
    fn classify_relation_examples() {
        let u = pq();
        let p = Universe::new(["p"]).unwrap();
        let kind = |a: &str, b: &str, u: &Universe| classify_relation(&f(a), &f(b), u).unwrap();
        assert_eq!(kind("p", "~p", &p).kind, RelationKind::Disjoint);
        assert_eq!(kind("p", "q", &u).kind, RelationKind::Joint);
        assert_eq!(kind("p & q", "p", &u).kind, RelationKind::InclusionForward);
        assert_eq!(kind("p", "p & q", &u).kind, RelationKind::InclusionBackward);
        assert_eq!(
            kind("p", "p | p", &p),
            RelationClass {
                kind: RelationKind::Equivalent,
                degenerate: vec![]
            }
        );
        assert!(kind("p", "q", &u).degenerate.is_empty());
    }

    #[test]
    fn classify_relation_degenerate_operands() {
        let u = pq();
        let c = classify_relation(&f("F"), &f("p"), &u).unwrap();
        assert_eq!(c.kind, RelationKind::InclusionForward);
        assert_eq!(c.degenerate, [DegenerateFlag::FirstIsBottom]);
        let c = classify_relation(&f("q"), &f("p | ~p"), &u).unwrap();
        assert_eq!(c.kind, RelationKind::InclusionForward);
        assert_eq!(c.degenerate, [DegenerateFlag::SecondIsTop]);
        let c = classify_relation(&f("T"), &f("F"), &u).unwrap();
        assert_eq!(c.kind, RelationKind::InclusionBackward);
        assert_eq!(
            c.degenerate,
            [DegenerateFlag::FirstIsTop, DegenerateFlag::SecondIsBottom]
        );
        // Over the empty universe T is both the only satisfiable class and
        // a tautology.
        let c = classify_relation(&f("T"), &f("T"), &Universe::empty()).unwrap();
        assert_eq!(c.kind, RelationKind::Equivalent);
        assert_eq!(
            c.degenerate,
            [DegenerateFlag::FirstIsTop, DegenerateFlag::SecondIsTop]
        );
    }

    #[test]
    fn paradox_audit_distinct_letters() {
        let u = pq();
        let reports = audit_paradoxes(&f("p"), &f("q"), &u).unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert!(r.material_tautology, "{}", r.schema);
            assert!(r.material_witness.is_none());
            assert!(!r.relational_tautology, "{}", r.schema);
            assert!(r.paradox_refuted());
        }
        assert_eq!(reports[0].formula, f("~p -> (p -> q)"));
        assert_eq!(reports[0].relational_status, Status::Contradiction);
        assert_eq!(reports[2].formula, f("(p -> q) | (q -> p)"));
        assert_eq!(reports[2].relational_status, Status::Contradiction);
        assert_eq!(reports[2].relational_witness.as_ref().unwrap().row(), 0);
    }

    #[test]
    fn paradox_audit_same_operand() {
        let p = Universe::new(["p"]).unwrap();
        for r in audit_paradoxes(&f("p"), &f("p"), &p).unwrap() {
            assert!(r.relational_tautology, "{}", r.schema);
            assert!(!r.paradox_refuted());
        }
    }

    #[test]
    fn paradox_audit_disjoint_case() {
        let u = pq();
        for r in audit_paradoxes(&f("p"), &f("~p"), &u).unwrap() {
            assert!(r.material_tautology);
            assert_eq!(r.relational_status, Status::Contradiction, "{}", r.schema);
        }
    }

    #[test]
    fn replacement_vs_inference() {
        let u = pq();
        let r = audit_replacement(&f("p"), &f("q"), &u).unwrap();
        assert!(r.inference);
        assert!(!r.reverse_inference);
        assert_eq!(r.reverse_witness.as_ref().unwrap().values(), [false, false]);
        assert!(!r.replacement);
        assert!(!r.disjunction_is_top);
        assert!(!r.relation_holds);
        assert!(!r.vacuous_reverse);

        let r = audit_replacement(&f("p & q"), &f("p"), &u).unwrap();
        assert!(r.inference && r.reverse_inference && r.replacement);
        assert!(r.disjunction_is_top && r.relation_holds);

        // ~T | F is unsatisfiable: reverse entailment holds vacuously.
        let r = audit_replacement(&f("T"), &f("F"), &u).unwrap();
        assert!(r.reverse_inference);
        assert!(!r.disjunction_is_top);
        assert!(!r.relation_holds);
        assert!(r.vacuous_reverse);
    }

    #[test]
    fn lattice_small() {
        let r = verify_lattice(1).unwrap();
        assert_eq!(r.class_count, 4);
        assert!(r.passed(), "{:?}", r.failures);
        let r = verify_lattice(2).unwrap();
        assert_eq!(r.class_count, 16);
        assert!(r.passed());
        let trans = r
            .checks
            .iter()
            .find(|c| c.property == "transitivity")
            .unwrap();
        assert_eq!(trans.cases, 4096);
        assert!(trans.exhaustive);
    }

    #[test]
    fn lattice_size_limits() {
        for n in [0, 5] {
            assert!(matches!(verify_lattice(n), Err(LogicError::Limit { .. })));
        }
        assert!(matches!(hasse_dot(3), Err(LogicError::Limit { .. })));
    }

    /// `leq` as numeric order is total, so meet/join laws break.
    struct NumericOrder;

    impl ClassOrder for NumericOrder {
        fn leq(&self, a: ClassId, b: ClassId) -> bool {
            a <= b
        }
        fn meet(&self, a: ClassId, b: ClassId) -> ClassId {
            a & b
        }
        fn join(&self, a: ClassId, b: ClassId) -> ClassId {
            a | b
        }
        fn bottom(&self) -> ClassId {
            0
        }
        fn top(&self) -> ClassId {
            15
        }
    }

    /// Material-style order ignoring the antecedent: breaks reflexivity.
    struct StrictOrder;

    impl ClassOrder for StrictOrder {
        fn leq(&self, a: ClassId, b: ClassId) -> bool {
            a & b == a && a != b
        }
        fn meet(&self, a: ClassId, b: ClassId) -> ClassId {
            a & b
        }
        fn join(&self, a: ClassId, b: ClassId) -> ClassId {
            a | b
        }
        fn bottom(&self) -> ClassId {
            0
        }
        fn top(&self) -> ClassId {
            15
        }
    }

    #[test]
    fn lattice_detects_broken_orders() {
        let r = verify_lattice_with(2, &NumericOrder).unwrap();
        assert!(r.failures.iter().any(|f| f.property == "meet"));
        assert!(r.failures.iter().any(|f| f.property == "join"));
        assert!(!r.failures.iter().any(|f| f.property == "transitivity"));
        let r = verify_lattice_with(2, &StrictOrder).unwrap();
        let refl: Vec<_> = r
            .failures
            .iter()
            .filter(|f| f.property == "reflexivity")
            .collect();
        assert_eq!(refl.len(), MAX_FAILURES_PER_PROPERTY);
        assert_eq!(refl[0].classes, ["0000"]);
    }

    #[test]
    fn representatives_have_their_class_table() {
        for n in 1..=2 {
            let u = lattice_universe(n).unwrap();
            for c in 0..1u32 << (1 << n) {
                let t = truth_table(&class_representative(n, c), &u, Mode::Material).unwrap();
                assert_eq!(t.to_bit_string(), class_bits(n, c));
            }
        }
    }

    #[test]
    fn class_order_matches_formula_relation() {
        let n = 2;
        let u = lattice_universe(n).unwrap();
        let order = ImplicationOrder::new(n);
        for a in 0..16 {
            for b in 0..16 {
                let fa = class_representative(n, a);
                let fb = class_representative(n, b);
                assert_eq!(
                    order.leq(a, b),
                    implies_rel(&fa, &fb, &u).unwrap(),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn hasse_one_letter() {
        let dot = hasse_dot(1).unwrap();
        assert_eq!(
            dot,
            "digraph lattice {\n  rankdir=BT;\n\
             \x20 c0 [label=\"00\\nF\"];\n\
             \x20 c1 [label=\"10\\n~p\"];\n\
             \x20 c2 [label=\"01\\np\"];\n\
             \x20 c3 [label=\"11\\nT\"];\n\
             \x20 c0 -> c1;\n  c0 -> c2;\n  c1 -> c3;\n  c2 -> c3;\n}\n"
        );
        // 16 classes over two letters; each covers by adding one row: 4 * 8 edges.
        let dot = hasse_dot(2).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 32);
    }
}
