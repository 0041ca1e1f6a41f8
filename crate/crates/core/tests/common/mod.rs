//! Shared test helpers: a brute-force oracle for the relational reading and
//! proptest strategies for formulas.
#![allow(dead_code)]

use logicrel::Formula;
use proptest::prelude::*;

/// Assignment as explicit `(letter, value)` pairs.
pub type Assignment = Vec<(String, bool)>;

/// Every assignment over `letters`, enumerated independently of the
/// library's row encoding.
pub fn all_assignments(letters: &[String]) -> Vec<Assignment> {
    let mut out: Vec<Assignment> = vec![Vec::new()];
    for letter in letters {
        out = out
            .into_iter()
            .flat_map(|asg| {
                [false, true].into_iter().map(move |v| {
                    let mut next = asg.clone();
                    next.push((letter.clone(), v));
                    next
                })
            })
            .collect();
    }
    out
}

fn lookup(asg: &Assignment, name: &str) -> bool {
    asg.iter()
        .find(|(l, _)| l == name)
        .map(|&(_, v)| v)
        .unwrap_or_else(|| panic!("letter {name} unassigned"))
}

/// Direct recursive evaluation. `a -> b` is decided by checking, over every
/// assignment to `letters`, that `a & b` and `a` take the same value.
pub fn oracle_relational(f: &Formula, letters: &[String], asg: &Assignment) -> bool {
    match f {
        Formula::Letter(name) => lookup(asg, name),
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(x) => !oracle_relational(x, letters, asg),
        Formula::And(a, b) => {
            oracle_relational(a, letters, asg) && oracle_relational(b, letters, asg)
        }
        Formula::Or(a, b) => {
            oracle_relational(a, letters, asg) || oracle_relational(b, letters, asg)
        }
        Formula::Imp(a, b) => all_assignments(letters).iter().all(|other| {
            let va = oracle_relational(a, letters, other);
            let vb = oracle_relational(b, letters, other);
            (va && vb) == va
        }),
    }
}

/// Truth-functional evaluation, `a -> b` as `!a || b`.
pub fn oracle_material(f: &Formula, asg: &Assignment) -> bool {
    match f {
        Formula::Letter(name) => lookup(asg, name),
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(x) => !oracle_material(x, asg),
        Formula::And(a, b) => oracle_material(a, asg) && oracle_material(b, asg),
        Formula::Or(a, b) => oracle_material(a, asg) || oracle_material(b, asg),
        Formula::Imp(a, b) => !oracle_material(a, asg) || oracle_material(b, asg),
    }
}

pub const LETTERS: [&str; 4] = ["p", "q", "r", "s"];

fn leaf(letters: usize) -> BoxedStrategy<Formula> {
    let names: Vec<Formula> = LETTERS[..letters]
        .iter()
        .map(|l| Formula::letter(*l))
        .collect();
    prop_oneof![
        4 => proptest::sample::select(names),
        1 => Just(Formula::Top),
        1 => Just(Formula::Bottom),
    ]
    .boxed()
}

/// Formulas over the first `letters` of `p, q, r, s`.
pub fn arb_formula(letters: usize, depth: u32) -> BoxedStrategy<Formula> {
    leaf(letters)
        .prop_recursive(depth, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
            ]
        })
        .boxed()
}

pub fn arb_implication_free(letters: usize, depth: u32) -> BoxedStrategy<Formula> {
    leaf(letters)
        .prop_recursive(depth, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
            ]
        })
        .boxed()
}

pub fn names(letters: usize) -> Vec<String> {
    LETTERS[..letters].iter().map(|s| s.to_string()).collect()
}
