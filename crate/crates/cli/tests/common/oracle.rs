//! Brute-force reference semantics, independent of the library evaluator.
#![allow(dead_code)]

use logicrel::Formula;

pub type Assignment = Vec<(String, bool)>;

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

/// `a -> b` holds iff `a & b` and `a` agree on every assignment to `letters`.
pub fn relational(f: &Formula, letters: &[String], asg: &Assignment) -> bool {
    match f {
        Formula::Letter(name) => lookup(asg, name),
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(x) => !relational(x, letters, asg),
        Formula::And(a, b) => relational(a, letters, asg) && relational(b, letters, asg),
        Formula::Or(a, b) => relational(a, letters, asg) || relational(b, letters, asg),
        Formula::Imp(a, b) => all_assignments(letters).iter().all(|other| {
            let va = relational(a, letters, other);
            let vb = relational(b, letters, other);
            (va && vb) == va
        }),
    }
}

pub fn material(f: &Formula, asg: &Assignment) -> bool {
    match f {
        Formula::Letter(name) => lookup(asg, name),
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(x) => !material(x, asg),
        Formula::And(a, b) => material(a, asg) && material(b, asg),
        Formula::Or(a, b) => material(a, asg) || material(b, asg),
        Formula::Imp(a, b) => !material(a, asg) || material(b, asg),
    }
}
