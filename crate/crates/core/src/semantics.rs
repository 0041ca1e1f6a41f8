//! Evaluation under material and relational semantics.
//!
//! Material mode is ordinary truth-functional evaluation with `a -> b`
//! read as `~a | b`.
//!
//! Relational mode reads `a -> b` as a statement about the formulas
//! themselves: it is true iff `a & b` is logically equivalent to `a` over
//! the universe. Its value is the same at every interpretation. Nested
//! implications are handled by [`eliminate_implications`], which rewrites
//! every innermost `->` to `T` or `F` and repeats until none remain.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::error::{LogicError, Result};
use crate::formula::{Formula, Universe};

/// Which reading of `->` a semantic query uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Material,
    Relational,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Material => "material",
            Mode::Relational => "relational",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "material" => Ok(Mode::Material),
            "relational" => Ok(Mode::Relational),
            other => Err(format!(
                "unknown mode `{other}` (expected material or relational)"
            )),
        }
    }
}

/// A truth assignment to every letter of a universe, stored as a row
/// index: letter `k` is true iff bit `k` of the row is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interpretation {
    universe: Universe,
    row: u64,
}

impl Interpretation {
    pub fn from_row(universe: Universe, row: u64) -> Result<Self> {
        if row >= universe.rows() {
            return Err(LogicError::Limit {
                what: "row index",
                actual: row as usize,
                max: (universe.rows() - 1) as usize,
            });
        }
        Ok(Interpretation { universe, row })
    }

    /// `values[k]` is the value of the `k`-th universe letter.
    pub fn from_values(universe: Universe, values: &[bool]) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(LogicError::InvalidUniverse(format!(
                "assignment has {} values for {} letters",
                values.len(),
                universe.len()
            )));
        }
        let row = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &v)| acc | (u64::from(v) << k));
        Ok(Interpretation { universe, row })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn row(&self) -> u64 {
        self.row
    }

    pub fn value_at(&self, k: usize) -> bool {
        (self.row >> k) & 1 == 1
    }

    pub fn value(&self, letter: &str) -> Option<bool> {
        self.universe.index_of(letter).map(|k| self.value_at(k))
    }

    pub fn values(&self) -> Vec<bool> {
        (0..self.universe.len()).map(|k| self.value_at(k)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.universe
            .letters()
            .iter()
            .enumerate()
            .map(|(k, l)| (l.as_str(), self.value_at(k)))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, value)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}={}", u8::from(value))?;
        }
        Ok(())
    }
}

impl Serialize for Interpretation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.universe.len()))?;
        for (letter, value) in self.iter() {
            map.serialize_entry(letter, &value)?;
        }
        map.end()
    }
}

/// Value of a formula at every interpretation of a universe, one bit per
/// row, packed little-endian into `u64` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    universe: Universe,
    words: Vec<u64>,
}

fn word_count(rows: u64) -> usize {
    rows.div_ceil(64) as usize
}

// Valid-bit mask for the last word.
fn tail_mask(rows: u64) -> u64 {
    match rows % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

const LOW_LETTER_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

type Words = Vec<u64>;

struct TableBuilder<'u> {
    universe: &'u Universe,
    rows: u64,
    words: usize,
}

impl<'u> TableBuilder<'u> {
    fn new(universe: &'u Universe) -> Self {
        let rows = universe.rows();
        TableBuilder {
            universe,
            rows,
            words: word_count(rows),
        }
    }

    fn constant(&self, value: bool) -> Words {
        let mut w = vec![if value { u64::MAX } else { 0 }; self.words];
        self.mask(&mut w);
        w
    }

    fn letter(&self, name: &str) -> Result<Words> {
        let k = self
            .universe
            .index_of(name)
            .ok_or_else(|| LogicError::UniverseMismatch(name.to_owned()))?;
        let mut w: Words = (0..self.words as u64)
            .map(|i| {
                if k < 6 {
                    LOW_LETTER_PATTERNS[k]
                } else if (i >> (k - 6)) & 1 == 1 {
                    u64::MAX
                } else {
                    0
                }
            })
            .collect();
        self.mask(&mut w);
        Ok(w)
    }

    fn mask(&self, w: &mut Words) {
        if let Some(last) = w.last_mut() {
            *last &= tail_mask(self.rows);
        }
    }

    fn not(&self, mut a: Words) -> Words {
        a.iter_mut().for_each(|x| *x = !*x);
        self.mask(&mut a);
        a
    }

    /// Classical table; `->` is taken as `~a | b`.
    fn material(&self, f: &Formula) -> Result<Words> {
        Ok(match f {
            Formula::Letter(name) => self.letter(name)?,
            Formula::Top => self.constant(true),
            Formula::Bottom => self.constant(false),
            Formula::Not(x) => self.not(self.material(x)?),
            Formula::And(a, b) => zip(self.material(a)?, &self.material(b)?, |x, y| x & y),
            Formula::Or(a, b) => zip(self.material(a)?, &self.material(b)?, |x, y| x | y),
            Formula::Imp(a, b) => {
                let na = self.not(self.material(a)?);
                zip(na, &self.material(b)?, |x, y| x | y)
            }
        })
    }

    /// Rewrites every `->` bottom-up and returns the implication-free
    /// result with its table.
    fn eliminate(&self, f: &Formula) -> Result<(Formula, Words)> {
        Ok(match f {
            Formula::Letter(_) | Formula::Top | Formula::Bottom => (f.clone(), self.material(f)?),
            Formula::Not(x) => {
                let (x, t) = self.eliminate(x)?;
                (Formula::not(x), self.not(t))
            }
            Formula::And(a, b) => {
                let (a, ta) = self.eliminate(a)?;
                let (b, tb) = self.eliminate(b)?;
                (Formula::and(a, b), zip(ta, &tb, |x, y| x & y))
            }
            Formula::Or(a, b) => {
                let (a, ta) = self.eliminate(a)?;
                let (b, tb) = self.eliminate(b)?;
                (Formula::or(a, b), zip(ta, &tb, |x, y| x | y))
            }
            Formula::Imp(a, b) => {
                let (_, ta) = self.eliminate(a)?;
                let (_, tb) = self.eliminate(b)?;
                let meet = zip(ta.clone(), &tb, |x, y| x & y);
                let holds = meet == ta;
                let constant = if holds { Formula::Top } else { Formula::Bottom };
                (constant, self.constant(holds))
            }
        })
    }
}

fn zip(mut a: Words, b: &[u64], op: impl Fn(u64, u64) -> u64) -> Words {
    a.iter_mut().zip(b).for_each(|(x, &y)| *x = op(*x, y));
    a
}

impl TruthTable {
    /// Builds a table by evaluating `value` at every row in ascending order.
    pub fn from_fn(universe: Universe, mut value: impl FnMut(u64) -> bool) -> Self {
        let rows = universe.rows();
        let mut words = vec![0u64; word_count(rows)];
        for row in 0..rows {
            if value(row) {
                words[(row / 64) as usize] |= 1 << (row % 64);
            }
        }
        TruthTable { universe, words }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rows(&self) -> u64 {
        self.universe.rows()
    }

    pub fn get(&self, row: u64) -> bool {
        (self.words[(row / 64) as usize] >> (row % 64)) & 1 == 1
    }

    pub fn count_true(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_all_true(&self) -> bool {
        self.count_true() == self.rows()
    }

    pub fn is_all_false(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_true(&self) -> Option<u64> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i as u64 * 64 + u64::from(w.trailing_zeros()))
    }

    pub fn first_false(&self) -> Option<u64> {
        let rows = self.rows();
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != u64::MAX)
            .map(|(i, w)| i as u64 * 64 + u64::from(w.trailing_ones()))
            .filter(|&row| row < rows)
    }

    /// Lowest row where `self` and `other` differ.
    ///
    /// Both tables must be over the same universe.
    pub fn first_difference(&self, other: &TruthTable) -> Option<u64> {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| i as u64 * 64 + u64::from((a ^ b).trailing_zeros()))
    }

    /// Lowest row where `self` is true and `other` is false.
    pub fn first_true_where_false(&self, other: &TruthTable) -> Option<u64> {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & !*b != 0)
            .map(|(i, (a, b))| i as u64 * 64 + u64::from((a & !b).trailing_zeros()))
    }

    pub fn interpretation(&self, row: u64) -> Interpretation {
        Interpretation {
            universe: self.universe.clone(),
            row,
        }
    }

    /// Row values as `0`/`1` characters, row 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.rows())
            .map(|r| if self.get(r) { '1' } else { '0' })
            .collect()
    }

    /// The table as a lowercase hex number whose least significant bit is
    /// row 0. Always `ceil(rows / 4)` digits, at least one.
    pub fn to_hex(&self) -> String {
        let digits = self.rows().div_ceil(4) as usize;
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let word = self.words[d / 16];
            let nibble = (word >> ((d % 16) * 4)) & 0xF;
            out.push(char::from_digit(nibble as u32, 16).expect("nibble < 16"));
        }
        out
    }

    /// Text form: a header of universe letters, then one line per row with
    /// the letter values and the formula value.
    pub fn to_text(&self) -> String {
        let letters = self.universe.letters();
        let widths: Vec<usize> = letters.iter().map(|l| l.chars().count()).collect();
        let mut out = String::new();
        let header: Vec<&str> = letters.iter().map(String::as_str).collect();
        out.push_str(&header.join(" "));
        out.push_str(if header.is_empty() {
            ": value\n"
        } else {
            " : value\n"
        });
        for row in 0..self.rows() {
            let cells: Vec<String> = widths
                .iter()
                .enumerate()
                .map(|(k, &w)| format!("{:<w$}", (row >> k) & 1))
                .collect();
            out.push_str(&cells.join(" "));
            if !cells.is_empty() {
                out.push(' ');
            }
            out.push_str(&format!(": {}\n", u8::from(self.get(row))));
        }
        out
    }
}

impl Serialize for TruthTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TruthTable", 2)?;
        s.serialize_field("rows", &self.rows())?;
        s.serialize_field("bits_hex", &self.to_hex())?;
        s.end()
    }
}

/// Classical value of `f` at `i`, with `a -> b` valued as `~a | b`.
pub fn eval_material(f: &Formula, i: &Interpretation) -> Result<bool> {
    i.universe.check_covers(f)?;
    Ok(eval_classical(f, i))
}

fn eval_classical(f: &Formula, i: &Interpretation) -> bool {
    match f {
        Formula::Letter(name) => i.value(name).expect("universe checked by caller"),
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Not(x) => !eval_classical(x, i),
        Formula::And(a, b) => eval_classical(a, i) && eval_classical(b, i),
        Formula::Or(a, b) => eval_classical(a, i) || eval_classical(b, i),
        Formula::Imp(a, b) => !eval_classical(a, i) || eval_classical(b, i),
    }
}

/// Replaces every `->` node, innermost first, by `T` if its (already
/// implication-free) antecedent conjoined with its consequent is
/// equivalent to the antecedent over `u`, and by `F` otherwise.
///
/// The result is implication-free. Letters and the other connectives are
/// left in place.
pub fn eliminate_implications(f: &Formula, u: &Universe) -> Result<Formula> {
    u.check_covers(f)?;
    Ok(TableBuilder::new(u).eliminate(f)?.0)
}

/// Relational value of `f` at `i`: the classical value of
/// `eliminate_implications(f)` at `i`.
pub fn eval_relational(f: &Formula, i: &Interpretation) -> Result<bool> {
    let reduced = eliminate_implications(f, &i.universe)?;
    Ok(eval_classical(&reduced, i))
}

pub fn truth_table(f: &Formula, u: &Universe, mode: Mode) -> Result<TruthTable> {
    u.check_covers(f)?;
    let builder = TableBuilder::new(u);
    let words = match mode {
        Mode::Material => builder.material(f)?,
        Mode::Relational => builder.eliminate(f)?.1,
    };
    Ok(TruthTable {
        universe: u.clone(),
        words,
    })
}

/// Seeded random formula source.
///
/// Each node with remaining depth `d > 0` becomes a leaf with probability
/// 1/4; otherwise a connective is drawn uniformly. Leaves are drawn
/// uniformly from the universe letters plus `T` and `F`.
pub struct FormulaGenerator {
    rng: ChaCha8Rng,
    leaves: Vec<Formula>,
    with_implication: bool,
}

impl FormulaGenerator {
    pub fn new(u: &Universe, seed: u64) -> Self {
        let mut leaves: Vec<Formula> = u.letters().iter().map(Formula::letter).collect();
        leaves.push(Formula::Top);
        leaves.push(Formula::Bottom);
        FormulaGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            leaves,
            with_implication: true,
        }
    }

    /// Restricts internal nodes to `~ & |`.
    pub fn implication_free(mut self) -> Self {
        self.with_implication = false;
        self
    }

    pub fn generate(&mut self, depth: usize) -> Formula {
        if depth == 0 || self.rng.random_ratio(1, 4) {
            let k = self.rng.random_range(0..self.leaves.len());
            return self.leaves[k].clone();
        }
        let connectives = if self.with_implication { 4 } else { 3 };
        match self.rng.random_range(0..connectives) {
            0 => Formula::not(self.generate(depth - 1)),
            1 => Formula::and(self.generate(depth - 1), self.generate(depth - 1)),
            2 => Formula::or(self.generate(depth - 1), self.generate(depth - 1)),
            _ => Formula::imp(self.generate(depth - 1), self.generate(depth - 1)),
        }
    }
}

/// A single random formula of depth at most `depth`; deterministic in
/// `(depth, u, seed)`.
pub fn gen_random_formula(depth: usize, u: &Universe, seed: u64) -> Formula {
    FormulaGenerator::new(u, seed).generate(depth)
}
