//! Text <-> [`Formula`] conversion.
//!
//! ```text
//! formula := imp
//! imp     := or ( IMP imp )?
//! or      := and ( OR and )*
//! and     := neg ( AND neg )*
//! neg     := NOT neg | atom
//! atom    := LETTER | TOP | BOTTOM | "(" formula ")"
//!
//! IMP = "->" | "→"    OR  = "|" | "∨"    AND    = "&" | "∧"
//! NOT = "~"  | "¬"    TOP = "T" | "⊤"    BOTTOM = "F" | "⊥"
//! LETTER = [a-z][a-zA-Z0-9_]*
//! ```
//!
//! `->` is right-associative, `&` and `|` are left-associative. Whitespace
//! between tokens is ignored.

use crate::error::{LogicError, ParseError, Result};
use crate::formula::{Formula, DEFAULT_MAX_LETTERS};

/// Deepest syntax tree the parser will build. Every traversal in the crate
/// is recursive, so this bounds stack use for untrusted input.
pub const MAX_FORMULA_DEPTH: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SyntaxStyle {
    #[default]
    Ascii,
    Unicode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Imp,
    Or,
    And,
    Not,
    Top,
    Bottom,
    LParen,
    RParen,
    Letter(String),
    Invalid(String),
    Eof,
}

const EXPECT_OPERAND: &[&str] = &["`(`", "`F`", "`T`", "`~`", "letter"];
const EXPECT_AFTER_TOP: &[&str] = &["`&`", "`->`", "`|`", "end of input"];
const EXPECT_AFTER_NESTED: &[&str] = &["`&`", "`)`", "`->`", "`|`"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    /// Returns the next token and its byte offset.
    fn next(&mut self) -> (Tok, usize) {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        let start = self.pos;
        let Some(c) = trimmed.chars().next() else {
            return (Tok::Eof, start);
        };
        let (tok, len) = match c {
            '-' if trimmed[1..].starts_with('>') => (Tok::Imp, 2),
            '→' => (Tok::Imp, c.len_utf8()),
            '|' | '∨' => (Tok::Or, c.len_utf8()),
            '&' | '∧' => (Tok::And, c.len_utf8()),
            '~' | '¬' => (Tok::Not, c.len_utf8()),
            '⊤' => (Tok::Top, c.len_utf8()),
            '⊥' => (Tok::Bottom, c.len_utf8()),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let len = trimmed
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(trimmed.len());
                let word = &trimmed[..len];
                let tok = match word {
                    "T" => Tok::Top,
                    "F" => Tok::Bottom,
                    w if crate::formula::is_valid_letter(w) => Tok::Letter(w.to_owned()),
                    w => Tok::Invalid(w.to_owned()),
                };
                (tok, len)
            }
            c => (Tok::Invalid(c.to_string()), c.len_utf8()),
        };
        self.pos += len;
        (tok, start)
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    offset: usize,
    max_letters: usize,
    letters: Vec<String>,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, max_letters: usize) -> Self {
        let mut lexer = Lexer { src, pos: 0 };
        let (tok, offset) = lexer.next();
        Parser {
            lexer,
            tok,
            offset,
            max_letters,
            letters: Vec::new(),
            depth: 0,
        }
    }

    fn bump(&mut self) {
        let (tok, offset) = self.lexer.next();
        self.tok = tok;
        self.offset = offset;
    }

    fn error(&self, expected: &[&'static str]) -> LogicError {
        let found = match &self.tok {
            Tok::Eof => None,
            Tok::Imp | Tok::Or | Tok::And | Tok::Not | Tok::Top | Tok::Bottom => {
                let rest = &self.lexer.src[self.offset..self.lexer.pos];
                Some(rest.to_owned())
            }
            Tok::LParen => Some("(".into()),
            Tok::RParen => Some(")".into()),
            Tok::Letter(s) | Tok::Invalid(s) => Some(s.clone()),
        };
        ParseError {
            offset: self.offset,
            expected: expected.to_vec(),
            found,
        }
        .into()
    }

    /// Tracks nesting of recursive productions so that hostile input
    /// cannot overflow the stack.
    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_FORMULA_DEPTH {
            return Err(LogicError::Limit {
                what: "formula depth",
                actual: self.depth,
                max: MAX_FORMULA_DEPTH,
            });
        }
        Ok(())
    }

    fn check_height(&self, height: usize) -> Result<()> {
        if height > MAX_FORMULA_DEPTH {
            return Err(LogicError::Limit {
                what: "formula depth",
                actual: height,
                max: MAX_FORMULA_DEPTH,
            });
        }
        Ok(())
    }

    // Each production returns the tree together with its height.

    fn imp(&mut self) -> Result<(Formula, usize)> {
        self.enter()?;
        let (lhs, lh) = self.or()?;
        let out = if self.tok == Tok::Imp {
            self.bump();
            let (rhs, rh) = self.imp()?;
            let h = 1 + lh.max(rh);
            let f = Formula::imp(lhs, rhs);
            self.check_height(h)?;
            (f, h)
        } else {
            (lhs, lh)
        };
        self.depth -= 1;
        Ok(out)
    }

    fn or(&mut self) -> Result<(Formula, usize)> {
        let (mut acc, mut h) = self.and()?;
        while self.tok == Tok::Or {
            self.bump();
            let (rhs, rh) = self.and()?;
            h = 1 + h.max(rh);
            acc = Formula::or(acc, rhs);
            self.check_height(h)?;
        }
        Ok((acc, h))
    }

    fn and(&mut self) -> Result<(Formula, usize)> {
        let (mut acc, mut h) = self.neg()?;
        while self.tok == Tok::And {
            self.bump();
            let (rhs, rh) = self.neg()?;
            h = 1 + h.max(rh);
            acc = Formula::and(acc, rhs);
            self.check_height(h)?;
        }
        Ok((acc, h))
    }

    fn neg(&mut self) -> Result<(Formula, usize)> {
        if self.tok == Tok::Not {
            self.bump();
            self.enter()?;
            let (inner, h) = self.neg()?;
            self.depth -= 1;
            self.check_height(h + 1)?;
            return Ok((Formula::not(inner), h + 1));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<(Formula, usize)> {
        let f = match &self.tok {
            Tok::Top => Formula::Top,
            Tok::Bottom => Formula::Bottom,
            Tok::Letter(name) => {
                if !self.letters.contains(name) {
                    if self.letters.len() == self.max_letters {
                        return Err(LogicError::Limit {
                            what: "number of letters",
                            actual: self.letters.len() + 1,
                            max: self.max_letters,
                        });
                    }
                    self.letters.push(name.clone());
                }
                Formula::Letter(name.clone())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.imp()?;
                if self.tok != Tok::RParen {
                    return Err(self.error(EXPECT_AFTER_NESTED));
                }
                self.bump();
                return Ok(inner);
            }
            _ => return Err(self.error(EXPECT_OPERAND)),
        };
        self.bump();
        Ok((f, 0))
    }
}

/// Parses a formula, allowing at most [`DEFAULT_MAX_LETTERS`] distinct
/// letters.
pub fn parse(text: &str) -> Result<Formula> {
    parse_with_max_letters(text, DEFAULT_MAX_LETTERS)
}

pub fn parse_with_max_letters(text: &str, max_letters: usize) -> Result<Formula> {
    let mut p = Parser::new(text, max_letters);
    let (f, _) = p.imp()?;
    if p.tok != Tok::Eof {
        return Err(p.error(EXPECT_AFTER_TOP));
    }
    Ok(f)
}

// Binding strength, loosest first.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Imp(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Not(_) => 4,
        Formula::Letter(_) | Formula::Top | Formula::Bottom => 5,
    }
}

/// Renders `f` with the fewest parentheses that still reparse to `f`,
/// except that an implication directly under an implication is always
/// parenthesized.
pub fn render(f: &Formula, style: SyntaxStyle) -> String {
    let mut out = String::new();
    write_formula(f, style, &mut out);
    out
}

fn write_formula(f: &Formula, style: SyntaxStyle, out: &mut String) {
    let (not, and, or, imp, top, bottom) = match style {
        SyntaxStyle::Ascii => ("~", " & ", " | ", " -> ", "T", "F"),
        SyntaxStyle::Unicode => ("¬", " ∧ ", " ∨ ", " → ", "⊤", "⊥"),
    };
    let child = |c: &Formula, parens: bool, out: &mut String| {
        if parens {
            out.push('(');
            write_formula(c, style, out);
            out.push(')');
        } else {
            write_formula(c, style, out);
        }
    };
    match f {
        Formula::Letter(name) => out.push_str(name),
        Formula::Top => out.push_str(top),
        Formula::Bottom => out.push_str(bottom),
        Formula::Not(x) => {
            out.push_str(not);
            child(x, precedence(x) < 4, out);
        }
        Formula::And(a, b) => {
            child(a, precedence(a) < 3, out);
            out.push_str(and);
            child(b, precedence(b) <= 3, out);
        }
        Formula::Or(a, b) => {
            child(a, precedence(a) < 2, out);
            out.push_str(or);
            child(b, precedence(b) <= 2, out);
        }
        // Nested implications are always parenthesized, even on the right
        // where associativity would make it optional.
        Formula::Imp(a, b) => {
            child(a, precedence(a) <= 1, out);
            out.push_str(imp);
            child(b, precedence(b) <= 1, out);
        }
    }
}

/// One non-comment line of a corpus file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusLine<'a> {
    /// 1-based line number in the source text.
    pub number: usize,
    pub text: &'a str,
    /// `;`-separated operand texts, trimmed.
    pub operands: Vec<&'a str>,
}

impl CorpusLine<'_> {
    pub fn parse_operands(&self, max_letters: usize) -> Result<Vec<Formula>> {
        self.operands
            .iter()
            .map(|op| parse_with_max_letters(op, max_letters))
            .collect()
    }
}

/// Splits a corpus file into its formula lines. Blank lines and lines whose
/// first non-blank character is `#` are skipped.
pub fn corpus_lines(text: &str) -> Vec<CorpusLine<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                return None;
            }
            Some(CorpusLine {
                number: i + 1,
                text: line,
                operands: line.split(';').map(str::trim).collect(),
            })
        })
        .collect()
}
