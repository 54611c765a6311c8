//! Formula syntax.
//!
//! ```text
//! T  F  p  !φ  []φ  <>φ  φ & ψ  φ | ψ  φ -> ψ  (φ)
//! ```
//!
//! Unary operators bind tightest, then `&`, then `|`, then `->`, which
//! associates to the right. `&` and `|` associate to the left.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bot,
    Prop(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
    Diamond(Box<Formula>),
}

impl Formula {
    pub fn prop(name: impl Into<String>) -> Self {
        Formula::Prop(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn boxed(a: Formula) -> Self {
        Formula::Box(Box::new(a))
    }

    pub fn diamond(a: Formula) -> Self {
        Formula::Diamond(Box::new(a))
    }

    /// Proposition names occurring in the formula.
    pub fn props(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Prop(p) => {
                out.insert(p);
            }
            Formula::Not(a) | Formula::Box(a) | Formula::Diamond(a) => a.collect_props(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_props(out);
                b.collect_props(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) => 0,
            Formula::Not(a) | Formula::Box(a) | Formula::Diamond(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    fn print(&self, out: &mut String, ctx: u8) {
        // Levels: 1 implication, 2 disjunction, 3 conjunction, 4 unary.
        type Parts<'a> = Option<(&'a Formula, &'static str, &'a Formula, u8, u8)>;
        let (level, parts): (u8, Parts) = match self {
            Formula::Implies(a, b) => (1, Some((a, " -> ", b, 2, 1))),
            Formula::Or(a, b) => (2, Some((a, " | ", b, 2, 3))),
            Formula::And(a, b) => (3, Some((a, " & ", b, 3, 4))),
            _ => (4, None),
        };
        let paren = level < ctx;
        if paren {
            out.push('(');
        }
        match (self, parts) {
            (_, Some((a, op, b, la, lb))) => {
                a.print(out, la);
                out.push_str(op);
                b.print(out, lb);
            }
            (Formula::Top, _) => out.push('T'),
            (Formula::Bot, _) => out.push('F'),
            (Formula::Prop(p), _) => out.push_str(p),
            (Formula::Not(a), _) => {
                out.push('!');
                a.print(out, 4);
            }
            (Formula::Box(a), _) => {
                out.push_str("[]");
                a.print(out, 4);
            }
            (Formula::Diamond(a), _) => {
                out.push_str("<>");
                a.print(out, 4);
            }
            _ => unreachable!(),
        }
        if paren {
            out.push(')');
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.print(&mut s, 0);
        f.write_str(&s)
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

/// Prints with minimal parentheses.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Top,
    Bot,
    Ident(String),
    Not,
    And,
    Or,
    Arrow,
    Box,
    Diamond,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Top => "`T`".into(),
        Tok::Bot => "`F`".into(),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Not => "`!`".into(),
        Tok::And => "`&`".into(),
        Tok::Or => "`|`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::Box => "`[]`".into(),
        Tok::Diamond => "`<>`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let two = |s: &[u8]| bytes[i..].starts_with(s);
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if two(b"->") => Tok::Arrow,
            b'[' if two(b"[]") => Tok::Box,
            b'<' if two(b"<>") => Tok::Diamond,
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "T" => Tok::Top,
                    "F" => Tok::Bot,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        let width = match tok {
            Tok::Arrow | Tok::Box | Tok::Diamond => 2,
            _ => 1,
        };
        out.push((i, tok));
        i += width;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {}", describe(self.peek())),
        })
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut acc = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Box => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            Tok::Diamond => {
                self.bump();
                Ok(Formula::diamond(self.unary()?))
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(_) => match self.bump() {
                Tok::Ident(name) => Ok(Formula::Prop(name)),
                _ => unreachable!(),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.implication()?;
                if *self.peek() != Tok::RParen {
                    return self.unexpected("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.unexpected("a formula"),
        }
    }
}

/// Parses the ASCII syntax. Errors carry the byte offset of the offending
/// token.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.implication()?;
    if *p.peek() != Tok::End {
        return p.unexpected("end of input");
    }
    Ok(f)
}
