//! The expression language for relation terms.
//!
//! Operators from weakest to strongest binding:
//!
//! ```text
//! |            union
//! &            intersection
//! \  /         residuals (non-associative, same level)
//! *            composition (left-associative)
//! ~            complement (prefix)
//! ^            converse (postfix)
//! ```
//!
//! plus parentheses, identifiers and function calls `name(arg, ...)`.
//! `A \ C` divides on the left factor (result maps `tgt(A)` to `tgt(C)`),
//! `C / B` divides on the right factor (result maps `src(C)` to `src(B)`).
//! Mixing the two without parentheses, as in `A \ C / B`, is rejected.
//!
//! Printing a term and reparsing it reproduces the same tree.

use std::fmt;

/// A parsed term with the 1-based source position of its head token.
#[derive(Debug, Clone)]
pub struct Term {
    pub kind: TermKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermKind {
    Ident(String),
    Call(String, Vec<Term>),
    Complement(Box<Term>),
    Converse(Box<Term>),
    Compose(Box<Term>, Box<Term>),
    Intersect(Box<Term>, Box<Term>),
    Union(Box<Term>, Box<Term>),
    /// `A \ C`: the largest `Q` with `A * Q ⊑ C`.
    ResidualRight(Box<Term>, Box<Term>),
    /// `C / B`: the largest `Q` with `Q * B ⊑ C`.
    ResidualLeft(Box<Term>, Box<Term>),
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Term {}

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Star,
    Amp,
    Pipe,
    Backslash,
    Slash,
    Tilde,
    Caret,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Star => "*",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Backslash => "\\",
            Tok::Slash => "/",
            Tok::Tilde => "~",
            Tok::Caret => "^",
        };
        write!(f, "`{s}`")
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let ch = chars.next().unwrap();
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            ch
        };
        if ch.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if ch.is_ascii_alphanumeric() || ch == '_' {
            let mut s = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            toks.push((Tok::Ident(s), l, c));
            continue;
        }
        let tok = match ch {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '*' => Tok::Star,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            '\\' => Tok::Backslash,
            '/' => Tok::Slash,
            '~' => Tok::Tilde,
            '^' => Tok::Caret,
            other => {
                return Err(ParseError {
                    line: l,
                    col: c,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        bump(&mut chars);
        toks.push((tok, l, c));
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    at: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.at)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn union(&mut self) -> Result<Term, ParseError> {
        let mut t = self.intersection()?;
        while self.eat(&Tok::Pipe) {
            let rhs = self.intersection()?;
            t = binary(t, rhs, TermKind::Union);
        }
        Ok(t)
    }

    fn intersection(&mut self) -> Result<Term, ParseError> {
        let mut t = self.residual()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.residual()?;
            t = binary(t, rhs, TermKind::Intersect);
        }
        Ok(t)
    }

    fn residual(&mut self) -> Result<Term, ParseError> {
        let t = self.composition()?;
        let op = match self.peek() {
            Some(Tok::Backslash) => TermKind::ResidualRight as fn(_, _) -> _,
            Some(Tok::Slash) => TermKind::ResidualLeft as fn(_, _) -> _,
            _ => return Ok(t),
        };
        self.at += 1;
        let rhs = self.composition()?;
        if matches!(self.peek(), Some(Tok::Backslash) | Some(Tok::Slash)) {
            return Err(self.err("non-associative residual chain requires parens"));
        }
        Ok(binary(t, rhs, op))
    }

    fn composition(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary()?;
        while self.eat(&Tok::Star) {
            let rhs = self.unary()?;
            t = binary(t, rhs, TermKind::Compose);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.peek() == Some(&Tok::Tilde) {
            let (line, col) = self.here();
            self.at += 1;
            let inner = self.unary()?;
            return Ok(Term {
                kind: TermKind::Complement(Box::new(inner)),
                line,
                col,
            });
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.eat(&Tok::Caret) {
            let (line, col) = (t.line, t.col);
            t = Term {
                kind: TermKind::Converse(Box::new(t)),
                line,
                col,
            };
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let (line, col) = self.here();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.at += 1;
                let t = self.union()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.eat(&Tok::LParen) {
                    let mut args = Vec::new();
                    if !self.eat(&Tok::RParen) {
                        loop {
                            args.push(self.union()?);
                            if self.eat(&Tok::RParen) {
                                break;
                            }
                            if !self.eat(&Tok::Comma) {
                                return Err(self.err("expected `,` or `)`"));
                            }
                        }
                    }
                    Ok(Term {
                        kind: TermKind::Call(name, args),
                        line,
                        col,
                    })
                } else {
                    Ok(Term {
                        kind: TermKind::Ident(name),
                        line,
                        col,
                    })
                }
            }
            Some(t) => Err(self.err(format!("expected a term, found {t}"))),
            None => Err(self.err("expected a term, found end of input")),
        }
    }
}

fn binary(lhs: Term, rhs: Term, make: fn(Box<Term>, Box<Term>) -> TermKind) -> Term {
    let (line, col) = (lhs.line, lhs.col);
    Term {
        kind: make(Box::new(lhs), Box::new(rhs)),
        line,
        col,
    }
}

pub fn parse(text: &str) -> Result<Term, ParseError> {
    let toks = lex(text)?;
    let end = toks
        .last()
        .map(|&(ref t, l, c)| {
            let w = match t {
                Tok::Ident(s) => s.chars().count(),
                _ => 1,
            };
            (l, c + w)
        })
        .unwrap_or((1, 1));
    let mut p = Parser { toks, at: 0, end };
    let t = p.union()?;
    if let Some(tok) = p.peek() {
        return Err(p.err(format!("unexpected {tok} after the term")));
    }
    Ok(t)
}

const LVL_UNION: u8 = 0;
const LVL_INTER: u8 = 1;
const LVL_RESID: u8 = 2;
const LVL_COMP: u8 = 3;
const LVL_PREFIX: u8 = 4;
const LVL_POSTFIX: u8 = 5;

fn print_into(t: &Term, min: u8, out: &mut String) {
    let level = match &t.kind {
        TermKind::Ident(_) | TermKind::Call(..) => u8::MAX,
        TermKind::Converse(_) => LVL_POSTFIX,
        TermKind::Complement(_) => LVL_PREFIX,
        TermKind::Compose(..) => LVL_COMP,
        TermKind::ResidualRight(..) | TermKind::ResidualLeft(..) => LVL_RESID,
        TermKind::Intersect(..) => LVL_INTER,
        TermKind::Union(..) => LVL_UNION,
    };
    let parens = level < min;
    if parens {
        out.push('(');
    }
    match &t.kind {
        TermKind::Ident(name) => out.push_str(name),
        TermKind::Call(name, args) => {
            out.push_str(name);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                print_into(a, LVL_UNION, out);
            }
            out.push(')');
        }
        TermKind::Complement(a) => {
            out.push('~');
            print_into(a, LVL_PREFIX, out);
        }
        TermKind::Converse(a) => {
            print_into(a, LVL_POSTFIX, out);
            out.push('^');
        }
        TermKind::Compose(a, b) => {
            print_into(a, LVL_COMP, out);
            out.push_str(" * ");
            print_into(b, LVL_PREFIX, out);
        }
        TermKind::ResidualRight(a, b) => {
            print_into(a, LVL_COMP, out);
            out.push_str(" \\ ");
            print_into(b, LVL_COMP, out);
        }
        TermKind::ResidualLeft(a, b) => {
            print_into(a, LVL_COMP, out);
            out.push_str(" / ");
            print_into(b, LVL_COMP, out);
        }
        TermKind::Intersect(a, b) => {
            print_into(a, LVL_INTER, out);
            out.push_str(" & ");
            print_into(b, LVL_RESID, out);
        }
        TermKind::Union(a, b) => {
            print_into(a, LVL_UNION, out);
            out.push_str(" | ");
            print_into(b, LVL_INTER, out);
        }
    }
    if parens {
        out.push(')');
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        print_into(self, LVL_UNION, &mut s);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrips(src: &str) {
        let t = parse(src).unwrap();
        let printed = t.to_string();
        let back = parse(&printed)
            .unwrap_or_else(|e| panic!("reparse of `{printed}` failed: {e}"));
        assert_eq!(back, t, "`{src}` printed as `{printed}`");
        assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn precedence_shapes() {
        let t = parse("a | b & c * d^").unwrap();
        assert_eq!(t.to_string(), "a | b & c * d^");
        let t = parse("(a | b) & c").unwrap();
        assert_eq!(t.to_string(), "(a | b) & c");
        let t = parse("~a * b").unwrap();
        assert!(matches!(t.kind, TermKind::Compose(..)));
        let t = parse("~(a * b)").unwrap();
        assert!(matches!(t.kind, TermKind::Complement(_)));
    }

    #[test]
    fn composition_is_left_associative() {
        let t = parse("a * b * c").unwrap();
        match t.kind {
            TermKind::Compose(lhs, _) => assert!(matches!(lhs.kind, TermKind::Compose(..))),
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn residual_chains_need_parens() {
        let err = parse("A \\ C / B").unwrap_err();
        assert_eq!(err.msg, "non-associative residual chain requires parens");
        assert_eq!((err.line, err.col), (1, 7));
        parse("(A \\ C) / B").unwrap();
        parse("A \\ (C / B)").unwrap();
        assert!(parse("A / C / B").is_err());
        assert!(parse("A \\ C \\ B").is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        for src in [
            "R",
            "R^",
            "~R^",
            "(~R)^",
            "R * S | T & U",
            "(R | S) * T",
            "syq(R, S) & eps(X) \\ F",
            "I(X) * (R / S)",
            "~(R | ~S)^ * TOP(X, Y)",
            "fork(R, join(S, T))^",
            "a \\ (b \\ c)",
            "(a / b) / c",
        ] {
            roundtrips(src);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("R * (S | )").unwrap_err();
        assert_eq!((err.line, err.col), (1, 10));
        let err = parse("R ? S").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        let err = parse("R *").unwrap_err();
        assert_eq!((err.line, err.col), (1, 4));
    }
}
