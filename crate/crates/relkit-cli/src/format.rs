//! The model file format.
//!
//! A model file declares universes, relations and binary operations:
//!
//! ```text
//! # lines starting with # are comments
//! universe X = {a, b, c}
//!
//! relation R : X -> X {
//!   a: {a, b}
//!   b: {}
//!   c: {c}
//! }
//!
//! binop F : X {
//!   row a: [c, a, b]
//!   row b: [a, b, c]
//!   row c: [b, c, a]
//! }
//! ```
//!
//! Relation blocks list every source row in source order.  Serialization is
//! canonical: parsing a serialized model and serializing again reproduces it
//! byte for byte.

use std::fmt;

use relkit_core::{BinOp, Relation, Universe};

/// A parsed model file: declarations in file order.
#[derive(Debug, Clone)]
pub struct Model {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone)]
pub enum Item {
    Universe(String, Universe),
    Relation(String, Relation),
    BinOp(String, BinOp),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Universe(n, _) | Item::Relation(n, _) | Item::BinOp(n, _) => n,
        }
    }
}

impl Model {
    pub fn universe(&self, name: &str) -> Option<&Universe> {
        self.items.iter().find_map(|i| match i {
            Item::Universe(n, u) if n == name => Some(u),
            _ => None,
        })
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.items.iter().find_map(|i| match i {
            Item::Relation(n, r) if n == name => Some(r),
            _ => None,
        })
    }

    pub fn binop(&self, name: &str) -> Option<&BinOp> {
        self.items.iter().find_map(|i| match i {
            Item::BinOp(n, b) if n == name => Some(b),
            _ => None,
        })
    }
}

/// Parse failure with 1-based source coordinates.
#[derive(Debug, Clone)]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for FormatError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Punct(char),
    Arrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Arrow => write!(f, "`->`"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    at: usize,
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexer, FormatError> {
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
        } else if ch == '#' {
            while let Some(&c2) = chars.peek() {
                if c2 == '\n' {
                    break;
                }
                bump(&mut chars);
            }
        } else if ch.is_ascii_alphanumeric() || ch == '_' {
            let mut s = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            toks.push((Tok::Ident(s), l, c));
        } else if ch == '-' {
            bump(&mut chars);
            if chars.peek() == Some(&'>') {
                bump(&mut chars);
                toks.push((Tok::Arrow, l, c));
            } else {
                return Err(FormatError {
                    line: l,
                    col: c,
                    msg: "expected `->`".to_string(),
                });
            }
        } else if "={}:,[]".contains(ch) {
            bump(&mut chars);
            toks.push((Tok::Punct(ch), l, c));
        } else {
            return Err(FormatError {
                line: l,
                col: c,
                msg: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(Lexer {
        toks,
        at: 0,
        end: (line, col),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.at)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> FormatError {
        let (line, col) = self.here();
        FormatError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<Tok, FormatError> {
        let t = self
            .toks
            .get(self.at)
            .map(|(t, _, _)| t.clone())
            .ok_or_else(|| self.err(format!("expected {what}, found end of input")))?;
        self.at += 1;
        Ok(t)
    }

    fn expect_punct(&mut self, ch: char) -> Result<(), FormatError> {
        match self.next(&format!("`{ch}`"))? {
            Tok::Punct(c) if c == ch => Ok(()),
            t => {
                self.at -= 1;
                Err(self.err(format!("expected `{ch}`, found {t}")))
            }
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, FormatError> {
        match self.next(what)? {
            Tok::Ident(s) => Ok(s),
            t => {
                self.at -= 1;
                Err(self.err(format!("expected {what}, found {t}")))
            }
        }
    }

    fn eat_punct(&mut self, ch: char) -> bool {
        if self.peek() == Some(&Tok::Punct(ch)) {
            self.at += 1;
            true
        } else {
            false
        }
    }
}

/// `{a, b, c}` or `{}`.
fn parse_label_set(lx: &mut Lexer) -> Result<Vec<String>, FormatError> {
    lx.expect_punct('{')?;
    let mut labels = Vec::new();
    if lx.eat_punct('}') {
        return Ok(labels);
    }
    loop {
        labels.push(lx.expect_ident("a label")?);
        if lx.eat_punct('}') {
            return Ok(labels);
        }
        lx.expect_punct(',')?;
    }
}

pub fn parse_model(text: &str) -> Result<Model, FormatError> {
    let mut lx = lex(text)?;
    let mut model = Model { items: Vec::new() };
    while let Some(tok) = lx.peek() {
        let keyword = match tok {
            Tok::Ident(s) => s.clone(),
            t => return Err(lx.err(format!("expected a declaration keyword, found {t}"))),
        };
        lx.at += 1;
        match keyword.as_str() {
            "universe" => parse_universe(&mut lx, &mut model)?,
            "relation" => parse_relation(&mut lx, &mut model)?,
            "binop" => parse_binop(&mut lx, &mut model)?,
            other => {
                lx.at -= 1;
                return Err(lx.err(format!(
                    "expected `universe`, `relation` or `binop`, found `{other}`"
                )));
            }
        }
    }
    Ok(model)
}

fn check_fresh(lx: &Lexer, model: &Model, name: &str) -> Result<(), FormatError> {
    if model.items.iter().any(|i| i.name() == name) {
        Err(lx.err(format!("`{name}` is declared twice")))
    } else {
        Ok(())
    }
}

fn parse_universe(lx: &mut Lexer, model: &mut Model) -> Result<(), FormatError> {
    let name = lx.expect_ident("a universe name")?;
    check_fresh(lx, model, &name)?;
    lx.expect_punct('=')?;
    let labels = parse_label_set(lx)?;
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let u = Universe::atomic(&name, &refs).map_err(|e| lx.err(e.to_string()))?;
    model.items.push(Item::Universe(name, u));
    Ok(())
}

fn lookup_universe<'m>(
    lx: &Lexer,
    model: &'m Model,
    name: &str,
) -> Result<&'m Universe, FormatError> {
    model
        .universe(name)
        .ok_or_else(|| lx.err(format!("unknown universe `{name}`")))
}

fn parse_relation(lx: &mut Lexer, model: &mut Model) -> Result<(), FormatError> {
    let name = lx.expect_ident("a relation name")?;
    check_fresh(lx, model, &name)?;
    lx.expect_punct(':')?;
    let src_name = lx.expect_ident("a universe name")?;
    match lx.next("`->`")? {
        Tok::Arrow => {}
        t => {
            lx.at -= 1;
            return Err(lx.err(format!("expected `->`, found {t}")));
        }
    }
    let tgt_name = lx.expect_ident("a universe name")?;
    let src = lookup_universe(lx, model, &src_name)?.clone();
    let tgt = lookup_universe(lx, model, &tgt_name)?.clone();
    lx.expect_punct('{')?;
    let mut pairs = Vec::new();
    for i in 0..src.size() {
        let expected = src.element_label(i).expect("index in range");
        let row = lx.expect_ident("a source row label")?;
        if row != expected {
            lx.at -= 1;
            return Err(lx.err(format!(
                "rows must cover the source in order; expected row `{expected}`, found `{row}`"
            )));
        }
        lx.expect_punct(':')?;
        for label in parse_label_set(lx)? {
            let j = tgt.index_of_label(&label).ok_or_else(|| {
                lx.err(format!("`{label}` is not an element of `{tgt_name}`"))
            })?;
            pairs.push((i, j));
        }
    }
    lx.expect_punct('}')?;
    let r = Relation::from_pairs(&src, &tgt, &pairs).map_err(|e| lx.err(e.to_string()))?;
    model.items.push(Item::Relation(name, r));
    Ok(())
}

fn parse_binop(lx: &mut Lexer, model: &mut Model) -> Result<(), FormatError> {
    let name = lx.expect_ident("an operation name")?;
    check_fresh(lx, model, &name)?;
    lx.expect_punct(':')?;
    let carrier_name = lx.expect_ident("a universe name")?;
    let carrier = lookup_universe(lx, model, &carrier_name)?.clone();
    lx.expect_punct('{')?;
    let n = carrier.size();
    let mut table = vec![Vec::new(); n];
    for (i, row) in table.iter_mut().enumerate() {
        let kw = lx.expect_ident("`row`")?;
        if kw != "row" {
            lx.at -= 1;
            return Err(lx.err(format!("expected `row`, found `{kw}`")));
        }
        let expected = carrier.element_label(i).expect("index in range");
        let label = lx.expect_ident("a row label")?;
        if label != expected {
            lx.at -= 1;
            return Err(lx.err(format!(
                "rows must cover the carrier in order; expected row `{expected}`, found `{label}`"
            )));
        }
        lx.expect_punct(':')?;
        lx.expect_punct('[')?;
        for k in 0..n {
            if k > 0 {
                lx.expect_punct(',')?;
            }
            let entry = lx.expect_ident("an element label")?;
            let j = carrier.index_of_label(&entry).ok_or_else(|| {
                lx.err(format!("`{entry}` is not an element of `{carrier_name}`"))
            })?;
            row.push(j);
        }
        lx.expect_punct(']')?;
    }
    lx.expect_punct('}')?;
    let op = BinOp::from_table(&carrier, &table).map_err(|e| lx.err(e.to_string()))?;
    model.items.push(Item::BinOp(name, op));
    Ok(())
}

/// Canonical text form; `parse_model(serialize(m))` reproduces `m` and
/// `serialize(parse_model(t))` reproduces canonical `t` byte for byte.
pub fn serialize(model: &Model) -> String {
    let mut out = String::new();
    for (k, item) in model.items.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        match item {
            Item::Universe(name, u) => {
                out.push_str(&format!("universe {name} = {}\n", label_set(&u.labels())));
            }
            Item::Relation(name, r) => {
                out.push_str(&format!(
                    "relation {name} : {} -> {} {{\n",
                    r.src().name(),
                    r.tgt().name()
                ));
                for i in 0..r.src().size() {
                    let labels: Vec<String> = r
                        .row_ones(i)
                        .map(|j| r.tgt().element_label(j).expect("index in range"))
                        .collect();
                    out.push_str(&format!(
                        "  {}: {}\n",
                        r.src().element_label(i).expect("index in range"),
                        label_set(&labels)
                    ));
                }
                out.push_str("}\n");
            }
            Item::BinOp(name, op) => {
                out.push_str(&format!("binop {name} : {} {{\n", op.carrier().name()));
                let u = op.carrier();
                for i in 0..u.size() {
                    let cells: Vec<String> = (0..u.size())
                        .map(|k| u.element_label(op.apply(i, k)).expect("index in range"))
                        .collect();
                    out.push_str(&format!(
                        "  row {}: [{}]\n",
                        u.element_label(i).expect("index in range"),
                        cells.join(", ")
                    ));
                }
                out.push_str("}\n");
            }
        }
    }
    out
}

fn label_set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "universe X = {a, b, c}\n\nrelation R : X -> X {\n  a: {a, b}\n  b: {}\n  c: {c}\n}\n\nbinop F : X {\n  row a: [c, a, b]\n  row b: [a, b, c]\n  row c: [b, c, a]\n}\n";

    #[test]
    fn canonical_roundtrip_is_byte_exact() {
        let model = parse_model(SAMPLE).unwrap();
        assert_eq!(serialize(&model), SAMPLE);
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let noisy = "# header\nuniverse X = { a,b , c }  # trailing\nrelation R:X->X{a:{a,b} b:{} c:{c}}\nbinop F : X { row a: [c,a,b] row b: [a,b,c] row c: [b,c,a] }";
        let a = parse_model(noisy).unwrap();
        let b = parse_model(SAMPLE).unwrap();
        assert_eq!(serialize(&a), serialize(&b));
    }

    #[test]
    fn rows_must_follow_source_order() {
        let bad = "universe X = {a, b}\nrelation R : X -> X {\n  b: {}\n  a: {}\n}\n";
        let err = parse_model(bad).unwrap_err();
        assert!(err.msg.contains("expected row `a`"), "{err}");
        assert_eq!(err.line, 3);
    }

    #[test]
    fn unknown_labels_are_rejected_with_position() {
        let bad = "universe X = {a}\nrelation R : X -> X {\n  a: {z}\n}\n";
        let err = parse_model(bad).unwrap_err();
        assert!(err.msg.contains("`z`"), "{err}");
    }

    #[test]
    fn empty_universe_and_empty_blocks() {
        let text = "universe E = {}\n\nrelation R : E -> E {\n}\n";
        let model = parse_model(text).unwrap();
        assert_eq!(serialize(&model), text);
        assert!(model.relation("R").unwrap().is_empty_relation());
    }
}
