//! Many-valued propositional formulas: parsing, printing and evaluation.
//!
//! Grammar (tightest binding first, binary operators left-associative):
//!
//! | level | operators                                       |
//! |-------|-------------------------------------------------|
//! | 1     | `~` (negation)                                  |
//! | 2     | `&` (Łukasiewicz ∧), `/\` (min)                 |
//! | 3     | `\|` (Łukasiewicz ∨), `\/` (max), `^` (XOR)     |
//!
//! Constants are `F` and `V`; atoms match `[A-Za-z_][A-Za-z0-9_]*` (the two
//! constant names excepted).
//!
//! ```
//! use qlogic::formula::{parse, Assignment};
//! use qlogic::truth::TruthValue;
//!
//! let f = parse("p | ~p").unwrap();
//! let mut a = Assignment::new();
//! a.insert("p", TruthValue::half());
//! assert_eq!(f.evaluate(&a).unwrap(), TruthValue::one());
//! assert_eq!(f.to_string(), "p | ~p");
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

use crate::truth::{self, TruthError, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    ConstFalse,
    ConstTrue,
    Neg(Box<Formula>),
    LukConj(Box<Formula>, Box<Formula>),
    LukDisj(Box<Formula>, Box<Formula>),
    MinConj(Box<Formula>, Box<Formula>),
    MaxDisj(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    LukConj,
    LukDisj,
    MinConj,
    MaxDisj,
    Xor,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::LukConj => "&",
            BinOp::LukDisj => "|",
            BinOp::MinConj => "/\\",
            BinOp::MaxDisj => "\\/",
            BinOp::Xor => "^",
        }
    }

    /// Binding level; lower binds tighter.
    fn level(self) -> u8 {
        match self {
            BinOp::LukConj | BinOp::MinConj => 2,
            BinOp::LukDisj | BinOp::MaxDisj | BinOp::Xor => 3,
        }
    }

    fn build(self, l: Formula, r: Formula) -> Formula {
        let (l, r) = (Box::new(l), Box::new(r));
        match self {
            BinOp::LukConj => Formula::LukConj(l, r),
            BinOp::LukDisj => Formula::LukDisj(l, r),
            BinOp::MinConj => Formula::MinConj(l, r),
            BinOp::MaxDisj => Formula::MaxDisj(l, r),
            BinOp::Xor => Formula::Xor(l, r),
        }
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn binary(op: BinOp, l: Formula, r: Formula) -> Self {
        op.build(l, r)
    }

    /// Left fold of `op` over `items`; `None` when `items` is empty.
    pub fn fold(op: BinOp, items: impl IntoIterator<Item = Formula>) -> Option<Self> {
        items.into_iter().reduce(|acc, f| op.build(acc, f))
    }

    pub fn as_binary(&self) -> Option<(BinOp, &Formula, &Formula)> {
        match self {
            Formula::LukConj(l, r) => Some((BinOp::LukConj, l, r)),
            Formula::LukDisj(l, r) => Some((BinOp::LukDisj, l, r)),
            Formula::MinConj(l, r) => Some((BinOp::MinConj, l, r)),
            Formula::MaxDisj(l, r) => Some((BinOp::MaxDisj, l, r)),
            Formula::Xor(l, r) => Some((BinOp::Xor, l, r)),
            _ => None,
        }
    }

    /// Atom names in sorted order, without duplicates.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::ConstFalse | Formula::ConstTrue => {}
            Formula::Neg(c) => c.collect_atoms(out),
            other => {
                let (_, l, r) = other.as_binary().expect("binary node");
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::ConstFalse | Formula::ConstTrue => 1,
            Formula::Neg(c) => 1 + c.size(),
            other => {
                let (_, l, r) = other.as_binary().expect("binary node");
                1 + l.size() + r.size()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::ConstFalse | Formula::ConstTrue => 0,
            Formula::Neg(c) => 1 + c.depth(),
            other => {
                let (_, l, r) = other.as_binary().expect("binary node");
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<TruthValue, EvalError> {
        let mut next = 0;
        self.eval_at(a, &mut next)
    }

    // `next` is the preorder index of `self`; on return it points past the subtree.
    fn eval_at(&self, a: &Assignment, next: &mut usize) -> Result<TruthValue, EvalError> {
        let node = *next;
        *next += 1;
        match self {
            Formula::Atom(name) => a
                .get(name)
                .cloned()
                .ok_or_else(|| EvalError::UnboundAtom(name.clone())),
            Formula::ConstFalse => Ok(TruthValue::zero()),
            Formula::ConstTrue => Ok(TruthValue::one()),
            Formula::Neg(c) => Ok(truth::luk_neg(&c.eval_at(a, next)?)),
            other => {
                let (op, l, r) = other.as_binary().expect("binary node");
                let lv = l.eval_at(a, next)?;
                let rv = r.eval_at(a, next)?;
                Ok(match op {
                    BinOp::LukConj => truth::luk_conj(&lv, &rv),
                    BinOp::LukDisj => truth::luk_disj(&lv, &rv),
                    BinOp::MinConj => truth::min_conj(&lv, &rv),
                    BinOp::MaxDisj => truth::max_disj(&lv, &rv),
                    BinOp::Xor => truth::xor_crisp(&lv, &rv).map_err(|e| match e {
                        TruthError::NonCrispOperand(value) => EvalError::NonCrispOperand {
                            node,
                            value,
                            span: None,
                        },
                        other => EvalError::Truth(other),
                    })?,
                })
            }
        }
    }
}

/// Binding of atom names to truth values.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<String, TruthValue>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, v: TruthValue) -> Option<TruthValue> {
        self.0.insert(name.into(), v)
    }

    pub fn get(&self, name: &str) -> Option<&TruthValue> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &TruthValue)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Crisp assignment with `names[i]` set to bit `names.len() - 1 - i` of
    /// `bits`, so that counting `bits` upward enumerates truth-table rows in
    /// lexicographic order.
    pub fn from_bits<S: AsRef<str>>(names: &[S], bits: u64) -> Self {
        let n = names.len();
        names
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let bit = (bits >> (n - 1 - i)) & 1 == 1;
                (name.as_ref().to_string(), TruthValue::from_bool(bit))
            })
            .collect()
    }

    /// Parses the assignment file format `{"atoms": {"p": "1/2", ...}}`.
    ///
    /// Values may be strings (`"n/d"` or decimals) or JSON numbers written in
    /// plain decimal notation.
    pub fn from_json(text: &str) -> Result<Self, AssignmentError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct File {
            atoms: BTreeMap<String, serde_json::Value>,
        }
        let file: File = serde_json::from_str(text).map_err(|e| AssignmentError::Json(e.to_string()))?;
        let mut out = Assignment::new();
        for (name, value) in file.atoms {
            if !is_identifier(&name) {
                return Err(AssignmentError::BadAtomName(name));
            }
            let literal = match &value {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                _ => {
                    return Err(AssignmentError::BadValue {
                        atom: name,
                        source: TruthError::BadLiteral {
                            literal: value.to_string(),
                            reason: "expected a string or number",
                        },
                    })
                }
            };
            let v = literal
                .parse()
                .map_err(|source| AssignmentError::BadValue { atom: name.clone(), source })?;
            out.insert(name, v);
        }
        Ok(out)
    }
}

impl<S: Into<String>> FromIterator<(S, TruthValue)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (S, TruthValue)>>(iter: I) -> Self {
        Assignment(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AssignmentError {
    #[error("invalid assignment JSON: {0}")]
    Json(String),
    #[error("invalid atom name {0:?}")]
    BadAtomName(String),
    #[error("atom {atom:?}: {source}")]
    BadValue { atom: String, source: TruthError },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("atom {0:?} is not bound by the assignment")]
    UnboundAtom(String),
    #[error("XOR applied to non-crisp value {value}{}", fmt_span(.span))]
    NonCrispOperand {
        /// Preorder index of the offending `^` node.
        node: usize,
        value: TruthValue,
        span: Option<Span>,
    },
    #[error(transparent)]
    Truth(TruthError),
}

fn fmt_span(span: &Option<Span>) -> String {
    match span {
        Some(s) => format!(" in {s}"),
        None => String::new(),
    }
}

/// Byte range in the source text together with its 1-based starting position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("syntax error at line {line}, column {column} near {token:?}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    /// Offending token text, or `"<end of input>"`.
    pub token: String,
    pub message: String,
}

/// A parsed formula together with the source span of every node, indexed in
/// preorder.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub formula: Formula,
    pub spans: Vec<Span>,
    source: String,
}

impl Parsed {
    pub fn source(&self) -> &str {
        &self.source
    }

    /// Like [`Formula::evaluate`], but attaches the source span to
    /// [`EvalError::NonCrispOperand`].
    pub fn evaluate(&self, a: &Assignment) -> Result<TruthValue, EvalError> {
        self.formula.evaluate(a).map_err(|e| match e {
            EvalError::NonCrispOperand { node, value, .. } => EvalError::NonCrispOperand {
                node,
                value,
                span: self.spans.get(node).copied(),
            },
            other => other,
        })
    }

    pub fn node_text(&self, node: usize) -> Option<&str> {
        self.spans.get(node).map(|s| &self.source[s.start..s.end])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    Bin(BinOp),
    LParen,
    RParen,
    False,
    True,
    Ident(String),
}

#[derive(Debug, Clone)]
struct Lexeme {
    tok: Tok,
    span: Span,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "F" && s != "V"
}

fn lex(src: &str) -> Result<Vec<Lexeme>, SyntaxError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let (mut i, mut line, mut line_start) = (0usize, 1usize, 0usize);
    while i < bytes.len() {
        let c = bytes[i];
        let column = src[line_start..i].chars().count() + 1;
        let span = |len: usize| Span { start: i, end: i + len, line, column };
        match c {
            b'\n' => {
                i += 1;
                line += 1;
                line_start = i;
                continue;
            }
            b' ' | b'\t' | b'\r' => {
                i += 1;
                continue;
            }
            _ => {}
        }
        let (tok, len) = match c {
            b'~' => (Tok::Not, 1),
            b'&' => (Tok::Bin(BinOp::LukConj), 1),
            b'|' => (Tok::Bin(BinOp::LukDisj), 1),
            b'^' => (Tok::Bin(BinOp::Xor), 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'/' if bytes.get(i + 1) == Some(&b'\\') => (Tok::Bin(BinOp::MinConj), 2),
            b'\\' if bytes.get(i + 1) == Some(&b'/') => (Tok::Bin(BinOp::MaxDisj), 2),
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let len = bytes[i..]
                    .iter()
                    .take_while(|b| b.is_ascii_alphanumeric() || **b == b'_')
                    .count();
                let word = &src[i..i + len];
                let tok = match word {
                    "F" => Tok::False,
                    "V" => Tok::True,
                    _ => Tok::Ident(word.to_string()),
                };
                (tok, len)
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(SyntaxError {
                    line,
                    column,
                    token: ch.to_string(),
                    message: "unexpected character".into(),
                });
            }
        };
        out.push(Lexeme { tok, span: span(len) });
        i += len;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Lexeme>,
    pos: usize,
    nodes: Vec<Span>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Lexeme> {
        self.toks.get(self.pos)
    }

    fn error_here(&self, message: &str) -> SyntaxError {
        match self.peek() {
            Some(lx) => SyntaxError {
                line: lx.span.line,
                column: lx.span.column,
                token: self.src[lx.span.start..lx.span.end].to_string(),
                message: message.into(),
            },
            None => {
                let line = self.src.matches('\n').count() + 1;
                let last = self.src.rsplit('\n').next().unwrap_or("");
                SyntaxError {
                    line,
                    column: last.chars().count() + 1,
                    token: "<end of input>".into(),
                    message: message.into(),
                }
            }
        }
    }

    // Binary nodes are created after their children, so spans are recorded in
    // postorder here and reordered into preorder by `reorder_spans`.
    fn expr(&mut self, level: u8) -> Result<(Formula, Span), SyntaxError> {
        if level == 1 {
            return self.unary();
        }
        let (mut lhs, mut lspan) = self.expr(level - 1)?;
        while let Some(Lexeme { tok: Tok::Bin(op), span: op_span }) = self.peek().cloned() {
            if op.level() != level {
                break;
            }
            self.pos += 1;
            if self.peek().is_none() {
                return Err(SyntaxError {
                    line: op_span.line,
                    column: op_span.column,
                    token: op.symbol().into(),
                    message: "dangling operator: missing right operand".into(),
                });
            }
            let (rhs, rspan) = self.expr(level - 1)?;
            let span = Span { end: rspan.end, ..lspan };
            self.nodes.push(span);
            lhs = op.build(lhs, rhs);
            lspan = span;
        }
        Ok((lhs, lspan))
    }

    fn unary(&mut self) -> Result<(Formula, Span), SyntaxError> {
        let Some(lx) = self.peek().cloned() else {
            return Err(self.error_here("expected an operand"));
        };
        match lx.tok {
            Tok::Not => {
                self.pos += 1;
                let (child, cspan) = self.unary()?;
                let span = Span { end: cspan.end, ..lx.span };
                self.nodes.push(span);
                Ok((Formula::neg(child), span))
            }
            Tok::LParen => {
                self.pos += 1;
                let (inner, _) = self.expr(3)?;
                match self.peek() {
                    Some(Lexeme { tok: Tok::RParen, span }) => {
                        let span = Span { end: span.end, ..lx.span };
                        self.pos += 1;
                        // The parenthesized span replaces the inner root's span.
                        *self.nodes.last_mut().expect("inner node") = span;
                        Ok((inner, span))
                    }
                    _ => Err(self.error_here("expected ')'")),
                }
            }
            Tok::False | Tok::True | Tok::Ident(_) => {
                self.pos += 1;
                self.nodes.push(lx.span);
                let f = match lx.tok {
                    Tok::False => Formula::ConstFalse,
                    Tok::True => Formula::ConstTrue,
                    Tok::Ident(name) => Formula::Atom(name),
                    _ => unreachable!(),
                };
                Ok((f, lx.span))
            }
            Tok::RParen | Tok::Bin(_) => Err(self.error_here("expected an operand")),
        }
    }
}

/// Parses `text` and keeps per-node source spans.
pub fn parse_spanned(text: &str) -> Result<Parsed, SyntaxError> {
    let toks = lex(text)?;
    let mut p = Parser { src: text, toks, pos: 0, nodes: Vec::new() };
    let (formula, _) = p.expr(3)?;
    if p.peek().is_some() {
        return Err(p.error_here("unexpected token"));
    }
    let spans = reorder_spans(&formula, &p.nodes);
    Ok(Parsed { formula, spans, source: text.to_string() })
}

pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    parse_spanned(text).map(|p| p.formula)
}

fn reorder_spans(f: &Formula, postorder: &[Span]) -> Vec<Span> {
    fn walk(f: &Formula, post: &[Span], cursor: &mut usize, out: &mut Vec<Option<Span>>) {
        let me = out.len();
        out.push(None);
        match f {
            Formula::Atom(_) | Formula::ConstFalse | Formula::ConstTrue => {}
            Formula::Neg(c) => walk(c, post, cursor, out),
            other => {
                let (_, l, r) = other.as_binary().expect("binary node");
                walk(l, post, cursor, out);
                walk(r, post, cursor, out);
            }
        }
        out[me] = Some(post[*cursor]);
        *cursor += 1;
    }
    let mut out = Vec::with_capacity(postorder.len());
    let mut cursor = 0;
    walk(f, postorder, &mut cursor, &mut out);
    out.into_iter().map(|s| s.expect("every node has a span")).collect()
}

/// Canonical text with the fewest parentheses that still parses back to `f`.
pub fn format(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(f, &mut s);
    s
}

fn node_level(f: &Formula) -> u8 {
    match f.as_binary() {
        Some((op, _, _)) => op.level(),
        None => 1,
    }
}

fn write_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::ConstFalse => out.push('F'),
        Formula::ConstTrue => out.push('V'),
        Formula::Neg(c) => {
            out.push('~');
            write_child(c, node_level(c) > 1, out);
        }
        other => {
            let (op, l, r) = other.as_binary().expect("binary node");
            let level = op.level();
            write_child(l, node_level(l) > level, out);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            // Left associativity: an equal-level right operand needs brackets.
            write_child(r, node_level(r) >= level, out);
        }
    }
}

fn write_child(f: &Formula, paren: bool, out: &mut String) {
    if paren {
        out.push('(');
        write_formula(f, out);
        out.push(')');
    } else {
        write_formula(f, out);
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(name: &str) -> Formula {
        Formula::atom(name)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("~p").unwrap(), Formula::neg(a("p")));
        assert_eq!(
            parse("p & q | r").unwrap(),
            Formula::binary(BinOp::LukDisj, Formula::binary(BinOp::LukConj, a("p"), a("q")), a("r"))
        );
        assert_eq!(
            parse("p /\\ q \\/ r ^ s").unwrap(),
            Formula::binary(
                BinOp::Xor,
                Formula::binary(BinOp::MaxDisj, Formula::binary(BinOp::MinConj, a("p"), a("q")), a("r")),
                a("s")
            )
        );
        assert_eq!(parse("F").unwrap(), Formula::ConstFalse);
        assert_eq!(parse("(V)").unwrap(), Formula::ConstTrue);
        assert_eq!(parse("~~x_1").unwrap(), Formula::neg(Formula::neg(a("x_1"))));
    }

    #[test]
    fn chains_are_left_associative() {
        let f = parse("x1 ^ y2 ^ y3").unwrap();
        let expected = Formula::fold(BinOp::Xor, [a("x1"), a("y2"), a("y3")]).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn dangling_operator() {
        let e = parse("p &").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (1, 3, "&"));
        let e = parse("p &\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
    }

    #[test]
    fn syntax_error_positions() {
        let e = parse("p & (q |\n  r").unwrap_err();
        assert_eq!(e.token, "<end of input>");
        assert_eq!((e.line, e.column), (2, 4));
        let e = parse("p q").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (1, 3, "q"));
        let e = parse("p\n  & $").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 5, "$"));
        let e = parse(")").unwrap_err();
        assert_eq!(e.token, ")");
        assert!(parse("").is_err());
        assert!(parse("p / q").is_err());
    }

    #[test]
    fn format_examples() {
        assert_eq!(format(&Formula::neg(a("p"))), "~p");
        assert_eq!(
            format(&Formula::binary(BinOp::LukConj, a("p"), Formula::binary(BinOp::LukDisj, a("q"), a("r")))),
            "p & (q | r)"
        );
        assert_eq!(format(&Formula::ConstFalse), "F");
        assert_eq!(format(&parse("(p | q) | r").unwrap()), "p | q | r");
        assert_eq!(format(&parse("p | (q | r)").unwrap()), "p | (q | r)");
        assert_eq!(format(&parse("~(p & q)").unwrap()), "~(p & q)");
        assert_eq!(format(&parse("(p /\\ q) & r").unwrap()), "p /\\ q & r");
    }

    #[test]
    fn evaluate_examples() {
        let mut asg = Assignment::new();
        asg.insert("p", TruthValue::half());
        assert_eq!(parse("p | ~p").unwrap().evaluate(&asg).unwrap(), TruthValue::one());
        assert_eq!(parse("p & ~p").unwrap().evaluate(&asg).unwrap(), TruthValue::zero());
        assert_eq!(parse("p /\\ ~p").unwrap().evaluate(&asg).unwrap(), TruthValue::half());
        assert_eq!(parse("p \\/ ~p").unwrap().evaluate(&asg).unwrap(), TruthValue::half());

        let crisp = Assignment::from_bits(&["x1", "y2", "y3"], 0b111);
        assert_eq!(parse("x1 ^ y2 ^ y3").unwrap().evaluate(&crisp).unwrap(), TruthValue::one());
        assert_eq!(parse("V ^ V ^ V ^ F").unwrap().evaluate(&Assignment::new()).unwrap(), TruthValue::one());
    }

    #[test]
    fn evaluation_errors() {
        let f = parse("p & q").unwrap();
        let mut asg = Assignment::new();
        asg.insert("p", TruthValue::one());
        assert_eq!(f.evaluate(&asg), Err(EvalError::UnboundAtom("q".into())));

        asg.insert("q", TruthValue::half());
        let parsed = parse_spanned("~p | (p ^ q)").unwrap();
        match parsed.evaluate(&asg) {
            Err(EvalError::NonCrispOperand { node, value, span: Some(span) }) => {
                assert_eq!(value, TruthValue::half());
                assert_eq!(parsed.node_text(node), Some("(p ^ q)"));
                assert_eq!((span.line, span.column), (1, 6));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn spans_are_preorder() {
        let parsed = parse_spanned("~a & (b | c)").unwrap();
        let texts: Vec<_> = (0..parsed.spans.len()).map(|i| parsed.node_text(i).unwrap()).collect();
        assert_eq!(texts, ["~a & (b | c)", "~a", "a", "(b | c)", "b", "c"]);
        assert_eq!(parsed.spans.len(), parsed.formula.size());
    }

    #[test]
    fn assignment_file() {
        let a = Assignment::from_json(r#"{"atoms": {"p": "1/2", "q": "0.25", "r": 1, "s": 0.75}}"#).unwrap();
        assert_eq!(a.get("p"), Some(&TruthValue::half()));
        assert_eq!(a.get("q"), Some(&TruthValue::new(1, 4).unwrap()));
        assert_eq!(a.get("r"), Some(&TruthValue::one()));
        assert_eq!(a.get("s"), Some(&TruthValue::new(3, 4).unwrap()));
        assert!(Assignment::from_json(r#"{"atoms": {"p": "3/2"}}"#).is_err());
        assert!(Assignment::from_json(r#"{"atoms": {"F": "1"}}"#).is_err());
        assert!(Assignment::from_json(r#"{"atoms": {"p": true}}"#).is_err());
        assert!(Assignment::from_json(r#"{"vals": {}}"#).is_err());
    }

    #[test]
    fn atoms_and_metrics() {
        let f = parse("x ^ (y & ~x) | z").unwrap();
        assert_eq!(f.atoms().into_iter().collect::<Vec<_>>(), ["x", "y", "z"]);
        assert_eq!(f.size(), 8);
        assert_eq!(f.depth(), 4);
    }
}
