//! Recursive-descent parser for the ASCII sequent grammar.
//!
//! Formulas are separated by `,`, the turnstile is `=>`, connectives are
//! `&`, `|`, `->`, bottom is `_|_`, quantifiers are `forall x.` /
//! `exists x.` with the body extending as far to the right as possible,
//! and equality is `s = t`. Predicate symbols start with an uppercase
//! letter; terms start with a lowercase letter. Lowercase identifiers in
//! term position denote parameters unless bound by an enclosing
//! quantifier. `#` starts a comment running to the end of the line.

use std::collections::HashMap;

use super::{Formula, Ident, Multiset, Sequent, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Lower(String),
    Upper(String),
    LParen,
    RParen,
    Comma,
    Turnstile, // =>
    Equals,    // =
    Arrow,     // ->
    Amp,
    Bar,
    Dot,
    Bot, // _|_
    Forall,
    Exists,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.src.get(self.pos + 1).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'#' => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                b'(' => out.push(self.tok1(Tok::LParen)),
                b')' => out.push(self.tok1(Tok::RParen)),
                b',' => out.push(self.tok1(Tok::Comma)),
                b'.' => out.push(self.tok1(Tok::Dot)),
                b'&' => out.push(self.tok1(Tok::Amp)),
                b'|' => out.push(self.tok1(Tok::Bar)),
                b'=' => {
                    let (line, col) = (self.line, self.col);
                    self.bump();
                    if self.peek() == Some(b'>') {
                        self.bump();
                        out.push((Tok::Turnstile, line, col));
                    } else {
                        out.push((Tok::Equals, line, col));
                    }
                }
                b'-' => {
                    let (line, col) = (self.line, self.col);
                    self.bump();
                    if self.peek() == Some(b'>') {
                        self.bump();
                        out.push((Tok::Arrow, line, col));
                    } else {
                        return Err(ParseError { line, col, msg: "expected `->`".into() });
                    }
                }
                b'_' => {
                    let (line, col) = (self.line, self.col);
                    if self.peek2() == Some(b'|') && self.src.get(self.pos + 2) == Some(&b'_') {
                        self.bump();
                        self.bump();
                        self.bump();
                        out.push((Tok::Bot, line, col));
                    } else {
                        return Err(ParseError { line, col, msg: "expected `_|_`".into() });
                    }
                }
                c if c.is_ascii_alphabetic() => {
                    let (line, col) = (self.line, self.col);
                    let mut name = String::new();
                    while let Some(c) = self.peek() {
                        if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                            name.push(self.bump() as char);
                        } else {
                            break;
                        }
                    }
                    let tok = match name.as_str() {
                        "forall" => Tok::Forall,
                        "exists" => Tok::Exists,
                        _ if name.as_bytes()[0].is_ascii_lowercase() => Tok::Lower(name),
                        _ => Tok::Upper(name),
                    };
                    out.push((tok, line, col));
                }
                other => {
                    return Err(self.err(format!("unexpected character `{}`", other as char)))
                }
            }
        }
        Ok(out)
    }

    fn tok1(&mut self, t: Tok) -> Spanned {
        let (line, col) = (self.line, self.col);
        self.bump();
        (t, line, col)
    }
}

/// Per-parse symbol table enforcing arity consistency.
#[derive(Default)]
struct Symbols {
    funs: HashMap<Ident, usize>,
    preds: HashMap<Ident, usize>,
}

impl Symbols {
    fn fun(&mut self, name: &str, arity: usize, line: usize, col: usize) -> Result<(), ParseError> {
        match self.funs.insert(name.to_string(), arity) {
            Some(old) if old != arity => Err(ParseError {
                line,
                col,
                msg: format!("function `{name}` used with arity {arity}, previously {old}"),
            }),
            _ => Ok(()),
        }
    }

    fn pred(&mut self, name: &str, arity: usize, line: usize, col: usize) -> Result<(), ParseError> {
        match self.preds.insert(name.to_string(), arity) {
            Some(old) if old != arity => Err(ParseError {
                line,
                col,
                msg: format!("predicate `{name}` used with arity {arity}, previously {old}"),
            }),
            _ => Ok(()),
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    scope: Vec<Ident>,
    syms: Symbols,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: Lexer::new(src).tokens()?,
            pos: 0,
            scope: Vec::new(),
            syms: Symbols::default(),
        })
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError { line, col, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn sequent(&mut self) -> Result<Sequent, ParseError> {
        let mut ant = Multiset::new();
        if !matches!(self.peek(), Some(Tok::Turnstile)) {
            loop {
                ant.insert(self.formula()?);
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.pos += 1;
                    }
                    _ => break,
                }
            }
        }
        self.expect(&Tok::Turnstile, "`=>`")?;
        let mut suc = Multiset::new();
        if self.peek().is_some() {
            loop {
                suc.insert(self.formula()?);
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.pos += 1;
                    }
                    _ => break,
                }
            }
        }
        Ok(Sequent::new(ant, suc))
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let a = self.disj()?;
        if matches!(self.peek(), Some(Tok::Arrow)) {
            self.pos += 1;
            let b = self.formula()?;
            Ok(Formula::imp(a, b))
        } else {
            Ok(a)
        }
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut a = self.conj()?;
        while matches!(self.peek(), Some(Tok::Bar)) {
            self.pos += 1;
            let b = self.conj()?;
            a = Formula::or(a, b);
        }
        Ok(a)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut a = self.primary()?;
        while matches!(self.peek(), Some(Tok::Amp)) {
            self.pos += 1;
            let b = self.primary()?;
            a = Formula::and(a, b);
        }
        Ok(a)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let is_forall = matches!(self.peek(), Some(Tok::Forall));
                self.pos += 1;
                let name = match self.bump() {
                    Some(Tok::Lower(name)) => name,
                    _ => return Err(self.err("expected a bound variable name")),
                };
                self.expect(&Tok::Dot, "`.` after the bound variable")?;
                self.scope.push(name.clone());
                let body = self.formula()?;
                self.scope.pop();
                Ok(if is_forall {
                    Formula::Forall(name, Box::new(body))
                } else {
                    Formula::Exists(name, Box::new(body))
                })
            }
            Some(Tok::Bot) => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(f)
            }
            Some(Tok::Upper(_)) => self.predicate(),
            Some(Tok::Lower(_)) => {
                // A bare term must be the left side of an equality.
                let l = self.term()?;
                self.expect(&Tok::Equals, "`=` after a term")?;
                let r = self.term()?;
                Ok(Formula::Eq(l, r))
            }
            _ => Err(self.err("expected a formula")),
        }
    }

    fn predicate(&mut self) -> Result<Formula, ParseError> {
        let (line, col) = self.here();
        let name = match self.bump() {
            Some(Tok::Upper(name)) => name,
            _ => return Err(self.err("expected a predicate symbol")),
        };
        let args = if matches!(self.peek(), Some(Tok::LParen)) {
            self.pos += 1;
            let mut args = vec![self.term()?];
            while matches!(self.peek(), Some(Tok::Comma)) {
                self.pos += 1;
                args.push(self.term()?);
            }
            self.expect(&Tok::RParen, "`)`")?;
            args
        } else {
            Vec::new()
        };
        self.syms.pred(&name, args.len(), line, col)?;
        Ok(Formula::Atom(name, args))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let (line, col) = self.here();
        let name = match self.bump() {
            Some(Tok::Lower(name)) => name,
            _ => return Err(self.err("expected a term")),
        };
        if matches!(self.peek(), Some(Tok::LParen)) {
            self.pos += 1;
            let mut args = vec![self.term()?];
            while matches!(self.peek(), Some(Tok::Comma)) {
                self.pos += 1;
                args.push(self.term()?);
            }
            self.expect(&Tok::RParen, "`)`")?;
            self.syms.fun(&name, args.len(), line, col)?;
            Ok(Term::Fun(name, args))
        } else if self.scope.iter().rev().any(|v| v == &name) {
            Ok(Term::Var(name))
        } else {
            Ok(Term::Param(name))
        }
    }

    fn finish<T>(self, value: T) -> Result<T, ParseError> {
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(value)
    }
}

fn check_namespaces(f: &Formula, line: usize, col: usize) -> Result<(), ParseError> {
    fn binders(f: &Formula, out: &mut Vec<Ident>) {
        match f {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                binders(a, out);
                binders(b, out);
            }
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                out.push(x.clone());
                binders(a, out);
            }
            _ => {}
        }
    }
    let mut bs = Vec::new();
    binders(f, &mut bs);
    let params = super::formula_params(f);
    for b in bs {
        if params.contains(&b) {
            return Err(ParseError {
                line,
                col,
                msg: format!("identifier `{b}` is used both as a parameter and as a bound variable"),
            });
        }
    }
    Ok(())
}

/// Parses a sequent; see the module docs for the grammar.
pub fn parse_sequent(src: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(src)?;
    let s = p.sequent()?;
    let s = p.finish(s)?;
    for f in s.ant.iter().chain(s.suc.iter()) {
        check_namespaces(f, 1, 1)?;
    }
    Ok(s)
}

/// Parses a single formula.
pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    parse_formula_with_scope(src, &[])
}

/// Parses a formula with the given names pre-bound as variables. Used
/// for schema binding bodies, whose hole variable occurs free.
pub fn parse_formula_with_scope(src: &str, scope: &[Ident]) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    p.scope = scope.to_vec();
    let f = p.formula()?;
    let f = p.finish(f)?;
    check_namespaces(&f, 1, 1)?;
    Ok(f)
}

/// Parses a single ground term.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.finish(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::render_sequent;

    #[test]
    fn identity_sequent() {
        let s = parse_sequent("P => P").unwrap();
        assert_eq!(s.ant, Multiset::singleton(Formula::atom("P", vec![])));
        assert_eq!(s.suc, Multiset::singleton(Formula::atom("P", vec![])));
    }

    #[test]
    fn paper_example_sequent() {
        let s = parse_sequent("a=f(a), a=f(a) => a=f(f(a))").unwrap();
        let afa = Formula::eq(Term::param("a"), Term::fun("f", vec![Term::param("a")]));
        assert_eq!(s.ant.count(&afa), 2);
        assert_eq!(s.suc.len(), 1);
    }

    #[test]
    fn empty_sequent() {
        let s = parse_sequent("=>").unwrap();
        assert!(s.ant.is_empty() && s.suc.is_empty());
    }

    #[test]
    fn comments_and_whitespace() {
        let s = parse_sequent("P, # a comment\n Q => R").unwrap();
        assert_eq!(s.ant.len(), 2);
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_sequent("P =>\n Q &").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.col > 1);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let err = parse_sequent("P(a), P(a, b) =>").unwrap_err();
        assert!(err.msg.contains("arity"));
    }

    #[test]
    fn quantifier_scope_is_maximal() {
        let f = parse_formula("forall x. P(x) -> Q(x)").unwrap();
        match f {
            Formula::Forall(_, body) => assert!(matches!(*body, Formula::Imp(..))),
            other => panic!("unexpected parse: {other:?}"),
        }
    }

    #[test]
    fn mixed_namespaces_rejected() {
        assert!(parse_sequent("P(x) & forall x. Q(x) =>").is_err());
    }

    #[test]
    fn renders_canonically() {
        let s = parse_sequent("Q, P => P").unwrap();
        assert_eq!(render_sequent(&s), "P, Q => P");
    }
}
