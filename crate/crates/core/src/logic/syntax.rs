//! ASCII concrete syntax for formulas.
//!
//! Quantifiers are `forall v` and `exists v`, each binding one variable and
//! binding as tightly as `~`. Binary connectives from weakest to strongest
//! are `<->`, `->` (both right associative), `|` and `&` (left associative).
//! Atoms are `t = t`, `t in t` and `P(t,…)`. Terms are variables, the
//! signature's constants, prefix applications `f(t,…)`, the infix symbols
//! `;`, `+`, `^` and the tighter `*`, and postfix `'`.
//!
//! Variables match `[a-z][a-z0-9']*`. When the signature has a postfix `'`
//! the prime is the successor symbol and cannot appear in names.

use std::fmt;

use thiserror::Error;

use super::ast::{Formula, Term};
use super::signature::{infix_precedence, Fixity, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Arity,
    UnknownSymbol,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical",
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::Arity => "arity",
            ParseErrorKind::UnknownSymbol => "symbol",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} error at column {column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    LParen,
    RParen,
    Comma,
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    Equals,
    Op(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Num(s) | Tok::Op(s) => write!(f, "'{s}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Tilde => f.write_str("'~'"),
            Tok::Amp => f.write_str("'&'"),
            Tok::Bar => f.write_str("'|'"),
            Tok::Arrow => f.write_str("'->'"),
            Tok::DoubleArrow => f.write_str("'<->'"),
            Tok::Equals => f.write_str("'='"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str, prime_is_op: bool) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, message: String| ParseError {
        kind: ParseErrorKind::Lexical,
        column: col,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || (!prime_is_op && chars[i] == '\''))
            {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
            continue;
        } else if chars[i..].starts_with(&['<', '-', '>']) {
            i += 3;
            Tok::DoubleArrow
        } else if chars[i..].starts_with(&['-', '>']) {
            i += 2;
            Tok::Arrow
        } else {
            i += 1;
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '~' => Tok::Tilde,
                '&' => Tok::Amp,
                '|' => Tok::Bar,
                '=' => Tok::Equals,
                ';' | '+' | '*' | '^' | '\'' => Tok::Op(c.to_string()),
                _ => return Err(err(col, format!("unexpected character '{c}'"))),
            }
        };
        out.push((tok, col));
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

const KEYWORDS: [&str; 3] = ["forall", "exists", "in"];

fn is_variable_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '\'')
        && !KEYWORDS.contains(&s)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    sig: &'a Signature,
}

type PResult<T> = Result<T, ParseError>;

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, kind: ParseErrorKind, message: String) -> ParseError {
        ParseError {
            kind,
            column: self.column(),
            message,
        }
    }

    fn expect(&mut self, t: &Tok) -> PResult<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::Syntax, format!("expected {t}, found {}", self.peek())))
        }
    }

    fn iff(&mut self) -> PResult<Formula> {
        let l = self.implication()?;
        if self.eat(&Tok::DoubleArrow) {
            Ok(Formula::iff(l, self.iff()?))
        } else {
            Ok(l)
        }
    }

    fn implication(&mut self) -> PResult<Formula> {
        let l = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            Ok(Formula::implies(l, self.implication()?))
        } else {
            Ok(l)
        }
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let mut l = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            l = Formula::or(l, self.conjunction()?);
        }
        Ok(l)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut l = self.unary()?;
        while self.eat(&Tok::Amp) {
            l = Formula::and(l, self.unary()?);
        }
        Ok(l)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(q) if q == "forall" || q == "exists" => {
                self.bump();
                let col = self.column();
                let v = match self.bump() {
                    Tok::Ident(v) if is_variable_name(&v) && !self.sig.is_constant(&v) => v,
                    other => {
                        return Err(ParseError {
                            kind: ParseErrorKind::Syntax,
                            column: col,
                            message: format!("expected a variable after '{q}', found {other}"),
                        })
                    }
                };
                let body = self.unary()?;
                Ok(if q == "forall" {
                    Formula::forall(&v, body)
                } else {
                    Formula::exists(&v, body)
                })
            }
            Tok::LParen => {
                let save = self.pos;
                if let Ok(atom) = self.atom() {
                    return Ok(atom);
                }
                self.pos = save;
                self.bump();
                let f = self.iff()?;
                self.expect(&Tok::RParen)?;
                Ok(f)
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        if let Tok::Ident(p) = self.peek().clone() {
            if let Some(arity) = self.sig.predicate_arity(&p) {
                if p != "in" && self.peek_at(1) == &Tok::LParen {
                    let col = self.column();
                    self.bump();
                    let args = self.arguments()?;
                    if args.len() != arity {
                        return Err(ParseError {
                            kind: ParseErrorKind::Arity,
                            column: col,
                            message: format!("{p} takes {arity} arguments, given {}", args.len()),
                        });
                    }
                    return Ok(Formula::Pred(p, args));
                }
            }
        }
        let l = self.term()?;
        match self.peek().clone() {
            Tok::Equals => {
                self.bump();
                Ok(Formula::eq(l, self.term()?))
            }
            Tok::Ident(k) if k == "in" && self.sig.predicate_arity("in") == Some(2) => {
                self.bump();
                Ok(Formula::pred("in", vec![l, self.term()?]))
            }
            other => Err(self.error(ParseErrorKind::Syntax, format!("expected '=' or 'in', found {other}"))),
        }
    }

    fn arguments(&mut self) -> PResult<Vec<Term>> {
        self.expect(&Tok::LParen)?;
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        self.expect(&Tok::RParen)?;
        Ok(args)
    }

    fn infix_op(&self, level: u8) -> Option<String> {
        match self.peek() {
            Tok::Op(op) => {
                let f = self.sig.function(op)?;
                (f.fixity == Fixity::Infix && infix_precedence(op) == level).then(|| op.clone())
            }
            _ => None,
        }
    }

    fn term(&mut self) -> PResult<Term> {
        let t = self.infix_level(1)?;
        if let Tok::Op(op) = self.peek() {
            if self.sig.function(op).is_none() {
                return Err(ParseError {
                    kind: ParseErrorKind::UnknownSymbol,
                    column: self.column(),
                    message: format!("`{op}` is not a function symbol of signature {}", self.sig.name),
                });
            }
        }
        Ok(t)
    }

    fn infix_level(&mut self, level: u8) -> PResult<Term> {
        let next = |p: &mut Self| if level == 2 { p.postfix() } else { p.infix_level(level + 1) };
        let mut l = next(self)?;
        while let Some(op) = self.infix_op(level) {
            self.bump();
            let r = next(self)?;
            l = Term::App(op, vec![l, r]);
        }
        Ok(l)
    }

    fn postfix(&mut self) -> PResult<Term> {
        let mut t = self.primary()?;
        while self.peek() == &Tok::Op("'".into()) && self.sig.has_postfix_prime() {
            self.bump();
            t = Term::app("'", vec![t]);
        }
        Ok(t)
    }

    fn primary(&mut self) -> PResult<Term> {
        let col = self.column();
        let unknown = |message: String| ParseError {
            kind: ParseErrorKind::UnknownSymbol,
            column: col,
            message,
        };
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(&Tok::RParen)?;
                Ok(t)
            }
            Tok::Num(n) => {
                self.bump();
                if self.sig.is_constant(&n) {
                    Ok(Term::Const(n))
                } else {
                    Err(unknown(format!("'{n}' is not a constant of {}", self.sig.name)))
                }
            }
            Tok::Ident(name) => {
                if let Some(f) = self.sig.function(&name) {
                    if f.fixity == Fixity::Prefix {
                        let arity = f.arity;
                        self.bump();
                        let args = self.arguments()?;
                        if args.len() != arity {
                            return Err(ParseError {
                                kind: ParseErrorKind::Arity,
                                column: col,
                                message: format!("{name} takes {arity} arguments, given {}", args.len()),
                            });
                        }
                        return Ok(Term::App(name, args));
                    }
                }
                self.bump();
                if self.sig.is_constant(&name) {
                    Ok(Term::Const(name))
                } else if is_variable_name(&name) {
                    Ok(Term::Var(name))
                } else {
                    Err(unknown(format!("'{name}' is not a term of {}", self.sig.name)))
                }
            }
            Tok::Op(op) => Err(unknown(format!("'{op}' cannot start a term"))),
            other => Err(ParseError {
                kind: ParseErrorKind::Syntax,
                column: col,
                message: format!("expected a term, found {other}"),
            }),
        }
    }
}

/// Parse one formula over `sig`.
pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, ParseError> {
    let toks = lex(text, sig.has_postfix_prime())?;
    let mut p = Parser { toks, pos: 0, sig };
    let f = p.iff()?;
    if p.peek() != &Tok::End {
        return Err(p.error(ParseErrorKind::Syntax, format!("unexpected {} after formula", p.peek())));
    }
    Ok(f)
}

/// Parse one formula per line, skipping blank lines and `#` comments.
/// Errors carry the 1-based line number.
pub fn parse_lines(text: &str, sig: &Signature) -> Result<Vec<Formula>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_formula(l, sig).map_err(|e| (i + 1, e)))
        .collect()
}

fn is_infix(f: &str) -> bool {
    matches!(f, ";" | "+" | "*" | "^")
}

pub fn print_term(t: &Term) -> String {
    match t {
        Term::Var(v) | Term::Const(v) => v.clone(),
        Term::App(op, args) if is_infix(op) && args.len() == 2 => {
            let side = |c: &Term| match c {
                // nested infix terms are bracketed unless they bind tighter
                Term::App(inner, a) if is_infix(inner) && a.len() == 2 && infix_precedence(inner) <= infix_precedence(op) => {
                    format!("({})", print_term(c))
                }
                _ => print_term(c),
            };
            let sep = if op == "+" { " + ".to_string() } else { op.clone() };
            format!("{}{sep}{}", side(&args[0]), side(&args[1]))
        }
        Term::App(op, args) if op == "'" && args.len() == 1 => match &args[0] {
            Term::App(inner, _) if is_infix(inner) => format!("({})'", print_term(&args[0])),
            inner => format!("{}'", print_term(inner)),
        },
        Term::App(f, args) => format!("{f}({})", args.iter().map(print_term).collect::<Vec<_>>().join(",")),
    }
}

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) => 4,
        _ => 5,
    }
}

fn is_infix_atom(f: &Formula) -> bool {
    matches!(f, Formula::Eq(..)) || matches!(f, Formula::Pred(p, args) if p == "in" && args.len() == 2)
}

fn parens(s: String, yes: bool) -> String {
    if yes {
        format!("({s})")
    } else {
        s
    }
}

pub fn print_formula(f: &Formula) -> String {
    // a nested implication or biconditional is always bracketed
    let binary = |l: &Formula, r: &Formula, op: &str, right_assoc: bool| {
        let p = precedence(f);
        let (lp, rp) = (precedence(l), precedence(r));
        let left = parens(print_formula(l), if right_assoc { lp <= p } else { lp < p });
        let right = parens(print_formula(r), rp <= p);
        format!("{left} {op} {right}")
    };
    match f {
        Formula::Pred(p, args) if p == "in" && args.len() == 2 => {
            format!("{} in {}", print_term(&args[0]), print_term(&args[1]))
        }
        Formula::Pred(p, args) => format!("{p}({})", args.iter().map(print_term).collect::<Vec<_>>().join(",")),
        Formula::Eq(l, r) => format!("{} = {}", print_term(l), print_term(r)),
        Formula::Not(g) => {
            let wrap = is_infix_atom(g) || precedence(g) < 5;
            format!("~{}", parens(print_formula(g), wrap))
        }
        Formula::And(l, r) => binary(l, r, "&", false),
        Formula::Or(l, r) => binary(l, r, "|", false),
        Formula::Implies(l, r) => binary(l, r, "->", true),
        Formula::Iff(l, r) => binary(l, r, "<->", true),
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let q = if matches!(f, Formula::Forall(..)) { "forall" } else { "exists" };
            let wrap = is_infix_atom(g) || precedence(g) < 5;
            format!("{q} {v} {}", parens(print_formula(g), wrap))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn quantifier_prefix() {
        let f = parse_formula("forall x exists y (x in y)", &Signature::set()).unwrap();
        let expect = Formula::forall("x", Formula::exists("y", Formula::pred("in", vec![v("x"), v("y")])));
        assert_eq!(f, expect);
        assert_eq!(print_formula(&f), "forall x exists y (x in y)");
    }

    #[test]
    fn ps4_prime_shape() {
        let f = parse_formula("S(x,y,z) & S(z,w,z) -> S(x,w,x) | w = y", &Signature::ps0_prime()).unwrap();
        let s = |a: &str, b: &str, c: &str| Formula::pred_vars("S", &[a, b, c]);
        let expect = Formula::implies(
            Formula::and(s("x", "y", "z"), s("z", "w", "z")),
            Formula::or(s("x", "w", "x"), Formula::eq(v("w"), v("y"))),
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn dangling_membership_is_a_syntax_error() {
        let e = parse_formula("x in", &Signature::set()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        assert_eq!(e.column, 5);
    }

    #[test]
    fn error_kinds() {
        assert_eq!(parse_formula("x # y", &Signature::set()).unwrap_err().kind, ParseErrorKind::Lexical);
        let e = parse_formula("S(x,y) & x = y", &Signature::ps0_prime()).unwrap_err();
        assert_eq!((e.kind, e.column), (ParseErrorKind::Arity, 1));
        let e = parse_formula("x;y = x", &Signature::set()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownSymbol);
        assert!(parse_formula("forall a (a = a)", &Signature::qt()).is_err());
    }

    #[test]
    fn precedence_and_associativity() {
        let sig = Signature::set();
        let f = parse_formula("x in y & y in z | x = z -> z = x <-> y = y", &sig).unwrap();
        assert!(matches!(f, Formula::Iff(..)));
        let f = parse_formula("x = y -> y = z -> z = x", &sig).unwrap();
        match f {
            Formula::Implies(_, r) => assert!(matches!(*r, Formula::Implies(..))),
            _ => panic!("expected implication"),
        }
        // quantifiers bind tightly
        let f = parse_formula("forall x x = x -> y = y", &sig).unwrap();
        assert!(matches!(f, Formula::Implies(..)));
    }

    #[test]
    fn terms() {
        let q = Signature::q();
        let f = parse_formula("x + y' = (x + y)'", &q).unwrap();
        assert_eq!(print_formula(&f), "x + y' = (x + y)'");
        let f = parse_formula("x*y' = x*y + x", &q).unwrap();
        assert_eq!(print_formula(&f), "x*y' = x*y + x");
        let qt = Signature::qt();
        let f = parse_formula("(x*y)*z = x*(y*z)", &qt).unwrap();
        assert_eq!(print_formula(&f), "(x*y)*z = x*(y*z)");
        assert_eq!(f, parse_formula("x*y*z = x*(y*z)", &qt).unwrap());
        // primes are part of names when ' is not a function symbol
        let f = parse_formula("forall z' (z' = x)", &Signature::set()).unwrap();
        assert_eq!(f.free_vars(), ["x"]);
    }

    #[test]
    fn negations_print_with_brackets_around_infix_atoms() {
        let f = parse_formula("~x = y & ~S(0,x,0)", &Signature::ps0_prime()).unwrap();
        assert_eq!(print_formula(&f), "~(x = y) & ~S(0,x,0)");
    }

    #[test]
    fn batch_lines() {
        let text = "# axioms\nexists x forall y ~(y in x)\n\nforall x (x = x)\n";
        assert_eq!(parse_lines(text, &Signature::set()).unwrap().len(), 2);
        let err = parse_lines("x = x\nx in\n", &Signature::set()).unwrap_err();
        assert_eq!(err.0, 2);
    }
}
