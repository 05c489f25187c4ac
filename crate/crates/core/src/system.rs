//! The `.sys` system-file format.
//!
//! ```text
//! # Burgers' equation
//! ring derivations=(t,x) indeterminates=(u)
//! ranking orderly tiebreak=(u)
//! chain B { u[0,2] - u[1,0] - 2*u[0,1]*u[0,0]; }
//! ```
//!
//! Grammar:
//!
//! ```text
//! file    := ring ranking chain+
//! ring    := "ring" "derivations" "=" "(" ident ("," ident)* ")"
//!            "indeterminates" "=" "(" ident ("," ident)* ")"
//! ranking := "ranking" "orderly" "tiebreak" "=" "(" ident ("<" ident)* ")"
//! chain   := "chain" ident "{" (poly ";")+ "}"
//! poly    := ["+"|"-"] term (("+"|"-") term)*
//! term    := atom ("*" atom)*
//! atom    := int ["/" posint] | ident "[" int ("," int)* "]" ["^" posint]
//! ```
//!
//! `#` starts a comment running to the end of the line.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::chains::DiffChain;
use crate::diffpoly::{Derivative, DiffPoly, MultiIndex, Ranking, RingSpec};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedChain {
    pub name: String,
    pub chain: DiffChain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub ring: RingSpec,
    pub ranking: Ranking,
    pub chains: Vec<NamedChain>,
}

impl SystemFile {
    pub fn chain(&self, name: &str) -> Option<&DiffChain> {
        self.chains.iter().find(|c| c.name == name).map(|c| &c.chain)
    }

    pub fn chain_names(&self) -> impl Iterator<Item = &str> {
        self.chains.iter().map(|c| c.name.as_str())
    }
}

impl FromStr for SystemFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_system(s)
    }
}

impl fmt::Display for SystemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ring derivations=({}) indeterminates=({})",
            self.ring.derivation_names().join(","),
            self.ring.indeterminate_names().join(",")
        )?;
        let tiebreak: Vec<&str> = self
            .ranking
            .tiebreak()
            .iter()
            .map(|&j| self.ring.indeterminate_names()[j].as_str())
            .collect();
        writeln!(f, "ranking orderly tiebreak=({})", tiebreak.join("<"))?;
        for named in &self.chains {
            writeln!(f, "chain {} {{", named.name)?;
            for p in named.chain.elements() {
                writeln!(f, "  {};", p.display(&self.ring, &self.ranking))?;
            }
            writeln!(f, "}}")?;
        }
        Ok(())
    }
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut p = Parser::new(text)?;
    let (ring, ranking) = p.header()?;
    let mut chains: Vec<NamedChain> = Vec::new();
    loop {
        let tok = p.peek().clone();
        if tok.kind == Kind::Eof {
            break;
        }
        p.keyword("chain")?;
        let (name, pos) = p.ident()?;
        if chains.iter().any(|c| c.name == name) {
            return Err(p.error_at(pos, format!("chain `{name}` defined twice")));
        }
        p.symbol('{')?;
        let mut elements = Vec::new();
        loop {
            elements.push(p.poly(&ring)?);
            p.symbol(';')?;
            if p.eat('}') {
                break;
            }
        }
        chains.push(NamedChain {
            name,
            chain: DiffChain::new(ring.clone(), ranking.clone(), elements)?,
        });
    }
    if chains.is_empty() {
        let pos = p.peek().pos;
        return Err(p.error_at(pos, "expected at least one `chain`".into()));
    }
    Ok(SystemFile {
        ring,
        ranking,
        chains,
    })
}

/// Parses a single polynomial over `ring`, e.g. `u[1]^2 - v[0]`.
pub fn parse_poly(text: &str, ring: &RingSpec) -> Result<DiffPoly> {
    let mut p = Parser::new(text)?;
    let poly = p.poly(ring)?;
    let tok = p.peek().clone();
    if tok.kind != Kind::Eof {
        return Err(p.error_at(tok.pos, format!("unexpected {} after polynomial", tok.kind)));
    }
    Ok(poly)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Ident(String),
    Int(BigInt),
    Symbol(char),
    Eof,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Ident(s) => write!(f, "`{s}`"),
            Kind::Int(i) => write!(f, "`{i}`"),
            Kind::Symbol(c) => write!(f, "`{c}`"),
            Kind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    pos: Pos,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            tokens.push(Token {
                kind: Kind::Int(s.parse().expect("digits parse")),
                pos,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            tokens.push(Token {
                kind: Kind::Ident(s),
                pos,
            });
        } else if "=(),<{};[]+-*^/".contains(c) {
            chars.next();
            column += 1;
            tokens.push(Token {
                kind: Kind::Symbol(c),
                pos,
            });
        } else {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    tokens.push(Token {
        kind: Kind::Eof,
        pos: Pos { line, column },
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn next(&mut self) -> Token {
        let tok = self.tokens[self.at].clone();
        if tok.kind != Kind::Eof {
            self.at += 1;
        }
        tok
    }

    fn error_at(&self, pos: Pos, message: String) -> Error {
        Error::Parse {
            line: pos.line,
            column: pos.column,
            message,
        }
    }

    fn unexpected(&self, tok: &Token, wanted: &str) -> Error {
        self.error_at(tok.pos, format!("expected {wanted}, found {}", tok.kind))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().kind == Kind::Symbol(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn symbol(&mut self, c: char) -> Result<Pos> {
        let tok = self.next();
        if tok.kind == Kind::Symbol(c) {
            Ok(tok.pos)
        } else {
            Err(self.unexpected(&tok, &format!("`{c}`")))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let tok = self.next();
        match &tok.kind {
            Kind::Ident(s) if s == word => Ok(()),
            _ => Err(self.unexpected(&tok, &format!("`{word}`"))),
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        let tok = self.next();
        match tok.kind {
            Kind::Ident(s) => Ok((s, tok.pos)),
            _ => Err(self.unexpected(&tok, "an identifier")),
        }
    }

    fn int(&mut self) -> Result<(BigInt, Pos)> {
        let tok = self.next();
        match tok.kind {
            Kind::Int(i) => Ok((i, tok.pos)),
            _ => Err(self.unexpected(&tok, "an integer")),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<(u32, Pos)> {
        let (i, pos) = self.int()?;
        let v = u32::try_from(i).map_err(|_| self.error_at(pos, format!("{what} is too large")))?;
        Ok((v, pos))
    }

    fn ident_list(&mut self, sep: char) -> Result<Vec<(String, Pos)>> {
        self.symbol('(')?;
        let mut out = vec![self.ident()?];
        while self.eat(sep) {
            out.push(self.ident()?);
        }
        self.symbol(')')?;
        Ok(out)
    }

    fn header(&mut self) -> Result<(RingSpec, Ranking)> {
        self.keyword("ring")?;
        self.keyword("derivations")?;
        self.symbol('=')?;
        let derivations = self.ident_list(',')?;
        self.keyword("indeterminates")?;
        let eq = self.symbol('=')?;
        let indeterminates = self.ident_list(',')?;
        let ring = RingSpec::new(
            derivations.into_iter().map(|(s, _)| s).collect(),
            indeterminates.into_iter().map(|(s, _)| s).collect(),
        )
        .map_err(|e| self.error_at(eq, e.to_string()))?;

        self.keyword("ranking")?;
        self.keyword("orderly")?;
        self.keyword("tiebreak")?;
        let eq = self.symbol('=')?;
        let mut order = Vec::new();
        for (name, pos) in self.ident_list('<')? {
            let j = ring.indeterminate_index(&name).ok_or(Error::UnknownIdentifier {
                line: pos.line,
                column: pos.column,
                name,
            })?;
            order.push(j);
        }
        if order.len() != ring.m() {
            return Err(self.error_at(
                eq,
                "tiebreak must list every indeterminate exactly once".into(),
            ));
        }
        let ranking = Ranking::with_tiebreak(order).map_err(|_| {
            self.error_at(eq, "tiebreak must list every indeterminate exactly once".into())
        })?;
        Ok((ring, ranking))
    }

    fn poly(&mut self, ring: &RingSpec) -> Result<DiffPoly> {
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        let mut acc = DiffPoly::zero();
        loop {
            let term = self.term(ring)?;
            acc = if negative { &acc - &term } else { &acc + &term };
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ring: &RingSpec) -> Result<DiffPoly> {
        let mut acc = self.atom(ring)?;
        while self.eat('*') {
            acc = &acc * &self.atom(ring)?;
        }
        Ok(acc)
    }

    fn atom(&mut self, ring: &RingSpec) -> Result<DiffPoly> {
        let tok = self.peek().clone();
        match tok.kind {
            Kind::Int(_) => {
                let (num, _) = self.int()?;
                let mut value = BigRational::from_integer(num);
                if self.eat('/') {
                    let (den, pos) = self.int()?;
                    if den.is_zero() {
                        return Err(self.error_at(pos, "zero denominator".into()));
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(DiffPoly::constant(value))
            }
            Kind::Ident(name) => {
                self.next();
                let j = ring
                    .indeterminate_index(&name)
                    .ok_or(Error::UnknownIdentifier {
                        line: tok.pos.line,
                        column: tok.pos.column,
                        name,
                    })?;
                let open = self.symbol('[')?;
                let mut exps = vec![self.small_int("derivative order")?.0];
                loop {
                    let t = self.next();
                    match t.kind {
                        Kind::Symbol(',') => exps.push(self.small_int("derivative order")?.0),
                        Kind::Symbol(']') => break,
                        Kind::Eof => return Err(self.error_at(open, "unclosed `[`".into())),
                        _ => return Err(self.unexpected(&t, "`,` or `]`")),
                    }
                }
                if exps.len() != ring.n() {
                    return Err(Error::ArityMismatch {
                        line: open.line,
                        column: open.column,
                        expected: ring.n(),
                        found: exps.len(),
                    });
                }
                let var = DiffPoly::var(Derivative::new(j, MultiIndex::new(exps)));
                if self.eat('^') {
                    let (e, pos) = self.small_int("exponent")?;
                    if e == 0 {
                        return Err(self.error_at(pos, "exponent must be positive".into()));
                    }
                    Ok(var.pow(e))
                } else {
                    Ok(var)
                }
            }
            _ => Err(self.unexpected(&tok, "a coefficient or a derivative")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NONPRIME: &str = "ring derivations=(t) indeterminates=(u,v)\n\
                        ranking orderly tiebreak=(u<v)\n\
                        chain S { u[1]^2 - v[0]; v[1]^2 - v[0]; }";

    const BURGERS: &str = "ring derivations=(t,x) indeterminates=(u)\n\
                           ranking orderly tiebreak=(u)\n\
                           chain B { u[0,2] - u[1,0] - 2*u[0,1]*u[0,0]; }";

    fn var(j: usize, mu: &[u32]) -> DiffPoly {
        DiffPoly::var(Derivative::new(j, MultiIndex::new(mu.to_vec())))
    }

    #[test]
    fn parses_nonprime_chain() {
        let sys = parse_system(NONPRIME).unwrap();
        assert_eq!(sys.ring.n(), 1);
        assert_eq!(sys.ring.m(), 2);
        let s = sys.chain("S").unwrap();
        assert_eq!(
            s.elements(),
            &[
                &var(0, &[1]).pow(2) - &var(1, &[0]),
                &var(1, &[1]).pow(2) - &var(1, &[0]),
            ]
        );
    }

    #[test]
    fn parses_burgers() {
        let sys = parse_system(BURGERS).unwrap();
        let b = &(&var(0, &[0, 2]) - &var(0, &[1, 0]))
            - &(&(&DiffPoly::integer(2) * &var(0, &[0, 1])) * &var(0, &[0, 0]));
        assert_eq!(sys.chain("B").unwrap().elements(), &[b]);
    }

    #[test]
    fn unclosed_bracket() {
        let ring = RingSpec::generic(2, 1);
        let err = parse_poly("u1[1,0", &ring).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 3,
                message: "unclosed `[`".into()
            }
        );
    }

    #[test]
    fn arity_and_unknown_names() {
        let ring = RingSpec::generic(2, 1);
        assert!(matches!(
            parse_poly("u1[1]", &ring),
            Err(Error::ArityMismatch { expected: 2, found: 1, .. })
        ));
        assert!(matches!(
            parse_poly("w[1,0]", &ring),
            Err(Error::UnknownIdentifier { ref name, .. }) if name == "w"
        ));
        let bad_tiebreak = "ring derivations=(t) indeterminates=(u)\nranking orderly tiebreak=(v)\nchain S { u[0]; }";
        assert!(matches!(
            parse_system(bad_tiebreak),
            Err(Error::UnknownIdentifier { line: 2, .. })
        ));
    }

    #[test]
    fn rationals_and_comments() {
        let ring = RingSpec::new(vec!["t".into()], vec!["u".into()]).unwrap();
        let p = parse_poly("# leading comment\n-3/4*u[2] + 1/2 # tail\n", &ring).unwrap();
        let expected = &var(0, &[2]).scale(&BigRational::new((-3).into(), 4.into()))
            + &DiffPoly::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!(p, expected);
        assert!(parse_poly("u[1]/0", &ring).is_err());
        assert!(parse_poly("1/0", &ring).is_err());
        assert!(parse_poly("u[1]^0", &ring).is_err());
    }

    #[test]
    fn structural_errors() {
        assert!(parse_system("ring derivations=(t) indeterminates=(u)\nranking orderly tiebreak=(u)\n").is_err());
        let dup = format!("{NONPRIME}\nchain S {{ u[0]; }}");
        assert!(matches!(parse_system(&dup), Err(Error::Parse { line: 4, .. })));
        let empty_chain = "ring derivations=(t) indeterminates=(u)\nranking orderly tiebreak=(u)\nchain S { }";
        assert!(parse_system(empty_chain).is_err());
        let missing_semicolon = "ring derivations=(t) indeterminates=(u)\nranking orderly tiebreak=(u)\nchain S { u[0] }";
        assert!(matches!(
            parse_system(missing_semicolon),
            Err(Error::Parse { line: 3, column: 16, .. })
        ));
        let dup_names = "ring derivations=(u) indeterminates=(u)\nranking orderly tiebreak=(u)\nchain S { u[0]; }";
        assert!(parse_system(dup_names).is_err());
    }

    #[test]
    fn pretty_print_round_trip() {
        for text in [NONPRIME, BURGERS] {
            let sys = parse_system(text).unwrap();
            let again = parse_system(&sys.to_string()).unwrap();
            assert_eq!(sys, again);
        }
    }
}
