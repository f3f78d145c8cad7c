//! Boolean predicates over property profiles, e.g. `p6 & !p5` or
//! `connected ∧ ¬irreducible ∧ nonempty`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finspace::{FiniteSpace, PropertyProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flag {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    Irreducible,
    Connected,
    Nonempty,
    Discrete,
    TotallyDisconnected,
    PointwiseIrreducible,
    T0,
    /// `irr(X)` locally finite: true for every finite space.
    LocallyFinite,
}

impl Flag {
    fn lookup(name: &str) -> Option<Flag> {
        let key: String = name
            .chars()
            .filter(|c| *c != '_' && *c != '-')
            .collect::<String>()
            .to_ascii_lowercase();
        Some(match key.as_str() {
            "p1" | "locallyirreducible" => Flag::P1,
            "p2" => Flag::P2,
            "p3" => Flag::P3,
            "p4" => Flag::P4,
            "p5" => Flag::P5,
            "p6" => Flag::P6,
            "irreducible" => Flag::Irreducible,
            "connected" => Flag::Connected,
            "nonempty" => Flag::Nonempty,
            "discrete" => Flag::Discrete,
            "totallydisconnected" => Flag::TotallyDisconnected,
            "pointwise" | "pointwiseirreducible" => Flag::PointwiseIrreducible,
            "t0" => Flag::T0,
            "locallyfinite" | "irrlocallyfinite" => Flag::LocallyFinite,
            _ => return None,
        })
    }

    fn eval(self, p: &PropertyProfile, space: &FiniteSpace) -> bool {
        match self {
            Flag::P1 => p.p1,
            Flag::P2 => p.p2,
            Flag::P3 => p.p3,
            Flag::P4 => p.p4,
            Flag::P5 => p.p5,
            Flag::P6 => p.p6,
            Flag::Irreducible => p.irreducible,
            Flag::Connected => p.connected,
            Flag::Nonempty => p.nonempty,
            Flag::Discrete => p.discrete,
            Flag::TotallyDisconnected => p.totally_disconnected,
            Flag::PointwiseIrreducible => p.pointwise_irreducible_everywhere(),
            Flag::T0 => space.is_t0(),
            Flag::LocallyFinite => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Const(bool),
    Flag(Flag),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, p: &PropertyProfile, space: &FiniteSpace) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Flag(f) => f.eval(p, space),
            Expr::Not(e) => !e.eval(p, space),
            Expr::And(a, b) => a.eval(p, space) && b.eval(p, space),
            Expr::Or(a, b) => a.eval(p, space) || b.eval(p, space),
        }
    }
}

/// A parsed predicate. Keeps its source text as its identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicate {
    source: String,
    expr: Expr,
}

impl Predicate {
    pub fn parse(source: &str) -> Result<Self> {
        let tokens = tokenize(source)?;
        let mut parser = Parser { tokens, pos: 0 };
        let expr = parser.or()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Predicate(format!(
                "unexpected {:?} in {source:?}",
                parser.tokens[parser.pos]
            )));
        }
        Ok(Predicate {
            source: source.trim().to_string(),
            expr,
        })
    }

    pub fn id(&self) -> &str {
        &self.source
    }

    pub fn eval(&self, profile: &PropertyProfile, space: &FiniteSpace) -> bool {
        self.expr.eval(profile, space)
    }

    pub fn holds(&self, space: &FiniteSpace) -> bool {
        self.eval(&space.profile(), space)
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::parse(s)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '!' | '¬' | '~' => {
                chars.next();
                tokens.push(Token::Not);
            }
            '&' | '∧' => {
                chars.next();
                if c == '&' && chars.peek() == Some(&'&') {
                    chars.next();
                }
                tokens.push(Token::And);
            }
            '|' | '∨' => {
                chars.next();
                if c == '|' && chars.peek() == Some(&'|') {
                    chars.next();
                }
                tokens.push(Token::Or);
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(match word.to_ascii_lowercase().as_str() {
                    "not" => Token::Not,
                    "and" => Token::And,
                    "or" => Token::Or,
                    _ => Token::Ident(word),
                });
            }
            other => {
                return Err(Error::Predicate(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Not) => Ok(Expr::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let e = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::Predicate("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Token::Ident(name)) => match name.to_ascii_lowercase().as_str() {
                "true" => Ok(Expr::Const(true)),
                "false" => Ok(Expr::Const(false)),
                _ => Flag::lookup(&name)
                    .map(Expr::Flag)
                    .ok_or_else(|| Error::Predicate(format!("unknown flag {name:?}"))),
            },
            Some(t) => Err(Error::Predicate(format!("unexpected {t:?}"))),
            None => Err(Error::Predicate("unexpected end of expression".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ascii_and_unicode_forms() {
        let t = FiniteSpace::from_pairs(3, &[(2, 0), (2, 1)]).unwrap();
        for src in [
            "connected & !irreducible & nonempty",
            "connected ∧ ¬irreducible ∧ nonempty",
            "connected and not irreducible and nonempty",
            "(connected && !irreducible) && nonempty",
        ] {
            assert!(Predicate::parse(src).unwrap().holds(&t), "{src}");
        }
        assert!(Predicate::parse("locallyFinite & !p1").unwrap().holds(&t));
        assert!(!Predicate::parse("p6 | p1").unwrap().holds(&t));
        assert!(Predicate::parse("!p6 | false").unwrap().holds(&t));
    }

    #[test]
    fn precedence_and_binds_tighter() {
        let t = FiniteSpace::from_pairs(3, &[(2, 0), (2, 1)]).unwrap();
        // true | (false & false)
        assert!(Predicate::parse("connected | irreducible & p1").unwrap().holds(&t));
        assert!(!Predicate::parse("(connected | irreducible) & p1").unwrap().holds(&t));
    }

    #[test]
    fn rejects_garbage() {
        for src in ["", "p7", "p1 &", "(p1", "p1 p2", "p1 $ p2"] {
            assert!(Predicate::parse(src).is_err(), "{src:?}");
        }
    }
}
