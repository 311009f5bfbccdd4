//! The word language.
//!
//! ```text
//! expr := term+
//! term := atom | atom '^' int | '(' expr ')' | '(' expr ')' '^' int
//! atom := 's'[1-6] | 'R' | 'rho' | 'a1' | 'a2' | 'id'
//! int  := '-'? [0-9]+
//! ```
//!
//! Terms are separated by whitespace and a product is read left to right.
//! `^` must follow its atom or `)` directly, and the exponent must follow
//! `^` directly. `R` is one unit of disk rotation, `2π/30`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Atom {
    /// Circular half twist `σ_i`, `i ∈ 1..=6`.
    Sigma(u8),
    R,
    Rho,
    A1,
    A2,
    Id,
}

impl Atom {
    pub const ALL: [Atom; 11] = [
        Atom::Sigma(1),
        Atom::Sigma(2),
        Atom::Sigma(3),
        Atom::Sigma(4),
        Atom::Sigma(5),
        Atom::Sigma(6),
        Atom::R,
        Atom::Rho,
        Atom::A1,
        Atom::A2,
        Atom::Id,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown atom `{0}`")]
pub struct UnknownAtom(pub String);

impl FromStr for Atom {
    type Err = UnknownAtom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "R" => Atom::R,
            "rho" => Atom::Rho,
            "a1" => Atom::A1,
            "a2" => Atom::A2,
            "id" | "identity" => Atom::Id,
            _ => match s.strip_prefix('s').and_then(|d| d.parse::<u8>().ok()) {
                Some(i @ 1..=6) if s.len() == 2 => Atom::Sigma(i),
                _ => return Err(UnknownAtom(s.to_string())),
            },
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sigma(i) => write!(f, "s{i}"),
            Atom::R => write!(f, "R"),
            Atom::Rho => write!(f, "rho"),
            Atom::A1 => write!(f, "a1"),
            Atom::A2 => write!(f, "a2"),
            Atom::Id => write!(f, "id"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Atom(Atom),
    Power(Box<Expr>, i64),
    Product(Vec<Expr>),
}

impl Expr {
    pub fn product(mut terms: Vec<Expr>) -> Expr {
        if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Product(terms)
        }
    }

    pub fn pow(self, n: i64) -> Expr {
        Expr::Power(Box::new(self), n)
    }

    pub fn inverse(self) -> Expr {
        self.pow(-1)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(self, g: &Expr) -> Expr {
        Expr::Product(vec![g.clone(), self, g.clone().inverse()])
    }

    /// Flattens to a sequence of signed atoms, expanding powers.
    /// Fails with the required length once it would exceed `cap`.
    pub fn expand(&self, cap: usize) -> Result<Vec<(Atom, bool)>, usize> {
        let mut out = Vec::new();
        self.expand_into(false, &mut out, cap)?;
        Ok(out)
    }

    fn expand_into(&self, inverted: bool, out: &mut Vec<(Atom, bool)>, cap: usize) -> Result<(), usize> {
        match self {
            Expr::Atom(Atom::Id) => {}
            Expr::Atom(a) => {
                if out.len() >= cap {
                    return Err(cap);
                }
                out.push((*a, inverted));
            }
            Expr::Power(e, n) => {
                let inv = inverted ^ (*n < 0);
                for _ in 0..n.unsigned_abs() {
                    e.expand_into(inv, out, cap)?;
                }
            }
            Expr::Product(terms) => {
                if inverted {
                    for t in terms.iter().rev() {
                        t.expand_into(true, out, cap)?;
                    }
                } else {
                    for t in terms {
                        t.expand_into(false, out, cap)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Power(e, n) => match e.as_ref() {
                Expr::Atom(a) => write!(f, "{a}^{n}"),
                inner => write!(f, "({inner})^{n}"),
            },
            Expr::Product(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    match t {
                        Expr::Product(_) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression at position {0}")]
    Empty(usize),
    #[error("unknown atom `{name}` at position {pos}")]
    UnknownAtom { name: String, pos: usize },
    #[error("unexpected `{found}` at position {pos}")]
    Unexpected { found: char, pos: usize },
    #[error("expected integer exponent at position {0}")]
    ExpectedInt(usize),
    #[error("exponent out of range at position {0}")]
    IntOverflow(usize),
    #[error("unclosed `(` opened at position {0}")]
    Unclosed(usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Empty(p)
            | ParseError::ExpectedInt(p)
            | ParseError::IntOverflow(p)
            | ParseError::Unclosed(p) => Some(*p),
            ParseError::UnknownAtom { pos, .. } | ParseError::Unexpected { pos, .. } => Some(*pos),
            ParseError::UnexpectedEnd => None,
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let e = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(e),
        Some((pos, c)) => Err(ParseError::Unexpected { found: c, pos }),
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.len, |(o, _)| o)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some((_, ')')) => break,
                _ => terms.push(self.term()?),
            }
        }
        if terms.is_empty() {
            return Err(ParseError::Empty(self.offset()));
        }
        Ok(Expr::product(terms))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let (start, c) = self.peek().ok_or(ParseError::UnexpectedEnd)?;
        let base = if c == '(' {
            self.pos += 1;
            let inner = self.expr()?;
            match self.peek() {
                Some((_, ')')) => self.pos += 1,
                _ => return Err(ParseError::Unclosed(start)),
            }
            inner
        } else if c.is_ascii_alphanumeric() {
            let from = self.pos;
            while matches!(self.peek(), Some((_, c)) if c.is_ascii_alphanumeric() || c == '_') {
                self.pos += 1;
            }
            let name: String = self.chars[from..self.pos].iter().map(|&(_, c)| c).collect();
            let atom = name
                .parse::<Atom>()
                .map_err(|_| ParseError::UnknownAtom { name, pos: start })?;
            Expr::Atom(atom)
        } else {
            return Err(ParseError::Unexpected { found: c, pos: start });
        };
        if let Some((_, '^')) = self.peek() {
            self.pos += 1;
            let n = self.int()?;
            return Ok(base.pow(n));
        }
        match self.peek() {
            None | Some((_, ')')) | Some((_, '(')) => {}
            Some((_, c)) if c.is_whitespace() => {}
            Some((pos, c)) => return Err(ParseError::Unexpected { found: c, pos }),
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.offset();
        let from = self.pos;
        if let Some((_, '-')) = self.peek() {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while matches!(self.peek(), Some((_, c)) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(ParseError::ExpectedInt(start));
        }
        let text: String = self.chars[from..self.pos].iter().map(|&(_, c)| c).collect();
        text.parse::<i64>().map_err(|_| ParseError::IntOverflow(start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(a: Atom) -> Expr {
        Expr::Atom(a)
    }

    #[test]
    fn alpha2_definition_parses_as_product() {
        assert_eq!(
            parse("a1 s5 R").unwrap(),
            Expr::Product(vec![atom(Atom::A1), atom(Atom::Sigma(5)), atom(Atom::R)])
        );
    }

    #[test]
    fn powers_and_groups() {
        assert_eq!(parse("s1^-1").unwrap(), atom(Atom::Sigma(1)).pow(-1));
        assert_eq!(
            parse("(s5 s2)^-1").unwrap(),
            Expr::Product(vec![atom(Atom::Sigma(5)), atom(Atom::Sigma(2))]).pow(-1)
        );
        assert_eq!(parse("  (id)  ").unwrap(), atom(Atom::Id));
        assert_eq!(parse("rho^6").unwrap(), atom(Atom::Rho).pow(6));
        assert_eq!(parse("R^30 a2^5").unwrap().to_string(), "R^30 a2^5");
    }

    #[test]
    fn inverse_of_product_expands_reversed() {
        let e = parse("(s5 s2)^-1").unwrap();
        assert_eq!(
            e.expand(100).unwrap(),
            vec![(Atom::Sigma(2), true), (Atom::Sigma(5), true)]
        );
        assert!(parse("s1^5").unwrap().expand(3).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse(""), Err(ParseError::Empty(0)));
        assert_eq!(
            parse("s1 s7"),
            Err(ParseError::UnknownAtom { name: "s7".into(), pos: 3 })
        );
        assert_eq!(
            parse("s1s2"),
            Err(ParseError::UnknownAtom { name: "s1s2".into(), pos: 0 })
        );
        assert_eq!(parse("(s1 s2"), Err(ParseError::Unclosed(0)));
        assert_eq!(parse("s1^"), Err(ParseError::ExpectedInt(3)));
        assert_eq!(parse("s1^x"), Err(ParseError::ExpectedInt(3)));
        assert_eq!(parse("s1 ^2"), Err(ParseError::Unexpected { found: '^', pos: 3 }));
        assert_eq!(parse("s1)"), Err(ParseError::Unexpected { found: ')', pos: 2 }));
        assert_eq!(parse("()"), Err(ParseError::Empty(1)));
        assert_eq!(parse("s1^99999999999999999999"), Err(ParseError::IntOverflow(3)));
        assert_eq!(parse("s1,"), Err(ParseError::Unexpected { found: ',', pos: 2 }));
    }

    #[test]
    fn printing_parenthesises_nested_products() {
        let e = Expr::Product(vec![
            Expr::Product(vec![atom(Atom::Sigma(1)), atom(Atom::Sigma(2))]),
            atom(Atom::A2).pow(3),
        ]);
        assert_eq!(e.to_string(), "(s1 s2) a2^3");
        assert_eq!(parse(&e.to_string()).unwrap().to_string(), e.to_string());
    }
}
