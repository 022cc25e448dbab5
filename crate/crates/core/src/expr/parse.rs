//! Recursive-descent parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := power (('*' | '/') power)*
//! power   := unary ('^' exponent)?
//! unary   := '-' unary | primary
//! primary := number | number '/' integer | 'x' | 'n' | '(' expr ')'
//!          | abs(expr) | min(expr, expr) | max(expr, expr)
//!          | pow(expr, exponent) | pw(x ('<=' | '<') literal, expr, expr)
//! exponent:= integer | 'n'
//! ```
//!
//! Unary minus binds tighter than `^`, so `-x^2` is `(-x)^2`.

use std::fmt;

use thiserror::Error;

use super::{Condition, Exponent, Expr};
use crate::numeric::{BinaryOp, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String>, found: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownIdentifier { offset, .. } => {
                *offset
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Le,
    Lt,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(n) => write!(f, "number `{n}`"),
            Tok::Ident(i) => write!(f, "`{i}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    let frac = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == frac {
                        return Err(ParseError::Syntax {
                            offset: i,
                            expected: vec!["digit".into()],
                            found: found_at(text, i),
                        });
                    }
                }
                out.push((Tok::Number(text[start..i].to_string()), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'<' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    i += 1;
                    Tok::Le
                } else {
                    Tok::Lt
                }
            }
            _ => {
                return Err(ParseError::Syntax {
                    offset: i,
                    expected: vec!["expression".into()],
                    found: found_at(text, i),
                })
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

fn found_at(text: &str, offset: usize) -> String {
    text[offset..].chars().next().map_or("end of input".into(), |c| format!("`{c}`"))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

const OPERAND: &[&str] = &["number", "`x`", "`n`", "`(`", "`-`", "function call"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        &self.toks[(self.pos + ahead).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinaryOp::Add,
                Tok::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinaryOp::Mul,
                Tok::Slash => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.power()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.unary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn exponent(&mut self) -> Result<Exponent, ParseError> {
        match self.peek().clone() {
            Tok::Number(text) if text.bytes().all(|b| b.is_ascii_digit()) => {
                let k = text.parse::<u32>().map_err(|_| self.error(&["exponent below 2^32"]))?;
                self.bump();
                Ok(Exponent::Const(k))
            }
            Tok::Ident(name) if name == "n" => {
                self.bump();
                Ok(Exponent::Index)
            }
            _ => Err(self.error(&["non-negative integer exponent", "`n`"])),
        }
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let offset = self.offset();
        let Tok::Number(text) = self.peek().clone() else {
            return Err(self.error(&["number"]));
        };
        self.bump();
        let value: Rational = text.parse().map_err(|_| ParseError::Syntax {
            offset,
            expected: vec!["number".into()],
            found: format!("`{text}`"),
        })?;
        // `p/q` with integer p, q is a single literal unless q is a base of `^`
        if text.bytes().all(|b| b.is_ascii_digit()) && *self.peek() == Tok::Slash {
            if let Tok::Number(den) = self.peek_at(1).clone() {
                let is_int = den.bytes().all(|b| b.is_ascii_digit());
                let nonzero = den.bytes().any(|b| b != b'0');
                if is_int && nonzero && *self.peek_at(2) != Tok::Caret {
                    self.bump();
                    self.bump();
                    let den: Rational = den.parse().expect("digits parse");
                    return Ok(value.checked_div(&den).expect("nonzero denominator"));
                }
            }
        }
        Ok(value)
    }

    fn signed_literal(&mut self) -> Result<Rational, ParseError> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let v = self.number()?;
        Ok(if negative { -v } else { v })
    }

    fn args_end(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::RParen, "`)`")
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Number(_) => Ok(Expr::Lit(self.number()?)),
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.args_end()?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "n" => Ok(Expr::N),
                    "abs" | "min" | "max" | "pow" | "pw" => {
                        self.expect(Tok::LParen, "`(`")?;
                        self.call(&name)
                    }
                    _ => Err(ParseError::UnknownIdentifier { offset, name }),
                }
            }
            _ => Err(self.error(OPERAND)),
        }
    }

    fn call(&mut self, name: &str) -> Result<Expr, ParseError> {
        let e = match name {
            "abs" => Expr::Abs(Box::new(self.expr()?)),
            "min" | "max" => {
                let l = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let r = self.expr()?;
                let op = if name == "min" { BinaryOp::Min } else { BinaryOp::Max };
                Expr::binary(op, l, r)
            }
            "pow" => {
                let base = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                Expr::Pow(Box::new(base), self.exponent()?)
            }
            "pw" => {
                match self.peek() {
                    Tok::Ident(v) if v == "x" => {
                        self.bump();
                    }
                    _ => return Err(self.error(&["`x`"])),
                }
                let strict = match self.peek() {
                    Tok::Le => false,
                    Tok::Lt => true,
                    _ => return Err(self.error(&["`<=`", "`<`"])),
                };
                self.bump();
                let bound = self.signed_literal()?;
                self.expect(Tok::Comma, "`,`")?;
                let then = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let otherwise = self.expr()?;
                Expr::Piecewise {
                    cond: Condition { strict, bound },
                    then: Box::new(then),
                    otherwise: Box::new(otherwise),
                }
            }
            _ => unreachable!("caller checks the name"),
        };
        self.args_end()?;
        Ok(e)
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

impl std::str::FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn bin(op: BinaryOp, l: Expr, r: Expr) -> Expr {
        Expr::binary(op, l, r)
    }

    #[test]
    fn sum_of_square_and_literal() {
        let e = parse("x*x + 1/100").unwrap();
        assert_eq!(
            e,
            bin(BinaryOp::Add, bin(BinaryOp::Mul, Expr::X, Expr::X), Expr::Lit(q("1/100")))
        );
    }

    #[test]
    fn piecewise() {
        let e = parse("pw(x<=1/2, x, 1 - x)").unwrap();
        assert_eq!(
            e,
            Expr::Piecewise {
                cond: Condition { strict: false, bound: q("1/2") },
                then: Box::new(Expr::X),
                otherwise: Box::new(bin(BinaryOp::Sub, Expr::Lit(q("1")), Expr::X)),
            }
        );
        let strict = parse("pw(x < -0.5, 1, 2)").unwrap();
        assert!(matches!(strict, Expr::Piecewise { cond: Condition { strict: true, .. }, .. }));
    }

    #[test]
    fn syntax_error_offset() {
        let err = parse("1 +* 2").unwrap_err();
        assert_eq!(err.offset(), 3);
        let ParseError::Syntax { expected, .. } = err else { panic!() };
        assert!(expected.iter().any(|e| e == "number"));
    }

    #[test]
    fn unknown_identifier() {
        assert_eq!(
            parse("x + y").unwrap_err(),
            ParseError::UnknownIdentifier { offset: 4, name: "y".into() }
        );
    }

    #[test]
    fn precedence_and_associativity() {
        // left associative
        assert_eq!(
            parse("x - 1 - 2").unwrap(),
            bin(BinaryOp::Sub, bin(BinaryOp::Sub, Expr::X, Expr::Lit(q("1"))), Expr::Lit(q("2")))
        );
        // unary minus binds tighter than ^
        assert_eq!(
            parse("-x^2").unwrap(),
            Expr::Pow(Box::new(Expr::Neg(Box::new(Expr::X))), Exponent::Const(2))
        );
        // ^ binds tighter than *
        assert_eq!(
            parse("2*x^3").unwrap(),
            bin(BinaryOp::Mul, Expr::Lit(q("2")), Expr::Pow(Box::new(Expr::X), Exponent::Const(3)))
        );
        // a literal denominator that is a power base is not folded
        assert_eq!(
            parse("3/10^2").unwrap(),
            bin(
                BinaryOp::Div,
                Expr::Lit(q("3")),
                Expr::Pow(Box::new(Expr::Lit(q("10"))), Exponent::Const(2))
            )
        );
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse("0.3").unwrap(), Expr::Lit(q("3/10")));
        assert!(parse("1.").is_err());
    }

    #[test]
    fn index_exponent() {
        assert_eq!(parse("x^n").unwrap(), Expr::Pow(Box::new(Expr::X), Exponent::Index));
        assert_eq!(parse("pow(x, 3)").unwrap(), Expr::Pow(Box::new(Expr::X), Exponent::Const(3)));
        assert!(parse("x^x").is_err());
        assert!(parse("x^1.5").is_err());
    }

    #[test]
    fn division_by_literal_zero_is_not_folded() {
        assert_eq!(
            parse("1/0").unwrap(),
            bin(BinaryOp::Div, Expr::Lit(q("1")), Expr::Lit(q("0")))
        );
    }

    #[test]
    fn trailing_garbage() {
        assert!(parse("x x").is_err());
        assert!(parse("(x").is_err());
        assert!(parse("min(x)").is_err());
        assert!(parse("").is_err());
        assert!(parse("x $ 1").is_err());
    }

    #[test]
    fn printed_form_reparses() {
        for text in [
            "x*x + 1/100",
            "pw(x<=1/2, x, 1 - x)",
            "abs(x - 1/3)",
            "-x^2 / (1/2)",
            "min(x, 1) * max(-x, 0.25)",
            "1/(x*x + 1/100)",
            "x^n + n",
            "pw(x < -3/4, 1, 2)",
            "(1) / (100)",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{text} printed as {e}");
        }
    }
}
