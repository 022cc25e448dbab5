use std::fmt;

use crate::numeric::{BinaryOp, Rational};

/// Exponent of an integer power: a literal, or the sequence index `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exponent {
    Const(u32),
    Index,
}

/// `x <= bound` or `x < bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Condition {
    pub strict: bool,
    pub bound: Rational,
}

impl Condition {
    pub fn holds(&self, x: &Rational) -> bool {
        if self.strict { x < &self.bound } else { x <= &self.bound }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Lit(Rational),
    X,
    N,
    Neg(Box<Expr>),
    Abs(Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    Piecewise { cond: Condition, then: Box<Expr>, otherwise: Box<Expr> },
}

impl Expr {
    pub fn lit(value: Rational) -> Expr {
        Expr::Lit(value)
    }

    pub fn binary(op: BinaryOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    /// `self + slope · x`.
    pub fn tilted(&self, slope: &Rational) -> Expr {
        Expr::binary(
            BinaryOp::Add,
            self.clone(),
            Expr::binary(BinaryOp::Mul, Expr::Lit(slope.clone()), Expr::X),
        )
    }

    pub fn mentions_index(&self) -> bool {
        match self {
            Expr::N => true,
            Expr::Lit(_) | Expr::X => false,
            Expr::Neg(e) | Expr::Abs(e) => e.mentions_index(),
            Expr::Pow(e, exp) => *exp == Exponent::Index || e.mentions_index(),
            Expr::Binary(_, l, r) => l.mentions_index() || r.mentions_index(),
            Expr::Piecewise { then, otherwise, .. } => {
                then.mentions_index() || otherwise.mentions_index()
            }
        }
    }
}

fn write_literal(f: &mut fmt::Formatter<'_>, value: &Rational) -> fmt::Result {
    if value.is_negative() {
        write!(f, "(0 - {})", value.abs())
    } else {
        write!(f, "{value}")
    }
}

/// Fully parenthesized form that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(v) => write_literal(f, v),
            Expr::X => f.write_str("x"),
            Expr::N => f.write_str("n"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Abs(e) => write!(f, "abs({e})"),
            Expr::Binary(op, l, r) => {
                // integer literals on both sides of `/` would re-parse as a
                // single rational literal
                let wrap = |e: &Expr| matches!(e, Expr::Lit(_));
                let side = |e: &Expr| if wrap(e) { format!("({e})") } else { e.to_string() };
                match op {
                    BinaryOp::Add => write!(f, "({} + {})", l, r),
                    BinaryOp::Sub => write!(f, "({} - {})", l, r),
                    BinaryOp::Mul => write!(f, "({} * {})", l, r),
                    BinaryOp::Div => write!(f, "({} / {})", side(l), side(r)),
                    BinaryOp::Min => write!(f, "min({l}, {r})"),
                    BinaryOp::Max => write!(f, "max({l}, {r})"),
                }
            }
            Expr::Pow(base, exp) => match exp {
                Exponent::Const(k) => write!(f, "(({base})^{k})"),
                Exponent::Index => write!(f, "(({base})^n)"),
            },
            Expr::Piecewise { cond, then, otherwise } => {
                let op = if cond.strict { "<" } else { "<=" };
                write!(f, "pw(x{op}{}, {then}, {otherwise})", cond.bound)
            }
        }
    }
}
