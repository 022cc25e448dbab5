use thiserror::Error;

use super::{Exponent, Expr};
use crate::domain::Interval;
use crate::numeric::{BinaryOp, Enclosure, NumericError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    Unbound(char),
    #[error("undefined value: {0}")]
    Undefined(NumericError),
    #[error("indeterminate enclosure: {0}")]
    Indeterminate(NumericError),
    #[error("index {0} does not fit an exponent")]
    ExponentOverflow(u64),
}

/// Bindings for `x` and the sequence index `n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Env {
    pub x: Option<Rational>,
    pub n: Option<u64>,
}

impl Env {
    pub fn at(x: Rational) -> Self {
        Env { x: Some(x), n: None }
    }

    pub fn indexed(x: Rational, n: u64) -> Self {
        Env { x: Some(x), n: Some(n) }
    }
}

fn index_exponent(n: Option<u64>) -> Result<u32, EvalError> {
    let n = n.ok_or(EvalError::Unbound('n'))?;
    u32::try_from(n).map_err(|_| EvalError::ExponentOverflow(n))
}

/// Exact evaluation.
pub fn eval_rat(e: &Expr, env: &Env) -> Result<Rational, EvalError> {
    Ok(match e {
        Expr::Lit(v) => v.clone(),
        Expr::X => env.x.clone().ok_or(EvalError::Unbound('x'))?,
        Expr::N => Rational::from(env.n.ok_or(EvalError::Unbound('n'))? as i64),
        Expr::Neg(a) => -eval_rat(a, env)?,
        Expr::Abs(a) => eval_rat(a, env)?.abs(),
        Expr::Binary(op, l, r) => {
            let l = eval_rat(l, env)?;
            let r = eval_rat(r, env)?;
            l.apply(*op, &r).map_err(EvalError::Undefined)?
        }
        Expr::Pow(base, exp) => {
            let k = match exp {
                Exponent::Const(k) => *k,
                Exponent::Index => index_exponent(env.n)?,
            };
            eval_rat(base, env)?.powi(k)
        }
        Expr::Piecewise { cond, then, otherwise } => {
            let x = env.x.as_ref().ok_or(EvalError::Unbound('x'))?;
            if cond.holds(x) {
                eval_rat(then, env)?
            } else {
                eval_rat(otherwise, env)?
            }
        }
    })
}

/// Inclusion-sound enclosure of `e` over `x ∈ xs`.
///
/// `e * e` with structurally equal factors is treated as a square, which
/// removes the dependency effect for that common pattern.
pub fn eval_enclosure(e: &Expr, xs: &Enclosure, n: Option<u64>) -> Result<Enclosure, EvalError> {
    Ok(match e {
        Expr::Lit(v) => Enclosure::point(v.clone()),
        Expr::X => xs.clone(),
        Expr::N => Enclosure::point(Rational::from(n.ok_or(EvalError::Unbound('n'))? as i64)),
        Expr::Neg(a) => eval_enclosure(a, xs, n)?.neg(),
        Expr::Abs(a) => eval_enclosure(a, xs, n)?.abs(),
        Expr::Binary(BinaryOp::Mul, l, r) if l == r => eval_enclosure(l, xs, n)?.powi(2),
        Expr::Binary(op, l, r) => {
            let l = eval_enclosure(l, xs, n)?;
            let r = eval_enclosure(r, xs, n)?;
            l.apply(*op, &r).map_err(EvalError::Indeterminate)?
        }
        Expr::Pow(base, exp) => {
            let k = match exp {
                Exponent::Const(k) => *k,
                Exponent::Index => index_exponent(n)?,
            };
            eval_enclosure(base, xs, n)?.powi(k)
        }
        Expr::Piecewise { cond, then, otherwise } => {
            let c = &cond.bound;
            let all_then = if cond.strict { xs.hi() < c } else { xs.hi() <= c };
            let all_else = if cond.strict { xs.lo() >= c } else { xs.lo() > c };
            if all_then {
                eval_enclosure(then, xs, n)?
            } else if all_else {
                eval_enclosure(otherwise, xs, n)?
            } else {
                let left = Enclosure::new(xs.lo().clone(), c.clone()).expect("c inside xs");
                let right = Enclosure::new(c.clone(), xs.hi().clone()).expect("c inside xs");
                eval_enclosure(then, &left, n)?.hull(&eval_enclosure(otherwise, &right, n)?)
            }
        }
    })
}

impl Expr {
    /// Exact value at `x` (no index bound).
    pub fn at(&self, x: &Rational) -> Result<Rational, EvalError> {
        eval_rat(self, &Env::at(x.clone()))
    }

    pub fn at_index(&self, x: &Rational, n: u64) -> Result<Rational, EvalError> {
        eval_rat(self, &Env::indexed(x.clone(), n))
    }

    pub fn enclose(&self, over: &Interval) -> Result<Enclosure, EvalError> {
        eval_enclosure(self, &over.enclosure(), None)
    }

    pub fn enclose_indexed(&self, over: &Interval, n: u64) -> Result<Enclosure, EvalError> {
        eval_enclosure(self, &over.enclosure(), Some(n))
    }
}
