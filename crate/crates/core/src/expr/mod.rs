//! Expression language for functions `f(x)`, gauges `δ(x)` and sequences
//! `f(x, n)`.
//!
//! Literals are exact: `0.3` is `3/10`, and `1/100` written with integer
//! parts is a single rational literal. See [`parse`] for the grammar.

mod ast;
mod eval;
mod parse;

pub use ast::{Condition, Exponent, Expr};
pub use eval::{eval_enclosure, eval_rat, Env, EvalError};
pub use parse::{parse, ParseError};
