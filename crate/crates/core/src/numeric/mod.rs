//! Exact rational scalars and interval enclosures.
//!
//! Every endpoint, tag and radius in the crate is a [`Rational`]. Rational
//! arithmetic is closed under the field operations, so enclosures are exact
//! and need no outward rounding.

mod enclosure;
mod rational;

pub use enclosure::{encl_arith, encl_width, Enclosure};
pub use rational::{rat_arith, rat_cmp, BinaryOp, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("undefined value: {lhs} / {rhs}")]
    UndefinedValue { lhs: String, rhs: String },
    #[error("indeterminate enclosure: {numerator} / {denominator} (denominator contains 0)")]
    IndeterminateEnclosure { numerator: String, denominator: String },
    #[error("inverted bounds [{lo}, {hi}]")]
    InvertedBounds { lo: String, hi: String },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
