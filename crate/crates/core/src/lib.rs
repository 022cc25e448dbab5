//! Interval induction over exact rationals.
//!
//! A property of subintervals of `[a, b]` that is closed under gluing and
//! holds locally around every point holds on all of `[a, b]`. This crate turns
//! that principle into two search strategies that assemble finite,
//! independently checkable witnesses:
//!
//! - [`engine::creep`] extends a reach point with right steps, glues adjacent
//!   pieces, and recovers from stalls through a left-sided oracle;
//! - [`engine::bisect_cover`] bisects until every leaf sits in one locally
//!   accepted ball, then glues overlapping balls left to right.
//!
//! [`theorems`] binds the strategies to ten classical results (boundedness,
//! constant sign, maxima, monotonicity, uniform continuity, Cousin, Dini,
//! Heine–Borel, Bolzano–Weierstrass, Cantor) and pairs every certificate with
//! a verifier that does not reuse the engine.

// error values carry exact rationals
#![allow(clippy::result_large_err)]

pub mod cli;
pub mod domain;
pub mod engine;
pub mod expr;
pub mod numeric;
pub mod theorems;

pub use domain::{ClosedSet, Gauge, Interval, OpenCover, OpenIntervalSpec, PointSet, TaggedPartition};
pub use engine::{EngineConfig, EngineFailure, FailureReason, Trace};
pub use expr::Expr;
pub use numeric::{Enclosure, Rational};
