//! Theorem instances.
//!
//! Each instance binds problem data to a witness algebra, runs one of the
//! engine strategies, and returns a certificate. Every certificate type has a
//! `verify_*` function that checks it by direct evaluation, without going
//! through the engine.
//!
//! | instance | strategy | certificate |
//! |---|---|---|
//! | [`bound_on`] | bisection | [`BoundCertificate`] |
//! | [`constant_sign`] | bisection | [`SignCertificate`] |
//! | [`usc_max`] | bisection | [`ArgmaxCandidate`] |
//! | [`strict_increase`] | creep | [`MonotoneChain`] |
//! | [`increase_via_tilt`] | creep | [`TiltCertificate`] |
//! | [`uniform_delta`] | bisection | [`UniformModulus`] |
//! | [`cousin_partition`] | creep or bisection | [`TaggedPartition`] |
//! | [`dini_index`] | bisection | [`IndexCertificate`] |
//! | [`finite_subcover`] | bisection | [`SubcoverCertificate`] |
//! | [`enumerate_isolated`] | bisection | `Vec<Rational>` |
//! | [`cantor_empty_index`] | bisection | [`IndexCertificate`] |
//!
//! [`TaggedPartition`]: crate::domain::TaggedPartition

mod bolzano;
mod bound;
mod cantor;
mod cousin;
mod dini;
mod heine;
mod heine_borel;
mod maximum;
mod monotone;
mod sign;

pub use bolzano::{enumerate_isolated, verify_isolated};
pub use bound::{bound_on, verify_bound, BoundCertificate};
pub use cantor::{cantor_empty_index, cantor_family_index, verify_cantor_index, SetFamily};
pub use cousin::{cousin_partition, verify_partition, CousinStrategy};
pub use dini::{dini_index, verify_dini_index, DiniOptions};
pub use heine::{heine_combine, uniform_delta, verify_modulus, UniformModulus};
pub use heine_borel::{finite_subcover, verify_subcover, SubcoverCertificate};
pub use maximum::{usc_max, verify_argmax, ArgmaxCandidate, SearchBudget};
pub use monotone::{
    dini_derivate_bound, increase_via_tilt, strict_increase, verify_chain, verify_tilt,
    DerivateKind, DiniDerivateBound, MonotoneChain, TiltCertificate,
};
pub use sign::{constant_sign, verify_sign, Sign, SignCertificate};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domain::{ClosedSet, Interval};
use crate::engine::{Ball, EngineConfig, EngineFailure, Probe, Trace};
use crate::expr::{eval_enclosure, EvalError, Expr};
use crate::numeric::{Enclosure, Rational};

/// Grid size used by the sampling verifiers.
pub const VERIFY_GRID: u64 = 10_000;

/// A certificate together with the engine trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified<C> {
    pub certificate: C,
    pub trace: Trace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("{0}")]
    Engine(#[from] EngineFailure),
    #[error("empty domain")]
    EmptyDomain,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("scan limit reached at {at}: {detail}")]
    ScanLimit { at: Rational, detail: String, trace: Trace },
    #[error("hypothesis violated at {at}: {detail}")]
    HypothesisViolation { at: Rational, detail: String, trace: Trace },
    #[error("empty window: r_or_t equals s = {0}")]
    EmptyWindow(Rational),
    #[error("{0}")]
    Eval(#[from] EvalError),
}

impl InstanceError {
    pub fn trace(&self) -> Option<&Trace> {
        match self {
            InstanceError::Engine(e) => Some(&e.trace),
            InstanceError::ScanLimit { trace, .. }
            | InstanceError::HypothesisViolation { trace, .. } => Some(trace),
            _ => None,
        }
    }
}

/// A verifier found the certificate wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{reason}{}", at.as_ref().map(|p| format!(" at {p}")).unwrap_or_default())]
pub struct Violation {
    pub at: Option<Rational>,
    pub reason: String,
}

impl Violation {
    pub fn new(reason: impl Into<String>) -> Self {
        Violation { at: None, reason: reason.into() }
    }

    pub fn at(at: &Rational, reason: impl Into<String>) -> Self {
        Violation { at: Some(at.clone()), reason: reason.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexRole {
    Dini,
    Cantor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexCertificate {
    pub n: u64,
    pub role: IndexRole,
}

/// Largest ball radius tried by the refining oracles: the width of the
/// interval, or 1 when it is degenerate.
fn start_radius(interval: &Interval) -> Rational {
    let w = interval.width();
    if w.is_positive() {
        w
    } else {
        Rational::one()
    }
}

fn halvings(cfg: &EngineConfig) -> u32 {
    cfg.max_bisect_depth + 4
}

/// Halves `δ` from [`start_radius`] until `accept` takes the clipped ball.
/// With `wide`, then bisects between the accepted and the last rejected
/// radius with the remaining budget, keeping the largest accepted ball.
fn refine<W>(
    interval: &Interval,
    s: &Rational,
    halvings: u32,
    wide: bool,
    mut accept: impl FnMut(&Interval) -> Option<W>,
) -> Probe<W> {
    let mut try_radius = |delta: &Rational| {
        let ball = interval.clip_ball(s, delta).expect("probe lies in the interval");
        accept(&ball)
    };
    let mut delta = start_radius(interval);
    for k in 0..=halvings {
        let Some(witness) = try_radius(&delta) else {
            delta = delta.half();
            continue;
        };
        let mut best = Ball { delta: delta.clone(), witness };
        let mut rejected = &delta + &delta;
        for _ in 0..if wide && k > 0 { halvings - k } else { 0 } {
            let mid = best.delta.midpoint(&rejected);
            match try_radius(&mid) {
                Some(witness) => best = Ball { delta: mid, witness },
                None => rejected = mid,
            }
        }
        return Probe::Accept(best);
    }
    Probe::Inconclusive
}

/// Radius of a ball around `s ∉ set` that misses the set.
fn miss_radius(set: &ClosedSet, s: &Rational, interval: &Interval) -> Rational {
    set.distance(s).map(|d| d.half()).unwrap_or_else(|| start_radius(interval))
}

/// Hull of the enclosures of `f` over the components of `set ∩ ball`;
/// `None` when the intersection is empty.
fn enclose_on(
    f: &Expr,
    set: &ClosedSet,
    ball: &Interval,
    n: Option<u64>,
) -> Result<Option<Enclosure>, EvalError> {
    let mut hull: Option<Enclosure> = None;
    for piece in set.intersect(ball).components() {
        let e = eval_enclosure(f, &piece.enclosure(), n)?;
        hull = Some(match hull {
            Some(h) => h.hull(&e),
            None => e,
        });
    }
    Ok(hull)
}

fn require_subset(set: &ClosedSet, interval: &Interval) -> Result<(), InstanceError> {
    if set.is_subset_of(&ClosedSet::single(interval.clone())) {
        Ok(())
    } else {
        Err(InstanceError::InvalidInput(format!("set is not contained in {interval}")))
    }
}

fn require_positive(name: &str, v: &Rational) -> Result<(), InstanceError> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(InstanceError::InvalidInput(format!("{name} must be positive, got {v}")))
    }
}
