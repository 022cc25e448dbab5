//! The two interval-induction strategies.
//!
//! [`creep`] pushes a reach point from `a` to `b` with right steps, gluing
//! adjacent witnesses, and recovers from geometric stalls through the left
//! oracle. [`bisect_cover`] splits the interval until every leaf sits inside
//! one accepted ball, then folds the ball witnesses left to right with the
//! overlapping combinator.
//!
//! Both strategies are deterministic: identical inputs give identical
//! traces, and [`replay_creep`] / [`replay_bisect`] rebuild the final witness
//! from a trace by re-querying the oracles.

mod algebra;
mod bisect;
mod creep;
mod trace;

pub use algebra::{Ball, CombineError, CreepAlgebra, LeftStep, Overlap, OverlapAlgebra, Probe};
pub use bisect::{bisect_cover, replay_bisect};
pub use creep::{creep, replay_creep};
pub use trace::{Trace, TraceEvent};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domain::Interval;
use crate::numeric::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbePolicy {
    Midpoint,
    EndpointsThenMidpoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Upper bound on right steps (creep) or visited nodes (bisection).
    pub max_steps: u64,
    /// Minimum advance per right step before a step counts as slow;
    /// `None` means `width / 2^20`.
    pub stall_threshold: Option<Rational>,
    pub max_bisect_depth: u32,
    pub probe_policy: ProbePolicy,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_steps: 1_000_000,
            stall_threshold: None,
            max_bisect_depth: 64,
            probe_policy: ProbePolicy::EndpointsThenMidpoint,
        }
    }
}

impl EngineConfig {
    pub fn with_max_depth(mut self, depth: u32) -> Self {
        self.max_bisect_depth = depth;
        self
    }

    pub fn with_max_steps(mut self, steps: u64) -> Self {
        self.max_steps = steps;
        self
    }

    pub(crate) fn threshold_for(&self, interval: &Interval) -> Rational {
        self.stall_threshold
            .clone()
            .unwrap_or_else(|| &interval.width() * &Rational::pow2(-20))
    }
}

/// Consecutive slow right steps that trigger stall recovery.
pub const SLOW_STEPS_BEFORE_STALL: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    StallNoRecovery,
    StepLimit,
    DepthLimit,
    OracleFailure,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::StallNoRecovery => "stall-no-recovery",
            FailureReason::StepLimit => "step-limit",
            FailureReason::DepthLimit => "depth-limit",
            FailureReason::OracleFailure => "oracle-failure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", untagged)]
pub enum Location {
    Point(Rational),
    Leaf(Interval),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Point(p) => write!(f, "{p}"),
            Location::Leaf(i) => write!(f, "{i}"),
        }
    }
}

/// An engine run that did not produce a witness, with the tightest known
/// localization of the problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{reason} at {location}{}", detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default())]
pub struct EngineFailure {
    pub reason: FailureReason,
    pub location: Location,
    pub detail: Option<String>,
    pub trace: Trace,
}

impl EngineFailure {
    pub fn point(&self) -> Option<&Rational> {
        match &self.location {
            Location::Point(p) => Some(p),
            Location::Leaf(_) => None,
        }
    }

    pub fn leaf(&self) -> Option<&Interval> {
        match &self.location {
            Location::Leaf(l) => Some(l),
            Location::Point(_) => None,
        }
    }
}

/// A successful run: a witness for the whole interval and how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run<W> {
    pub witness: W,
    pub trace: Trace,
}
