use thiserror::Error;

use crate::domain::Interval;
use crate::numeric::Rational;

/// A combinator refused its inputs. Sound oracles never trigger this; it
/// signals an instance bug or an unsound client oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct CombineError(pub String);

impl CombineError {
    pub fn new(msg: impl Into<String>) -> Self {
        CombineError(msg.into())
    }
}

/// Answer of the left oracle for a target `σ`: every `[x, σ]` with
/// `max(a, reach_from) ≤ x < σ` has a witness, produced by `factory(x)`.
pub struct LeftStep<'a, W> {
    pub reach_from: Rational,
    pub factory: Box<dyn Fn(&Rational) -> W + 'a>,
}

impl<'a, W> LeftStep<'a, W> {
    pub fn new(reach_from: Rational, factory: impl Fn(&Rational) -> W + 'a) -> Self {
        LeftStep { reach_from, factory: Box::new(factory) }
    }
}

/// Witnesses for the creeping strategy: additivity plus one-sided local
/// oracles.
pub trait CreepAlgebra {
    type Witness;

    /// Witness for the degenerate interval `[at, at]`.
    fn unit(&self, at: &Rational) -> Self::Witness;

    /// Witness for `[a, s]` and witness for `[s, t]` give one for `[a, t]`.
    fn combine_adjacent(
        &self,
        left: Self::Witness,
        right: Self::Witness,
    ) -> Result<Self::Witness, CombineError>;

    /// Some `t` with `s < t ≤ b` and a witness for `[s, t]`.
    fn right_oracle(&self, s: &Rational) -> Option<(Rational, Self::Witness)>;

    /// Some `r < σ` such that every `[x, σ]`, `max(a, r) ≤ x < σ`, has a
    /// witness.
    fn left_oracle(&self, target: &Rational) -> Option<LeftStep<'_, Self::Witness>>;
}

/// A ball accepted by the covering oracle: the witness holds on
/// `[a, b] ∩ [s − delta, s + delta]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball<W> {
    pub delta: Rational,
    pub witness: W,
}

/// Result of probing the ball oracle at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Probe<W> {
    Accept(Ball<W>),
    /// No usable ball at this precision; the engine tries other probes or
    /// splits the leaf.
    Inconclusive,
    /// The local hypothesis is false at this point; the run aborts.
    Refuted(String),
}

/// Where two folded witnesses meet.
///
/// The accumulated witness covers `[a, s]`, the incoming one `[r, t]`, with
/// `r < joint ≤ s ≤ t`. `joint` is the shared endpoint of the two bisection
/// leaves being glued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub r: Rational,
    pub s: Rational,
    pub joint: Rational,
}

/// Witnesses for the covering strategy: overlapping additivity plus a ball
/// oracle.
pub trait OverlapAlgebra {
    type Witness;

    fn combine_overlap(
        &self,
        left: Self::Witness,
        right: Self::Witness,
        overlap: &Overlap,
    ) -> Result<Self::Witness, CombineError>;

    fn ball_oracle(&self, s: &Rational) -> Probe<Self::Witness>;

    /// Costlier second attempt at `s`, tried only on a leaf at the depth cap
    /// that no ordinary ball covers. Must accept every ball `ball_oracle`
    /// accepts at `s`, possibly with a larger radius.
    fn widened_ball_oracle(&self, _s: &Rational) -> Probe<Self::Witness> {
        Probe::Inconclusive
    }

    /// Extra probe points inside `leaf`, tried after the configured policy.
    fn probe_hints(&self, _leaf: &Interval) -> Vec<Rational> {
        Vec::new()
    }
}
