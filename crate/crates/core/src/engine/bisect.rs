use super::{
    Ball, CombineError, EngineConfig, EngineFailure, FailureReason, Location, Overlap,
    OverlapAlgebra, Probe, ProbePolicy, Run, Trace, TraceEvent,
};
use crate::domain::Interval;
use crate::numeric::Rational;

/// Left-to-right fold of accepted balls. Holds the witness for `[a, reach]`.
struct Fold<W> {
    acc: Option<(W, Rational)>,
}

impl<W> Fold<W> {
    fn push<A: OverlapAlgebra<Witness = W>>(
        &mut self,
        alg: &A,
        leaf: &Interval,
        ball_lo: Rational,
        ball_hi: Rational,
        witness: W,
    ) -> Result<(), CombineError> {
        self.acc = Some(match self.acc.take() {
            None => (witness, ball_hi),
            // the new ball adds nothing beyond what is already covered
            Some((w, s)) if ball_hi <= s => (w, s),
            Some((w, s)) => {
                let overlap = Overlap { r: ball_lo, s, joint: leaf.lo().clone() };
                (alg.combine_overlap(w, witness, &overlap)?, ball_hi)
            }
        });
        Ok(())
    }
}

fn probes_for<A: OverlapAlgebra>(alg: &A, leaf: &Interval, policy: ProbePolicy) -> Vec<Rational> {
    let mut probes = match policy {
        ProbePolicy::Midpoint => vec![leaf.midpoint()],
        ProbePolicy::EndpointsThenMidpoint => {
            vec![leaf.lo().clone(), leaf.hi().clone(), leaf.midpoint()]
        }
    };
    probes.extend(alg.probe_hints(leaf).into_iter().filter(|p| leaf.contains(p)));
    let mut seen = Vec::with_capacity(probes.len());
    probes.retain(|p| {
        if seen.contains(p) {
            false
        } else {
            seen.push(p.clone());
            true
        }
    });
    probes
}

/// Clipped ball `[lo, hi]` when it contains `leaf`, with strict margin on
/// every side of the leaf that is interior to `[a, b]`.
fn covering_ball(
    interval: &Interval,
    leaf: &Interval,
    s: &Rational,
    delta: &Rational,
) -> Option<(Rational, Rational)> {
    let left = s - delta;
    let right = s + delta;
    // on the boundary of [a, b] reaching it is enough; inside, the ball must
    // reach strictly past the leaf
    let left_ok = if leaf.lo() == interval.lo() { &left <= leaf.lo() } else { &left < leaf.lo() };
    let right_ok = if leaf.hi() == interval.hi() { leaf.hi() <= &right } else { leaf.hi() < &right };
    (left_ok && right_ok).then(|| (left.max_with(interval.lo()), right.min_with(interval.hi())))
}

/// Covering strategy: bisect until each leaf sits in one accepted ball, then
/// glue the balls with the overlapping combinator.
pub fn bisect_cover<A: OverlapAlgebra>(
    interval: &Interval,
    alg: &A,
    cfg: &EngineConfig,
) -> Result<Run<A::Witness>, EngineFailure> {
    let mut trace = Trace::new();
    let mut fold = Fold { acc: None };
    let mut stack = vec![(interval.clone(), 0u32)];
    let mut visited = 0u64;

    while let Some((leaf, depth)) = stack.pop() {
        if visited >= cfg.max_steps {
            return Err(EngineFailure {
                reason: FailureReason::StepLimit,
                location: Location::Leaf(leaf),
                detail: None,
                trace,
            });
        }
        visited += 1;

        let mut accepted = None;
        let probes = probes_for(alg, &leaf, cfg.probe_policy);
        let widen = depth >= cfg.max_bisect_depth;
        for oracle in [A::ball_oracle as fn(&A, &Rational) -> Probe<A::Witness>, A::widened_ball_oracle] {
            for s in &probes {
                match oracle(alg, s) {
                    Probe::Accept(Ball { delta, witness }) => {
                        if !delta.is_positive() {
                            trace.push(TraceEvent::OracleFail { at: s.clone() });
                            return Err(EngineFailure {
                                reason: FailureReason::OracleFailure,
                                location: Location::Point(s.clone()),
                                detail: Some(format!("ball oracle returned radius {delta}")),
                                trace,
                            });
                        }
                        if let Some((lo, hi)) = covering_ball(interval, &leaf, s, &delta) {
                            accepted = Some((s.clone(), delta, lo, hi, witness));
                            break;
                        }
                    }
                    Probe::Inconclusive => {}
                    Probe::Refuted(detail) => {
                        trace.push(TraceEvent::OracleFail { at: s.clone() });
                        return Err(EngineFailure {
                            reason: FailureReason::OracleFailure,
                            location: Location::Point(s.clone()),
                            detail: Some(detail),
                            trace,
                        });
                    }
                }
            }
            // the widened oracle is a last resort at the depth cap
            if accepted.is_some() || !widen {
                break;
            }
        }

        match accepted {
            Some((s, delta, lo, hi, witness)) => {
                trace.push(TraceEvent::BallAccept { at: s.clone(), delta, leaf: leaf.clone() });
                if let Err(e) = fold.push(alg, &leaf, lo, hi, witness) {
                    return Err(EngineFailure {
                        reason: FailureReason::OracleFailure,
                        location: Location::Point(leaf.lo().clone()),
                        detail: Some(format!("combine_overlap: {e}")),
                        trace,
                    });
                }
            }
            None if depth >= cfg.max_bisect_depth => {
                return Err(EngineFailure {
                    reason: FailureReason::DepthLimit,
                    location: Location::Leaf(leaf),
                    detail: None,
                    trace,
                });
            }
            None => {
                let (left, right) = leaf.split();
                trace.push(TraceEvent::Split {
                    leaf: leaf.clone(),
                    left: left.clone(),
                    right: right.clone(),
                });
                stack.push((right, depth + 1));
                stack.push((left, depth + 1));
            }
        }
    }

    let (witness, _) = fold.acc.expect("the root interval always yields at least one leaf");
    Ok(Run { witness, trace })
}

/// Rebuilds a bisection witness from its trace by re-querying the ball
/// oracle at every accepted probe.
pub fn replay_bisect<A: OverlapAlgebra>(
    interval: &Interval,
    alg: &A,
    trace: &Trace,
) -> Result<A::Witness, CombineError> {
    let mut fold = Fold { acc: None };
    for event in trace.events() {
        let TraceEvent::BallAccept { at, delta, leaf } = event else {
            continue;
        };
        let oracles = [A::ball_oracle as fn(&A, &Rational) -> Probe<A::Witness>, A::widened_ball_oracle];
        let ball = oracles
            .into_iter()
            .find_map(|oracle| match oracle(alg, at) {
                Probe::Accept(ball) if &ball.delta == delta => Some(ball),
                _ => None,
            })
            .ok_or_else(|| CombineError::new(format!("ball oracle no longer accepts radius {delta} at {at}")))?;
        let (lo, hi) = covering_ball(interval, leaf, at, delta)
            .ok_or_else(|| CombineError::new(format!("ball at {at} does not cover {leaf}")))?;
        fold.push(alg, leaf, lo, hi, ball.witness)?;
    }
    fold.acc
        .map(|(w, _)| w)
        .ok_or_else(|| CombineError::new("trace has no accepted balls"))
}
