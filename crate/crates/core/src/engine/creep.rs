use super::{
    CombineError, CreepAlgebra, EngineConfig, EngineFailure, FailureReason, Location, Run, Trace,
    TraceEvent, SLOW_STEPS_BEFORE_STALL,
};
use crate::domain::Interval;
use crate::numeric::Rational;

/// Limit of a geometric reach sequence from its last three terms, when the
/// advances are shrinking.
fn extrapolate(reaches: &[Rational]) -> Option<Rational> {
    let [s0, s1, s2] = reaches.get(reaches.len().checked_sub(3)?..)? else {
        return None;
    };
    let d1 = s1 - s0;
    let d2 = s2 - s1;
    let denom = &d1 - &d2;
    if !denom.is_positive() {
        return None;
    }
    Some(s2 + &(&d2 * &d2).checked_div(&denom).ok()?)
}

/// Creeping strategy: grow `[a, reach]` until it is all of `interval`.
pub fn creep<A: CreepAlgebra>(
    interval: &Interval,
    alg: &A,
    cfg: &EngineConfig,
) -> Result<Run<A::Witness>, EngineFailure> {
    let a = interval.lo();
    let b = interval.hi();
    let threshold = cfg.threshold_for(interval);
    let mut trace = Trace::new();
    let mut reach = a.clone();
    let mut acc = alg.unit(a);
    let mut reaches = vec![reach.clone()];
    let mut slow = 0u32;
    let mut steps = 0u64;

    let fail = |reason, at: Rational, detail: Option<String>, trace: Trace| EngineFailure {
        reason,
        location: Location::Point(at),
        detail,
        trace,
    };
    let combine_failed = |e: CombineError, at: &Rational, trace: Trace| {
        fail(FailureReason::OracleFailure, at.clone(), Some(format!("combine_adjacent: {e}")), trace)
    };

    while &reach < b {
        if steps >= cfg.max_steps {
            return Err(fail(FailureReason::StepLimit, reach, None, trace));
        }
        steps += 1;

        let Some((t, piece)) = alg.right_oracle(&reach) else {
            trace.push(TraceEvent::OracleFail { at: reach.clone() });
            return Err(fail(FailureReason::OracleFailure, reach, None, trace));
        };
        if t <= reach || &t > b {
            trace.push(TraceEvent::OracleFail { at: reach.clone() });
            let detail = format!("right oracle returned {t}, outside ]{reach}, {b}]");
            return Err(fail(FailureReason::OracleFailure, reach, Some(detail), trace));
        }
        acc = match alg.combine_adjacent(acc, piece) {
            Ok(w) => w,
            Err(e) => return Err(combine_failed(e, &reach, trace)),
        };
        trace.push(TraceEvent::RightStep { from: reach.clone(), to: t.clone() });
        let advance = &t - &reach;
        reach = t;
        reaches.push(reach.clone());
        slow = if advance < threshold { slow + 1 } else { 0 };

        if slow < SLOW_STEPS_BEFORE_STALL || &reach >= b {
            continue;
        }

        let limit = extrapolate(&reaches).filter(|l| l > &reach);
        let mut targets = vec![b.clone()];
        if let Some(l) = limit.as_ref().filter(|l| *l < b) {
            targets.push(l.clone());
        }
        let mut jumped = false;
        for sigma in targets {
            let Some(step) = alg.left_oracle(&sigma) else {
                continue;
            };
            let from = step.reach_from.max_with(a);
            if from <= reach && reach < sigma {
                let piece = (step.factory)(&reach);
                drop(step);
                acc = match alg.combine_adjacent(acc, piece) {
                    Ok(w) => w,
                    Err(e) => return Err(combine_failed(e, &reach, trace)),
                };
                trace.push(TraceEvent::LeftJump { from: reach.clone(), to: sigma.clone() });
                reach = sigma;
                reaches = vec![reach.clone()];
                slow = 0;
                jumped = true;
                break;
            }
        }
        if !jumped {
            let estimate = limit.map(|l| l.min_with(b)).unwrap_or_else(|| reach.clone());
            trace.push(TraceEvent::Stall { at: reach.clone(), estimate: estimate.clone() });
            return Err(fail(FailureReason::StallNoRecovery, estimate, None, trace));
        }
    }

    Ok(Run { witness: acc, trace })
}

/// Rebuilds a creep witness from its trace by re-querying the oracles.
pub fn replay_creep<A: CreepAlgebra>(
    interval: &Interval,
    alg: &A,
    trace: &Trace,
) -> Result<A::Witness, CombineError> {
    let mut acc = alg.unit(interval.lo());
    for event in trace.events() {
        match event {
            TraceEvent::RightStep { from, to } => {
                let (t, piece) = alg
                    .right_oracle(from)
                    .ok_or_else(|| CombineError::new(format!("right oracle declined at {from}")))?;
                if &t != to {
                    return Err(CombineError::new(format!("right oracle moved to {t}, trace says {to}")));
                }
                acc = alg.combine_adjacent(acc, piece)?;
            }
            TraceEvent::LeftJump { from, to } => {
                let step = alg
                    .left_oracle(to)
                    .ok_or_else(|| CombineError::new(format!("left oracle declined at {to}")))?;
                let piece = (step.factory)(from);
                drop(step);
                acc = alg.combine_adjacent(acc, piece)?;
            }
            _ => {}
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn extrapolates_geometric_sequence() {
        let r = [q("0"), q("1/2"), q("3/4")];
        assert_eq!(extrapolate(&r), Some(q("1")));
        assert_eq!(extrapolate(&[q("0"), q("1")]), None);
        // equal advances: no finite limit
        assert_eq!(extrapolate(&[q("0"), q("1"), q("2")]), None);
    }
}
