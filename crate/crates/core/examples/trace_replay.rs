//! Traces as JSON lines, and rebuilding a witness from a saved trace.

use interval_induction::engine::{bisect_cover, replay_bisect, Ball, CombineError, EngineConfig, Overlap, OverlapAlgebra, Probe, Trace};
use interval_induction::{Interval, Rational};

/// Each ball reports its own radius; the fold keeps the smallest.
struct SmallestRadius;

impl OverlapAlgebra for SmallestRadius {
    type Witness = Rational;

    fn combine_overlap(&self, l: Rational, r: Rational, _: &Overlap) -> Result<Rational, CombineError> {
        Ok(l.min_with(&r))
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<Rational> {
        // radius grows with distance from 0
        let delta = &s.abs().half() + &"1/16".parse().unwrap();
        Probe::Accept(Ball { delta: delta.clone(), witness: delta })
    }
}

fn main() {
    let i = Interval::new("-1".parse().unwrap(), "1".parse().unwrap()).unwrap();
    let run = bisect_cover(&i, &SmallestRadius, &EngineConfig::default()).unwrap();
    let lines = run.trace.to_json_lines();
    print!("{lines}");

    let loaded = Trace::from_json_lines(&lines).unwrap();
    let rebuilt = replay_bisect(&i, &SmallestRadius, &loaded).unwrap();
    println!("witness {} (replayed: {})", run.witness, rebuilt);
}
