//! Gauge-fine tagged partitions with both strategies, including a gauge that
//! makes the creeping strategy stall and recover through its left oracle.

use interval_induction::engine::{EngineConfig, TraceEvent};
use interval_induction::theorems::{cousin_partition, CousinStrategy};
use interval_induction::{Gauge, Interval, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    let unit = Interval::new(q("0"), q("1")).unwrap();
    let cfg = EngineConfig::default();

    let g = Gauge::constant(q("3/10"));
    for strategy in [CousinStrategy::Creep, CousinStrategy::Bisect] {
        let p = cousin_partition(&g, &unit, strategy, &cfg).unwrap().certificate;
        println!("{strategy:?}: cuts {:?}, tags {:?}, fine = {}", p.cuts(), p.tags(), p.is_delta_fine(&g).unwrap());
    }

    let shrinking = Gauge::new(|x: &Rational| {
        if x < &Rational::one() {
            (&Rational::one() - x).half()
        } else {
            q("1/4")
        }
    });
    let run = cousin_partition(&shrinking, &unit, CousinStrategy::Creep, &cfg).unwrap();
    let jumps = run.trace.count(|e| matches!(e, TraceEvent::LeftJump { .. }));
    println!(
        "shrinking gauge: {} cells, {jumps} left jump(s), fine = {}",
        run.certificate.len(),
        run.certificate.is_delta_fine(&shrinking).unwrap()
    );
}
