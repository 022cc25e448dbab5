//! Finite subcovers, and the exact sweep that checks them.

use interval_induction::engine::EngineConfig;
use interval_induction::theorems::{finite_subcover, verify_subcover};
use interval_induction::{ClosedSet, Interval, OpenCover, OpenIntervalSpec, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    let i = Interval::new(q("0"), q("1")).unwrap();
    let c = ClosedSet::single(i.clone());
    let members = (0..=10)
        .map(|k| {
            let center = Rational::new(k, 10).unwrap();
            OpenIntervalSpec::new(&center - &q("3/20"), &center + &q("3/20")).unwrap()
        })
        .collect();
    let cover = OpenCover::new(members).unwrap();
    let cert = finite_subcover(&cover, &c, &i, &EngineConfig::default()).unwrap().certificate;
    println!("subcover {:?}; sweep check: {}", cert.member_indices, verify_subcover(&cover, &cert.member_indices, &c));

    let gap = OpenCover::new(vec![OpenIntervalSpec::new(q("1/4"), q("3/4")).unwrap()]).unwrap();
    match finite_subcover(&gap, &c, &i, &EngineConfig::default()) {
        Ok(_) => println!("unexpected subcover"),
        Err(e) => println!("]1/4, 3/4[: {e}"),
    }
}
