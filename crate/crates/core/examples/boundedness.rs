use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{bound_on, verify_bound, InstanceError};
use interval_induction::Interval;

fn main() {
    let cfg = EngineConfig::default();
    let i = Interval::new("-1".parse().unwrap(), "1".parse().unwrap()).unwrap();

    let f = parse("1/(x*x + 1/100)").unwrap();
    let cert = bound_on(&f, &i, &cfg).unwrap().certificate;
    println!("|{f}| <= {} on {i}; verified: {}", cert.m, verify_bound(&f, &cert).is_ok());

    // an unbounded function: the failure pins down the singularity
    let unit = Interval::new("0".parse().unwrap(), "1".parse().unwrap()).unwrap();
    match bound_on(&parse("1/x").unwrap(), &unit, &cfg) {
        Err(InstanceError::Engine(e)) => println!("1/x: {} at leaf {}", e.reason, e.leaf().unwrap()),
        other => println!("1/x: unexpected {other:?}"),
    }
}
