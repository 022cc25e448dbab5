use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{constant_sign, InstanceError};
use interval_induction::Interval;

fn main() {
    let i = Interval::new("-1".parse().unwrap(), "1".parse().unwrap()).unwrap();
    let f = parse("x*x + 1").unwrap();
    let cert = constant_sign(&f, &i, &EngineConfig::default()).unwrap().certificate;
    println!("{f} is {:?} on {i}", cert.sign);

    let unit = Interval::new("0".parse().unwrap(), "1".parse().unwrap()).unwrap();
    let cfg = EngineConfig::default().with_max_depth(20);
    if let Err(InstanceError::Engine(e)) = constant_sign(&parse("x - 1/2").unwrap(), &unit, &cfg) {
        let leaf = e.leaf().unwrap();
        println!("x - 1/2: {} at {leaf} (width {})", e.reason, leaf.width());
    }
}
