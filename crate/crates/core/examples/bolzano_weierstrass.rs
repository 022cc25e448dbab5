use interval_induction::engine::EngineConfig;
use interval_induction::theorems::enumerate_isolated;
use interval_induction::{Interval, PointSet, Rational};

fn main() {
    let f = PointSet::from(
        ["0", "1/3", "1/2", "5/7", "1", "3/2"]
            .iter()
            .map(|s| s.parse::<Rational>().unwrap())
            .collect::<Vec<_>>(),
    );
    let i = Interval::new("1/4".parse().unwrap(), "1".parse().unwrap()).unwrap();
    let run = enumerate_isolated(&f, &i, &EngineConfig::default()).unwrap();
    println!("F in {i}: {:?} ({} trace events)", run.certificate, run.trace.len());
    println!("direct filter:  {:?}", f.within(&i));
}
