use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{heine_combine, uniform_delta, verify_modulus};
use interval_induction::{ClosedSet, Interval, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    // the gluing rule for two overlapping pieces
    println!("min{{1/4, 1/6, 1/5}} = {}", heine_combine(Some(&q("1/4")), Some(&q("1/6")), &q("1/5")));

    let i = Interval::new(q("0"), q("1")).unwrap();
    let c = ClosedSet::single(i.clone());
    for text in ["x", "x*x", "abs(x - 1/3)", "pw(x<=1/2, x, 1 - x)"] {
        let f = parse(text).unwrap();
        for eps in ["1/10", "1/100"] {
            let m = uniform_delta(&f, &c, &i, &q(eps), &EngineConfig::default()).unwrap().certificate;
            println!("{text:>22}, eps {eps:>5}: delta = {:<7} verified: {}", m.delta.to_string(), verify_modulus(&f, &m).is_ok());
        }
    }
}
