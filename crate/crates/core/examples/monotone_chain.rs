//! Strict increase from local conditions, Dini derivate estimates, and the
//! tilted inequality f(a) <= f(b) + eps (b - a).

use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{
    dini_derivate_bound, increase_via_tilt, strict_increase, verify_chain, DerivateKind,
};
use interval_induction::{Interval, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    let cfg = EngineConfig::default();
    let i = Interval::new(q("-1"), q("1")).unwrap();
    let cube = parse("x*x*x").unwrap();

    let chain = strict_increase(&cube, &i, &i, 4, &cfg).unwrap().certificate;
    println!("x^3 on {i}: {} links, verified: {}", chain.points.len() - 1, verify_chain(&cube, &i, &chain).is_ok());

    let ll = dini_derivate_bound(&cube, &q("0"), DerivateKind::LowerLeft, &q("-1/2"), 32).unwrap();
    let ur = dini_derivate_bound(&cube, &q("0"), DerivateKind::UpperRight, &q("1/2"), 32).unwrap();
    println!("at 0: lower-left >= {} (grid only), upper-right >= {} at {:?}", ll.bound, ur.bound, ur.attained_at);

    let unit = Interval::new(q("0"), q("1")).unwrap();
    let sq = parse("x*x").unwrap();
    let tilt = increase_via_tilt(&sq, &unit, &q("1/100"), 6, &cfg).unwrap().certificate;
    println!("x^2: f(0) = {} <= f(1) + 1/100 = {}", tilt.f_a, &tilt.f_b + &q("1/100"));

    match strict_increase(&parse("-x").unwrap(), &unit, &unit, 4, &cfg) {
        Ok(_) => println!("-x: unexpectedly increasing"),
        Err(e) => println!("-x: {e}"),
    }
}
