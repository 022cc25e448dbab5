//! Parsing expressions, exact evaluation and enclosures.

use interval_induction::expr::parse;
use interval_induction::{Interval, Rational};

fn main() {
    let f = parse("x*x + 1/100").unwrap();
    println!("parsed: {f}");
    println!("f(0) = {}", f.at(&Rational::zero()).unwrap());

    let over = Interval::new("-1".parse().unwrap(), "1".parse().unwrap()).unwrap();
    println!("f over {over} lies in {}", f.enclose(&over).unwrap());

    let g = parse("pw(x<=1/2, x, 1 - x)").unwrap();
    println!("{g} over {over} lies in {}", g.enclose(&over).unwrap());

    let seq = parse("x/n").unwrap();
    println!("x/n at x = 1, n = 11: {}", seq.at_index(&Rational::one(), 11).unwrap());

    match parse("1 +* 2") {
        Ok(_) => unreachable!(),
        Err(e) => println!("\"1 +* 2\": {e}"),
    }
}
