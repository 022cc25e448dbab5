//! Exact rationals and interval enclosures.

use interval_induction::numeric::{encl_arith, rat_arith, BinaryOp, Enclosure, Rational};

fn main() {
    let a: Rational = "1/3".parse().unwrap();
    let b: Rational = "0.25".parse().unwrap();
    println!("{a} + {b} = {}", rat_arith(BinaryOp::Add, &a, &b).unwrap());
    println!("{a} / 0 -> {}", rat_arith(BinaryOp::Div, &a, &Rational::zero()).unwrap_err());

    let x = Enclosure::new("-1".parse().unwrap(), "2".parse().unwrap()).unwrap();
    let y = Enclosure::point("3".parse().unwrap());
    println!("{x} * {y} = {}", encl_arith(BinaryOp::Mul, &x, &y).unwrap());
    println!("{x}^2 = {}", x.powi(2));
    match encl_arith(BinaryOp::Div, &y, &x) {
        Ok(e) => println!("{y} / {x} = {e}"),
        Err(e) => println!("{y} / {x}: {e}"),
    }
}
