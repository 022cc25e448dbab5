//! Plugging a user-defined witness algebra into the creeping engine.
//!
//! The witness for `[u, v]` is a list of unit-length steps with integer
//! endpoints; the right oracle advances to the next integer.

use interval_induction::engine::{creep, replay_creep, CombineError, CreepAlgebra, EngineConfig, LeftStep};
use interval_induction::{Interval, Rational};

struct IntegerSteps {
    b: Rational,
}

impl CreepAlgebra for IntegerSteps {
    type Witness = Vec<Rational>;

    fn unit(&self, at: &Rational) -> Vec<Rational> {
        vec![at.clone()]
    }

    fn combine_adjacent(&self, mut l: Vec<Rational>, r: Vec<Rational>) -> Result<Vec<Rational>, CombineError> {
        if l.last() != r.first() {
            return Err(CombineError::new("pieces do not meet"));
        }
        l.extend(r.into_iter().skip(1));
        Ok(l)
    }

    fn right_oracle(&self, s: &Rational) -> Option<(Rational, Vec<Rational>)> {
        let next = (s + &Rational::one()).min_with(&self.b);
        Some((next.clone(), vec![s.clone(), next]))
    }

    fn left_oracle(&self, _target: &Rational) -> Option<LeftStep<'_, Vec<Rational>>> {
        None
    }
}

fn main() {
    let i = Interval::new("0".parse().unwrap(), "9/2".parse().unwrap()).unwrap();
    let alg = IntegerSteps { b: i.hi().clone() };
    let run = creep(&i, &alg, &EngineConfig::default()).unwrap();
    println!("steps: {:?}", run.witness);
    println!("replayed from trace: {:?}", replay_creep(&i, &alg, &run.trace).unwrap());
}
