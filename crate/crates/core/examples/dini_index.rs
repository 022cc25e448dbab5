use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{dini_index, verify_dini_index, DiniOptions};
use interval_induction::{ClosedSet, Rational};

fn main() {
    for (seq, set, eps) in [("x/n", "0,1", "1/10"), ("x^n", "0,1/2", "1/100"), ("0", "0,1", "1/10")] {
        let f = parse(seq).unwrap();
        let c: ClosedSet = set.parse().unwrap();
        let eps: Rational = eps.parse().unwrap();
        let i = c.hull().unwrap();
        let cert = dini_index(&f, &c, &i, &eps, DiniOptions::default(), &EngineConfig::default())
            .unwrap()
            .certificate;
        println!("{seq} on [{set}], eps {eps}: n = {} (verified: {})", cert.n, verify_dini_index(&f, &c, &eps, &cert).is_ok());
    }
}
