//! Budget-relative maxima. The candidate is only claimed to beat every point
//! of the search grid it reports.

use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{usc_max, verify_argmax, SearchBudget};
use interval_induction::{ClosedSet, Interval};

fn main() {
    let i = Interval::new("0".parse().unwrap(), "1".parse().unwrap()).unwrap();
    let c: ClosedSet = "0,1/4;1/2,1".parse().unwrap();
    for text in ["x", "5", "-abs(x - 1/3)", "x*(1 - x)"] {
        let f = parse(text).unwrap();
        let cert = usc_max(&f, &c, &i, SearchBudget::default(), &EngineConfig::default())
            .unwrap()
            .certificate;
        println!(
            "{text:>14}: point {}, value {}, grid {} (verified: {})",
            cert.point,
            cert.value,
            cert.budget.grid,
            verify_argmax(&f, &c, &cert).is_ok()
        );
    }
}
