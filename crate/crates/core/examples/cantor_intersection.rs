use interval_induction::engine::EngineConfig;
use interval_induction::expr::parse;
use interval_induction::theorems::{cantor_family_index, verify_cantor_index, SetFamily};
use interval_induction::Interval;

fn family(hi: &str) -> SetFamily {
    let i = Interval::new("0".parse().unwrap(), "1".parse().unwrap()).unwrap();
    SetFamily::new(i, vec![(parse("0").unwrap(), parse(hi).unwrap())], 100).unwrap()
}

fn main() {
    let shrinking = family("1 - n/5");
    let cert = cantor_family_index(&shrinking, &EngineConfig::default()).unwrap().certificate;
    println!("C_n = [0, 1 - n/5]: empty from n = {} (verified: {})", cert.n, verify_cantor_index(&shrinking, &cert).is_ok());

    match cantor_family_index(&family("1/(n + 1)"), &EngineConfig::default()) {
        Ok(c) => println!("unexpected index {}", c.certificate.n),
        Err(e) => println!("C_n = [0, 1/(n+1)]: {e}"),
    }
}
