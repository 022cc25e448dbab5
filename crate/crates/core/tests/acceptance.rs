//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p interval-induction --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use interval_induction::engine::{EngineConfig, TraceEvent};
use interval_induction::expr::parse;
use interval_induction::theorems::*;
use interval_induction::{
    ClosedSet, Gauge, Interval, OpenCover, OpenIntervalSpec, PointSet, Rational, TaggedPartition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn r(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

fn iv(a: &str, b: &str) -> Interval {
    Interval::new(q(a), q(b)).unwrap()
}

/// Rational in [lo, hi] on the grid of spacing 1/den.
fn rand_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    r(rng.gen_range(lo * den..=hi * den), den)
}

/// Piecewise-constant gauge with values k/64, k in 1..=64, on a random cut grid.
fn random_gauge(rng: &mut ChaCha8Rng, i: &Interval) -> Gauge {
    let pieces = rng.gen_range(1..=8);
    let mut cuts: Vec<Rational> = (1..pieces)
        .map(|_| {
            let t = r(rng.gen_range(1..1000), 1000);
            i.lo() + &(&i.width() * &t)
        })
        .collect();
    cuts.sort();
    let values: Vec<Rational> = (0..pieces).map(|_| r(rng.gen_range(1..=64), 64)).collect();
    Gauge::new(move |x: &Rational| {
        let k = cuts.iter().filter(|c| *c <= x).count();
        values[k].clone()
    })
}

fn c1_cousin_validity() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cfg = EngineConfig::default();
    let started = Instant::now();
    for trial in 0..100 {
        let (a, b) = loop {
            let a = rand_rat(&mut rng, -2, 2, 16);
            let b = rand_rat(&mut rng, -2, 2, 16);
            if a < b {
                break (a, b);
            }
        };
        let i = Interval::new(a, b).unwrap();
        let g = random_gauge(&mut rng, &i);
        for strategy in [CousinStrategy::Creep, CousinStrategy::Bisect] {
            let p = cousin_partition(&g, &i, strategy, &cfg)
                .map_err(|e| format!("trial {trial} {strategy:?} on {i}: {e}"))?
                .certificate;
            if p.interval() != i || !p.is_delta_fine(&g).unwrap() {
                return Err(format!("trial {trial} {strategy:?} on {i}: partition not delta-fine"));
            }
        }
    }
    Ok(format!("200 partitions delta-fine in {:?}", started.elapsed()))
}

fn c2_stall_recovery() -> Result<String, String> {
    let g = Gauge::new(|x: &Rational| if x < &Rational::one() { (&Rational::one() - x).half() } else { q("1/4") });
    let run = cousin_partition(&g, &iv("0", "1"), CousinStrategy::Creep, &EngineConfig::default())
        .map_err(|e| e.to_string())?;
    let jumps = run.trace.count(|e| matches!(e, TraceEvent::LeftJump { .. }));
    if !run.certificate.is_delta_fine(&g).unwrap() {
        return Err("partition not delta-fine".into());
    }
    if jumps == 0 {
        return Err("no left-jump event in trace".into());
    }
    Ok(format!("{} cells, {jumps} left jump(s)", run.certificate.len()))
}

/// Largest j/1024 such that every pair of grid points i/1024 at distance
/// at most j/1024 in [0, 1] has |x^2 - y^2| < 1/10. Integer arithmetic.
fn brute_force_square_delta() -> i64 {
    const N: i64 = 1024;
    (1..=N)
        .rev()
        .find(|&j| (0..=N).all(|i| (i + 1..=(i + j).min(N)).all(|k| 10 * (k * k - i * i) < N * N)))
        .unwrap_or(0)
}

fn c3_heine_modulus() -> Result<String, String> {
    let i = iv("0", "1");
    let c = ClosedSet::single(i.clone());
    let cfg = EngineConfig::default();
    let started = Instant::now();
    let mut square = None;
    for f in ["x", "x*x", "abs(x - 1/3)", "pw(x<=1/2, x, 1 - x)"] {
        let e = parse(f).unwrap();
        for eps in ["1/10", "1/100"] {
            let m = uniform_delta(&e, &c, &i, &q(eps), &cfg).map_err(|e| format!("{f}: {e}"))?.certificate;
            if !m.delta.is_positive() {
                return Err(format!("{f}, {eps}: delta {} not positive", m.delta));
            }
            verify_modulus(&e, &m).map_err(|v| format!("{f}, {eps}: {v}"))?;
            if f == "x*x" && eps == "1/10" {
                square = Some(m.delta);
            }
        }
    }
    let delta = square.unwrap();
    let slack = &r(1, 20) * &r(5, 4);
    if delta > slack {
        return Err(format!("x^2 delta {delta} exceeds {slack}"));
    }
    let best = r(brute_force_square_delta(), 1024);
    if best < delta {
        return Err(format!("x^2 delta {delta} above brute-force {best}"));
    }
    Ok(format!("8 moduli verified; x^2: {delta} <= {slack}, brute force {best}; {:?}", started.elapsed()))
}

fn c4_boundedness() -> Result<String, String> {
    let f = parse("1/(x*x + 1/100)").unwrap();
    let i = iv("-1", "1");
    let cert = bound_on(&f, &i, &EngineConfig::default()).map_err(|e| e.to_string())?.certificate;
    let grid_max = i
        .grid(10_000)
        .iter()
        .map(|x| f.at(x).unwrap().abs())
        .max()
        .unwrap();
    if grid_max != q("100") {
        return Err(format!("grid max {grid_max}, expected 100"));
    }
    if cert.m < grid_max {
        return Err(format!("M = {} below grid max {grid_max}", cert.m));
    }
    Ok(format!("M = {} >= grid max {grid_max}", cert.m))
}

fn c5_sign_refutation() -> Result<String, String> {
    let cfg = EngineConfig::default().with_max_depth(20);
    match constant_sign(&parse("x - 1/2").unwrap(), &iv("0", "1"), &cfg) {
        Err(InstanceError::Engine(e)) => {
            let leaf = e.leaf().ok_or("failure not located at a leaf")?;
            if leaf.width() != Rational::pow2(-20) || !leaf.contains(&q("1/2")) {
                return Err(format!("leaf {leaf}"));
            }
            Ok(format!("{} at {leaf}", e.reason))
        }
        other => Err(format!("expected a located failure, got {other:?}")),
    }
}

fn c6_monotone_chain() -> Result<String, String> {
    let cfg = EngineConfig::default();
    let i = iv("-1", "1");
    let f = parse("x*x*x").unwrap();
    let chain = strict_increase(&f, &i, &i, 8, &cfg).map_err(|e| e.to_string())?.certificate;
    if chain.points.first() != Some(&q("-1")) || chain.points.last() != Some(&q("1")) {
        return Err("chain endpoints are not -1, 1".into());
    }
    for w in chain.points.windows(2) {
        let (fa, fb) = (f.at(&w[0]).unwrap(), f.at(&w[1]).unwrap());
        if !(w[0] < w[1] && fa < fb) {
            return Err(format!("link {} -> {} not increasing", w[0], w[1]));
        }
    }
    let sq = parse("x*x").unwrap();
    let eps = q("1/100");
    let tilt = increase_via_tilt(&sq, &iv("0", "1"), &eps, 8, &cfg).map_err(|e| e.to_string())?.certificate;
    let (f0, f1) = (sq.at(&q("0")).unwrap(), sq.at(&q("1")).unwrap());
    if tilt.f_a != f0 || tilt.f_b != f1 || f0 > &f1 + &eps {
        return Err("tilt inequality not certified".into());
    }
    verify_tilt(&sq, &tilt).map_err(|v| v.to_string())?;
    Ok(format!("{} links; f(0) = {f0} <= f(1) + {eps}", chain.points.len() - 1))
}

fn c7_dini() -> Result<String, String> {
    let f = parse("x/n").unwrap();
    let c = ClosedSet::single(iv("0", "1"));
    let eps = q("1/10");
    let cert = dini_index(&f, &c, &iv("0", "1"), &eps, DiniOptions::default(), &EngineConfig::default())
        .map_err(|e| e.to_string())?
        .certificate;
    // grid sup of x/n over i/1000 is 1/n; smallest n with 10 * 1 < n * 1
    let smallest = (1u64..).find(|n| (0..=1000u64).all(|i| 10 * i < n * 1000)).unwrap();
    if smallest != 11 {
        return Err(format!("brute force gave {smallest}"));
    }
    if cert.n < smallest {
        return Err(format!("n = {} below {smallest}", cert.n));
    }
    verify_dini_index(&f, &c, &eps, &cert).map_err(|v| v.to_string())?;
    Ok(format!("n = {}, brute force {smallest}", cert.n))
}

fn c8_heine_borel() -> Result<String, String> {
    let i = iv("0", "1");
    let c = ClosedSet::single(i.clone());
    let members = (0..=10)
        .map(|k| OpenIntervalSpec::new(&r(k, 10) - &r(3, 20), &r(k, 10) + &r(3, 20)).unwrap())
        .collect();
    let cover = OpenCover::new(members).unwrap();
    let cert = finite_subcover(&cover, &c, &i, &EngineConfig::default()).map_err(|e| e.to_string())?.certificate;
    if !verify_subcover(&cover, &cert.member_indices, &c) {
        return Err(format!("subcover {:?} rejected", cert.member_indices));
    }
    let gap = OpenCover::new(vec![OpenIntervalSpec::new(q("1/4"), q("3/4")).unwrap()]).unwrap();
    match finite_subcover(&gap, &c, &i, &EngineConfig::default()) {
        Err(InstanceError::Engine(e)) => {
            let leaf = e.leaf().ok_or("failure not located at a leaf")?;
            if !(leaf.contains(i.lo()) || leaf.contains(i.hi())) {
                return Err(format!("uncovered leaf {leaf} not at an endpoint"));
            }
            Ok(format!("{} members; non-cover fails at {leaf}", cert.member_indices.len()))
        }
        other => Err(format!("non-cover: expected a located failure, got {other:?}")),
    }
}

fn c9_bolzano_weierstrass() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cfg = EngineConfig::default();
    for trial in 0..100 {
        let count = rng.gen_range(0..20);
        let pts: Vec<Rational> = (0..count).map(|_| r(rng.gen_range(-300..=300), rng.gen_range(1..=100))).collect();
        let f = PointSet::from(pts);
        let a = rand_rat(&mut rng, -2, 1, 7);
        let b = &a + &r(rng.gen_range(0..=30), 10);
        let i = Interval::new(a, b).unwrap();
        let listed = enumerate_isolated(&f, &i, &cfg).map_err(|e| format!("trial {trial}: {e}"))?.certificate;
        let direct: Vec<Rational> = {
            let mut v: Vec<Rational> = f.points().iter().filter(|p| i.contains(p)).cloned().collect();
            v.sort();
            v.dedup();
            v
        };
        if listed != direct {
            return Err(format!("trial {trial} on {i}: {listed:?} != {direct:?}"));
        }
    }
    Ok("100 point sets match the direct filter".into())
}

fn c10_cantor() -> Result<String, String> {
    let family = |hi: &str| SetFamily::new(iv("0", "1"), vec![(parse("0").unwrap(), parse(hi).unwrap())], 100).unwrap();
    let shrinking = family("1 - n/5");
    let cert = cantor_family_index(&shrinking, &EngineConfig::default()).map_err(|e| e.to_string())?.certificate;
    if cert.n < 6 || !shrinking.at(cert.n).is_empty() {
        return Err(format!("n = {}", cert.n));
    }
    match cantor_family_index(&family("1/(n + 1)"), &EngineConfig::default()) {
        Err(InstanceError::HypothesisViolation { at, .. }) if at == Rational::zero() => {
            Ok(format!("n = {}; nested family violated at 0", cert.n))
        }
        other => Err(format!("nested family: {other:?}")),
    }
}

fn random_partition(rng: &mut ChaCha8Rng, lo: &Rational, hi: &Rational) -> TaggedPartition {
    let mut cuts = vec![lo.clone(), hi.clone()];
    for _ in 0..rng.gen_range(0..4) {
        let t = r(rng.gen_range(1..100), 100);
        cuts.push(lo + &(&(hi - lo) * &t));
    }
    cuts.sort();
    cuts.dedup();
    let tags = cuts.windows(2).map(|w| if rng.gen_bool(0.5) { w[0].clone() } else { w[1].clone() }).collect();
    TaggedPartition::new(cuts, tags).unwrap()
}

fn c11_combinator_laws() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let d1 = r(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
        let d2 = r(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
        let gap = r(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
        let got = heine_combine(Some(&d1), Some(&d2), &gap);
        let want = [&d1, &d2, &gap].into_iter().min().unwrap();
        if &got != want {
            return Err(format!("heine_combine({d1}, {d2}, {gap}) = {got}"));
        }
    }

    // index folds: the index over a union is the max over the parts
    let cfg = EngineConfig::default();
    let f = parse("x/n").unwrap();
    let eps = q("1/10");
    let index = |set: &str| {
        let c: ClosedSet = set.parse().unwrap();
        let i = c.hull().unwrap();
        dini_index(&f, &c, &i, &eps, DiniOptions::default(), &cfg).map(|c| c.certificate.n).map_err(|e| e.to_string())
    };
    let parts = (index("0,1/2")?, index("3/4,1")?);
    let whole = index("0,1/2;3/4,1")?;
    if whole != parts.0.max(parts.1) {
        return Err(format!("dini index {whole} != max{parts:?}"));
    }
    let fam = |hi: &str| SetFamily::new(iv("0", "1"), vec![(parse("0").unwrap(), parse(hi).unwrap())], 50).unwrap();
    let cantor = |hi: &str| cantor_family_index(&fam(hi), &cfg).map(|c| c.certificate.n).map_err(|e| e.to_string());
    let (fast, slow) = (cantor("1 - n/2")?, cantor("1 - n/9")?);
    let union = SetFamily::new(
        iv("0", "1"),
        vec![
            (parse("0").unwrap(), parse("1 - n/2").unwrap()),
            (parse("0").unwrap(), parse("1 - n/9").unwrap()),
        ],
        50,
    )
    .unwrap();
    let both = cantor_family_index(&union, &cfg).map_err(|e| e.to_string())?.certificate.n;
    if both != fast.max(slow) {
        return Err(format!("cantor index {both} != max({fast}, {slow})"));
    }

    for trial in 0..200 {
        let mut pts: Vec<Rational> = (0..4).map(|_| rand_rat(&mut rng, -2, 2, 64)).collect();
        pts.sort();
        pts.dedup();
        if pts.len() < 4 {
            continue;
        }
        let a = random_partition(&mut rng, &pts[0], &pts[1]);
        let b = random_partition(&mut rng, &pts[1], &pts[2]);
        let c = random_partition(&mut rng, &pts[2], &pts[3]);
        let left = a.clone().concat(b.clone()).unwrap().concat(c.clone()).unwrap();
        let right = a.concat(b.concat(c).unwrap()).unwrap();
        if left != right {
            return Err(format!("trial {trial}: concat not associative"));
        }
    }
    Ok("heine min on 1000 triples, index max, concat associativity".into())
}

fn c12_determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cover = dir.path().join("cover.json");
    let members: Vec<String> = (0..=10)
        .map(|k| format!("{{\"lo\":\"{}\",\"hi\":\"{}\"}}", &r(k, 10) - &r(3, 20), &r(k, 10) + &r(3, 20)))
        .collect();
    std::fs::write(&cover, format!("{{\"members\":[{}]}}", members.join(","))).unwrap();
    let family = dir.path().join("family.json");
    std::fs::write(
        &family,
        r#"{"interval":{"lo":"0","hi":"1"},"components":[{"lo":"0","hi":"1 - n/5"}],"max_index":20}"#,
    )
    .unwrap();
    let cover = cover.to_str().unwrap();
    let family = family.to_str().unwrap();

    let commands: Vec<Vec<&str>> = vec![
        vec!["cousin", "--gauge", "pw(x<1, (1-x)/2, 1/4)", "--interval", "0", "1"],
        vec!["cousin", "--gauge", "1/10 + x*x", "--interval", "-1", "1", "--strategy", "bisect"],
        vec!["heine", "--fn", "x*x", "--set", "0,1", "--eps", "1/10"],
        vec!["bound", "--fn", "1/(x*x + 1/100)", "--interval", "-1", "1"],
        vec!["sign", "--fn", "x - 1/2", "--interval", "0", "1", "--max-depth", "20"],
        vec!["monotone", "--fn", "x*x*x", "--interval", "-1", "1"],
        vec!["max", "--fn", "-abs(x - 1/3)", "--set", "0,1"],
        vec!["dini", "--seq", "x/n", "--set", "0,1", "--eps", "1/10"],
        vec!["cover", "--set", "0,1", "--cover", cover],
        vec!["cantor", "--family", family],
    ];
    for args in &commands {
        let outputs: Vec<Vec<u8>> = (0..3)
            .map(|_| Command::new(env!("CARGO_BIN_EXE_ivind")).args(args).output().unwrap().stdout)
            .collect();
        if outputs[0].is_empty() {
            return Err(format!("{args:?}: empty report"));
        }
        if outputs.iter().any(|o| o != &outputs[0]) {
            return Err(format!("{args:?}: reports differ between runs"));
        }
    }
    Ok(format!("{} commands x 3 runs byte-identical", commands.len()))
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 12] = [
        ("1 cousin validity", c1_cousin_validity),
        ("2 stall recovery", c2_stall_recovery),
        ("3 heine modulus", c3_heine_modulus),
        ("4 boundedness", c4_boundedness),
        ("5 sign refutation", c5_sign_refutation),
        ("6 monotone chain", c6_monotone_chain),
        ("7 dini", c7_dini),
        ("8 heine-borel", c8_heine_borel),
        ("9 bolzano-weierstrass", c9_bolzano_weierstrass),
        ("10 cantor", c10_cantor),
        ("11 combinator laws", c11_combinator_laws),
        ("12 determinism", c12_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {}", p.downcast_ref::<String>().cloned().unwrap_or_default())));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
