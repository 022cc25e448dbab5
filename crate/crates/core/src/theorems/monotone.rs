use serde::{Deserialize, Serialize};

use super::{require_positive, Certified, InstanceError, Violation};
use crate::domain::Interval;
use crate::engine::{creep, CombineError, CreepAlgebra, EngineConfig, LeftStep};
use crate::expr::Expr;
use crate::numeric::Rational;

/// Samples used by the left oracle's derivate check.
const LEFT_SAMPLES: u64 = 64;
/// Halvings of the left window before the left oracle gives up.
const LEFT_HALVINGS: u32 = 40;

/// Points `a = x₀ < … < xₙ = b` with `f(x₀) < … < f(xₙ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneChain {
    pub points: Vec<Rational>,
    pub values: Vec<Rational>,
}

impl MonotoneChain {
    fn single(x: Rational, fx: Rational) -> Self {
        MonotoneChain { points: vec![x], values: vec![fx] }
    }

    fn pair(x: Rational, fx: Rational, y: Rational, fy: Rational) -> Self {
        MonotoneChain { points: vec![x, y], values: vec![fx, fy] }
    }

    /// Concatenation; the shared point must agree and the values must keep
    /// increasing across the new links.
    pub fn concat(mut self, other: MonotoneChain) -> Result<Self, CombineError> {
        if self.points.last() != other.points.first() || self.values.last() != other.values.first() {
            return Err(CombineError::new(format!(
                "chain ending at {:?} cannot be joined with one starting at {:?}",
                self.points.last(),
                other.points.first()
            )));
        }
        for w in other.values.windows(2) {
            if w[0] >= w[1] {
                return Err(CombineError::new(format!("values {} and {} do not increase", w[0], w[1])));
            }
        }
        self.points.extend(other.points.into_iter().skip(1));
        self.values.extend(other.values.into_iter().skip(1));
        Ok(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivateKind {
    LowerLeft,
    UpperRight,
}

/// Grid estimate of a one-sided Dini derivate at `at`.
///
/// `grid_only` is set when the bound holds at the sampled points only; the
/// upper-right estimate is attained exactly at `attained_at`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiniDerivateBound {
    pub kind: DerivateKind,
    pub at: Rational,
    pub bound: Rational,
    pub witness_r_or_t: Rational,
    pub grid_only: bool,
    pub attained_at: Option<Rational>,
}

/// Lower-left: infimum of `(f(s) − f(x)) / (s − x)` over `grid` points of
/// `[r, s[`. Upper-right: supremum of `(f(x) − f(s)) / (x − s)` over `grid`
/// points of `]s, t]`.
pub fn dini_derivate_bound(
    f: &Expr,
    s: &Rational,
    kind: DerivateKind,
    r_or_t: &Rational,
    grid: u64,
) -> Result<DiniDerivateBound, InstanceError> {
    if r_or_t == s {
        return Err(InstanceError::EmptyWindow(s.clone()));
    }
    if grid == 0 {
        return Err(InstanceError::InvalidInput("grid must be positive".into()));
    }
    let (lo, hi) = match kind {
        DerivateKind::LowerLeft if r_or_t < s => (r_or_t, s),
        DerivateKind::UpperRight if r_or_t > s => (s, r_or_t),
        _ => {
            return Err(InstanceError::InvalidInput(format!(
                "{r_or_t} is on the wrong side of {s} for a {kind:?} derivate"
            )))
        }
    };
    let window = Interval::new(lo.clone(), hi.clone()).expect("ordered above");
    let pts = window.grid(grid);
    let samples = match kind {
        DerivateKind::LowerLeft => &pts[..pts.len() - 1],
        DerivateKind::UpperRight => &pts[1..],
    };
    let fs = f.at(s)?;
    let mut best: Option<(Rational, Rational)> = None;
    for x in samples {
        let quotient = (&f.at(x)? - &fs).checked_div(&(x - s)).expect("x differs from s");
        let better = match (&best, kind) {
            (None, _) => true,
            (Some((b, _)), DerivateKind::LowerLeft) => &quotient < b,
            (Some((b, _)), DerivateKind::UpperRight) => &quotient > b,
        };
        if better {
            best = Some((quotient, x.clone()));
        }
    }
    let (bound, x) = best.expect("at least one sample");
    Ok(DiniDerivateBound {
        kind,
        at: s.clone(),
        bound,
        witness_r_or_t: r_or_t.clone(),
        grid_only: kind == DerivateKind::LowerLeft,
        attained_at: (kind == DerivateKind::UpperRight).then_some(x),
    })
}

struct Increasing<'a> {
    f: &'a Expr,
    c: &'a Rational,
    b: &'a Rational,
    step: Rational,
}

impl CreepAlgebra for Increasing<'_> {
    type Witness = MonotoneChain;

    fn unit(&self, at: &Rational) -> MonotoneChain {
        let fa = self.f.at(at).expect("endpoint values checked before the run");
        MonotoneChain::single(at.clone(), fa)
    }

    fn combine_adjacent(&self, l: MonotoneChain, r: MonotoneChain) -> Result<MonotoneChain, CombineError> {
        l.concat(r)
    }

    /// Nearest-first scan of `s + h, s + 2h, …, b` for a larger value.
    fn right_oracle(&self, s: &Rational) -> Option<(Rational, MonotoneChain)> {
        let fs = self.f.at(s).ok()?;
        let mut x = s + &self.step;
        loop {
            if &x > self.b {
                x = self.b.clone();
            }
            if let Ok(fx) = self.f.at(&x) {
                if fs < fx {
                    return Some((x.clone(), MonotoneChain::pair(s.clone(), fs, x, fx)));
                }
            }
            if &x == self.b {
                return None;
            }
            x = &x + &self.step;
        }
    }

    /// Shrinks `[r, σ[` from `[c, σ[` until every sampled left quotient is
    /// positive, i.e. `f(x) < f(σ)` at the samples.
    fn left_oracle(&self, sigma: &Rational) -> Option<LeftStep<'_, MonotoneChain>> {
        let fsigma = self.f.at(sigma).ok()?;
        let mut delta = sigma - self.c;
        for _ in 0..=LEFT_HALVINGS {
            if !delta.is_positive() {
                return None;
            }
            let r = sigma - &delta;
            let est = dini_derivate_bound(self.f, sigma, DerivateKind::LowerLeft, &r, LEFT_SAMPLES).ok()?;
            if est.bound.is_positive() {
                let sigma = sigma.clone();
                let fsigma = fsigma.clone();
                return Some(LeftStep::new(r, move |x: &Rational| {
                    // an unevaluable x gets f(σ), which the combinator rejects
                    let fx = self.f.at(x).unwrap_or_else(|_| fsigma.clone());
                    MonotoneChain::pair(x.clone(), fx, sigma.clone(), fsigma.clone())
                }));
            }
            delta = delta.half();
        }
        None
    }
}

/// Chain certifying that `f` increases strictly on `[a, b] ⊆ [c, d]`.
///
/// Right steps scan a grid of spacing `(b − a) / 2^grid`; left jumps sample
/// the lower-left derivate on windows inside `[c, σ[`.
pub fn strict_increase(
    f: &Expr,
    c_d: &Interval,
    a_b: &Interval,
    grid: u32,
    cfg: &EngineConfig,
) -> Result<Certified<MonotoneChain>, InstanceError> {
    if !c_d.contains_interval(a_b) {
        return Err(InstanceError::InvalidInput(format!("{a_b} is not inside {c_d}")));
    }
    if a_b.is_degenerate() {
        return Err(InstanceError::InvalidInput("interval must have a < b".into()));
    }
    f.at(a_b.lo())?;
    f.at(a_b.hi())?;
    let step = &a_b.width() * &Rational::pow2(-(grid.min(i32::MAX as u32) as i32));
    let alg = Increasing { f, c: c_d.lo(), b: a_b.hi(), step };
    let run = creep(a_b, &alg, cfg)?;
    Ok(Certified { certificate: run.witness, trace: run.trace })
}

/// Exact check of every link of the chain.
pub fn verify_chain(f: &Expr, interval: &Interval, chain: &MonotoneChain) -> Result<(), Violation> {
    if chain.points.len() != chain.values.len() {
        return Err(Violation::new("points and values differ in length"));
    }
    if chain.points.first() != Some(interval.lo()) || chain.points.last() != Some(interval.hi()) {
        return Err(Violation::new(format!("chain does not span {interval}")));
    }
    for (x, v) in chain.points.iter().zip(&chain.values) {
        let fx = f.at(x).map_err(|e| Violation::at(x, e.to_string()))?;
        if &fx != v {
            return Err(Violation::at(x, format!("f = {fx}, chain says {v}")));
        }
    }
    for (p, v) in chain.points.windows(2).zip(chain.values.windows(2)) {
        if p[0] >= p[1] || v[0] >= v[1] {
            return Err(Violation::at(&p[0], "link does not increase"));
        }
    }
    Ok(())
}

/// `f(a) ≤ f(b) + ε (b − a)`, certified through a chain for `f + ε x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltCertificate {
    pub epsilon: Rational,
    pub interval: Interval,
    pub f_a: Rational,
    pub f_b: Rational,
    pub chain: MonotoneChain,
}

pub fn increase_via_tilt(
    f: &Expr,
    a_b: &Interval,
    eps: &Rational,
    grid: u32,
    cfg: &EngineConfig,
) -> Result<Certified<TiltCertificate>, InstanceError> {
    require_positive("eps", eps)?;
    let tilted = f.tilted(eps);
    let run = strict_increase(&tilted, a_b, a_b, grid, cfg)?;
    let f_a = f.at(a_b.lo())?;
    let f_b = f.at(a_b.hi())?;
    Ok(Certified {
        certificate: TiltCertificate {
            epsilon: eps.clone(),
            interval: a_b.clone(),
            f_a,
            f_b,
            chain: run.certificate,
        },
        trace: run.trace,
    })
}

pub fn verify_tilt(f: &Expr, cert: &TiltCertificate) -> Result<(), Violation> {
    verify_chain(&f.tilted(&cert.epsilon), &cert.interval, &cert.chain)?;
    let (a, b) = (cert.interval.lo(), cert.interval.hi());
    let fa = f.at(a).map_err(|e| Violation::at(a, e.to_string()))?;
    let fb = f.at(b).map_err(|e| Violation::at(b, e.to_string()))?;
    if fa != cert.f_a || fb != cert.f_b {
        return Err(Violation::new("endpoint values do not match"));
    }
    if fa > &fb + &(&cert.epsilon * &cert.interval.width()) {
        return Err(Violation::new(format!("{fa} > {fb} + {} (b - a)", cert.epsilon)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::FailureReason;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn iv(a: &str, b: &str) -> Interval {
        Interval::new(q(a), q(b)).unwrap()
    }

    fn f(s: &str) -> Expr {
        s.parse().unwrap()
    }

    #[test]
    fn identity_chain() {
        let i = iv("0", "1");
        let c = strict_increase(&f("x"), &i, &i, 4, &EngineConfig::default()).unwrap();
        assert_eq!(c.certificate.points.len(), 17);
        verify_chain(&f("x"), &i, &c.certificate).unwrap();
    }

    #[test]
    fn cube_crosses_flat_point() {
        let i = iv("-1", "1");
        let c = strict_increase(&f("x*x*x"), &i, &i, 6, &EngineConfig::default()).unwrap();
        assert!(c.certificate.points.contains(&q("0")));
        verify_chain(&f("x*x*x"), &i, &c.certificate).unwrap();
    }

    #[test]
    fn decreasing_fails_at_start() {
        let i = iv("0", "1");
        let err = strict_increase(&f("-x"), &i, &i, 4, &EngineConfig::default()).unwrap_err();
        let InstanceError::Engine(e) = err else { panic!("{err:?}") };
        assert_eq!(e.reason, FailureReason::OracleFailure);
        assert_eq!(e.point(), Some(&q("0")));
    }

    #[test]
    fn derivate_estimates() {
        let ll = dini_derivate_bound(&f("x"), &q("1/2"), DerivateKind::LowerLeft, &q("0"), 16).unwrap();
        assert_eq!(ll.bound, q("1"));
        assert!(ll.grid_only);

        let ll = dini_derivate_bound(&f("x*x*x"), &q("0"), DerivateKind::LowerLeft, &q("-1/2"), 64).unwrap();
        assert!(!ll.bound.is_negative());
        assert!(ll.bound < q("1/1000"));

        let ur = dini_derivate_bound(&f("x*x*x"), &q("0"), DerivateKind::UpperRight, &q("1/2"), 64).unwrap();
        assert_eq!(ur.bound, q("1/4"));
        assert_eq!(ur.attained_at, Some(q("1/2")));
    }

    #[test]
    fn derivate_window_checks() {
        assert!(matches!(
            dini_derivate_bound(&f("x"), &q("0"), DerivateKind::LowerLeft, &q("0"), 4),
            Err(InstanceError::EmptyWindow(_))
        ));
        assert!(matches!(
            dini_derivate_bound(&f("x"), &q("0"), DerivateKind::LowerLeft, &q("1"), 4),
            Err(InstanceError::InvalidInput(_))
        ));
    }

    #[test]
    fn left_oracle_recovers_slow_creep() {
        // grid spacing below the stall threshold forces left jumps
        let i = iv("0", "1");
        let cfg = EngineConfig { stall_threshold: Some(q("1/2")), ..EngineConfig::default() };
        let c = strict_increase(&f("x"), &i, &i, 3, &cfg).unwrap();
        assert!(c.trace.events().iter().any(|e| matches!(e, crate::engine::TraceEvent::LeftJump { .. })));
        verify_chain(&f("x"), &i, &c.certificate).unwrap();
    }

    #[test]
    fn tilt_cases() {
        let i = iv("0", "1");
        let cfg = EngineConfig::default();
        let c = increase_via_tilt(&f("3"), &i, &q("1/10"), 4, &cfg).unwrap();
        verify_tilt(&f("3"), &c.certificate).unwrap();

        let c = increase_via_tilt(&f("x*x"), &i, &q("1/100"), 6, &cfg).unwrap();
        verify_tilt(&f("x*x"), &c.certificate).unwrap();

        assert!(increase_via_tilt(&f("-x"), &i, &q("1/10"), 4, &cfg).is_err());
    }
}
