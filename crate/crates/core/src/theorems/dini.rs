use super::{
    enclose_on, halvings, miss_radius, refine, require_positive, require_subset, Certified,
    IndexCertificate, IndexRole, InstanceError, Violation, VERIFY_GRID,
};
use crate::domain::{ClosedSet, Interval};
use crate::engine::{
    bisect_cover, Ball, CombineError, EngineConfig, FailureReason, Overlap, OverlapAlgebra, Probe,
};
use crate::expr::Expr;
use crate::numeric::Rational;

/// Index range scanned at each probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiniOptions {
    pub first_index: u64,
    pub scan_limit: u64,
}

impl Default for DiniOptions {
    fn default() -> Self {
        DiniOptions { first_index: 1, scan_limit: 10_000 }
    }
}

struct Uniformly<'a> {
    f: &'a Expr,
    set: &'a ClosedSet,
    interval: &'a Interval,
    eps: &'a Rational,
    opts: DiniOptions,
    halvings: u32,
}

impl Uniformly<'_> {
    fn small(&self, v: &Rational) -> bool {
        !v.is_negative() && v < self.eps
    }

    fn probe(&self, s: &Rational, wide: bool) -> Probe<u64> {
        if !self.set.contains(s) {
            let delta = miss_radius(self.set, s, self.interval);
            return Probe::Accept(Ball { delta, witness: self.opts.first_index });
        }
        let mut last = None;
        let mut found = None;
        for n in self.opts.first_index..=self.opts.scan_limit {
            let Ok(v) = self.f.at_index(s, n) else { continue };
            if self.small(&v) {
                found = Some(n);
                break;
            }
            last = Some(v);
        }
        let Some(n) = found else {
            let residual = last.map(|v| v.to_string()).unwrap_or_else(|| "undefined".into());
            return Probe::Refuted(format!(
                "no n <= {} with 0 <= f_n < eps; f_{}({s}) = {residual}",
                self.opts.scan_limit, self.opts.scan_limit
            ));
        };
        refine(self.interval, s, self.halvings, wide, |ball| {
            let e = enclose_on(self.f, self.set, ball, Some(n)).ok()??;
            (!e.lo().is_negative() && e.hi() < self.eps).then_some(n)
        })
    }
}

impl OverlapAlgebra for Uniformly<'_> {
    type Witness = u64;

    fn combine_overlap(&self, m: u64, n: u64, _: &Overlap) -> Result<u64, CombineError> {
        Ok(m.max(n))
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<u64> {
        self.probe(s, false)
    }

    fn widened_ball_oracle(&self, s: &Rational) -> Probe<u64> {
        self.probe(s, true)
    }
}

/// An index `n` with `0 ≤ f_n < ε` on `C`, for a sequence decreasing
/// pointwise to zero.
pub fn dini_index(
    f: &Expr,
    set: &ClosedSet,
    interval: &Interval,
    eps: &Rational,
    opts: DiniOptions,
    cfg: &EngineConfig,
) -> Result<Certified<IndexCertificate>, InstanceError> {
    require_positive("eps", eps)?;
    require_subset(set, interval)?;
    let alg = Uniformly { f, set, interval, eps, opts, halvings: halvings(cfg) };
    match bisect_cover(interval, &alg, cfg) {
        Ok(run) => Ok(Certified {
            certificate: IndexCertificate { n: run.witness, role: IndexRole::Dini },
            trace: run.trace,
        }),
        Err(e) if e.reason == FailureReason::OracleFailure && e.point().is_some() => {
            Err(InstanceError::ScanLimit {
                at: e.point().expect("checked").clone(),
                detail: e.detail.clone().unwrap_or_default(),
                trace: e.trace,
            })
        }
        Err(e) => Err(e.into()),
    }
}

/// Grid check of `0 ≤ f_n < ε` on every component of `C`.
pub fn verify_dini_index(
    f: &Expr,
    set: &ClosedSet,
    eps: &Rational,
    cert: &IndexCertificate,
) -> Result<(), Violation> {
    if cert.role != IndexRole::Dini {
        return Err(Violation::new("not a Dini index"));
    }
    for x in set.grid(VERIFY_GRID) {
        let v = f.at_index(&x, cert.n).map_err(|e| Violation::at(&x, e.to_string()))?;
        if v.is_negative() || &v >= eps {
            return Err(Violation::at(&x, format!("f_{} = {v} is outside [0, {eps})", cert.n)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn run(f: &str, set: &str, eps: &str) -> Result<u64, InstanceError> {
        let c: ClosedSet = set.parse().unwrap();
        let i = c.hull().unwrap();
        let f: Expr = f.parse().unwrap();
        let cert = dini_index(&f, &c, &i, &q(eps), DiniOptions::default(), &EngineConfig::default())?
            .certificate;
        verify_dini_index(&f, &c, &q(eps), &cert).unwrap();
        Ok(cert.n)
    }

    #[test]
    fn harmonic_scaling() {
        assert!(run("x/n", "0,1", "1/10").unwrap() >= 11);
    }

    #[test]
    fn zero_sequence_uses_first_index() {
        assert_eq!(run("0", "0,1", "1/10").unwrap(), 1);
    }

    #[test]
    fn powers_on_half_interval() {
        assert!(run("x^n", "0,1/2", "1/100").unwrap() >= 7);
    }

    #[test]
    fn non_convergent_hits_scan_limit() {
        let c: ClosedSet = "0,1".parse().unwrap();
        let i = c.hull().unwrap();
        let opts = DiniOptions { first_index: 1, scan_limit: 50 };
        let err = dini_index(&"1".parse().unwrap(), &c, &i, &q("1/10"), opts, &EngineConfig::default());
        assert!(matches!(err, Err(InstanceError::ScanLimit { .. })));
    }
}
