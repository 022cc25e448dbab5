use serde::{Deserialize, Serialize};

use super::{halvings, refine, Certified, InstanceError, Violation, VERIFY_GRID};
use crate::domain::Interval;
use crate::engine::{bisect_cover, CombineError, EngineConfig, Overlap, OverlapAlgebra, Probe};
use crate::expr::Expr;
use crate::numeric::Rational;

/// Claims `|f(x)| ≤ M` on the interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    #[serde(rename = "M")]
    pub m: Rational,
    pub interval: Interval,
}

struct Boundedness<'a> {
    f: &'a Expr,
    interval: &'a Interval,
    halvings: u32,
}

impl Boundedness<'_> {
    fn probe(&self, s: &Rational, wide: bool) -> Probe<Rational> {
        refine(self.interval, s, self.halvings, wide, |ball| self.f.enclose(ball).ok().map(|e| e.magnitude()))
    }
}

impl OverlapAlgebra for Boundedness<'_> {
    type Witness = Rational;

    fn combine_overlap(&self, m1: Rational, m2: Rational, _: &Overlap) -> Result<Rational, CombineError> {
        Ok(m1.max_with(&m2))
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<Rational> {
        self.probe(s, false)
    }

    fn widened_ball_oracle(&self, s: &Rational) -> Probe<Rational> {
        self.probe(s, true)
    }
}

/// Bound for a locally bounded `f`. Fails with depth-limit on a leaf that
/// contains a singularity.
pub fn bound_on(
    f: &Expr,
    interval: &Interval,
    cfg: &EngineConfig,
) -> Result<Certified<BoundCertificate>, InstanceError> {
    let alg = Boundedness { f, interval, halvings: halvings(cfg) };
    let run = bisect_cover(interval, &alg, cfg)?;
    Ok(Certified {
        certificate: BoundCertificate { m: run.witness, interval: interval.clone() },
        trace: run.trace,
    })
}

/// Searches a grid for a point where `|f| > M`.
pub fn verify_bound(f: &Expr, cert: &BoundCertificate) -> Result<(), Violation> {
    for x in cert.interval.grid(VERIFY_GRID) {
        let v = f.at(&x).map_err(|e| Violation::at(&x, e.to_string()))?;
        if v.abs() > cert.m {
            return Err(Violation::at(&x, format!("|f| = {} exceeds M = {}", v.abs(), cert.m)));
        }
    }
    Ok(())
}
