use serde::{Deserialize, Serialize};

use super::{halvings, refine, Certified, InstanceError, Violation, VERIFY_GRID};
use crate::domain::Interval;
use crate::engine::{bisect_cover, CombineError, EngineConfig, Overlap, OverlapAlgebra, Probe};
use crate::expr::Expr;
use crate::numeric::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn of(v: &Rational) -> Option<Sign> {
        match v.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCertificate {
    pub sign: Sign,
    pub interval: Interval,
}

struct ConstantSign<'a> {
    f: &'a Expr,
    interval: &'a Interval,
    halvings: u32,
}

impl ConstantSign<'_> {
    fn probe(&self, s: &Rational, wide: bool) -> Probe<Sign> {
        refine(self.interval, s, self.halvings, wide, |ball| {
            let e = self.f.enclose(ball).ok()?;
            if e.lo().is_positive() {
                Some(Sign::Positive)
            } else if e.hi().is_negative() {
                Some(Sign::Negative)
            } else {
                None
            }
        })
    }
}

impl OverlapAlgebra for ConstantSign<'_> {
    type Witness = Sign;

    fn combine_overlap(&self, l: Sign, r: Sign, overlap: &Overlap) -> Result<Sign, CombineError> {
        if l == r {
            Ok(l)
        } else {
            Err(CombineError::new(format!("signs differ on overlapping pieces near {}", overlap.joint)))
        }
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<Sign> {
        self.probe(s, false)
    }

    fn widened_ball_oracle(&self, s: &Rational) -> Probe<Sign> {
        self.probe(s, true)
    }
}

/// Sign of a zero-free `f`. A depth-limit failure reports a leaf on which
/// no enclosure excludes zero.
pub fn constant_sign(
    f: &Expr,
    interval: &Interval,
    cfg: &EngineConfig,
) -> Result<Certified<SignCertificate>, InstanceError> {
    let alg = ConstantSign { f, interval, halvings: halvings(cfg) };
    let run = bisect_cover(interval, &alg, cfg)?;
    Ok(Certified {
        certificate: SignCertificate { sign: run.witness, interval: interval.clone() },
        trace: run.trace,
    })
}

pub fn verify_sign(f: &Expr, cert: &SignCertificate) -> Result<(), Violation> {
    for x in cert.interval.grid(VERIFY_GRID) {
        let v = f.at(&x).map_err(|e| Violation::at(&x, e.to_string()))?;
        if Sign::of(&v) != Some(cert.sign) {
            return Err(Violation::at(&x, format!("f = {v}")));
        }
    }
    Ok(())
}
