use super::{miss_radius, Certified, IndexCertificate, IndexRole, InstanceError, Violation};
use crate::domain::{ClosedSet, Interval};
use crate::engine::{
    bisect_cover, Ball, CombineError, EngineConfig, FailureReason, Overlap, OverlapAlgebra, Probe,
};
use crate::expr::{EvalError, Expr};
use crate::numeric::Rational;

/// Closed sets `C_n ∩ I`, `n = 0..=max_index`, with component endpoints
/// given as expressions in `n`. A component whose endpoints come out
/// inverted is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    interval: Interval,
    components: Vec<(Expr, Expr)>,
    sets: Vec<ClosedSet>,
}

impl SetFamily {
    pub fn new(interval: Interval, components: Vec<(Expr, Expr)>, max_index: u64) -> Result<Self, EvalError> {
        let zero = Rational::zero();
        let sets = (0..=max_index)
            .map(|n| {
                let mut pieces = Vec::new();
                for (lo, hi) in &components {
                    let lo = lo.at_index(&zero, n)?;
                    let hi = hi.at_index(&zero, n)?;
                    if let Ok(c) = Interval::new(lo, hi) {
                        pieces.extend(interval.intersect(&c));
                    }
                }
                Ok(ClosedSet::from_intervals(pieces))
            })
            .collect::<Result<Vec<_>, EvalError>>()?;
        Ok(SetFamily { interval, components, sets })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn components(&self) -> &[(Expr, Expr)] {
        &self.components
    }

    pub fn max_index(&self) -> u64 {
        self.sets.len() as u64 - 1
    }

    /// `C_n ∩ I`; indices past `max_index` reuse the last set.
    pub fn at(&self, n: u64) -> ClosedSet {
        let i = (n as usize).min(self.sets.len() - 1);
        self.sets[i].clone()
    }

    /// Smallest `n ≤ max_index` with `s ∉ C_n`.
    pub fn escape(&self, s: &Rational) -> Option<u64> {
        self.sets.iter().position(|c| !c.contains(s)).map(|n| n as u64)
    }
}

struct Nested<F, E> {
    family: F,
    escape: E,
    interval: Interval,
}

impl<F, E> OverlapAlgebra for Nested<F, E>
where
    F: Fn(u64) -> ClosedSet,
    E: Fn(&Rational) -> Option<u64>,
{
    type Witness = u64;

    fn combine_overlap(&self, m: u64, n: u64, _: &Overlap) -> Result<u64, CombineError> {
        Ok(m.max(n))
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<u64> {
        let Some(n) = (self.escape)(s) else {
            return Probe::Refuted(format!("{s} lies in every queried set"));
        };
        let cn = (self.family)(n).intersect(&self.interval);
        if cn.contains(s) {
            return Probe::Refuted(format!("escape index {n} does not exclude {s}"));
        }
        if n > 0 && !cn.is_subset_of(&(self.family)(n - 1).intersect(&self.interval)) {
            return Probe::Refuted(format!("family is not decreasing at index {n}"));
        }
        let delta = miss_radius(&cn, s, &self.interval);
        Probe::Accept(Ball { delta, witness: n })
    }
}

/// An index `n` with `C_n ∩ I = ∅` for a decreasing family of closed sets
/// with empty intersection. `escape(s)` names some `n` with `s ∉ C_n`.
pub fn cantor_empty_index(
    family: impl Fn(u64) -> ClosedSet,
    escape: impl Fn(&Rational) -> Option<u64>,
    interval: &Interval,
    cfg: &EngineConfig,
) -> Result<Certified<IndexCertificate>, InstanceError> {
    let alg = Nested { family, escape, interval: interval.clone() };
    match bisect_cover(interval, &alg, cfg) {
        Ok(run) => Ok(Certified {
            certificate: IndexCertificate { n: run.witness, role: IndexRole::Cantor },
            trace: run.trace,
        }),
        Err(e) if e.reason == FailureReason::OracleFailure && e.point().is_some() => {
            Err(InstanceError::HypothesisViolation {
                at: e.point().expect("checked").clone(),
                detail: e.detail.clone().unwrap_or_default(),
                trace: e.trace,
            })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cantor_family_index(
    family: &SetFamily,
    cfg: &EngineConfig,
) -> Result<Certified<IndexCertificate>, InstanceError> {
    cantor_empty_index(|n| family.at(n), |s| family.escape(s), family.interval(), cfg)
}

/// Exact emptiness of `C_n ∩ I`.
pub fn verify_cantor_index(family: &SetFamily, cert: &IndexCertificate) -> Result<(), Violation> {
    if cert.role != IndexRole::Cantor {
        return Err(Violation::new("not a Cantor index"));
    }
    let cn = family.at(cert.n);
    match cn.components().first() {
        None => Ok(()),
        Some(c) => Err(Violation::at(c.lo(), format!("C_{} is not empty", cert.n))),
    }
}
