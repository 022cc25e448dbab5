use serde::{Deserialize, Serialize};

use super::{
    enclose_on, halvings, miss_radius, refine, require_subset, Certified, InstanceError, Violation,
};
use crate::domain::{ClosedSet, Interval};
use crate::engine::{
    bisect_cover, Ball, CombineError, EngineConfig, FailureReason, Overlap, OverlapAlgebra, Probe,
};
use crate::expr::Expr;
use crate::numeric::Rational;

/// Search effort: grid points per component of `C`, and how many times the
/// grid may be doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub grid: u64,
    pub rounds: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { grid: 64, rounds: 4 }
    }
}

/// No point of the grid named by `budget` has a larger value than `value`.
/// Relative to that budget only; not an exact maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgmaxCandidate {
    pub point: Rational,
    pub value: Rational,
    pub budget: SearchBudget,
}

/// The contradiction algebra: every ball carries a point with a larger value.
struct NoMaximum<'a> {
    f: &'a Expr,
    set: &'a ClosedSet,
    interval: &'a Interval,
    best_point: Rational,
    best_value: Rational,
    halvings: u32,
}

impl NoMaximum<'_> {
    fn probe(&self, s: &Rational, wide: bool) -> Probe<()> {
        if !self.set.contains(s) {
            let delta = miss_radius(self.set, s, self.interval);
            return Probe::Accept(Ball { delta, witness: () });
        }
        let Ok(fs) = self.f.at(s) else {
            return Probe::Inconclusive;
        };
        if fs >= self.best_value {
            return Probe::Refuted(format!("no improvement on f({s}) = {fs} within budget"));
        }
        refine(self.interval, s, self.halvings, wide, |ball| {
            let e = enclose_on(self.f, self.set, ball, None).ok()??;
            (e.hi() < &self.best_value).then_some(())
        })
    }
}

impl OverlapAlgebra for NoMaximum<'_> {
    type Witness = ();

    fn combine_overlap(&self, _: (), _: (), _: &Overlap) -> Result<(), CombineError> {
        Ok(())
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<()> {
        self.probe(s, false)
    }

    fn widened_ball_oracle(&self, s: &Rational) -> Probe<()> {
        self.probe(s, true)
    }

    fn probe_hints(&self, leaf: &Interval) -> Vec<Rational> {
        vec![self.best_point.clone()]
            .into_iter()
            .filter(|p| leaf.contains(p))
            .collect()
    }
}

fn grid_best(f: &Expr, set: &ClosedSet, density: u64) -> Result<(Rational, Rational), InstanceError> {
    let mut best: Option<(Rational, Rational)> = None;
    for y in set.grid(density) {
        let v = f.at(&y)?;
        if best.as_ref().is_none_or(|(_, b)| &v > b) {
            best = Some((y, v));
        }
    }
    best.ok_or(InstanceError::EmptyDomain)
}

/// Budget-relative argmax of `f` on `C ⊆ I`.
///
/// Each round samples `C` on a grid and runs the contradiction algebra
/// against the best sample. A probe with no improvement aborts the engine
/// and becomes the candidate; if the engine succeeds the grid is doubled.
/// Once the rounds are spent the best sample is returned.
pub fn usc_max(
    f: &Expr,
    set: &ClosedSet,
    interval: &Interval,
    budget: SearchBudget,
    cfg: &EngineConfig,
) -> Result<Certified<ArgmaxCandidate>, InstanceError> {
    if set.is_empty() {
        return Err(InstanceError::EmptyDomain);
    }
    require_subset(set, interval)?;
    if budget.grid == 0 {
        return Err(InstanceError::InvalidInput("budget grid must be positive".into()));
    }

    let mut density = budget.grid;
    let mut round = 0;
    loop {
        let (best_point, best_value) = grid_best(f, set, density)?;
        let used = SearchBudget { grid: density, rounds: round };
        let alg = NoMaximum {
            f,
            set,
            interval,
            best_point: best_point.clone(),
            best_value: best_value.clone(),
            halvings: halvings(cfg),
        };
        match bisect_cover(interval, &alg, cfg) {
            Err(e) if e.reason == FailureReason::OracleFailure && e.point().is_some() => {
                let point = e.point().expect("checked").clone();
                let value = f.at(&point)?;
                return Ok(Certified {
                    certificate: ArgmaxCandidate { point, value, budget: used },
                    trace: e.trace,
                });
            }
            Err(e) => return Err(e.into()),
            Ok(run) if round >= budget.rounds => {
                return Ok(Certified {
                    certificate: ArgmaxCandidate { point: best_point, value: best_value, budget: used },
                    trace: run.trace,
                });
            }
            Ok(_) => {
                round += 1;
                density *= 2;
            }
        }
    }
}

/// Checks the candidate against every grid point of its budget.
pub fn verify_argmax(f: &Expr, set: &ClosedSet, cert: &ArgmaxCandidate) -> Result<(), Violation> {
    if !set.contains(&cert.point) {
        return Err(Violation::at(&cert.point, "candidate lies outside the set"));
    }
    let v = f.at(&cert.point).map_err(|e| Violation::at(&cert.point, e.to_string()))?;
    if v != cert.value {
        return Err(Violation::at(&cert.point, format!("f = {v}, certificate says {}", cert.value)));
    }
    for y in set.grid(cert.budget.grid) {
        let fy = f.at(&y).map_err(|e| Violation::at(&y, e.to_string()))?;
        if fy > cert.value {
            return Err(Violation::at(&y, format!("f = {fy} exceeds candidate value {}", cert.value)));
        }
    }
    Ok(())
}
