use serde::{Deserialize, Serialize};

use super::{
    enclose_on, halvings, miss_radius, refine, require_positive, require_subset, start_radius,
    Certified, InstanceError, Violation,
};
use crate::domain::{ClosedSet, Interval};
use crate::engine::{
    bisect_cover, Ball, CombineError, EngineConfig, Overlap, OverlapAlgebra, Probe,
};
use crate::expr::Expr;
use crate::numeric::Rational;

/// Largest grid the pair verifier will walk.
const MAX_VERIFY_POINTS: u64 = 2_000_000;

/// `x, y ∈ set, |x − y| ≤ delta ⇒ |f(x) − f(y)| < epsilon`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformModulus {
    pub epsilon: Rational,
    pub delta: Rational,
    pub set: ClosedSet,
}

/// `min{δ₁, δ₂, s − r}`, where `None` stands for an unconstrained piece.
pub fn heine_combine(d1: Option<&Rational>, d2: Option<&Rational>, s_minus_r: &Rational) -> Rational {
    [d1, d2]
        .into_iter()
        .flatten()
        .fold(s_minus_r.clone(), |acc, d| acc.min_with(d))
}

struct Uniform<'a> {
    f: &'a Expr,
    set: &'a ClosedSet,
    interval: &'a Interval,
    eps: &'a Rational,
    halvings: u32,
}

impl Uniform<'_> {
    fn probe(&self, s: &Rational, wide: bool) -> Probe<Option<Rational>> {
        if !self.set.contains(s) {
            let delta = miss_radius(self.set, s, self.interval);
            return Probe::Accept(Ball { delta, witness: None });
        }
        // the oscillation over the whole ball is below ε, so the ball itself
        // puts no constraint on δ
        refine(self.interval, s, self.halvings, wide, |ball| {
            let e = enclose_on(self.f, self.set, ball, None).ok()??;
            (&e.width() < self.eps).then_some(None)
        })
    }
}

impl OverlapAlgebra for Uniform<'_> {
    /// A modulus valid on the piece; `None` means any modulus is.
    type Witness = Option<Rational>;

    fn combine_overlap(
        &self,
        l: Option<Rational>,
        r: Option<Rational>,
        overlap: &Overlap,
    ) -> Result<Option<Rational>, CombineError> {
        Ok(Some(heine_combine(l.as_ref(), r.as_ref(), &(&overlap.s - &overlap.r))))
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<Option<Rational>> {
        self.probe(s, false)
    }

    fn widened_ball_oracle(&self, s: &Rational) -> Probe<Option<Rational>> {
        self.probe(s, true)
    }
}

/// Modulus of uniform continuity of `f` on `C ⊆ I` for the given `ε`.
pub fn uniform_delta(
    f: &Expr,
    set: &ClosedSet,
    interval: &Interval,
    eps: &Rational,
    cfg: &EngineConfig,
) -> Result<Certified<UniformModulus>, InstanceError> {
    require_positive("eps", eps)?;
    require_subset(set, interval)?;
    let alg = Uniform { f, set, interval, eps, halvings: halvings(cfg) };
    let run = bisect_cover(interval, &alg, cfg)?;
    let delta = run.witness.unwrap_or_else(|| start_radius(interval));
    Ok(Certified {
        certificate: UniformModulus { epsilon: eps.clone(), delta, set: set.clone() },
        trace: run.trace,
    })
}

/// Exhaustive pair check on a grid of `set` with spacing `δ/2`.
pub fn verify_modulus(f: &Expr, cert: &UniformModulus) -> Result<(), Violation> {
    if !cert.delta.is_positive() || !cert.epsilon.is_positive() {
        return Err(Violation::new("delta and epsilon must be positive"));
    }
    let spacing = cert.delta.half();
    let total: Rational = cert
        .set
        .components()
        .iter()
        .fold(Rational::zero(), |acc, c| &acc + &c.width());
    let estimate = total.checked_div(&spacing).expect("spacing is positive");
    if estimate > Rational::from(MAX_VERIFY_POINTS as i64) {
        return Err(Violation::new(format!("verification grid of ~{} points is too large", estimate.to_f64())));
    }

    let mut points = cert.set.grid_with_spacing(&spacing);
    points.sort();
    points.dedup();
    let values = points
        .iter()
        .map(|x| f.at(x).map_err(|e| Violation::at(x, e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if &points[j] - &points[i] > cert.delta {
                break;
            }
            if (&values[j] - &values[i]).abs() >= cert.epsilon {
                return Err(Violation::at(
                    &points[i],
                    format!("|f({}) - f({})| >= {}", points[i], points[j], cert.epsilon),
                ));
            }
        }
    }
    Ok(())
}
