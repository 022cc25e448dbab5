use serde::{Deserialize, Serialize};

use super::{Certified, InstanceError, Violation};
use crate::domain::{Gauge, Interval, TaggedPartition};
use crate::engine::{
    bisect_cover, creep, Ball, CombineError, CreepAlgebra, EngineConfig, LeftStep, Overlap,
    OverlapAlgebra, Probe,
};
use crate::numeric::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CousinStrategy {
    #[default]
    Creep,
    Bisect,
}

struct Fine<'a> {
    gauge: &'a Gauge,
    interval: &'a Interval,
}

impl CreepAlgebra for Fine<'_> {
    type Witness = TaggedPartition;

    fn unit(&self, at: &Rational) -> TaggedPartition {
        TaggedPartition::unit(at.clone())
    }

    fn combine_adjacent(&self, l: TaggedPartition, r: TaggedPartition) -> Result<TaggedPartition, CombineError> {
        l.concat(r).map_err(|e| CombineError::new(e.to_string()))
    }

    fn right_oracle(&self, s: &Rational) -> Option<(Rational, TaggedPartition)> {
        let g = self.gauge.at(s).ok()?;
        let t = (s + &g).min_with(self.interval.hi());
        let cell = TaggedPartition::cell(s.clone(), t.clone(), s.clone()).ok()?;
        Some((t, cell))
    }

    fn left_oracle(&self, sigma: &Rational) -> Option<LeftStep<'_, TaggedPartition>> {
        let g = self.gauge.at(sigma).ok()?;
        let r = (sigma - &g).max_with(self.interval.lo());
        let sigma = sigma.clone();
        Some(LeftStep::new(r, move |x: &Rational| {
            TaggedPartition::cell(x.clone(), sigma.clone(), sigma.clone())
                .expect("the engine only asks for x < σ")
        }))
    }
}

impl OverlapAlgebra for Fine<'_> {
    type Witness = TaggedPartition;

    /// Cuts both pieces at the shared leaf boundary and joins them.
    fn combine_overlap(
        &self,
        l: TaggedPartition,
        r: TaggedPartition,
        overlap: &Overlap,
    ) -> Result<TaggedPartition, CombineError> {
        let err = |e: crate::domain::DomainError| CombineError::new(e.to_string());
        let left = l.truncate_right(&overlap.joint).map_err(err)?;
        let right = r.truncate_left(&overlap.joint).map_err(err)?;
        left.concat(right).map_err(err)
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<TaggedPartition> {
        let g = match self.gauge.at(s) {
            Ok(g) => g,
            Err(e) => return Probe::Refuted(e.to_string()),
        };
        let ball = self.interval.clip_ball(s, &g).expect("probe lies in the interval");
        if ball.is_degenerate() {
            return Probe::Inconclusive;
        }
        let cell = TaggedPartition::cell(ball.lo().clone(), ball.hi().clone(), s.clone())
            .expect("s lies in its own ball");
        Probe::Accept(Ball { delta: g, witness: cell })
    }
}

/// A `gauge`-fine tagged partition of `interval`.
pub fn cousin_partition(
    gauge: &Gauge,
    interval: &Interval,
    strategy: CousinStrategy,
    cfg: &EngineConfig,
) -> Result<Certified<TaggedPartition>, InstanceError> {
    if interval.is_degenerate() {
        return Ok(Certified {
            certificate: TaggedPartition::unit(interval.lo().clone()),
            trace: Default::default(),
        });
    }
    let alg = Fine { gauge, interval };
    let run = match strategy {
        CousinStrategy::Creep => creep(interval, &alg, cfg)?,
        CousinStrategy::Bisect => bisect_cover(interval, &alg, cfg)?,
    };
    Ok(Certified { certificate: run.witness, trace: run.trace })
}

/// The partition spans `interval` and every cell sits in its tag's ball.
pub fn verify_partition(gauge: &Gauge, interval: &Interval, p: &TaggedPartition) -> Result<(), Violation> {
    if &p.interval() != interval {
        return Err(Violation::new(format!("partition spans {}, expected {interval}", p.interval())));
    }
    for (cell, tag) in p.cells() {
        let g = gauge.at(tag).map_err(|e| Violation::at(tag, e.to_string()))?;
        if cell.lo() < &(tag - &g) || cell.hi() > &(tag + &g) {
            return Err(Violation::at(tag, format!("cell {cell} leaves the gauge ball of radius {g}")));
        }
    }
    Ok(())
}
