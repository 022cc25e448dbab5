use super::{Certified, InstanceError, Violation};
use crate::domain::{Interval, PointSet};
use crate::engine::{bisect_cover, Ball, CombineError, EngineConfig, Overlap, OverlapAlgebra, Probe};
use crate::numeric::Rational;

struct Isolated<'a> {
    points: &'a PointSet,
}

impl OverlapAlgebra for Isolated<'_> {
    /// Sorted points of `F` in the piece.
    type Witness = Vec<Rational>;

    fn combine_overlap(
        &self,
        mut l: Vec<Rational>,
        r: Vec<Rational>,
        _: &Overlap,
    ) -> Result<Vec<Rational>, CombineError> {
        l.extend(r);
        l.sort();
        l.dedup();
        Ok(l)
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<Vec<Rational>> {
        let delta = self.points.separation_radius(s);
        let witness = if self.points.contains(s) { vec![s.clone()] } else { Vec::new() };
        Probe::Accept(Ball { delta, witness })
    }

    fn probe_hints(&self, leaf: &Interval) -> Vec<Rational> {
        self.points.within(leaf)
    }
}

/// Lists `F ∩ I` by covering `I` with balls that meet `F` in at most their
/// centre.
pub fn enumerate_isolated(
    points: &PointSet,
    interval: &Interval,
    cfg: &EngineConfig,
) -> Result<Certified<Vec<Rational>>, InstanceError> {
    let run = bisect_cover(interval, &Isolated { points }, cfg)?;
    Ok(Certified { certificate: run.witness, trace: run.trace })
}

/// Compares against the direct filter.
pub fn verify_isolated(points: &PointSet, interval: &Interval, listed: &[Rational]) -> Result<(), Violation> {
    let expected = points.within(interval);
    if expected.as_slice() == listed {
        Ok(())
    } else {
        Err(Violation::new(format!("expected {} points, listed {}", expected.len(), listed.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn list(pts: &[&str], a: &str, b: &str) -> Vec<Rational> {
        let f = PointSet::from(pts.iter().map(|p| q(p)).collect::<Vec<_>>());
        let i = Interval::new(q(a), q(b)).unwrap();
        let out = enumerate_isolated(&f, &i, &EngineConfig::default()).unwrap().certificate;
        verify_isolated(&f, &i, &out).unwrap();
        out
    }

    #[test]
    fn examples() {
        assert_eq!(list(&["0", "1/2", "1"], "0", "1"), vec![q("0"), q("1/2"), q("1")]);
        assert!(list(&[], "0", "1").is_empty());
        assert_eq!(list(&["0", "1/2", "1"], "1/4", "3/4"), vec![q("1/2")]);
    }

    #[test]
    fn non_dyadic_points() {
        assert_eq!(list(&["1/3", "2/7", "5/9"], "0", "1").len(), 3);
    }
}
