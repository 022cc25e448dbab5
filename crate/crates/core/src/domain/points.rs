use serde::{Deserialize, Serialize};

use super::Interval;
use crate::numeric::Rational;

/// Finite set of rationals stored strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct PointSet {
    points: Vec<Rational>,
}

impl From<Vec<Rational>> for PointSet {
    fn from(mut points: Vec<Rational>) -> Self {
        points.sort();
        points.dedup();
        PointSet { points }
    }
}

impl From<PointSet> for Vec<Rational> {
    fn from(p: PointSet) -> Self {
        p.points
    }
}

impl PointSet {
    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.points.binary_search(x).is_ok()
    }

    pub fn within(&self, interval: &Interval) -> Vec<Rational> {
        self.points.iter().filter(|p| interval.contains(p)).cloned().collect()
    }

    /// Half the distance from `s` to the nearest other point, or 1 if there
    /// is none, so that `[s − δ, s + δ] ∩ F ⊆ {s}`.
    pub fn separation_radius(&self, s: &Rational) -> Rational {
        let idx = self.points.partition_point(|p| p < s);
        let below = idx.checked_sub(1).map(|i| s - &self.points[i]);
        let mut above_idx = idx;
        if self.points.get(above_idx) == Some(s) {
            above_idx += 1;
        }
        let above = self.points.get(above_idx).map(|p| p - s);
        match (below, above) {
            (Some(a), Some(b)) => a.min_with(&b).half(),
            (Some(d), None) | (None, Some(d)) => d.half(),
            (None, None) => Rational::one(),
        }
    }
}

pub fn separation_radius(set: &PointSet, s: &Rational) -> Rational {
    set.separation_radius(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(xs: &[&str]) -> PointSet {
        PointSet::from(xs.iter().map(|x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn nearest_other_point() {
        assert_eq!(separation_radius(&set(&["0", "1/2", "1"]), &q("1/2")), q("1/4"));
    }

    #[test]
    fn vacuous_cases() {
        assert_eq!(separation_radius(&set(&[]), &q("7")), q("1"));
        assert_eq!(separation_radius(&set(&["0"]), &q("0")), q("1"));
    }

    #[test]
    fn ball_meets_only_center() {
        let f = set(&["-1", "0", "1/3", "1/2", "2"]);
        for s in ["0", "1/3", "1/4", "3", "-5"] {
            let s = q(s);
            let d = f.separation_radius(&s);
            assert!(d.is_positive());
            let ball = Interval::new(&s - &d, &s + &d).unwrap();
            assert!(f.within(&ball).iter().all(|p| *p == s));
        }
    }

    #[test]
    fn sorted_and_deduplicated() {
        let f = set(&["1", "0", "1"]);
        assert_eq!(f.points(), &[q("0"), q("1")]);
    }
}
