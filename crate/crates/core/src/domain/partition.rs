use serde::{Deserialize, Serialize};

use super::{DomainError, Gauge, Interval};
use crate::numeric::Rational;

/// Cuts `a = a₀ < a₁ < … < aₙ = b` with one tag per cell, `xᵢ ∈ [aᵢ₋₁, aᵢ]`.
///
/// A single cut with no tags is the partition of the degenerate interval
/// `[a, a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TaggedPartition {
    cuts: Vec<Rational>,
    tags: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawPartition {
    cuts: Vec<Rational>,
    tags: Vec<Rational>,
}

impl<'de> Deserialize<'de> for TaggedPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawPartition::deserialize(deserializer)?;
        TaggedPartition::new(raw.cuts, raw.tags).map_err(serde::de::Error::custom)
    }
}

impl TaggedPartition {
    pub fn new(cuts: Vec<Rational>, tags: Vec<Rational>) -> Result<Self, DomainError> {
        let invalid = |why: &str| Err(DomainError::InvalidPartition(why.to_string()));
        if cuts.is_empty() {
            return invalid("no cuts");
        }
        if tags.len() + 1 != cuts.len() {
            return invalid("expected one tag per cell");
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("cuts must be strictly increasing");
        }
        for (i, tag) in tags.iter().enumerate() {
            if tag < &cuts[i] || tag > &cuts[i + 1] {
                return invalid("tag outside its cell");
            }
        }
        Ok(TaggedPartition { cuts, tags })
    }

    /// Partition of `[a, a]`.
    pub fn unit(at: Rational) -> Self {
        TaggedPartition { cuts: vec![at], tags: Vec::new() }
    }

    /// One cell with its tag.
    pub fn cell(lo: Rational, hi: Rational, tag: Rational) -> Result<Self, DomainError> {
        TaggedPartition::new(vec![lo, hi], vec![tag])
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn tags(&self) -> &[Rational] {
        &self.tags
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn start(&self) -> &Rational {
        &self.cuts[0]
    }

    pub fn end(&self) -> &Rational {
        self.cuts.last().expect("at least one cut")
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.start().clone(), self.end().clone()).expect("cuts increase")
    }

    /// `(cell, tag)` pairs from left to right.
    pub fn cells(&self) -> impl Iterator<Item = (Interval, &Rational)> + '_ {
        self.cuts.windows(2).zip(&self.tags).map(|(w, tag)| {
            (Interval::new(w[0].clone(), w[1].clone()).expect("cuts increase"), tag)
        })
    }

    /// Joins a partition of `[a, s]` with one of `[s, t]`.
    pub fn concat(mut self, other: TaggedPartition) -> Result<Self, DomainError> {
        if self.end() != other.start() {
            return Err(DomainError::InvalidPartition(format!(
                "cannot join partition ending at {} with one starting at {}",
                self.end(),
                other.start()
            )));
        }
        self.cuts.extend(other.cuts.into_iter().skip(1));
        self.tags.extend(other.tags);
        Ok(self)
    }

    /// Restriction to `[start, at]`. Fails when the cell containing `at`
    /// carries a tag to the right of `at`.
    pub fn truncate_right(&self, at: &Rational) -> Result<Self, DomainError> {
        if at < self.start() || at > self.end() {
            return Err(DomainError::InvalidPartition(format!("{at} outside {}", self.interval())));
        }
        let mut cuts = vec![self.cuts[0].clone()];
        let mut tags = Vec::new();
        for (i, tag) in self.tags.iter().enumerate() {
            if &cuts[cuts.len() - 1] >= at {
                break;
            }
            let hi = &self.cuts[i + 1];
            if hi <= at {
                cuts.push(hi.clone());
                tags.push(tag.clone());
            } else {
                if tag > at {
                    return Err(DomainError::InvalidPartition(format!(
                        "tag {tag} lies beyond the cut at {at}"
                    )));
                }
                cuts.push(at.clone());
                tags.push(tag.clone());
            }
        }
        TaggedPartition::new(cuts, tags)
    }

    /// Restriction to `[at, end]`. Fails when the cell containing `at`
    /// carries a tag to the left of `at`.
    pub fn truncate_left(&self, at: &Rational) -> Result<Self, DomainError> {
        if at < self.start() || at > self.end() {
            return Err(DomainError::InvalidPartition(format!("{at} outside {}", self.interval())));
        }
        let mut cuts = Vec::new();
        let mut tags = Vec::new();
        for (i, tag) in self.tags.iter().enumerate() {
            let lo = &self.cuts[i];
            let hi = &self.cuts[i + 1];
            if hi <= at {
                continue;
            }
            if lo >= at {
                if cuts.is_empty() {
                    cuts.push(lo.clone());
                }
            } else {
                if tag < at {
                    return Err(DomainError::InvalidPartition(format!(
                        "tag {tag} lies before the cut at {at}"
                    )));
                }
                cuts.push(at.clone());
            }
            cuts.push(hi.clone());
            tags.push(tag.clone());
        }
        if cuts.is_empty() {
            cuts.push(at.clone());
        }
        TaggedPartition::new(cuts, tags)
    }

    /// True iff every cell lies inside the gauge ball of its tag.
    pub fn is_delta_fine(&self, gauge: &Gauge) -> Result<bool, DomainError> {
        for (cell, tag) in self.cells() {
            let delta = gauge.at(tag)?;
            if cell.lo() < &(tag - &delta) || cell.hi() > &(tag + &delta) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_delta_fine(partition: &TaggedPartition, gauge: &Gauge) -> Result<bool, DomainError> {
    partition.is_delta_fine(gauge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn qs(xs: &[&str]) -> Vec<Rational> {
        xs.iter().map(|x| q(x)).collect()
    }

    #[test]
    fn large_gauge_is_fine() {
        let p = TaggedPartition::cell(q("0"), q("1"), q("1/2")).unwrap();
        assert!(is_delta_fine(&p, &Gauge::constant(q("2"))).unwrap());
    }

    #[test]
    fn small_gauge_at_left_tag_is_not_fine() {
        let p = TaggedPartition::cell(q("0"), q("1"), q("0")).unwrap();
        assert!(!is_delta_fine(&p, &Gauge::constant(q("1/4"))).unwrap());
    }

    #[test]
    fn four_cells_left_tags() {
        let p = TaggedPartition::new(
            qs(&["0", "3/10", "6/10", "9/10", "1"]),
            qs(&["0", "3/10", "6/10", "9/10"]),
        )
        .unwrap();
        let g = Gauge::constant(q("3/10"));
        // each cell [aᵢ₋₁, aᵢ] has length ≤ 3/10 and its tag at the left end
        for (cell, tag) in p.cells() {
            assert!(cell.hi() <= &(tag + &q("3/10")));
        }
        assert!(is_delta_fine(&p, &g).unwrap());
    }

    #[test]
    fn non_positive_gauge_is_an_error() {
        let p = TaggedPartition::cell(q("0"), q("1"), q("1/2")).unwrap();
        let err = is_delta_fine(&p, &Gauge::new(|x| x - &q("1/2"))).unwrap_err();
        assert!(matches!(err, DomainError::InvalidGauge { .. }));
    }

    #[test]
    fn validation_rejects_bad_shapes() {
        assert!(TaggedPartition::new(qs(&["0", "0"]), qs(&["0"])).is_err());
        assert!(TaggedPartition::new(qs(&["0", "1"]), qs(&["2"])).is_err());
        assert!(TaggedPartition::new(qs(&["0", "1"]), qs(&[])).is_err());
        // tags may sit on cut points
        assert!(TaggedPartition::new(qs(&["0", "1", "2"]), qs(&["1", "1"])).is_ok());
    }

    #[test]
    fn concat_and_unit() {
        let a = TaggedPartition::unit(q("0"));
        let b = TaggedPartition::cell(q("0"), q("1/2"), q("0")).unwrap();
        let c = TaggedPartition::cell(q("1/2"), q("1"), q("1")).unwrap();
        let p = a.concat(b).unwrap().concat(c.clone()).unwrap();
        assert_eq!(p.cuts(), qs(&["0", "1/2", "1"]).as_slice());
        assert!(p.clone().concat(c).is_err());
    }

    #[test]
    fn truncation_respects_tags() {
        let p = TaggedPartition::new(qs(&["0", "1", "2"]), qs(&["0", "2"])).unwrap();
        let left = p.truncate_right(&q("1/2")).unwrap();
        assert_eq!(left.cuts(), qs(&["0", "1/2"]).as_slice());
        let right = p.truncate_left(&q("3/2")).unwrap();
        assert_eq!(right.cuts(), qs(&["3/2", "2"]).as_slice());
        assert!(p.truncate_right(&q("3/2")).is_err());
        assert!(p.truncate_left(&q("1/2")).is_err());
        let at_cut = p.truncate_right(&q("1")).unwrap();
        assert_eq!(at_cut.cuts(), qs(&["0", "1"]).as_slice());
        let at_cut = p.truncate_left(&q("1")).unwrap();
        assert_eq!(at_cut.cuts(), qs(&["1", "2"]).as_slice());
    }

    #[test]
    fn json_round_trip() {
        let p = TaggedPartition::new(qs(&["0", "3/10", "1"]), qs(&["0", "1"])).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"cuts":["0","3/10","1"],"tags":["0","1"]}"#);
        assert_eq!(serde_json::from_str::<TaggedPartition>(&s).unwrap(), p);
    }
}
