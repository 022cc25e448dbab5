use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{DomainError, Interval};
use crate::numeric::Rational;

/// Finite union of closed rational intervals, kept sorted with gaps between
/// consecutive components (`previous.hi < next.lo`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ClosedSet {
    components: Vec<Interval>,
}

#[derive(Deserialize)]
struct RawClosedSet {
    components: Vec<Interval>,
}

impl<'de> Deserialize<'de> for ClosedSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(ClosedSet::from_intervals(RawClosedSet::deserialize(deserializer)?.components))
    }
}

impl ClosedSet {
    pub fn empty() -> Self {
        ClosedSet::default()
    }

    pub fn single(interval: Interval) -> Self {
        ClosedSet { components: vec![interval] }
    }

    /// Canonical union of arbitrary intervals; overlapping or touching pieces
    /// are merged, so any permutation yields the same set.
    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Self {
        let mut pieces: Vec<Interval> = intervals.into_iter().collect();
        pieces.sort_by(|a, b| a.lo().cmp(b.lo()).then_with(|| a.hi().cmp(b.hi())));
        let mut components: Vec<Interval> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match components.last_mut() {
                Some(last) if piece.lo() <= last.hi() => {
                    if piece.hi() > last.hi() {
                        *last = Interval::new(last.lo().clone(), piece.hi().clone())
                            .expect("merge keeps order");
                    }
                }
                _ => components.push(piece),
            }
        }
        ClosedSet { components }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    pub fn hull(&self) -> Option<Interval> {
        let first = self.components.first()?;
        let last = self.components.last()?;
        Some(Interval::new(first.lo().clone(), last.hi().clone()).expect("sorted components"))
    }

    pub fn intersect(&self, interval: &Interval) -> ClosedSet {
        ClosedSet {
            components: self.components.iter().filter_map(|c| c.intersect(interval)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &ClosedSet) -> bool {
        self.components
            .iter()
            .all(|c| other.components.iter().any(|o| o.contains_interval(c)))
    }

    /// Exact distance from `x` to the set; `None` when the set is empty.
    pub fn distance(&self, x: &Rational) -> Option<Rational> {
        self.components
            .iter()
            .map(|c| {
                if x < c.lo() {
                    c.lo() - x
                } else if x > c.hi() {
                    x - c.hi()
                } else {
                    Rational::zero()
                }
            })
            .min()
    }

    /// Sample points of every component: `per_component + 1` evenly spaced
    /// points each.
    pub fn grid(&self, per_component: u64) -> Vec<Rational> {
        self.components.iter().flat_map(|c| c.grid(per_component)).collect()
    }

    /// Points of each component on a grid of spacing at most `spacing`.
    pub fn grid_with_spacing(&self, spacing: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for c in &self.components {
            let mut x = c.lo().clone();
            while &x < c.hi() {
                out.push(x.clone());
                x = &x + spacing;
            }
            out.push(c.hi().clone());
        }
        out
    }
}

/// `C ∩ I` as a canonical closed set.
pub fn closed_set_intersect(set: &ClosedSet, interval: &Interval) -> ClosedSet {
    set.intersect(interval)
}

impl FromStr for ClosedSet {
    type Err = DomainError;

    /// Parses `"a,b;c,d"` (semicolon-separated closed intervals).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pieces = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (lo, hi) = part
                .split_once(',')
                .ok_or_else(|| DomainError::Syntax(format!("expected `lo,hi` in {part:?}")))?;
            let lo: Rational = lo.parse().map_err(|_| DomainError::Syntax(format!("bad endpoint {lo:?}")))?;
            let hi: Rational = hi.parse().map_err(|_| DomainError::Syntax(format!("bad endpoint {hi:?}")))?;
            pieces.push(Interval::new(lo, hi)?);
        }
        Ok(ClosedSet::from_intervals(pieces))
    }
}
