use std::fmt;

use serde::{Deserialize, Serialize};

use super::DomainError;
use crate::numeric::{Enclosure, Rational};

/// Closed interval `[lo, hi]`; single points are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Deserialize)]
struct RawInterval {
    lo: Rational,
    hi: Rational,
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawInterval::deserialize(deserializer)?;
        Interval::new(raw.lo, raw.hi).map_err(serde::de::Error::custom)
    }
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, DomainError> {
        if lo > hi {
            return Err(DomainError::InvertedInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        self.lo.midpoint(&self.hi)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max_with(&other.lo);
        let hi = self.hi.min_with(&other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// `self ∩ [center − radius, center + radius]`, which is never empty when
    /// `center` lies in `self`.
    pub fn clip_ball(&self, center: &Rational, radius: &Rational) -> Option<Interval> {
        let ball = Interval { lo: center - radius, hi: center + radius };
        self.intersect(&ball)
    }

    pub fn split(&self) -> (Interval, Interval) {
        let mid = self.midpoint();
        (
            Interval { lo: self.lo.clone(), hi: mid.clone() },
            Interval { lo: mid, hi: self.hi.clone() },
        )
    }

    pub fn enclosure(&self) -> Enclosure {
        Enclosure::new(self.lo.clone(), self.hi.clone()).expect("interval bounds are ordered")
    }

    /// `count + 1` evenly spaced points from `lo` to `hi` inclusive.
    pub fn grid(&self, count: u64) -> Vec<Rational> {
        let count = count.max(1);
        let step = self
            .width()
            .checked_div(&Rational::from(count as i64))
            .expect("count is positive");
        let mut out = Vec::with_capacity(count as usize + 1);
        let mut x = self.lo.clone();
        for _ in 0..count {
            out.push(x.clone());
            x = &x + &step;
        }
        out.push(self.hi.clone());
        if self.is_degenerate() {
            out.truncate(1);
        }
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: &str, hi: &str) -> Interval {
        Interval::new(lo.parse().unwrap(), hi.parse().unwrap()).unwrap()
    }

    #[test]
    fn clip_ball_stays_inside() {
        let i = iv("0", "1");
        let b = i.clip_ball(&"1/4".parse().unwrap(), &"1/2".parse().unwrap()).unwrap();
        assert_eq!(b, iv("0", "3/4"));
    }

    #[test]
    fn grid_endpoints() {
        let g = iv("0", "1").grid(4);
        assert_eq!(g.len(), 5);
        assert_eq!(g[1], "1/4".parse().unwrap());
        assert_eq!(iv("1", "1").grid(10).len(), 1);
    }

    #[test]
    fn rejects_inverted() {
        assert!(Interval::new(Rational::one(), Rational::zero()).is_err());
        assert!(serde_json::from_str::<Interval>(r#"{"lo":"1","hi":"0"}"#).is_err());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&iv("-1/2", "3")).unwrap();
        assert_eq!(s, r#"{"lo":"-1/2","hi":"3"}"#);
    }
}
