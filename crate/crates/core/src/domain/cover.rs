use serde::{Deserialize, Serialize};

use super::DomainError;
use crate::numeric::Rational;

/// The open interval `]lo, hi[`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OpenIntervalSpec {
    lo: Rational,
    hi: Rational,
}

#[derive(Deserialize)]
struct RawOpen {
    lo: Rational,
    hi: Rational,
}

impl<'de> Deserialize<'de> for OpenIntervalSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawOpen::deserialize(deserializer)?;
        OpenIntervalSpec::new(raw.lo, raw.hi).map_err(serde::de::Error::custom)
    }
}

impl OpenIntervalSpec {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, DomainError> {
        if lo >= hi {
            return Err(DomainError::EmptyOpenInterval { lo, hi });
        }
        Ok(OpenIntervalSpec { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

/// Finite, non-empty list of open intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenCover {
    members: Vec<OpenIntervalSpec>,
}

#[derive(Deserialize)]
struct RawCover {
    members: Vec<OpenIntervalSpec>,
}

impl<'de> Deserialize<'de> for OpenCover {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawCover::deserialize(deserializer)?;
        OpenCover::new(raw.members).map_err(serde::de::Error::custom)
    }
}

impl OpenCover {
    pub fn new(members: Vec<OpenIntervalSpec>) -> Result<Self, DomainError> {
        if members.is_empty() {
            return Err(DomainError::EmptyCover);
        }
        Ok(OpenCover { members })
    }

    pub fn members(&self) -> &[OpenIntervalSpec] {
        &self.members
    }

    /// First member containing `s`, with the margin `min(s − lo, hi − s)`.
    pub fn member_containing(&self, s: &Rational) -> Option<(usize, Rational)> {
        self.members.iter().enumerate().find_map(|(i, m)| {
            m.contains(s).then(|| (i, (s - &m.lo).min_with(&(&m.hi - s))))
        })
    }
}

pub fn cover_member_containing(cover: &OpenCover, s: &Rational) -> Option<(usize, Rational)> {
    cover.member_containing(s)
}
