//! Intervals, closed sets, open covers, point sets, gauges and tagged
//! partitions: the objects the theorem instances quantify over.

mod closed_set;
mod cover;
mod gauge;
mod interval;
mod partition;
mod points;

pub use closed_set::{closed_set_intersect, ClosedSet};
pub use cover::{cover_member_containing, OpenCover, OpenIntervalSpec};
pub use gauge::Gauge;
pub use interval::Interval;
pub use partition::{is_delta_fine, TaggedPartition};
pub use points::{separation_radius, PointSet};

use thiserror::Error;

use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("interval [{lo}, {hi}] has lo > hi")]
    InvertedInterval { lo: Rational, hi: Rational },
    #[error("open interval ]{lo}, {hi}[ is empty")]
    EmptyOpenInterval { lo: Rational, hi: Rational },
    #[error("open cover has no members")]
    EmptyCover,
    #[error("invalid gauge: value {value} at {at} is not positive")]
    InvalidGauge { at: Rational, value: Rational },
    #[error("invalid tagged partition: {0}")]
    InvalidPartition(String),
    #[error("syntax: {0}")]
    Syntax(String),
}
