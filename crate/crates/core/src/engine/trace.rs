use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::domain::Interval;
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum TraceEvent {
    RightStep { from: Rational, to: Rational },
    LeftJump { from: Rational, to: Rational },
    BallAccept { at: Rational, delta: Rational, leaf: Interval },
    Split { leaf: Interval, left: Interval, right: Interval },
    Stall { at: Rational, estimate: Rational },
    OracleFail { at: Rational },
}

/// Ordered record of one engine run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    events: Vec<TraceEvent>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    pub fn push(&mut self, event: TraceEvent) {
        self.events.push(event);
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn count(&self, pred: impl Fn(&TraceEvent) -> bool) -> usize {
        self.events.iter().filter(|e| pred(e)).count()
    }

    /// Accepted leaves in fold order.
    pub fn accepted_leaves(&self) -> Vec<Interval> {
        self.events
            .iter()
            .filter_map(|e| match e {
                TraceEvent::BallAccept { leaf, .. } => Some(leaf.clone()),
                _ => None,
            })
            .collect()
    }

    /// One JSON object per line.
    pub fn write_json_lines(&self, mut out: impl Write) -> io::Result<()> {
        for event in &self.events {
            serde_json::to_writer(&mut out, event)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_json_lines(&self) -> String {
        let mut buf = Vec::new();
        self.write_json_lines(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }

    pub fn from_json_lines(text: &str) -> serde_json::Result<Self> {
        let events = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<Result<_, _>>()?;
        Ok(Trace { events })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lines_round_trip() {
        let mut t = Trace::new();
        t.push(TraceEvent::RightStep { from: Rational::zero(), to: "3/10".parse().unwrap() });
        t.push(TraceEvent::Stall { at: "1/2".parse().unwrap(), estimate: Rational::one() });
        let text = t.to_json_lines();
        assert_eq!(text.lines().next().unwrap(), r#"{"event":"right-step","from":"0","to":"3/10"}"#);
        assert_eq!(Trace::from_json_lines(&text).unwrap(), t);
    }
}
