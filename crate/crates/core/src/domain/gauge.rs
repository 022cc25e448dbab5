use std::fmt;
use std::sync::Arc;

use super::DomainError;
use crate::numeric::Rational;

type GaugeFn = dyn Fn(&Rational) -> Rational + Send + Sync;

/// A positive radius function on an interval.
///
/// The rule is opaque; positivity is checked every time it is queried
/// through [`Gauge::at`].
#[derive(Clone)]
pub struct Gauge {
    rule: Arc<GaugeFn>,
}

impl Gauge {
    pub fn new(rule: impl Fn(&Rational) -> Rational + Send + Sync + 'static) -> Self {
        Gauge { rule: Arc::new(rule) }
    }

    pub fn constant(delta: Rational) -> Self {
        Gauge::new(move |_| delta.clone())
    }

    pub fn at(&self, x: &Rational) -> Result<Rational, DomainError> {
        let delta = (self.rule)(x);
        if !delta.is_positive() {
            return Err(DomainError::InvalidGauge { at: x.clone(), value: delta });
        }
        Ok(delta)
    }
}

impl fmt::Debug for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Gauge(..)")
    }
}
