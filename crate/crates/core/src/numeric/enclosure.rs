use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BinaryOp, NumericError, Rational};

/// Closed interval `[lo, hi]` guaranteed to contain every value of some
/// computation. Endpoints are exact rationals, so no rounding is involved.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, NumericError> {
        if lo > hi {
            return Err(NumericError::InvertedBounds {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Enclosure { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
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

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn hull(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo.min_with(&other.lo),
            hi: self.hi.max_with(&other.hi),
        }
    }

    /// Largest absolute value in the enclosure.
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max_with(&self.hi.abs())
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn abs(&self) -> Enclosure {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            Enclosure { lo: Rational::zero(), hi: self.magnitude() }
        }
    }

    /// Tight enclosure of `x^k` over the interval.
    pub fn powi(&self, k: u32) -> Enclosure {
        if k == 0 {
            return Enclosure::point(Rational::one());
        }
        let a = self.lo.powi(k);
        let b = self.hi.powi(k);
        if k % 2 == 1 {
            Enclosure { lo: a, hi: b }
        } else if self.contains_zero() {
            Enclosure { lo: Rational::zero(), hi: a.max_with(&b) }
        } else {
            Enclosure { lo: a.min_with(&b), hi: a.max_with(&b) }
        }
    }

    pub fn apply(&self, op: BinaryOp, rhs: &Enclosure) -> Result<Enclosure, NumericError> {
        Ok(match op {
            BinaryOp::Add => Enclosure { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi },
            BinaryOp::Sub => Enclosure { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo },
            BinaryOp::Mul => {
                let products = [
                    &self.lo * &rhs.lo,
                    &self.lo * &rhs.hi,
                    &self.hi * &rhs.lo,
                    &self.hi * &rhs.hi,
                ];
                let (lo, hi) = min_max(&products);
                Enclosure { lo, hi }
            }
            BinaryOp::Div => {
                if rhs.contains_zero() {
                    return Err(NumericError::IndeterminateEnclosure {
                        numerator: self.to_string(),
                        denominator: rhs.to_string(),
                    });
                }
                let recip = Enclosure { lo: rhs.hi.recip()?, hi: rhs.lo.recip()? };
                return self.apply(BinaryOp::Mul, &recip);
            }
            BinaryOp::Min => Enclosure { lo: self.lo.min_with(&rhs.lo), hi: self.hi.min_with(&rhs.hi) },
            BinaryOp::Max => Enclosure { lo: self.lo.max_with(&rhs.lo), hi: self.hi.max_with(&rhs.hi) },
        })
    }
}

fn min_max(values: &[Rational]) -> (Rational, Rational) {
    let mut lo = values[0].clone();
    let mut hi = values[0].clone();
    for v in &values[1..] {
        if v < &lo {
            lo = v.clone();
        }
        if v > &hi {
            hi = v.clone();
        }
    }
    (lo, hi)
}

pub fn encl_arith(op: BinaryOp, x: &Enclosure, y: &Enclosure) -> Result<Enclosure, NumericError> {
    x.apply(op, y)
}

pub fn encl_width(x: &Enclosure) -> Rational {
    x.width()
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
