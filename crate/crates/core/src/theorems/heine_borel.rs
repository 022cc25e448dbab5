use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{miss_radius, require_subset, Certified, InstanceError};
use crate::domain::{ClosedSet, Interval, OpenCover};
use crate::engine::{bisect_cover, Ball, CombineError, EngineConfig, Overlap, OverlapAlgebra, Probe};
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcoverCertificate {
    pub member_indices: Vec<usize>,
}

struct Subcover<'a> {
    cover: &'a OpenCover,
    set: &'a ClosedSet,
    interval: &'a Interval,
}

impl OverlapAlgebra for Subcover<'_> {
    type Witness = BTreeSet<usize>;

    fn combine_overlap(
        &self,
        mut l: BTreeSet<usize>,
        r: BTreeSet<usize>,
        _: &Overlap,
    ) -> Result<BTreeSet<usize>, CombineError> {
        l.extend(r);
        Ok(l)
    }

    fn ball_oracle(&self, s: &Rational) -> Probe<BTreeSet<usize>> {
        if !self.set.contains(s) {
            let delta = miss_radius(self.set, s, self.interval);
            return Probe::Accept(Ball { delta, witness: BTreeSet::new() });
        }
        match self.cover.member_containing(s) {
            // half the margin keeps the closed ball inside the open member
            Some((i, margin)) => Probe::Accept(Ball { delta: margin.half(), witness: BTreeSet::from([i]) }),
            None => Probe::Inconclusive,
        }
    }
}

/// Finitely many members of `cover` whose union contains `C`. A
/// depth-limit failure reports a leaf around an uncovered point of `C`.
pub fn finite_subcover(
    cover: &OpenCover,
    set: &ClosedSet,
    interval: &Interval,
    cfg: &EngineConfig,
) -> Result<Certified<SubcoverCertificate>, InstanceError> {
    require_subset(set, interval)?;
    let alg = Subcover { cover, set, interval };
    let run = bisect_cover(interval, &alg, cfg)?;
    Ok(Certified {
        certificate: SubcoverCertificate { member_indices: run.witness.into_iter().collect() },
        trace: run.trace,
    })
}

/// Exact sweep: every component of `C` lies in the union of the selected
/// open members. Out-of-range indices make the check fail.
pub fn verify_subcover(cover: &OpenCover, indices: &[usize], set: &ClosedSet) -> bool {
    let Some(chosen) = indices
        .iter()
        .map(|&i| cover.members().get(i))
        .collect::<Option<Vec<_>>>()
    else {
        return false;
    };
    set.components().iter().all(|comp| {
        // `cur` is the leftmost point of the component not yet known covered
        let mut cur = comp.lo().clone();
        while &cur <= comp.hi() {
            let reach = chosen
                .iter()
                .filter(|m| m.lo() < &cur && &cur < m.hi())
                .map(|m| m.hi())
                .max();
            match reach {
                Some(h) => cur = h.clone(),
                None => return false,
            }
        }
        true
    })
}
