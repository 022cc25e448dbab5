use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::domain::{ClosedSet, Gauge, Interval, OpenCover, PointSet};
use crate::engine::{EngineConfig, Location, Trace};
use crate::expr::{parse, Expr};
use crate::numeric::Rational;
use crate::theorems::{self as th, CousinStrategy, InstanceError, SearchBudget, SetFamily};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// A Cantor family file: endpoints are expressions in `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub interval: Interval,
    pub components: Vec<ComponentSpec>,
    pub max_index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub lo: String,
    pub hi: String,
}

impl FamilySpec {
    pub fn build(&self) -> Result<SetFamily, String> {
        let components = self
            .components
            .iter()
            .map(|c| Ok((expr(&c.lo, "component lo")?, expr(&c.hi, "component hi")?)))
            .collect::<Result<Vec<_>, String>>()?;
        SetFamily::new(self.interval.clone(), components, self.max_index).map_err(|e| e.to_string())
    }
}

pub(crate) fn expr(text: &str, what: &str) -> Result<Expr, String> {
    parse(text).map_err(|e| format!("{what}: {e}"))
}

pub(crate) fn gauge(e: Expr) -> Gauge {
    // unevaluable points get 0, which the gauge check rejects
    Gauge::new(move |x: &Rational| e.at(x).unwrap_or_else(|_| Rational::zero()))
}

/// One problem instance with its inputs, as echoed in the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "instance", content = "inputs", rename_all = "kebab-case")]
pub enum Problem {
    Cousin { gauge: String, interval: Interval, strategy: CousinStrategy },
    Heine { function: String, set: ClosedSet, interval: Interval, eps: Rational },
    Bound { function: String, interval: Interval },
    Sign { function: String, interval: Interval },
    Monotone { function: String, interval: Interval, grid: u32, tilt: Option<Rational> },
    Max { function: String, set: ClosedSet, interval: Interval, budget: SearchBudget },
    Dini { sequence: String, set: ClosedSet, interval: Interval, eps: Rational, first_index: u64, scan_limit: u64 },
    Cover { set: ClosedSet, interval: Interval, cover: OpenCover },
    Bw { points: PointSet, interval: Interval },
    Cantor { family: FamilySpec },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Certified {
        certificate: Value,
    },
    Failed {
        reason: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        location: Option<Location>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        detail: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_steps: u64,
    pub max_depth: u32,
}

impl Limits {
    pub fn config(&self) -> EngineConfig {
        EngineConfig::default().with_max_steps(self.max_steps).with_max_depth(self.max_depth)
    }
}

impl Default for Limits {
    fn default() -> Self {
        let cfg = EngineConfig::default();
        Limits { max_steps: cfg.max_steps, max_depth: cfg.max_bisect_depth }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    #[serde(flatten)]
    pub problem: Problem,
    pub limits: Limits,
    pub outcome: Outcome,
    pub trace: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Outcome::Certified { .. } => EXIT_OK,
            Outcome::Failed { reason, .. } => failure_exit(reason),
        }
    }
}

fn failure_exit(reason: &str) -> i32 {
    match reason {
        "depth-limit" | "oracle-failure" | "hypothesis-violation" => EXIT_REFUTED,
        "step-limit" | "stall-no-recovery" | "scan-limit" => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

fn failed(err: InstanceError) -> (Outcome, Option<Trace>) {
    let trace = err.trace().cloned();
    let outcome = match err {
        InstanceError::Engine(e) => Outcome::Failed {
            reason: e.reason.to_string(),
            location: Some(e.location),
            detail: e.detail,
        },
        InstanceError::ScanLimit { at, detail, .. } => Outcome::Failed {
            reason: "scan-limit".into(),
            location: Some(Location::Point(at)),
            detail: Some(detail),
        },
        InstanceError::HypothesisViolation { at, detail, .. } => Outcome::Failed {
            reason: "hypothesis-violation".into(),
            location: Some(Location::Point(at)),
            detail: Some(detail),
        },
        InstanceError::EmptyDomain => Outcome::Failed { reason: "empty-domain".into(), location: None, detail: None },
        InstanceError::EmptyWindow(at) => Outcome::Failed {
            reason: "empty-window".into(),
            location: Some(Location::Point(at)),
            detail: None,
        },
        other @ (InstanceError::InvalidInput(_) | InstanceError::Eval(_)) => Outcome::Failed {
            reason: "invalid-input".into(),
            location: None,
            detail: Some(other.to_string()),
        },
    };
    (outcome, trace)
}

fn certified<C: Serialize>(c: th::Certified<C>) -> (Outcome, Option<Trace>) {
    let certificate = serde_json::to_value(&c.certificate).expect("certificates serialize");
    (Outcome::Certified { certificate }, Some(c.trace))
}

fn settle<C: Serialize>(r: Result<th::Certified<C>, InstanceError>) -> (Outcome, Option<Trace>) {
    match r {
        Ok(c) => certified(c),
        Err(e) => failed(e),
    }
}

fn typed<C: serde::de::DeserializeOwned>(v: &Value) -> Result<C, String> {
    serde_json::from_value(v.clone()).map_err(|e| format!("malformed certificate: {e}"))
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::Cousin { .. } => "cousin",
            Problem::Heine { .. } => "heine",
            Problem::Bound { .. } => "bound",
            Problem::Sign { .. } => "sign",
            Problem::Monotone { .. } => "monotone",
            Problem::Max { .. } => "max",
            Problem::Dini { .. } => "dini",
            Problem::Cover { .. } => "cover",
            Problem::Bw { .. } => "bw",
            Problem::Cantor { .. } => "cantor",
        }
    }

    /// Parses every expression input, so that input errors surface before
    /// any run.
    pub fn check(&self) -> Result<(), String> {
        match self {
            Problem::Cousin { gauge, .. } => expr(gauge, "--gauge").map(drop),
            Problem::Heine { function, .. }
            | Problem::Bound { function, .. }
            | Problem::Sign { function, .. }
            | Problem::Monotone { function, .. }
            | Problem::Max { function, .. } => expr(function, "--fn").map(drop),
            Problem::Dini { sequence, .. } => expr(sequence, "--seq").map(drop),
            Problem::Cover { .. } | Problem::Bw { .. } => Ok(()),
            Problem::Cantor { family } => family.build().map(drop),
        }
    }

    /// Runs the instance. Expressions must have passed [`Problem::check`].
    pub fn solve(&self, cfg: &EngineConfig) -> (Outcome, Option<Trace>) {
        let parsed = |t: &str| parse(t).expect("checked before solving");
        match self {
            Problem::Cousin { gauge: g, interval, strategy } => {
                settle(th::cousin_partition(&gauge(parsed(g)), interval, *strategy, cfg))
            }
            Problem::Heine { function, set, interval, eps } => {
                settle(th::uniform_delta(&parsed(function), set, interval, eps, cfg))
            }
            Problem::Bound { function, interval } => settle(th::bound_on(&parsed(function), interval, cfg)),
            Problem::Sign { function, interval } => settle(th::constant_sign(&parsed(function), interval, cfg)),
            Problem::Monotone { function, interval, grid, tilt: None } => {
                settle(th::strict_increase(&parsed(function), interval, interval, *grid, cfg))
            }
            Problem::Monotone { function, interval, grid, tilt: Some(eps) } => {
                settle(th::increase_via_tilt(&parsed(function), interval, eps, *grid, cfg))
            }
            Problem::Max { function, set, interval, budget } => {
                settle(th::usc_max(&parsed(function), set, interval, *budget, cfg))
            }
            Problem::Dini { sequence, set, interval, eps, first_index, scan_limit } => {
                let opts = th::DiniOptions { first_index: *first_index, scan_limit: *scan_limit };
                settle(th::dini_index(&parsed(sequence), set, interval, eps, opts, cfg))
            }
            Problem::Cover { set, interval, cover } => settle(th::finite_subcover(cover, set, interval, cfg)),
            Problem::Bw { points, interval } => settle(th::enumerate_isolated(points, interval, cfg)),
            Problem::Cantor { family } => {
                let family = family.build().expect("checked before solving");
                settle(th::cantor_family_index(&family, cfg))
            }
        }
    }

    /// Re-checks a certificate with the instance's independent verifier.
    pub fn verify(&self, certificate: &Value) -> Result<(), String> {
        let ex = |t: &str, what: &str| expr(t, what);
        let v = |r: Result<(), th::Violation>| r.map_err(|e| e.to_string());
        match self {
            Problem::Cousin { gauge: g, interval, .. } => {
                let g = gauge(ex(g, "gauge")?);
                v(th::verify_partition(&g, interval, &typed(certificate)?))
            }
            Problem::Heine { function, set, eps, .. } => {
                let cert: th::UniformModulus = typed(certificate)?;
                if &cert.epsilon != eps || &cert.set != set {
                    return Err("certificate does not match the inputs".into());
                }
                v(th::verify_modulus(&ex(function, "function")?, &cert))
            }
            Problem::Bound { function, interval } => {
                let cert: th::BoundCertificate = typed(certificate)?;
                if &cert.interval != interval {
                    return Err("certificate interval does not match the inputs".into());
                }
                v(th::verify_bound(&ex(function, "function")?, &cert))
            }
            Problem::Sign { function, interval } => {
                let cert: th::SignCertificate = typed(certificate)?;
                if &cert.interval != interval {
                    return Err("certificate interval does not match the inputs".into());
                }
                v(th::verify_sign(&ex(function, "function")?, &cert))
            }
            Problem::Monotone { function, interval, tilt: None, .. } => {
                v(th::verify_chain(&ex(function, "function")?, interval, &typed(certificate)?))
            }
            Problem::Monotone { function, interval, tilt: Some(eps), .. } => {
                let cert: th::TiltCertificate = typed(certificate)?;
                if &cert.epsilon != eps || &cert.interval != interval {
                    return Err("certificate does not match the inputs".into());
                }
                v(th::verify_tilt(&ex(function, "function")?, &cert))
            }
            Problem::Max { function, set, .. } => {
                v(th::verify_argmax(&ex(function, "function")?, set, &typed(certificate)?))
            }
            Problem::Dini { sequence, set, eps, .. } => {
                v(th::verify_dini_index(&ex(sequence, "sequence")?, set, eps, &typed(certificate)?))
            }
            Problem::Cover { set, cover, .. } => {
                let cert: th::SubcoverCertificate = typed(certificate)?;
                if th::verify_subcover(cover, &cert.member_indices, set) {
                    Ok(())
                } else {
                    Err("selected members do not cover the set".into())
                }
            }
            Problem::Bw { points, interval } => {
                let listed: Vec<Rational> = typed(certificate)?;
                v(th::verify_isolated(points, interval, &listed))
            }
            Problem::Cantor { family } => {
                v(th::verify_cantor_index(&family.build()?, &typed(certificate)?))
            }
        }
    }
}

/// Human-readable one-line summary of an outcome.
pub fn summary(report: &RunReport) -> String {
    match &report.outcome {
        Outcome::Certified { certificate } => {
            format!("{}: certified {}", report.problem.name(), certificate)
        }
        Outcome::Failed { reason, location, detail } => {
            let mut s = format!("{}: {reason}", report.problem.name());
            if let Some(l) = location {
                s.push_str(&format!(" at {l}"));
            }
            if let Some(d) = detail {
                s.push_str(&format!(" ({d})"));
            }
            s
        }
    }
}
