//! Command-line front end for the theorem instances.
//!
//! Every run prints (or writes with `--json`) a [`RunReport`]: the instance,
//! its inputs, the engine limits, and either a certificate or a failure with
//! its location. `verify --report FILE` re-checks a saved certificate with
//! the instance's independent verifier.
//!
//! Exit codes: 0 success, 1 refutation or certified failure, 2 resource
//! limit, 3 input error.

mod report;

pub use report::{
    ComponentSpec, FamilySpec, Limits, Outcome, Problem, RunReport, EXIT_INPUT, EXIT_OK,
    EXIT_REFUTED, EXIT_RESOURCE,
};

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::domain::{ClosedSet, Interval, OpenCover, PointSet};
use crate::numeric::Rational;
use crate::theorems::{CousinStrategy, DiniOptions, SearchBudget};

const EXPR_HELP: &str = "Expressions use x (and n for sequences), + - * / ^, abs(e), min(e,e), \
max(e,e), pow(e,k), pw(x<=c, e1, e2). Literals are exact: 0.3, 3/10. Sets are written \"a,b;c,d\".";

#[derive(Debug, Parser)]
#[command(name = "ivind", version, about = "Interval induction over exact rationals", after_help = EXPR_HELP)]
pub struct Cli {
    /// Write the JSON report to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write the engine trace as JSON lines to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    trace: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    max_steps: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    max_depth: Option<u32>,
    /// Include wall time in the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct IntervalArg {
    /// Closed interval endpoints.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, required = true)]
    interval: Vec<String>,
}

#[derive(Debug, Args)]
struct SetArgs {
    /// Closed set, e.g. "0,1/4;1/2,1".
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    /// Ambient interval; defaults to the hull of the set.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    interval: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gauge-fine tagged partition.
    Cousin {
        #[arg(long, allow_hyphen_values = true)]
        gauge: String,
        #[command(flatten)]
        interval: IntervalArg,
        #[arg(long, value_enum, default_value = "creep")]
        strategy: StrategyArg,
    },
    /// Modulus of uniform continuity.
    Heine {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        eps: String,
    },
    /// Bound on |f|.
    Bound {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Constant sign of a zero-free f.
    Sign {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Strictly increasing chain, or the tilted inequality with --tilt.
    Monotone {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[command(flatten)]
        interval: IntervalArg,
        /// Right-step grid spacing is (b - a) / 2^k.
        #[arg(long, default_value_t = 8, value_name = "K")]
        grid: u32,
        #[arg(long, value_name = "EPS")]
        tilt: Option<String>,
    },
    /// Budget-relative maximum.
    Max {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[command(flatten)]
        set: SetArgs,
        /// Grid points per component.
        #[arg(long, default_value_t = SearchBudget::default().grid)]
        budget: u64,
        #[arg(long, default_value_t = SearchBudget::default().rounds)]
        rounds: u32,
    },
    /// Index of uniform convergence for a decreasing sequence.
    Dini {
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = DiniOptions::default().first_index)]
        first_index: u64,
        #[arg(long, default_value_t = DiniOptions::default().scan_limit)]
        scan_limit: u64,
    },
    /// Finite subcover of an open cover given as JSON.
    Cover {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_name = "FILE")]
        cover: PathBuf,
    },
    /// Enumerate a finite point set inside an interval.
    Bw {
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Emptiness index of a nested family given as JSON.
    Cantor {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
    },
    /// Re-check the certificate in a saved report.
    Verify {
        #[arg(long, value_name = "FILE")]
        report: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum StrategyArg {
    Creep,
    Bisect,
}

impl From<StrategyArg> for CousinStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Creep => CousinStrategy::Creep,
            StrategyArg::Bisect => CousinStrategy::Bisect,
        }
    }
}

fn rational(text: &str, what: &str) -> Result<Rational, String> {
    text.trim().parse().map_err(|e| format!("{what}: {e}"))
}

fn interval(ends: &[String]) -> Result<Interval, String> {
    let [a, b] = ends else {
        return Err("--interval takes two endpoints".into());
    };
    Interval::new(rational(a, "--interval")?, rational(b, "--interval")?).map_err(|e| e.to_string())
}

fn set_and_interval(args: &SetArgs) -> Result<(ClosedSet, Interval), String> {
    let set: ClosedSet = args.set.parse().map_err(|e| format!("--set: {e}"))?;
    let interval = match &args.interval {
        Some(ends) => interval(ends)?,
        None => set.hull().ok_or("--set is empty; give --interval")?,
    };
    Ok((set, interval))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn problem(command: Command) -> Result<Problem, String> {
    Ok(match command {
        Command::Cousin { gauge, interval: i, strategy } => {
            Problem::Cousin { gauge, interval: interval(&i.interval)?, strategy: strategy.into() }
        }
        Command::Heine { function, set, eps } => {
            let (set, interval) = set_and_interval(&set)?;
            Problem::Heine { function, set, interval, eps: rational(&eps, "--eps")? }
        }
        Command::Bound { function, interval: i } => Problem::Bound { function, interval: interval(&i.interval)? },
        Command::Sign { function, interval: i } => Problem::Sign { function, interval: interval(&i.interval)? },
        Command::Monotone { function, interval: i, grid, tilt } => Problem::Monotone {
            function,
            interval: interval(&i.interval)?,
            grid,
            tilt: tilt.map(|t| rational(&t, "--tilt")).transpose()?,
        },
        Command::Max { function, set, budget, rounds } => {
            let (set, interval) = set_and_interval(&set)?;
            Problem::Max { function, set, interval, budget: SearchBudget { grid: budget, rounds } }
        }
        Command::Dini { seq, set, eps, first_index, scan_limit } => {
            let (set, interval) = set_and_interval(&set)?;
            Problem::Dini { sequence: seq, set, interval, eps: rational(&eps, "--eps")?, first_index, scan_limit }
        }
        Command::Cover { set, cover } => {
            let (set, interval) = set_and_interval(&set)?;
            let cover: OpenCover = read_json(&cover)?;
            Problem::Cover { set, interval, cover }
        }
        Command::Bw { points, interval: i } => {
            let pts = points
                .split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| rational(p, "--points"))
                .collect::<Result<Vec<_>, _>>()?;
            Problem::Bw { points: PointSet::from(pts), interval: interval(&i.interval)? }
        }
        Command::Cantor { family } => Problem::Cantor { family: read_json(&family)? },
        Command::Verify { .. } => unreachable!("handled by the caller"),
    })
}

fn verify(path: &Path) -> i32 {
    let report: RunReport = match read_json(path) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let Outcome::Certified { certificate } = &report.outcome else {
        eprintln!("{}: report records a failure; no certificate to verify", report.problem.name());
        return EXIT_REFUTED;
    };
    match report.problem.verify(certificate) {
        Ok(()) => {
            println!("{}: certificate verified", report.problem.name());
            EXIT_OK
        }
        Err(e) => {
            println!("{}: verification failed: {e}", report.problem.name());
            EXIT_REFUTED
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Command::Verify { report } = &cli.command {
        return verify(report);
    }

    let problem = match problem(cli.command).and_then(|p| p.check().map(|()| p)) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let defaults = Limits::default();
    let limits = Limits {
        max_steps: cli.max_steps.unwrap_or(defaults.max_steps),
        max_depth: cli.max_depth.unwrap_or(defaults.max_depth),
    };

    let started = Instant::now();
    let (outcome, trace) = problem.solve(&limits.config());
    let elapsed = started.elapsed();

    if let (Some(path), Some(trace)) = (&cli.trace, &trace) {
        if let Err(e) = fs::write(path, trace.to_json_lines()) {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }
    let report = RunReport {
        problem,
        limits,
        outcome,
        trace: cli.trace.as_ref().map(|p| p.display().to_string()),
        wall_time_ms: cli.timing.then_some(elapsed.as_millis() as u64),
    };
    let json = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    match &cli.json {
        Some(path) => {
            if let Err(e) = fs::write(path, json) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
            println!("{}", report::summary(&report));
        }
        None => print!("{json}"),
    }
    report.exit_code()
}
