//! `qpb`: verification suites, critical-point search and replication reports.

mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qpb_core::calibration::Flag;
use qpb_core::field_theory::Potential;
use qpb_core::group_hopf::CorepKind;
use qpb_core::solver::{self, Freeze, Outcome, YmsmSeed};
use qpb_core::{replicate, verify, Calibration, ExactC, Scalar};
use qpb_core::associated_qvb::Section;
use serde_json::json;

use config::{Num, Problem, RunConfig};

#[derive(Parser)]
#[command(name = "qpb", version, about = "Gauge theory on the two-point space with structure group S2")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run an invariant suite; exit 1 if any law fails.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["calculus", "hopf", "bundle", "qvb", "gauge", "field", "all"])]
        suite: String,
    },
    /// Search for critical points from float seeds and certify them exactly.
    Solve(Box<SolveArgs>),
    /// Compare each published value with the computed one.
    Replicate {
        /// Flip a calibration flag before replicating (repeatable).
        #[arg(long, value_name = "FLAG")]
        flip: Vec<Flag>,
    },
    /// Show the convention combinations and which one passes the gate.
    PrintCalibration,
}

#[derive(clap::Args)]
struct SolveArgs {
    /// Which action to extremize; may instead come from the config file.
    #[arg(value_enum)]
    problem: Option<Problem>,
    /// JSON run configuration; flags given on the command line take precedence.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Number of random seeds (default 100 for ym, 1 for ymsm).
    #[arg(long)]
    seeds: Option<usize>,
    /// RNG seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Seeds are drawn from the ball of this radius.
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long)]
    corep: Option<CorepKind>,
    /// paper:x,y | poly:c0,c1,... | zero
    #[arg(long, value_parser = config::parse_potential)]
    potential: Option<Potential<ExactC>>,
    /// Connection seed l0,l1 (exact values).
    #[arg(long, value_parser = config::parse_pair, allow_hyphen_values = true)]
    omega: Option<[Num; 2]>,
    /// Seed for the components of T1, p0,p1.
    #[arg(long, value_parser = config::parse_pair, allow_hyphen_values = true)]
    t1: Option<[Num; 2]>,
    /// Seed for the components of T2, p0,p1.
    #[arg(long, value_parser = config::parse_pair, allow_hyphen_values = true)]
    t2: Option<[Num; 2]>,
    /// Hold the connection at --omega.
    #[arg(long)]
    freeze_omega: bool,
    /// Hold the sections at --t1, --t2.
    #[arg(long)]
    freeze_sections: bool,
    #[arg(long)]
    max_iter: Option<usize>,
}

/// Report text plus whether the run passed.
struct Report {
    text: String,
    passed: bool,
}

enum Fail {
    Usage(String),
}

fn emit<T: serde::Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Table => table(),
    }
}

fn cmd_verify(suite: &str, format: Format) -> Report {
    let cal = Calibration::SELECTED;
    let laws = verify::run_suite(suite, &cal).expect("suite names are validated by clap");
    let passed = laws.iter().all(|r| r.passed);
    if let Some(r) = laws.iter().find(|r| !r.passed) {
        eprintln!("law failed: [{}] {}: {}", r.suite, r.name, r.detail);
    }
    let value = json!({ "suite": suite, "calibration": cal, "passed": passed, "laws": laws });
    Report { text: emit(format, &value, || render::laws(&laws)), passed }
}

fn cmd_replicate(flips: &[Flag], format: Format) -> Report {
    let cal = flips.iter().fold(Calibration::SELECTED, |c, &f| c.flip(f));
    let r = replicate::replicate(&cal);
    Report { text: emit(format, &r, || render::replicate(&r)), passed: r.passed }
}

fn cmd_print_calibration(format: Format) -> Report {
    let gate = verify::select_calibration();
    let passing: Vec<Calibration> = gate.iter().filter(|r| r.passed).map(|r| r.calibration).collect();
    let passed = passing == vec![Calibration::SELECTED];
    let value = json!({ "selected": Calibration::SELECTED, "passing": passing, "gate": gate });
    Report {
        text: emit(format, &value, || {
            format!("selected: {}\n\n{}", Calibration::SELECTED, render::gate(&gate))
        }),
        passed,
    }
}

fn merge(args: &SolveArgs) -> Result<RunConfig, Fail> {
    let mut c = match &args.config {
        Some(p) => config::load(p).map_err(Fail::Usage)?,
        None => RunConfig::default(),
    };
    macro_rules! take {
        ($($f:ident),*) => { $(if args.$f.is_some() { c.$f = args.$f.clone(); })* };
    }
    take!(seeds, seed, radius, corep, potential, omega, t1, t2);
    if args.problem.is_some() {
        c.command = args.problem;
    }
    c.freeze_omega |= args.freeze_omega;
    c.freeze_sections |= args.freeze_sections;
    if args.max_iter.is_some() {
        c.solver.max_iter = args.max_iter;
    }
    Ok(c)
}

fn cmd_solve(args: &SolveArgs, format: Format) -> Result<(Report, Option<PathBuf>), Fail> {
    let c = merge(args)?;
    let problem = c.command.ok_or_else(|| Fail::Usage("solve: give ym or ymsm, or set \"command\" in the config".into()))?;
    let opts = c.solver.options();
    let cal = Calibration::SELECTED;
    let seed = c.seed.unwrap_or(0);
    let radius = c.radius.unwrap_or(2.0);
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Fail::Usage(format!("radius must be positive, got {radius}")));
    }
    let (outcomes, header) = match problem {
        Problem::Ym => {
            if c.corep.is_some() || c.potential.is_some() || c.t1.is_some() || c.t2.is_some() || c.freeze_sections {
                return Err(Fail::Usage("solve ym takes no matter options".into()));
            }
            let n = c.seeds.unwrap_or(100);
            let seeds = match &c.omega {
                Some(w) => vec![config::approx_pair(w); n.max(1)],
                None => solver::ym_seeds(n, seed, radius),
            };
            let out = solver::solve_ym_batch(&seeds, &opts, &cal);
            (out, json!({ "problem": problem, "seed": seed, "seeds": seeds.len(), "radius": radius, "solver": opts }))
        }
        Problem::Ymsm => {
            let corep = c.corep.unwrap_or(CorepKind::Trivial);
            let v = c.potential.clone().unwrap_or_else(Potential::zero);
            let freeze = freeze(&c, corep)?;
            let n = c.seeds.unwrap_or(1).max(1);
            let seeds = ymsm_seeds(&c, &v, n, seed, radius);
            let out = solver::solve_ymsm_batch(corep, &v, &seeds, &freeze, &opts, &cal);
            (
                out,
                json!({
                    "problem": problem, "seed": seed, "seeds": n, "radius": radius,
                    "corep": corep, "potential": v,
                    "freeze_omega": c.freeze_omega, "freeze_sections": c.freeze_sections,
                    "solver": opts,
                }),
            )
        }
    };
    let passed = outcomes.iter().all(|o| matches!(o, Outcome::Converged(_)));
    let mut value = header;
    value["points"] = serde_json::to_value(&outcomes).expect("outcomes serialize");
    let text = emit(format, &value, || render::outcomes(&outcomes, problem == Problem::Ymsm));
    Ok((Report { text, passed }, c.out.clone()))
}

fn freeze(c: &RunConfig, corep: CorepKind) -> Result<Freeze, Fail> {
    let mut f = Freeze::default();
    if c.freeze_omega {
        let w = c.omega.as_ref().ok_or_else(|| Fail::Usage("--freeze-omega needs --omega".into()))?;
        f.omega = Some(config::qpc_of(config::exact_pair(w, "omega").map_err(Fail::Usage)?));
    }
    if c.freeze_sections {
        let (Some(a), Some(b)) = (&c.t1, &c.t2) else {
            return Err(Fail::Usage("--freeze-sections needs --t1 and --t2".into()));
        };
        let [a0, a1] = config::exact_pair(a, "t1").map_err(Fail::Usage)?;
        let [b0, b1] = config::exact_pair(b, "t2").map_err(Fail::Usage)?;
        f.sections = Some((Section::new(corep, a0, a1), Section::new(corep, b0, b1)));
    }
    Ok(f)
}

/// Connection seeds are random unless given. Section seeds default to
/// `(x, y)` for the `paper:x,y` potential and are random otherwise.
fn ymsm_seeds(c: &RunConfig, v: &Potential<ExactC>, n: usize, seed: u64, radius: f64) -> Vec<YmsmSeed> {
    let omegas = solver::ym_seeds(n, seed, radius);
    let r1 = solver::ym_seeds(n, seed.wrapping_add(1), radius);
    let r2 = solver::ym_seeds(n, seed.wrapping_add(2), radius);
    let default = match v {
        Potential::PaperExample { x, y } => Some([x.to_approx(), y.to_approx()]),
        Potential::Polynomial { .. } => None,
    };
    (0..n)
        .map(|i| YmsmSeed {
            omega: c.omega.as_ref().map(config::approx_pair).unwrap_or(omegas[i]),
            t1: c.t1.as_ref().map(config::approx_pair).or(default).unwrap_or(r1[i]),
            t2: c.t2.as_ref().map(config::approx_pair).or(default).unwrap_or(r2[i]),
        })
        .collect()
}

fn write(text: &str, out: Option<&PathBuf>) -> Result<(), Fail> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Fail> {
    let (report, cfg_out) = match &cli.cmd {
        Cmd::Verify { suite } => (cmd_verify(suite, cli.format), None),
        Cmd::Solve(args) => cmd_solve(args, cli.format)?,
        Cmd::Replicate { flip } => (cmd_replicate(flip, cli.format), None),
        Cmd::PrintCalibration => (cmd_print_calibration(cli.format), None),
    };
    write(&report.text, cli.out.as_ref().or(cfg_out.as_ref()))?;
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
