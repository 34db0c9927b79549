//! Command-line front door for the altset kernel.
//!
//! Reports are plain text, one fact per line, `key=value` where a line
//! carries data. Identical inputs produce byte-identical output. Exit
//! codes: 0 success, 1 domain errors (bad expressions, unreadable files,
//! infinite arguments), 2 usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use altset::continuum::{self, Connectivity, IndiscernibilitySpec};
use altset::hf::{induction_check, HFSet};
use altset::horizon::{builtin_family, feasible, parse_config, FamilyKind, Membership};
use altset::motion::{parse_trace_samples, zeno_dichotomy, MotionCheck, MotionTrace};
use altset::text::{parse_omega, parse_omega_in, parse_rat};
use altset::{DefinableSequence, Horizon, Rat};

#[derive(Parser)]
#[command(
    name = "altset",
    version,
    about = "Exact kernel for alternative set theory: \u{3c9}-arithmetic, horizon semantics, indiscernibility continua"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an ω-expression as infinitesimal / bounded / infinite
    Classify {
        /// Expression such as "(1)/(w)" or "w^2 + 3"
        expr: String,
    },
    /// Standard part of a bounded ω-expression
    St { expr: String },
    /// Prolong a definable sequence (rational expression in n) to the
    /// infinite index
    Prolong {
        /// Rule in n, e.g. "(1)/(n + 1)"
        expr: String,
    },
    /// Scan feasibility verdicts for n = 0..=hard
    FeasibleScan {
        #[command(flatten)]
        horizon: HorizonArgs,
    },
    /// σ-class membership under a witness budget
    Sigma {
        /// Family name: feasible | threshold:<c>
        #[arg(long)]
        family: String,
        /// Element, an exact rational
        #[arg(long)]
        x: String,
        #[command(flatten)]
        horizon: HorizonArgs,
    },
    /// π-class membership under a witness budget
    Pi {
        /// Family name: infinitesimal-band
        #[arg(long)]
        family: String,
        /// Element, an exact rational
        #[arg(long)]
        x: String,
        #[command(flatten)]
        horizon: HorizonArgs,
    },
    /// Connectedness of a point cloud under an indiscernibility
    Connected {
        /// Point-cloud file: one point per line, comma-separated rationals
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// The figure of X inside an ambient cloud (union of X's monads)
    Figure {
        /// The class X
        #[arg(long)]
        points: PathBuf,
        /// The ambient cloud the figure is carved from
        #[arg(long)]
        ambient: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Search for a non-transitivity chain x ≈ y ≈ z with x ̸≈ z
    Defect {
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Check continuity and observability of a sampled motion
    MotionCheck {
        /// Trace file: header t,x1,...,xn then one sample per line
        #[arg(long)]
        trace: PathBuf,
        /// Time indiscernibility threshold θ_T
        #[arg(long = "theta-t")]
        theta_t: String,
        /// Space indiscernibility threshold θ_S
        #[arg(long = "theta-s")]
        theta_s: String,
    },
    /// Halving walk toward a goal: steps until its monad is entered
    Zeno {
        /// Witnessed space threshold θ
        #[arg(long)]
        theta: String,
        /// Starting distance
        #[arg(long, default_value = "1")]
        start: String,
        /// Per-step distance ratio
        #[arg(long, default_value = "1/2")]
        ratio: String,
    },
    /// Set-universe demonstration: stage sizes, numerals, regularity,
    /// induction
    HfDemo,
}

#[derive(Args)]
struct HorizonArgs {
    /// Soft bound: start of the vague band
    #[arg(long)]
    soft: Option<u64>,
    /// Hard bound: the witness budget
    #[arg(long)]
    hard: Option<u64>,
    /// key=value file with horizon.soft / horizon.hard
    #[arg(long)]
    config: Option<PathBuf>,
}

impl HorizonArgs {
    /// Defaults, overridden by the config file, overridden by flags.
    fn resolve(&self) -> Result<Horizon, String> {
        let (mut soft, mut hard) = (1_000, 10_000);
        if let Some(path) = &self.config {
            let cfg = parse_config(&read(path)?).map_err(|e| e.to_string())?;
            if let Some(s) = cfg.soft {
                soft = s;
            }
            if let Some(h) = cfg.hard {
                hard = h;
            }
        }
        if let Some(s) = self.soft {
            soft = s;
        }
        if let Some(h) = self.hard {
            hard = h;
        }
        Horizon::new(soft, hard).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpecArgs {
    /// Uniform witnessed threshold θ (strict max-coordinate distance)
    #[arg(long)]
    theta: Option<String>,
    /// Relative witnessed threshold ε (gap over magnitude)
    #[arg(long)]
    epsilon: Option<String>,
    /// Ideal-scale unit d: differences must vanish exactly at this scale
    #[arg(long)]
    ideal_scale: Option<String>,
}

impl SpecArgs {
    fn resolve(&self) -> Result<IndiscernibilitySpec<Rat>, String> {
        let build = |s: &str, f: fn(Rat) -> Result<IndiscernibilitySpec<Rat>, _>| {
            let value = parse_rat(s).map_err(|e| e.to_string())?;
            f(value).map_err(|e: altset::continuum::ContinuumError| e.to_string())
        };
        match (&self.theta, &self.epsilon, &self.ideal_scale) {
            (Some(t), None, None) => build(t, IndiscernibilitySpec::witnessed_uniform),
            (None, Some(e), None) => build(e, IndiscernibilitySpec::witnessed_relative),
            (None, None, Some(d)) => build(d, IndiscernibilitySpec::ideal_uniform),
            _ => unreachable!("clap enforces exactly one mode flag"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_points(path: &Path) -> Result<Vec<continuum::Point<Rat>>, String> {
    continuum::parse_points(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn format_points(points: &[continuum::Point<Rat>]) -> String {
    points
        .iter()
        .map(continuum::format_point)
        .collect::<Vec<_>>()
        .join(";")
}

fn run(command: Command) -> Result<String, String> {
    match command {
        Command::Classify { expr } => {
            let x = parse_omega(&expr).map_err(|e| e.to_string())?;
            Ok(format!("{}\n", x.classify()))
        }
        Command::St { expr } => {
            let x = parse_omega(&expr).map_err(|e| e.to_string())?;
            let st = x.standard_part().map_err(|e| e.to_string())?;
            Ok(format!("st={st}\n"))
        }
        Command::Prolong { expr } => {
            let rule = parse_omega_in(&expr, 'n').map_err(|e| e.to_string())?;
            let seq = DefinableSequence::new(rule).map_err(|e| e.to_string())?;
            let value = seq.prolong();
            let mut out = format!("value={value}\nclass={}\n", value.classify());
            if let Ok(st) = value.standard_part() {
                out.push_str(&format!("st={st}\n"));
            }
            Ok(out)
        }
        Command::FeasibleScan { horizon } => {
            let h = horizon.resolve()?;
            let mut out = String::new();
            for n in 0..=h.hard() {
                out.push_str(&format!("n={n} verdict={}\n", feasible(n, h)));
            }
            Ok(out)
        }
        Command::Sigma { family, x, horizon } => {
            class_membership(FamilyKind::Sigma, &family, &x, &horizon)
        }
        Command::Pi { family, x, horizon } => {
            class_membership(FamilyKind::Pi, &family, &x, &horizon)
        }
        Command::Connected { points, spec } => {
            let cloud = load_points(&points)?;
            let spec = spec.resolve()?;
            match continuum::connectivity(&spec, &cloud).map_err(|e| e.to_string())? {
                Connectivity::Connected => Ok("connected=true\n".into()),
                Connectivity::Separated { part, rest } => Ok(format!(
                    "connected=false\ncut={}\nrest={}\n",
                    format_points(&part),
                    format_points(&rest)
                )),
            }
        }
        Command::Figure {
            points,
            ambient,
            spec,
        } => {
            let xs = load_points(&points)?;
            let ambient = load_points(&ambient)?;
            let spec = spec.resolve()?;
            let fig = continuum::figure(&spec, &xs, &ambient).map_err(|e| e.to_string())?;
            let mut out = String::new();
            for p in &fig {
                out.push_str(&continuum::format_point(p));
                out.push('\n');
            }
            Ok(out)
        }
        Command::Defect { points, spec } => {
            let cloud = load_points(&points)?;
            let spec = spec.resolve()?;
            match continuum::transitivity_defect(&spec, &cloud).map_err(|e| e.to_string())? {
                None => Ok("defect=none\n".into()),
                Some((x, y, z)) => Ok(format!(
                    "defect=chain\nx={}\ny={}\nz={}\n",
                    continuum::format_point(&x),
                    continuum::format_point(&y),
                    continuum::format_point(&z)
                )),
            }
        }
        Command::MotionCheck {
            trace,
            theta_t,
            theta_s,
        } => {
            let samples = parse_trace_samples(&read(&trace)?)
                .map_err(|e| format!("{}: {e}", trace.display()))?;
            let time_spec = IndiscernibilitySpec::witnessed_uniform(
                parse_rat(&theta_t).map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let space_spec = IndiscernibilitySpec::witnessed_uniform(
                parse_rat(&theta_s).map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let trace = MotionTrace::new(samples, time_spec, space_spec)
                .map_err(|e| e.to_string())?;
            let mut out = String::new();
            let continuous = trace.check_continuous().map_err(|e| e.to_string())?;
            match continuous {
                MotionCheck::Holds => out.push_str("continuous=true\n"),
                MotionCheck::Violated { first, second } => {
                    out.push_str("continuous=false\n");
                    out.push_str(&format!(
                        "continuity_pair={},{}\n",
                        trace.samples()[first].0,
                        trace.samples()[second].0
                    ));
                }
            }
            let observable = trace.check_observable().map_err(|e| e.to_string())?;
            match observable {
                MotionCheck::Holds => out.push_str("observable=true\n"),
                MotionCheck::Violated { first, second } => {
                    out.push_str("observable=false\n");
                    out.push_str(&format!(
                        "observability_pair={},{}\n",
                        trace.samples()[first].0,
                        trace.samples()[second].0
                    ));
                }
            }
            Ok(out)
        }
        Command::Zeno { theta, start, ratio } => {
            let theta = parse_rat(&theta).map_err(|e| e.to_string())?;
            let start = parse_rat(&start).map_err(|e| e.to_string())?;
            let ratio = parse_rat(&ratio).map_err(|e| e.to_string())?;
            let run = zeno_dichotomy(&theta, &start, &ratio).map_err(|e| e.to_string())?;
            Ok(format!("n={} final={}\n", run.steps, run.final_distance))
        }
        Command::HfDemo => hf_demo(),
    }
}

fn class_membership(
    expected: FamilyKind,
    family: &str,
    x: &str,
    horizon: &HorizonArgs,
) -> Result<String, String> {
    let fam = builtin_family(family).map_err(|e| e.to_string())?;
    if fam.kind() != expected {
        let hint = match expected {
            FamilyKind::Sigma => "pi",
            FamilyKind::Pi => "sigma",
        };
        return Err(format!(
            "family {family:?} is not a {expected:?}-family; try the {hint} subcommand"
        ));
    }
    let x = parse_rat(x).map_err(|e| e.to_string())?;
    let h = horizon.resolve()?;
    Ok(match fam.membership(&x, h) {
        Membership::In { witness } => format!("verdict=In\nwitness={witness}\n"),
        Membership::Out { counterexample } => {
            format!("verdict=Out\ncounterexample={counterexample}\n")
        }
        Membership::BeyondHorizon => "verdict=BeyondHorizon\n".to_string(),
    })
}

fn hf_demo() -> Result<String, String> {
    let mut out = String::new();
    for k in 1..=5 {
        let stage = HFSet::universe_up_to_rank(k).map_err(|e| e.to_string())?;
        out.push_str(&format!("universe_rank_{k}={}\n", stage.len()));
    }
    let vn3 = HFSet::von_neumann(3).map_err(|e| e.to_string())?;
    out.push_str(&format!("von_neumann_3={vn3}\n"));

    let nums: Vec<HFSet> = (0..=8)
        .map(HFSet::von_neumann)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let ordered = (0..=8).all(|m| {
        (0..=8).all(|n| nums[n].contains(&nums[m]) == (m < n))
    });
    out.push_str(&format!("von_neumann_membership_matches_order={ordered}\n"));

    let witnessed = HFSet::universe_up_to_rank(4)
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|x| !x.is_empty())
        .all(|x| {
            x.regularity_witness()
                .map(|w| w.is_disjoint(x))
                .unwrap_or(false)
        });
    out.push_str(&format!("regularity_witnessed_below_rank_4={witnessed}\n"));

    let report = induction_check(4, |x| !x.contains(x)).map_err(|e| e.to_string())?;
    out.push_str(&format!("induction_base={}\n", report.base));
    out.push_str(&format!("induction_step={}\n", report.step));
    out.push_str(&format!("induction_universal={}\n", report.universal));
    Ok(out)
}
