//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 engine error, 2 usage or input error, 3 a
//! verification check failed.
//!
//! A job file holds `key = value` lines (`#` starts a comment, blank lines are
//! ignored). Keys: `command` (analyze, verify, graph), `field`, `f`, `g`,
//! `seed`, `cap`, `format`, `out`. Command-line flags override file values.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Field;
use crate::error::Error;
use crate::pencil::report::ReportDoc;
use crate::pencil::{analyze, check_abhyankar_luengo, dual_graph, fiber_over_o, parse_pencil, PencilReport};
use crate::verify::{invariance_probe, run_checks, Check, Status};

/// Rounds of the invariance probe run by `verify`.
pub const PROBE_ROUNDS: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "dicritique", version, about = "Dicritical divisors of pencils of plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resolve all base points and print the report.
    Analyze(JobArgs),
    /// Run the property suite and the invariance probe; exit 3 on failure.
    Verify(JobArgs),
    /// Print the dual graph and the fiber over O in DOT.
    Graph(JobArgs),
    /// Run a job file.
    Job {
        path: PathBuf,
    },
}

#[derive(Args, Debug, Default, Clone)]
struct JobArgs {
    /// `Q` or `Fp:<p>`.
    #[arg(long)]
    field: Option<String>,
    /// First generator, a polynomial in x and y.
    #[arg(short = 'f', allow_hyphen_values = true)]
    f: Option<String>,
    /// Second generator.
    #[arg(short = 'g', allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Read defaults from a job file.
    #[arg(long)]
    job: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Analyze,
    Verify,
    Graph,
}

/// A fully resolved job.
#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: CommandKind,
    pub field: Field,
    pub f: String,
    pub g: String,
    pub seed: u64,
    pub cap: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

/// Failure of a job, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn engine(e: Error) -> Failure {
    let code = match e {
        Error::Syntax { .. } | Error::UnknownVariable(_) | Error::NonIntegerExponent(_) | Error::InvalidField(_) => 2,
        _ => 1,
    };
    Failure { code, message: e.to_string() }
}

pub fn parse_field(s: &str) -> Result<Field, Error> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::rationals());
    }
    let p = s
        .strip_prefix("Fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::InvalidField(format!("`{s}` (expected Q or Fp:<p>)")))?;
    Field::prime(p)
}

/// `key = value` pairs of a job file, in order.
pub fn parse_job_file(text: &str) -> Result<Vec<(String, String)>, Failure> {
    let mut out = vec![];
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| usage(format!("job file line {}: expected key = value", n + 1)))?;
        let k = k.trim();
        if !["command", "field", "f", "g", "seed", "cap", "format", "out"].contains(&k) {
            return Err(usage(format!("job file line {}: unknown key `{k}`", n + 1)));
        }
        out.push((k.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn merge_job(args: &mut JobArgs, command: &mut Option<CommandKind>, pairs: Vec<(String, String)>) -> Result<(), Failure> {
    for (k, v) in pairs {
        match k.as_str() {
            "command" => {
                let c = match v.as_str() {
                    "analyze" => CommandKind::Analyze,
                    "verify" => CommandKind::Verify,
                    "graph" => CommandKind::Graph,
                    _ => return Err(usage(format!("unknown command `{v}`"))),
                };
                command.get_or_insert(c);
            }
            "field" => drop(args.field.get_or_insert(v)),
            "f" => drop(args.f.get_or_insert(v)),
            "g" => drop(args.g.get_or_insert(v)),
            "seed" => {
                let s = v.parse().map_err(|_| usage(format!("seed `{v}` is not an integer")))?;
                args.seed.get_or_insert(s);
            }
            "cap" => {
                let c = v.parse().map_err(|_| usage(format!("cap `{v}` is not an integer")))?;
                args.cap.get_or_insert(c);
            }
            "format" => {
                let f = Format::from_str(&v, true).map_err(|_| usage(format!("unknown format `{v}`")))?;
                args.format.get_or_insert(f);
            }
            "out" => drop(args.out.get_or_insert(PathBuf::from(v))),
            _ => unreachable!("keys are validated by the parser"),
        }
    }
    Ok(())
}

fn resolve_job(mut args: JobArgs, command: Option<CommandKind>) -> Result<JobSpec, Failure> {
    let mut command = command;
    if let Some(path) = args.job.take() {
        let text = std::fs::read_to_string(&path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        merge_job(&mut args, &mut command, parse_job_file(&text)?)?;
    }
    let command = command.ok_or_else(|| usage("no command given"))?;
    let field = parse_field(args.field.as_deref().unwrap_or("Q")).map_err(engine)?;
    let f = args.f.ok_or_else(|| usage("missing generator -f"))?;
    let g = args.g.ok_or_else(|| usage("missing generator -g"))?;
    let default_format = if command == CommandKind::Graph { Format::Dot } else { Format::Json };
    let format = args.format.unwrap_or(default_format);
    if (format == Format::Dot) != (command == CommandKind::Graph) {
        return Err(usage("DOT output belongs to the graph command, which only emits DOT"));
    }
    Ok(JobSpec { command, field, f, g, seed: args.seed.unwrap_or(0), cap: args.cap.unwrap_or(64), format, out: args.out })
}

fn text_summary(r: &PencilReport, checks: Option<&[Check]>) -> String {
    let k = r.field();
    let mut s = String::new();
    writeln!(s, "pencil F = {}, G = {} over {} (degree {})", r.pencil.big_f, r.pencil.big_g, k, r.pencil.degree).unwrap();
    for (i, b) in r.base_points.iter().enumerate() {
        let t = &r.trees[i];
        writeln!(s, "base point {} ({} blowups)", b.label(k), t.nodes.len()).unwrap();
        for d in r.dicriticals_at(i) {
            writeln!(
                s,
                "  dicritical E{}: v = ({}, {}, {}, {}), phi = ({}) / ({}), degree {}, {} pole(s)",
                d.divisor,
                d.v_x,
                d.v_y,
                d.v_f,
                d.v_g,
                d.residual.numerator,
                d.residual.denominator,
                d.degree,
                d.poles
            )
            .unwrap();
        }
    }
    if let Some(checks) = checks {
        for c in checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            writeln!(s, "{status} {}: {}", c.name, c.detail).unwrap();
        }
    }
    s
}

/// Runs a job and returns the text to emit and the exit code.
pub fn execute(job: &JobSpec) -> Result<(String, i32), Failure> {
    let pencil = parse_pencil(&job.f, &job.g, &job.field).map_err(engine)?;
    let report = analyze(&pencil, job.cap).map_err(engine)?;
    let al = check_abhyankar_luengo(&report).map_err(engine)?;
    match job.command {
        CommandKind::Analyze => {
            let text = match job.format {
                Format::Text => text_summary(&report, None),
                _ => ReportDoc::new(&report, Some(&al), None).to_json(),
            };
            Ok((text, 0))
        }
        CommandKind::Graph => {
            let dual = dual_graph(&report).map_err(engine)?;
            let fiber = fiber_over_o(&report).map_err(engine)?;
            let mut text = dual.to_dot("dual");
            text.push_str(&fiber.graph.to_dot("fiber"));
            Ok((text, 0))
        }
        CommandKind::Verify => {
            let mut checks = run_checks(&report, job.seed, job.cap).map_err(engine)?;
            let probe = invariance_probe(&pencil, job.seed, PROBE_ROUNDS).map_err(engine)?;
            checks.push(Check {
                name: "invariance".into(),
                status: if probe.equal() { Status::Pass } else { Status::Fail },
                detail: format!("{} rounds, seed {}", probe.rounds.len(), job.seed),
            });
            checks.push(match al.verdict() {
                None => Check {
                    name: "abhyankar-luengo".into(),
                    status: Status::Skip,
                    detail: "reduced {G = 0} is singular at a base point".into(),
                },
                Some(ok) => Check {
                    name: "abhyankar-luengo".into(),
                    status: if ok { Status::Pass } else { Status::Fail },
                    detail: format!(
                        "single poles: {}, fiber connected: {:?}",
                        al.dicriticals.iter().all(|d| d.poles == 1),
                        al.fiber_connected
                    ),
                },
            });
            let code = if checks.iter().any(Check::failed) { 3 } else { 0 };
            let text = match job.format {
                Format::Text => text_summary(&report, Some(&checks)),
                _ => ReportDoc::new(&report, Some(&al), Some(checks)).to_json(),
            };
            Ok((text, code))
        }
    }
}

fn emit(job: &JobSpec, text: &str) -> Result<(), Failure> {
    match &job.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", path.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `argv`, runs the job and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (args, command) = match cli.command {
        Command::Analyze(a) => (a, Some(CommandKind::Analyze)),
        Command::Verify(a) => (a, Some(CommandKind::Verify)),
        Command::Graph(a) => (a, Some(CommandKind::Graph)),
        Command::Job { path } => (JobArgs { job: Some(path), ..Default::default() }, None),
    };
    let outcome = resolve_job(args, command).and_then(|job| {
        let (text, code) = execute(&job)?;
        emit(&job, &text)?;
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
