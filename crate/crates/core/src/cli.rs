//! Command-line front end. The `ccelab` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success or verified, 1 negative result or counterexample,
//! 2 usage or parse error, 3 I/O error, 4 resource cap exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::caps::Caps;
use crate::conditions::{satisfies_condition, ConditionKind};
use crate::derived::{derived_graph, DerivedKind};
use crate::digraph::Digraph;
use crate::dk::{double_competition_number, SearchMode};
use crate::enumerate::EnumerationFilter;
use crate::error::Error;
use crate::format::{self, ParseError};
use crate::graph::SimpleGraph;
use crate::orders::{recognize_interval_order, recognize_semiorder, semiorder_from};
use crate::sweeps::{self, OpenProblem, SweepOutcome};
use crate::witness::{witness_loopless, witness_semiorder};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Default path for counterexample reports from `verify`.
pub const DEFAULT_REPORT: &str = "ccelab-counterexample.digraph";

#[derive(Debug, Parser)]
#[command(name = "ccelab", version, about = "Competition-common enemy graph toolkit")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Let searches return any witness instead of the first in search order.
    #[arg(long, global = true)]
    pub fast_nondet: bool,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Competition,
    Cce,
    Niche,
}

impl From<KindArg> for DerivedKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Competition => DerivedKind::Competition,
            KindArg::Cce => DerivedKind::Cce,
            KindArg::Niche => DerivedKind::Niche,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConditionArg {
    #[value(name = "C")]
    C,
    #[value(name = "Cp")]
    Cp,
    #[value(name = "Cs")]
    Cs,
    #[value(name = "Csp")]
    Csp,
}

impl From<ConditionArg> for ConditionKind {
    fn from(c: ConditionArg) -> Self {
        match c {
            ConditionArg::C => ConditionKind::C,
            ConditionArg::Cp => ConditionKind::CPrime,
            ConditionArg::Cs => ConditionKind::CStar,
            ConditionArg::Csp => ConditionKind::CStarPrime,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    Semiorder,
    Interval,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WitnessModelArg {
    Loopless,
    Semiorder,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TheoremArg {
    Kr,
    Main0,
    Loopless,
    Acyclic,
    Props,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the competition, CCE or niche graph of a digraph.
    Derive {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a DOT rendering of the digraph and its derived graph.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check C(p), C'(p), C*(p) or C*'(p).
    Check {
        #[arg(long, value_enum)]
        condition: ConditionArg,
        #[arg(long)]
        p: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Decide whether a digraph is a semiorder or an interval order.
    Recognize {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a digraph whose CCE graph is K_r ∪ I_q.
    Witness {
        /// `r,q`
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "loopless")]
        model: WitnessModelArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the double competition number of a graph.
    Dk {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        kmax: usize,
        /// Where to write the witness digraph.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an exhaustive verification sweep.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        /// Where to write a counterexample digraph.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Collect graph classes for one of the open classification problems.
    Explore {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        problem: u8,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        loopless: bool,
        #[arg(long)]
        acyclic: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse { path: PathBuf, error: ParseError },
    Io { path: PathBuf, error: std::io::Error },
    Cap(Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Parse { .. } => EXIT_USAGE,
            Failure::Io { .. } => EXIT_IO,
            Failure::Cap(_) => EXIT_CAP,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Parse { path, error } => write!(f, "error: {}: {error}", path.display()),
            Failure::Io { path, error } => write!(f, "error: {}: {error}", path.display()),
            Failure::Cap(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let io = |error| Failure::Io { path: path.to_path_buf(), error };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|error| Failure::Io { path: path.to_path_buf(), error })
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    format::parse_digraph(&read_input(path)?).map_err(|error| Failure::Parse { path: path.to_path_buf(), error })
}

fn read_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    format::parse_graph(&read_input(path)?).map_err(|error| Failure::Parse { path: path.to_path_buf(), error })
}

struct Context<'a> {
    json: bool,
    mode: SearchMode,
    caps: Caps,
    out: &'a mut (dyn Write + Send),
}

impl Context<'_> {
    fn say(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|error| Failure::Io { path: PathBuf::from("<stdout>"), error })
    }

    fn say_json(&mut self, value: serde_json::Value) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(&value).expect("json values serialize");
        self.say(&format!("{text}\n"))
    }

    /// Writes `contents` to `path`, or to stdout without one.
    fn emit(&mut self, path: Option<&Path>, contents: &str) -> Result<(), Failure> {
        match path {
            Some(p) => write_file(p, contents),
            None => self.say(contents),
        }
    }
}

fn parse_shape(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("--shape expects `r,q`, got {text:?}"));
    let (r, q) = text.split_once(',').ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn execute(command: Command, cx: &mut Context<'_>) -> Result<i32, Failure> {
    match command {
        Command::Derive { kind, input, out, dot } => {
            let d = read_digraph(&input)?;
            let kind = DerivedKind::from(kind);
            let g = derived_graph(&d, kind);
            if let Some(dot) = dot {
                write_file(&dot, &format::to_dot(&d, &g, kind.name()))?;
            }
            if cx.json {
                let text = serde_json::to_string_pretty(&g).expect("graphs serialize") + "\n";
                cx.emit(out.as_deref(), &text)?;
            } else {
                cx.emit(out.as_deref(), &format::write_graph(&g))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { condition, p, input } => {
            if p < 2 {
                return Err(Failure::Usage(format!("--p must be at least 2, got {p}")));
            }
            let d = read_digraph(&input)?;
            let report = satisfies_condition(&d, condition.into(), p)?;
            if cx.json {
                cx.say_json(json!({
                    "condition": report.kind.code(),
                    "p": p,
                    "satisfied": report.satisfied,
                    "witness": report.violating_set,
                }))?;
            } else if let Some(set) = &report.violating_set {
                let members: Vec<String> = set.iter().map(ToString::to_string).collect();
                cx.say(&format!(
                    "{} violated for p = {p}: empty set for {{{}}}\n",
                    report.kind.label(),
                    members.join(",")
                ))?;
            } else {
                cx.say(&format!("{} satisfied for p = {p}\n", report.kind.label()))?;
            }
            Ok(if report.satisfied { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Recognize { model, input, out } => {
            let d = read_digraph(&input)?;
            let (name, text, value) = match model {
                ModelArg::Semiorder => {
                    let rep = recognize_semiorder(&d);
                    ("semiorder", rep.as_ref().map(format::write_semiorder), serde_json::to_value(&rep))
                }
                ModelArg::Interval => {
                    let rep = recognize_interval_order(&d);
                    ("interval order", rep.as_ref().map(format::write_intervals), serde_json::to_value(&rep))
                }
            };
            let found = text.is_some();
            if cx.json {
                cx.say_json(json!({ "model": name, "recognized": found, "representation": value.expect("reps serialize") }))?;
            } else {
                match text {
                    Some(t) => cx.emit(out.as_deref(), &t)?,
                    None => cx.say(&format!("not a {name}\n"))?,
                }
            }
            Ok(if found { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Witness { shape, model, out } => {
            let (r, q) = parse_shape(&shape)?;
            match model {
                WitnessModelArg::Loopless => {
                    let d = witness_loopless(r, q)?;
                    let text = if cx.json {
                        serde_json::to_string_pretty(&d).expect("digraphs serialize") + "\n"
                    } else {
                        format::write_digraph(&d)
                    };
                    cx.emit(out.as_deref(), &text)?;
                }
                WitnessModelArg::Semiorder => {
                    let rep = witness_semiorder(r, q)?;
                    debug_assert!(semiorder_from(&rep, r + q).is_ok());
                    let text = if cx.json {
                        serde_json::to_string_pretty(&rep).expect("reps serialize") + "\n"
                    } else {
                        format::write_semiorder(&rep)
                    };
                    cx.emit(out.as_deref(), &text)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Dk { input, kmax, out } => {
            let g = read_graph(&input)?;
            let result = double_competition_number(&g, kmax, &cx.caps, cx.mode)?;
            if cx.json {
                cx.say_json(json!({
                    "dk": result.as_ref().map(|r| r.k),
                    "kmax": kmax,
                    "witness": result.as_ref().map(|r| &r.witness),
                }))?;
                if let (Some(path), Some(r)) = (out.as_deref(), &result) {
                    write_file(path, &format::write_digraph(&r.witness))?;
                }
            } else {
                match &result {
                    Some(r) => {
                        cx.say(&format!("dk = {}\n", r.k))?;
                        let text = format::write_digraph(&r.witness);
                        cx.emit(out.as_deref(), &text)?;
                    }
                    None => cx.say(&format!("dk > {kmax}\n"))?,
                }
            }
            Ok(if result.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Verify { theorem, n, p, report } => {
            let needs_p = matches!(theorem, TheoremArg::Loopless | TheoremArg::Acyclic);
            let p = match (needs_p, p) {
                (true, None) => return Err(Failure::Usage("--p is required for this theorem".into())),
                (true, Some(p)) if p < 2 => return Err(Failure::Usage(format!("--p must be at least 2, got {p}"))),
                (_, p) => p,
            };
            let outcome: SweepOutcome = match theorem {
                TheoremArg::Kr => sweeps::verify_theorem_kr(n, &cx.caps)?,
                TheoremArg::Main0 => sweeps::verify_theorem_main0(n, &cx.caps)?,
                TheoremArg::Loopless => sweeps::verify_theorem_loopless(p.unwrap(), n, &cx.caps)?,
                TheoremArg::Acyclic => sweeps::verify_theorem_acyclic(p.unwrap(), n, &cx.caps)?,
                TheoremArg::Props => sweeps::verify_propositions(n, &cx.caps)?,
            };
            let report_path = report.unwrap_or_else(|| PathBuf::from(DEFAULT_REPORT));
            if let Some(c) = &outcome.counterexample {
                let text = format!("# {}\n{}", c.reason, format::write_digraph(&c.digraph));
                write_file(&report_path, &text)?;
            }
            if cx.json {
                cx.say_json(json!({
                    "theorem": format!("{theorem:?}").to_lowercase(),
                    "n": n,
                    "p": p,
                    "checked": outcome.checked,
                    "holds": outcome.holds(),
                    "shapes": outcome.shapes.iter().map(|s| [s.r, s.q]).collect::<Vec<_>>(),
                    "counterexample": outcome.counterexample,
                }))?;
            } else {
                let mut text = format!("checked {} digraphs\n", outcome.checked);
                if !outcome.shapes.is_empty() {
                    let shapes: Vec<String> = outcome.shapes.iter().map(ToString::to_string).collect();
                    text += &format!("shapes: {}\n", shapes.join(", "));
                }
                match &outcome.counterexample {
                    None => text += "verified: no counterexample\n",
                    Some(c) => {
                        text += &format!("counterexample: {} (written to {})\n", c.reason, report_path.display())
                    }
                }
                cx.say(&text)?;
            }
            Ok(if outcome.holds() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Explore { problem, p, n, loopless, acyclic } => {
            if p < 2 {
                return Err(Failure::Usage(format!("--p must be at least 2, got {p}")));
            }
            let problem = OpenProblem::from_number(problem).expect("clap restricts the range");
            let filter = EnumerationFilter { n, loopless, acyclic };
            let report = sweeps::explore_open_problem(problem, p, filter, &cx.caps)?;
            if cx.json {
                cx.say_json(serde_json::to_value(&report).expect("reports serialize"))?;
            } else {
                let mut text = format!("problem {} p = {p} n = {n}: checked {} digraphs\n", problem.number(), report.checked);
                for section in &report.sections {
                    text += &format!("[{}] {} classes\n", section.label, section.classes.len());
                    for class in &section.classes {
                        let edges: Vec<String> = class.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                        let arcs: Vec<String> = class.witness.arcs().map(|(u, v)| format!("{u}>{v}")).collect();
                        text += &format!(
                            "  edges {{{}}}  count {}  witness {{{}}}\n",
                            edges.join(","),
                            class.count,
                            arcs.join(",")
                        );
                    }
                }
                cx.say(&text)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut (dyn Write + Send), stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut cx = Context {
        json: cli.json,
        mode: if cli.fast_nondet { SearchMode::Fast } else { SearchMode::Deterministic },
        caps,
        out: stdout,
    };
    match pool.install(|| execute(cli.command, &mut cx)) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "{failure}");
            failure.exit_code()
        }
    }
}
