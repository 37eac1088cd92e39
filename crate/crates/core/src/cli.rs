// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. Every command prints one JSON report on stdout.
//! Exit status: 0 when the verdict holds, 1 when it does not, 2 on input errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::composition::{parallel_compose, CompositionSpec};
use crate::controllability::{check_solution_under_pc, largest_solution_under_pc, ControlAlphabet};
use crate::error::{Error, Result};
use crate::fa::{enumerate_language, symmetric_difference_witness, trim, Alphabet, Automaton, AutomatonStats, Word};
use crate::io::{load_automaton, save_automaton, save_dot, to_dot};
use crate::observability::{
    check_progressive_under_pco, check_solution_under_pco, check_solution_under_po, largest_progressive_solution_under_pco,
    largest_solution_under_pco, solvable_under_po, witness_solution_under_po,
};
use crate::solver::{
    check_progressive_supervisor, check_supervisor, largest_progressive_supervisor, largest_supervisor, Check,
    SupervisorVerdict,
};

#[derive(Debug, Parser)]
#[command(name = "supctl", version, about = "Supervisor synthesis and verification for finite automata")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a candidate is a supervisor of the requested flavor.
    Check(CheckArgs),
    /// Build the largest supervisor of the requested flavor.
    Synthesize(SynthArgs),
    /// Parallel composition of two automata over their union alphabet.
    Compose(ComposeArgs),
    /// List the accepted words up to a length.
    Enumerate(EnumerateArgs),
    /// Write an automaton as Graphviz DOT.
    ExportDot(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Plain,
    Progressive,
    Pc,
    Po,
    Pco,
    PcoProgressive,
}

#[derive(Debug, Args)]
pub struct Problem {
    #[arg(long)]
    pub plant: PathBuf,
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum, default_value_t = Flavor::Plain)]
    pub flavor: Flavor,
    /// Comma-separated uncontrollable events.
    #[arg(long, value_delimiter = ',')]
    pub uncontrollable: Vec<String>,
    /// Comma-separated unobservable events.
    #[arg(long, value_delimiter = ',')]
    pub unobservable: Vec<String>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub problem: Problem,
    #[arg(long)]
    pub candidate: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub problem: Problem,
    /// Search depth for the partial-observability fallback search.
    #[arg(long, default_value_t = 3)]
    pub horizon: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComposeArgs {
    /// First component.
    #[arg(long)]
    pub plant: PathBuf,
    /// Second component.
    #[arg(long)]
    pub candidate: PathBuf,
    /// Comma-separated external alphabet; defaults to the union of both alphabets.
    #[arg(long, value_delimiter = ',')]
    pub external_alphabet: Vec<String>,
    /// When given, the verdict is whether the composition is equivalent to it.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, alias = "input")]
    pub plant: PathBuf,
    #[arg(long, default_value_t = 4)]
    pub horizon: usize,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, alias = "input")]
    pub plant: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrimStats {
    pub name: String,
    pub before: AutomatonStats,
    pub after: AutomatonStats,
}

impl TrimStats {
    fn of(name: &str, a: &Automaton) -> TrimStats {
        TrimStats { name: name.to_string(), before: a.stats(), after: trim(a).stats() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub word: String,
    pub symbols: Vec<String>,
}

impl From<&Word> for WitnessReport {
    fn from(w: &Word) -> Self {
        WitnessReport { word: w.to_string(), symbols: w.names() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flavor: Option<Flavor>,
    pub verdict: bool,
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub stats: Vec<TrimStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
    pub timing_ms: f64,
}

impl Report {
    fn new(command: &'static str) -> Report {
        Report {
            command,
            flavor: None,
            verdict: true,
            witness: None,
            note: None,
            stats: Vec::new(),
            rounds: None,
            words: None,
            dot: None,
            timing_ms: 0.0,
        }
    }

    fn stat(&mut self, name: &str, a: &Automaton) {
        self.stats.push(TrimStats::of(name, a));
    }

    fn fail(&mut self, witness: Option<&Word>) {
        self.verdict = false;
        self.witness = witness.map(WitnessReport::from);
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Errors that are verdicts rather than bad input.
fn as_verdict(err: Error) -> Result<Option<Word>> {
    match err {
        Error::NotPrefixClosed { witness } | Error::NotASolution { witness } | Error::Unsolvable { witness } => {
            Ok(Some(witness))
        }
        e => Err(e),
    }
}

struct Loaded {
    plant: Automaton,
    spec: Automaton,
    ca: ControlAlphabet,
}

fn load_problem(pr: &Problem, report: &mut Report) -> Result<Loaded> {
    let plant = load_automaton(&pr.plant)?;
    let spec = load_automaton(&pr.spec)?.reindexed(plant.alphabet())?;
    let ca = ControlAlphabet::from_names(plant.alphabet().clone(), &pr.uncontrollable, &pr.unobservable)?;
    report.flavor = Some(pr.flavor);
    report.stat("plant", &plant);
    report.stat("spec", &spec);
    Ok(Loaded { plant, spec, ca })
}

fn run_check(args: &CheckArgs, report: &mut Report) -> Result<()> {
    let Loaded { plant: p, spec: s, ca } = load_problem(&args.problem, report)?;
    let c = load_automaton(&args.candidate)?.reindexed(p.alphabet())?;
    report.stat("candidate", &c);
    let outcome = match args.problem.flavor {
        Flavor::Plain => check_supervisor(&p, &s, &c),
        Flavor::Progressive => check_progressive_supervisor(&p, &s, &c),
        Flavor::Pc => check_solution_under_pc(&p, &s, &c, &ca),
        Flavor::Po => check_solution_under_po(&p, &s, &c, &ca),
        Flavor::Pco => check_solution_under_pco(&p, &s, &c, &ca),
        Flavor::PcoProgressive => check_progressive_under_pco(&p, &s, &c, &ca),
    };
    let witness = match outcome {
        Ok(Check::Pass) => None,
        Ok(Check::Fail(w)) => Some(w),
        Err(e) => as_verdict(e)?,
    };
    if witness.is_some() {
        report.fail(witness.as_ref());
    }
    Ok(())
}

fn write_outputs(a: &Automaton, out: &Option<PathBuf>, dot: &Option<PathBuf>, name: &str) -> Result<()> {
    if let Some(path) = out {
        save_automaton(a, path)?;
    }
    if let Some(path) = dot {
        save_dot(a, name, path)?;
    }
    Ok(())
}

fn run_synthesize(args: &SynthArgs, report: &mut Report) -> Result<()> {
    let Loaded { plant: p, spec: s, ca } = load_problem(&args.problem, report)?;
    let verdict: Result<SupervisorVerdict> = match args.problem.flavor {
        Flavor::Plain => largest_supervisor(&p, &s),
        Flavor::Progressive => largest_progressive_supervisor(&p, &s),
        Flavor::Pc => largest_solution_under_pc(&p, &s, &ca),
        Flavor::Pco => largest_solution_under_pco(&p, &s, &ca),
        Flavor::PcoProgressive => largest_progressive_solution_under_pco(&p, &s, &ca),
        Flavor::Po => return synthesize_po(args, &p, &s, &ca, report),
    };
    let verdict = match verdict {
        Ok(v) => v,
        Err(e) => {
            let w = as_verdict(e)?;
            report.fail(w.as_ref());
            return Ok(());
        }
    };
    report.stat("supervisor", verdict.candidate());
    report.stat("closed_loop", verdict.closed_loop());
    if matches!(args.problem.flavor, Flavor::Pc | Flavor::Pco | Flavor::PcoProgressive) {
        report.rounds = Some(verdict.rounds());
    }
    if !verdict.is_solvable() {
        report.fail(verdict.witness());
        report.note = Some("unsolvable; the output is the best behavior the construction reached".into());
    }
    write_outputs(verdict.candidate(), &args.out, &args.dot, "supervisor")
}

fn synthesize_po(args: &SynthArgs, p: &Automaton, s: &Automaton, ca: &ControlAlphabet, report: &mut Report) -> Result<()> {
    let inclusion = match solvable_under_po(p, s, ca) {
        Ok(i) => i,
        Err(e) => {
            let w = as_verdict(e)?;
            report.fail(w.as_ref());
            return Ok(());
        }
    };
    if let Some(w) = inclusion.witness() {
        report.fail(Some(w));
        return Ok(());
    }
    let c = witness_solution_under_po(p, s, ca, args.horizon)?;
    report.note = Some("no largest solution exists under partial observability; the output is one solution".into());
    report.stat("supervisor", &c);
    write_outputs(&c, &args.out, &args.dot, "supervisor")
}

fn external_alphabet(names: &[String], default: Alphabet) -> Result<Alphabet> {
    if names.is_empty() {
        Ok(default)
    } else {
        Alphabet::new(names)
    }
}

fn run_compose(args: &ComposeArgs, report: &mut Report) -> Result<()> {
    let a = load_automaton(&args.plant)?;
    let b = load_automaton(&args.candidate)?;
    report.stat("first", &a);
    report.stat("second", &b);
    let all = a.alphabet().union(b.alphabet());
    let external = external_alphabet(&args.external_alphabet, all)?;
    let spec = CompositionSpec::new(a.alphabet().clone(), b.alphabet().clone(), external)?;
    let composed = parallel_compose(&a, &b, &spec)?;
    report.stat("composition", &composed);
    if let Some(path) = &args.spec {
        let target = load_automaton(path)?;
        let target = target.reindexed(composed.alphabet())?;
        if let Some(w) = symmetric_difference_witness(&composed, &target)? {
            report.fail(Some(&w));
        }
    }
    write_outputs(&composed, &args.out, &args.dot, "composition")
}

fn run_enumerate(args: &EnumerateArgs, report: &mut Report) -> Result<()> {
    let a = load_automaton(&args.plant)?;
    report.stat("input", &a);
    let sample = enumerate_language(&a, args.horizon);
    report.words = Some(sample.sorted(a.alphabet()).iter().map(Word::to_string).collect());
    Ok(())
}

fn run_export(args: &ExportArgs, report: &mut Report) -> Result<()> {
    let a = load_automaton(&args.plant)?;
    report.stat("input", &a);
    let name = args.plant.file_stem().and_then(|s| s.to_str()).unwrap_or("automaton");
    match &args.dot {
        Some(path) => save_dot(&a, name, path),
        None => {
            report.dot = Some(to_dot(&a, name));
            Ok(())
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let mut report;
    match &cli.command {
        Command::Check(a) => {
            report = Report::new("check");
            run_check(a, &mut report)?;
        }
        Command::Synthesize(a) => {
            report = Report::new("synthesize");
            run_synthesize(a, &mut report)?;
        }
        Command::Compose(a) => {
            report = Report::new("compose");
            run_compose(a, &mut report)?;
        }
        Command::Enumerate(a) => {
            report = Report::new("enumerate");
            run_enumerate(a, &mut report)?;
        }
        Command::ExportDot(a) => {
            report = Report::new("export-dot");
            run_export(a, &mut report)?;
        }
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(report)
}

/// Parses `args`, runs, prints the report and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.to_json());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
