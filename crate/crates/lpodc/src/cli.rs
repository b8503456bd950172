//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse or validation error,
//! 3 atom cap exceeded, 4 oracle and translation disagree.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lpodc_core::eval::{eval_crp_with, eval_lpod_with, EvalOptions};
use lpodc_core::model::validate_program;
use lpodc_core::parser::{parse, render};
use lpodc_core::translate::{crp2asp, lpod2asp, lpod2asp_base};
use lpodc_core::{Dialect, Engine, Error, PreferenceCriterion, Program};

use crate::check::{check, minimize, CheckReport};
use crate::gen::corpus;
use crate::pool::Pool;
use crate::report::{solve_crp, solve_lpod};

pub const DEFAULT_CAP: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "lpodc", version, about = "Translate and check LPOD and CR-Prolog2 programs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the ASP translation of a program.
    Translate(Common),
    /// Print candidate and preferred answer sets.
    Solve(Common),
    /// Compare the reference semantics with the evaluated translation.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DialectArg {
    Lpod,
    Crp2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Input dialect; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    pub dialect: Option<DialectArg>,
    /// cardinality, inclusion, pareto or penalty-sum (LPOD only).
    #[arg(long, value_parser = parse_criterion)]
    pub criterion: Option<PreferenceCriterion>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest number of atoms the engine may guess over at once.
    #[arg(long, env = "LPODC_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
    /// Input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: Common,
    /// Check this many random programs instead of an input file.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the ground program of every assumption tuple to stderr.
    #[arg(long)]
    pub dump_ground: bool,
}

fn parse_criterion(s: &str) -> Result<PreferenceCriterion, String> {
    s.parse()
}

/// A failed run with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn io(e: impl std::fmt::Display) -> Self {
        Failure { code: 1, message: e.to_string() }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::Inconsistent(_) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn dialect_of(c: &Common) -> Dialect {
    match c.dialect {
        Some(DialectArg::Lpod) => Dialect::Lpod,
        Some(DialectArg::Crp2) => Dialect::Crp2,
        None => match c.input.as_deref().and_then(Path::extension) {
            Some(ext) if ext == "crp" => Dialect::Crp2,
            _ => Dialect::Lpod,
        },
    }
}

fn read_input(c: &Common) -> Result<String, Failure> {
    match c.input.as_deref() {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Failure::io(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(Failure::io)?;
            Ok(s)
        }
    }
}

fn load(c: &Common) -> Result<Program, Failure> {
    let dialect = dialect_of(c);
    if c.criterion.is_some() && dialect == Dialect::Crp2 {
        return Err(Failure::input("--criterion applies to LPOD programs only"));
    }
    let p = parse(&read_input(c)?, dialect)?;
    let report = validate_program(&p);
    if !report.is_valid() {
        return Err(Failure::input(report.to_string().trim_end().to_string()));
    }
    Ok(p)
}

fn write_output(c: &Common, text: &str) -> Result<(), Failure> {
    match &c.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(Failure::io),
    }
}

fn engine(c: &Common) -> Engine<Pool> {
    Engine::with_executor(c.cap, Pool::new(c.parallel))
}

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable report") + "\n"
}

fn translate(c: &Common) -> Result<(), Failure> {
    let p = load(c)?;
    let doc = match (p.dialect, c.criterion) {
        (Dialect::Crp2, _) => crp2asp(&p),
        (Dialect::Lpod, Some(crit)) => lpod2asp(&p, crit),
        (Dialect::Lpod, None) => lpod2asp_base(&p),
    };
    let text = match doc {
        Ok(d) => d.emit(),
        Err(Error::DegenerateProgram) => {
            eprintln!("warning: {}", Error::DegenerateProgram);
            String::new()
        }
        Err(e) => return Err(e.into()),
    };
    let text = match c.format {
        Format::Text => text,
        Format::Json => json(&serde_json::json!({ "dialect": p.dialect.to_string(), "text": text })),
    };
    write_output(c, &text)
}

fn solve(c: &Common) -> Result<(), Failure> {
    let p = load(c)?;
    let engine = engine(c);
    let report = match p.dialect {
        Dialect::Lpod => solve_lpod(&p, c.criterion, &engine)?,
        Dialect::Crp2 => solve_crp(&p, &engine)?,
    };
    let text = match c.format {
        Format::Text => report.text(),
        Format::Json => json(&report),
    };
    write_output(c, &text)
}

fn criteria(c: &Common) -> Vec<PreferenceCriterion> {
    match c.criterion {
        Some(x) => vec![x],
        None => PreferenceCriterion::ALL.to_vec(),
    }
}

fn mismatch_text(p: &Program, r: &CheckReport) -> String {
    let mut out = String::from("MISMATCH\n--- minimized program ---\n");
    out.push_str(&render(p));
    for a in r.mismatches() {
        out.push_str(&format!(
            "--- {} ---\noracle:      {:?}\ntranslation: {:?}\n",
            a.aspect, a.oracle, a.translation
        ));
    }
    out
}

fn dump_ground(p: &Program, crits: &[PreferenceCriterion], engine: &Engine<Pool>) -> Result<(), Failure> {
    let opts = EvalOptions { dump_ground: true };
    let e = match p.dialect {
        Dialect::Lpod => eval_lpod_with(&lpod2asp(p, crits[0])?, p, crits[0], engine, &opts)?,
        Dialect::Crp2 => eval_crp_with(&crp2asp(p)?, p, engine, &opts)?,
    };
    for (x, text) in &e.ground_dumps {
        eprintln!("% tuple {x}\n{text}");
    }
    Ok(())
}

fn check_cmd(a: &CheckArgs) -> Result<(), Failure> {
    let c = &a.common;
    let engine = engine(c);
    let crits = criteria(c);
    if let Some(n) = a.random {
        let dialect = dialect_of(c);
        if c.criterion.is_some() && dialect == Dialect::Crp2 {
            return Err(Failure::input("--criterion applies to LPOD programs only"));
        }
        let mut results = Vec::new();
        for (_, p) in corpus(dialect, n, a.seed) {
            let r = check(&p, &crits, &engine)?;
            if !r.ok() {
                let small = minimize(&p, &crits, &engine);
                let r = check(&small, &crits, &engine)?;
                write_output(c, &mismatch_text(&small, &r))?;
                return Err(Failure { code: 4, message: "oracle and translation disagree".into() });
            }
            results.push(r);
        }
        let text = match c.format {
            Format::Text => format!("OK: {n} random {dialect} programs (seed {}), oracle == translation\n", a.seed),
            Format::Json => json(&serde_json::json!({ "ok": true, "programs": n, "seed": a.seed })),
        };
        return write_output(c, &text);
    }

    let p = load(c)?;
    if p.indexed_count() == 0 && p.dialect == Dialect::Lpod {
        eprintln!("warning: {}; only the oracles are compared", Error::DegenerateProgram);
    }
    if a.dump_ground && p.indexed_count() > 0 {
        dump_ground(&p, &crits, &engine)?;
    }
    let r = check(&p, &crits, &engine)?;
    if !r.ok() {
        let small = minimize(&p, &crits, &engine);
        let rs = check(&small, &crits, &engine)?;
        let text = match c.format {
            Format::Text => mismatch_text(&small, &rs),
            Format::Json => json(&serde_json::json!({ "ok": false, "report": r, "minimized": render(&small) })),
        };
        write_output(c, &text)?;
        return Err(Failure { code: 4, message: "oracle and translation disagree".into() });
    }
    let text = match c.format {
        Format::Text => format!(
            "OK: {} candidates, {} preferred, oracle == translation\n",
            r.candidates, r.preferred
        ),
        Format::Json => json(&serde_json::json!({ "ok": true, "report": r })),
    };
    write_output(c, &text)
}

/// Runs the parsed command line and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Translate(c) => translate(c),
        Command::Solve(c) => solve(c),
        Command::Check(a) => check_cmd(a),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
