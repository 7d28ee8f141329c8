use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};
use numgame_core::divergence::{
    certificate_from_json, certificate_label, verify_certificate, ProofReport,
};
use numgame_core::rational::{join, parse_rational};
use numgame_core::strategies::strong_convergence_probe;
use numgame_core::{
    certificate_catalog, classify_finite, fire, legal_moves, play_sequence, run_game, verify_all,
    CatalogId, DivergenceCertificate, GameOutcome, GcmGraph, InadmissibleFamilyId, Position,
    Strategy,
};

use crate::graph_file::load_graph;
use crate::trace::TraceFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_UNVERIFIED: i32 = 3;

/// Budget for `auto` in the REPL and the default for `play`.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "numgame",
    version,
    about = "Play and verify numbers games on GCM graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play one game (or probe several strategies) and report the outcome.
    Play(PlayArgs),
    /// Verify divergence certificates of a non-admissible catalog family.
    Verify(VerifyArgs),
    /// Identify a graph as a finite-type Dynkin diagram.
    Classify(ClassifyArgs),
    /// Play by hand, one firing per input line.
    Repl(ReplArgs),
}

#[derive(Debug, Args)]
pub struct PlayArgs {
    /// Graph file, or `@Name` for a catalog graph such as `@B2` or `@Atilde:5`.
    #[arg(long)]
    pub graph: String,
    /// Comma-separated rationals, e.g. `2,3` or `1/2,0,-3`.
    #[arg(long, allow_hyphen_values = true)]
    pub position: String,
    /// greedy-min, greedy-max, random, or prescribed:<i,j,...>.
    #[arg(long, default_value = "greedy-min")]
    pub strategy: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Seed for the random strategy and for probe trials.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also run this many seeded random games plus both greedy ones and
    /// report whether they agree.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub trace_out: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Catalog id such as `Atilde:4`, `Gtilde1` or `Tri1:p1=1,q1=1,p2=1,q2=1`.
    #[arg(long, required_unless_present = "certificate")]
    pub family: Option<String>,
    #[arg(long, conflicts_with = "omega")]
    pub all: bool,
    #[arg(long)]
    pub omega: Option<usize>,
    /// A certificate in JSON form; its family and ω come from the file.
    #[arg(long, conflicts_with_all = ["family", "all", "omega"])]
    pub certificate: Option<String>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub graph: String,
}

#[derive(Debug, Args)]
pub struct ReplArgs {
    #[arg(long)]
    pub graph: String,
    #[arg(long, allow_hyphen_values = true)]
    pub position: String,
}

pub fn parse_position(text: &str, n: usize) -> Result<Position, String> {
    let values = text
        .split(',')
        .map(|s| parse_rational(s).ok_or_else(|| format!("not a rational: `{}`", s.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != n {
        return Err(format!(
            "position has {} entries but the graph has {n} nodes",
            values.len()
        ));
    }
    Ok(Position::new(values))
}

pub fn parse_strategy(text: &str, seed: u64) -> Result<Strategy, String> {
    match text {
        "greedy-min" => Ok(Strategy::GreedyMin),
        "greedy-max" => Ok(Strategy::GreedyMax),
        "random" => Ok(Strategy::RandomSeeded(seed)),
        _ => {
            let seq = text
                .strip_prefix("prescribed:")
                .ok_or_else(|| format!("unknown strategy `{text}`"))?;
            seq.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("bad node `{s}` in prescribed sequence"))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Strategy::Prescribed)
        }
    }
}

pub fn run(cli: Cli, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Play(a) => play(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Classify(a) => classify(&a, out),
        Command::Repl(a) => repl(&a, input, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn outcome_line(outcome: &GameOutcome) -> String {
    match outcome {
        GameOutcome::Converged { terminal, steps } => format!("steps={steps} terminal={terminal}"),
        GameOutcome::BudgetExhausted { steps } => format!("steps={steps} exhausted"),
        GameOutcome::Partial { steps } => format!("steps={steps} partial"),
        GameOutcome::CertifiedDivergent { certificate } => format!("divergent by {certificate}"),
    }
}

fn exit_for(outcome: &GameOutcome) -> i32 {
    if outcome.is_converged() {
        EXIT_OK
    } else {
        EXIT_EXHAUSTED
    }
}

fn play(a: &PlayArgs, out: &mut dyn Write) -> Result<i32, String> {
    let g = load_graph(&a.graph).map_err(|e| e.to_string())?;
    let lambda = parse_position(&a.position, g.n())?;
    let strategy = parse_strategy(&a.strategy, a.seed)?;
    let trace = run_game(&g, &lambda, &strategy, a.budget);
    writeln!(out, "{}", outcome_line(&trace.outcome)).map_err(io)?;
    if let Some(path) = &a.trace_out {
        std::fs::write(path, TraceFile::from_trace(&g, &trace).to_json())
            .map_err(|e| format!("{path}: {e}"))?;
    }
    if let Some(trials) = a.trials {
        let report = strong_convergence_probe(&g, &lambda, trials, a.seed, a.budget);
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(
            out,
            "probe: {} runs, outcomes agree={} terminals agree={} steps agree={}",
            report.runs.len(),
            yes_no(report.kinds_agree),
            yes_no(report.terminals_agree),
            yes_no(report.steps_agree)
        )
        .map_err(io)?;
    }
    Ok(exit_for(&trace.outcome))
}

fn gammas(seq: &[usize]) -> String {
    let parts: Vec<String> = seq.iter().map(|i| format!("γ{i}")).collect();
    format!("({})", parts.join(","))
}

fn describe(report: &ProofReport) -> String {
    match report {
        ProofReport::Parametric(r) => {
            format!("parametric loop, {} firings legal for all k", r.steps.len())
        }
        ProofReport::Region(r) => {
            format!(
                "invariant region, {} firings and {} closure constraints witnessed",
                r.fired_forms.len(),
                r.output_forms.len()
            )
        }
        ProofReport::Kappa(r) => format!("kappa closure, {} rounds checked", r.samples),
    }
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    if let Some(path) = &a.certificate {
        return verify_file(path, out);
    }
    let family = a.family.as_deref().unwrap_or_default();
    let id = match CatalogId::parse(family) {
        Ok(CatalogId::Inadmissible(id)) => id,
        Ok(CatalogId::Finite(t)) => {
            return Err(format!("{t} is not an inadmissible-catalog family"))
        }
        Err(e) => return Err(e.to_string()),
    };
    match (a.all, a.omega) {
        (_, Some(omega)) => verify_one(id, omega, out),
        (true, None) => {
            let report = verify_all(id).map_err(|e| e.to_string())?;
            for v in &report.verdicts {
                match &v.result {
                    Ok(r) => writeln!(out, "ω{}: verified ({})", v.omega, describe(r)),
                    Err(e) => writeln!(out, "ω{}: FAILED: {e}", v.omega),
                }
                .map_err(io)?;
            }
            writeln!(
                out,
                "{}/{} certificates verified",
                report.verified(),
                report.total()
            )
            .map_err(io)?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_UNVERIFIED
            })
        }
        (false, None) => Err("pass --all or --omega <i>".to_string()),
    }
}

fn verify_file(path: &str, out: &mut dyn Write) -> Result<i32, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let (id, omega, cert) = certificate_from_json(&text).map_err(|e| e.to_string())?;
    report_certificate(id, omega, &cert, out)
}

fn verify_one(id: InadmissibleFamilyId, omega: usize, out: &mut dyn Write) -> Result<i32, String> {
    let cert = certificate_catalog(id, omega).map_err(|e| e.to_string())?;
    report_certificate(id, omega, &cert, out)
}

fn report_certificate(
    id: InadmissibleFamilyId,
    omega: usize,
    cert: &DivergenceCertificate,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let g = numgame_core::build_inadmissible(id).map_err(|e| e.to_string())?;
    writeln!(
        out,
        "{}: {} certificate",
        certificate_label(id, omega),
        cert.kind()
    )
    .map_err(io)?;
    writeln!(out, "start ({})", join(cert.start().values())).map_err(io)?;
    let landing = play_sequence(&g, cert.start(), cert.prefix()).map(|t| t.last_position().clone());
    match landing {
        Ok(p) => writeln!(
            out,
            "prefix {} landing at ({})",
            gammas(cert.prefix()),
            join(p.values())
        ),
        Err(_) => writeln!(out, "prefix {} is not legal", gammas(cert.prefix())),
    }
    .map_err(io)?;
    match verify_certificate(&g, cert) {
        Ok(r) => {
            writeln!(out, "ω{omega}: verified ({})", describe(&r)).map_err(io)?;
            writeln!(out, "1/1 certificates verified").map_err(io)?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "ω{omega}: FAILED: {e}").map_err(io)?;
            writeln!(out, "0/1 certificates verified").map_err(io)?;
            Ok(EXIT_UNVERIFIED)
        }
    }
}

fn classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let g = load_graph(&a.graph).map_err(|e| e.to_string())?;
    match classify_finite(&g) {
        Ok(Some((t, sigma))) => writeln!(out, "finite-type {t} via σ={sigma}"),
        Ok(None) | Err(_) => writeln!(out, "not finite type"),
    }
    .map_err(io)?;
    Ok(EXIT_OK)
}

fn show_state(g: &GcmGraph, p: &Position, out: &mut dyn Write) -> std::io::Result<()> {
    let legal: Vec<String> = legal_moves(g, p).iter().map(|i| i.to_string()).collect();
    writeln!(out, "position: {p}")?;
    writeln!(
        out,
        "legal: {}",
        if legal.is_empty() {
            "none".to_string()
        } else {
            legal.join(",")
        }
    )
}

fn repl(a: &ReplArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, String> {
    let g = load_graph(&a.graph).map_err(|e| e.to_string())?;
    let start = parse_position(&a.position, g.n())?;
    let mut history = vec![start];
    let mut line = String::new();
    loop {
        let current = history.last().expect("history starts non-empty").clone();
        if legal_moves(&g, &current).is_empty() {
            writeln!(out, "terminal: {current} ({} firings)", history.len() - 1).map_err(io)?;
            return Ok(EXIT_OK);
        }
        show_state(&g, &current, out).map_err(io)?;
        write!(out, "> ").map_err(io)?;
        out.flush().map_err(io)?;
        line.clear();
        if input.read_line(&mut line).map_err(io)? == 0 {
            writeln!(out).map_err(io)?;
            return Ok(EXIT_OK);
        }
        let cmd = line.trim();
        match cmd {
            "" => {}
            "quit" | "exit" => return Ok(EXIT_OK),
            "undo" => {
                if history.len() > 1 {
                    history.pop();
                } else {
                    writeln!(out, "nothing to undo").map_err(io)?;
                }
            }
            "auto" => {
                let trace = run_game(&g, &current, &Strategy::GreedyMin, DEFAULT_BUDGET);
                history.extend(trace.steps.into_iter().map(|s| s.position));
                if !trace.outcome.is_converged() {
                    writeln!(
                        out,
                        "no terminal position after {DEFAULT_BUDGET} more firings"
                    )
                    .map_err(io)?;
                    show_state(&g, history.last().expect("non-empty"), out).map_err(io)?;
                    return Ok(EXIT_EXHAUSTED);
                }
            }
            _ => match cmd.parse::<usize>() {
                Ok(i) if i >= 1 && i <= g.n() => match fire(&g, &current, i) {
                    Ok(next) => history.push(next),
                    Err(_) => writeln!(out, "node {i} is not positive").map_err(io)?,
                },
                Ok(_) => writeln!(out, "no such node").map_err(io)?,
                Err(_) => writeln!(out, "commands: <node>, undo, auto, quit").map_err(io)?,
            },
        }
    }
}
