//! Command-line front end: batch computation, state listings and
//! verification over files of diagram codes.

mod compute;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use altfloer::states::{canonical_state, ClockGraph};
use altfloer::verify::{verify, Limits, Outcome};
use altfloer::{enumerate_states, KauffmanState, PlanarDiagram, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use compute::Selection;
use input::{Common, Out, Record};

#[derive(Parser, Debug)]
#[command(
    name = "altfloer",
    version,
    about = "Kauffman states and Floer invariants of alternating knots and links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute invariants for every diagram in the input.
    Compute {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        select: Selection,
    },
    /// List Kauffman states with their doubled gradings.
    States {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        mode: StatesMode,
    },
    /// Run every cross-check and print a pass/fail table.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Largest crossing number for the brute-force state count.
        #[arg(long, default_value_t = Limits::default().brute_force)]
        brute_force_limit: usize,
        /// Largest crossing number for checks over all decorations.
        #[arg(long, default_value_t = Limits::default().exhaustive)]
        exhaustive_limit: usize,
    },
}

#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
struct StatesMode {
    /// Every state, one per line (the default).
    #[arg(long)]
    list: bool,
    /// Only the canonical state.
    #[arg(long)]
    canonical: bool,
    /// Size and connectivity of the transposition graph.
    #[arg(long)]
    clock: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Compute { common, .. }
        | Command::States { common, .. }
        | Command::Verify { common, .. } => common,
    };
    let text = match input::read_text(common) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("altfloer: cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let records = input::records(&text, common);
    let result = match &cli.command {
        Command::Compute { common, select } => run_compute(&records, common, select),
        Command::States { common, mode } => run_states(&records, common, mode),
        Command::Verify {
            common,
            brute_force_limit,
            exhaustive_limit,
        } => {
            let limits = Limits {
                brute_force: *brute_force_limit,
                exhaustive: *exhaustive_limit,
            };
            run_verify(&records, common, limits)
        }
    };
    match result {
        Ok(code) => code,
        // a closed stdout pipe is not an error worth reporting
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("altfloer: {e}");
            ExitCode::from(2)
        }
    }
}

fn exit_for(failures: usize, strict: bool) -> ExitCode {
    if failures > 0 && strict {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_compute(records: &[Record], common: &Common, select: &Selection) -> io::Result<ExitCode> {
    let results: Vec<std::result::Result<compute::Bundle, String>> = records
        .par_iter()
        .map(|r| match &r.diagram {
            Ok(d) => compute::compute(d, select).map_err(|e| e.to_string()),
            Err(e) => Err(e.to_string()),
        })
        .collect();
    let mut out = io::stdout().lock();
    let mut failures = 0;
    let mut csv = (common.out == Out::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    if let Some(w) = csv.as_mut() {
        if !records.is_empty() {
            w.write_record(compute::CSV_HEADER)
                .map_err(io::Error::other)?;
        }
    }
    for (r, res) in records.iter().zip(&results) {
        match res {
            Ok(b) => match (common.out, csv.as_mut()) {
                (Out::Csv, Some(w)) => {
                    let d = r.diagram.as_ref().expect("computed records parsed");
                    for row in compute::to_csv_rows(&r.name, d, b) {
                        w.write_record(&row).map_err(io::Error::other)?;
                    }
                }
                (Out::Json, _) => writeln!(out, "{}", compute::to_json(&r.name, b))?,
                _ => write!(out, "{}", compute::to_text(&r.name, b))?,
            },
            Err(e) => {
                failures += 1;
                eprintln!("{}: line {}: {e}", r.name, r.line);
                match (common.out, csv.as_mut()) {
                    (Out::Csv, Some(w)) => {
                        let mut row: [String; 9] = Default::default();
                        row[0] = r.name.clone();
                        row[8] = e.clone();
                        w.write_record(&row).map_err(io::Error::other)?;
                    }
                    (Out::Json, _) => writeln!(
                        out,
                        "{}",
                        json!({"name": r.name, "line": r.line, "error": e})
                    )?,
                    _ => writeln!(out, "{}\n  error       {e}", r.name)?,
                }
            }
        }
    }
    if let Some(w) = csv {
        out.write_all(
            &w.into_inner()
                .map_err(|e| io::Error::other(e.to_string()))?,
        )?;
    }
    Ok(exit_for(failures, common.strict))
}

enum Listing {
    States(Vec<KauffmanState>),
    Clock {
        nodes: usize,
        edges: usize,
        connected: bool,
    },
}

fn listing(d: &PlanarDiagram, mode: &StatesMode) -> Result<Listing> {
    if mode.canonical {
        Ok(Listing::States(vec![canonical_state(d)?]))
    } else if mode.clock {
        let g = ClockGraph::build(d);
        Ok(Listing::Clock {
            nodes: g.states.len(),
            edges: g.edges.len(),
            connected: g.is_connected(),
        })
    } else {
        Ok(Listing::States(enumerate_states(d)))
    }
}

fn run_states(records: &[Record], common: &Common, mode: &StatesMode) -> io::Result<ExitCode> {
    let results: Vec<std::result::Result<Listing, String>> = records
        .par_iter()
        .map(|r| match &r.diagram {
            Ok(d) => listing(d, mode).map_err(|e| e.to_string()),
            Err(e) => Err(e.to_string()),
        })
        .collect();
    let mut out = io::stdout().lock();
    let headers = records.len() > 1 && common.out == Out::Text;
    let mut failures = 0;
    if common.out == Out::Csv && !records.is_empty() {
        writeln!(out, "name,state,quadrants,two_s,two_m")?;
    }
    for (r, res) in records.iter().zip(results) {
        if headers {
            writeln!(out, "# {}", r.name)?;
        }
        let listing = match res {
            Ok(l) => l,
            Err(e) => {
                failures += 1;
                eprintln!("{}: line {}: {e}", r.name, r.line);
                match common.out {
                    Out::Json => writeln!(
                        out,
                        "{}",
                        json!({"name": r.name, "line": r.line, "error": e})
                    )?,
                    Out::Csv => writeln!(out, "{},,,,", csv_field(&r.name))?,
                    Out::Text => writeln!(out, "error: {e}")?,
                }
                continue;
            }
        };
        match listing {
            Listing::States(states) => {
                for (i, x) in states.iter().enumerate() {
                    let j = x.to_json();
                    match common.out {
                        Out::Json => writeln!(
                            out,
                            "{}",
                            json!({"name": r.name, "quadrants": j.quadrants, "two_s": j.two_s, "two_m": j.two_m})
                        )?,
                        Out::Csv => {
                            let q: Vec<String> = j.quadrants.iter().map(u8::to_string).collect();
                            writeln!(
                                out,
                                "{},{i},{},{},{}",
                                csv_field(&r.name),
                                q.join(" "),
                                j.two_s,
                                j.two_m
                            )?
                        }
                        Out::Text => {
                            let q: Vec<String> = j.quadrants.iter().map(u8::to_string).collect();
                            writeln!(out, "[{}]  2S={}  2M={}", q.join(","), j.two_s, j.two_m)?
                        }
                    }
                }
            }
            Listing::Clock {
                nodes,
                edges,
                connected,
            } => match common.out {
                Out::Json => writeln!(
                    out,
                    "{}",
                    json!({"name": r.name, "nodes": nodes, "edges": edges, "connected": connected})
                )?,
                Out::Csv => writeln!(out, "{},{nodes},{edges},{connected},", csv_field(&r.name))?,
                Out::Text => writeln!(out, "nodes {nodes}  edges {edges}  connected {connected}")?,
            },
        }
    }
    Ok(exit_for(failures, common.strict))
}

fn csv_field(s: &str) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_field(s).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 input")
}

fn run_verify(records: &[Record], common: &Common, limits: Limits) -> io::Result<ExitCode> {
    let results: Vec<_> = records
        .par_iter()
        .map(|r| r.diagram.as_ref().map(|d| verify(d, limits)))
        .collect();
    let mut out = io::stdout().lock();
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    let width = records
        .iter()
        .map(|r| r.name.chars().count())
        .max()
        .unwrap_or(0);
    for (r, res) in records.iter().zip(&results) {
        let rows: Vec<(&str, Outcome)> = match res {
            Ok(checks) => checks.iter().map(|c| (c.name, c.outcome.clone())).collect(),
            Err(e) => vec![("parse", Outcome::Fail(e.to_string()))],
        };
        for (check, outcome) in rows {
            match &outcome {
                Outcome::Pass => passed += 1,
                Outcome::Fail(_) => failed += 1,
                Outcome::Skipped(_) => skipped += 1,
            }
            match common.out {
                Out::Json => {
                    let (status, detail) = match &outcome {
                        Outcome::Pass => ("pass", None),
                        Outcome::Fail(m) => ("fail", Some(m)),
                        Outcome::Skipped(m) => ("skipped", Some(m)),
                    };
                    writeln!(
                        out,
                        "{}",
                        json!({"name": r.name, "check": check, "status": status, "detail": detail})
                    )?
                }
                Out::Csv => writeln!(
                    out,
                    "{},{},{}",
                    csv_field(&r.name),
                    csv_field(check),
                    csv_field(&outcome.to_string())
                )?,
                Out::Text => writeln!(out, "{:<width$}  {check:<24}  {outcome}", r.name)?,
            }
        }
    }
    if common.out == Out::Text && !records.is_empty() {
        writeln!(out, "{passed} passed, {failed} failed, {skipped} skipped")?;
    }
    Ok(if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
