//! `egsim` command-line frontend: circuit simulation, canonical forms,
//! inner products, triplet classification, orbit listing, and the
//! randomized verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 file/parse error,
//! 3 verification mismatch, 4 guard violation.

mod circuit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use egsim::graph::Graph;
use egsim::state::ExtendedGraphState;
use egsim::verify::{self, RunMode};
use egsim::{triplets, PhaseScalar};
use num_complex::Complex64;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "egsim", version, about = "Exact stabilizer-state simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a circuit file from |0..0> and print the final state.
    Simulate {
        circuit: PathBuf,
        /// Write the final state to a file instead of stdout.
        #[arg(long)]
        state_out: Option<PathBuf>,
        /// Canonicalize the final state before output.
        #[arg(long)]
        canonical: bool,
        /// Also write a DOT rendering of the final state's graph.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Sample measurement branches with this seed instead of always
        /// taking the +1 branch.
        #[arg(long)]
        sample: Option<u64>,
    },
    /// Print the canonical form of a state file.
    Canon { state: PathBuf },
    /// Exact inner product of two state files.
    Inner { state1: PathBuf, state2: PathBuf },
    /// Classify the linear dependence of three state files.
    Triplet { state1: PathBuf, state2: PathBuf, state3: PathBuf },
    /// List the local-complementation orbit of a graph file.
    Orbit { graph: PathBuf },
    /// Run the randomized oracle verification suites.
    Verify {
        /// A single suite name (default: all suites).
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 250)]
        cases: usize,
        /// Run cases on one thread (the report is identical).
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Mismatch,
    Guard(String),
}

impl Failure {
    fn exit(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(1),
            Failure::Parse(_) => ExitCode::from(2),
            Failure::Mismatch => ExitCode::from(3),
            Failure::Guard(_) => ExitCode::from(4),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Parse(m) | Failure::Guard(m) => {
                    eprintln!("error: {m}");
                }
                Failure::Mismatch => {}
            }
            f.exit()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_state(path: &Path) -> Result<ExtendedGraphState, Failure> {
    ExtendedGraphState::from_state_file(&read(path)?)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

/// `2^(0)·w^0` style exact rendering (no `-0/2` for unit modulus).
fn format_exact(p: &PhaseScalar) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let pow = if p.half_exponent() == 0 {
        "2^(0)".to_string()
    } else {
        format!("2^(-{}/2)", p.half_exponent())
    };
    format!("{pow}·w^{}", p.omega_exponent())
}

fn format_real(x: f64) -> String {
    let mut s = format!("{:.6}", x);
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn format_complex(c: Complex64) -> String {
    let re = format_real(c.re);
    let im = format_real(c.im);
    if im == "0" {
        re
    } else if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Simulate { circuit, state_out, canonical, dot, sample } => {
            let program = circuit::parse_circuit(&read(&circuit)?)
                .map_err(|e| Failure::Parse(format!("{}: {e}", circuit.display())))?;
            let mut rng = sample.map(ChaCha8Rng::seed_from_u64);
            let out = circuit::execute(&program, rng.as_mut()).map_err(Failure::Parse)?;
            for m in &out.measurements {
                let p = match m.probability {
                    p if p == 0.0 => "0",
                    p if p == 1.0 => "1",
                    _ => "1/2",
                };
                println!("M {}: p(+1) = {p}, outcome {:+}", m.pauli, m.outcome);
            }
            let state = if canonical { out.state.to_canonical_form() } else { out.state };
            if let Some(path) = &dot {
                std::fs::write(path, state.to_dot())
                    .map_err(|e| Failure::Parse(format!("cannot write {}: {e}", path.display())))?;
            }
            let rendered = state.to_state_file();
            match state_out {
                Some(path) => std::fs::write(&path, rendered)
                    .map_err(|e| Failure::Parse(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{rendered}"),
            }
            Ok(())
        }
        Command::Canon { state } => {
            print!("{}", load_state(&state)?.to_canonical_form().to_state_file());
            Ok(())
        }
        Command::Inner { state1, state2 } => {
            let s1 = load_state(&state1)?;
            let s2 = load_state(&state2)?;
            let g = s1
                .inner_product(&s2)
                .map_err(|e| Failure::Parse(e.to_string()))?;
            println!("{} = {}", format_exact(&g), format_complex(g.to_complex()));
            Ok(())
        }
        Command::Triplet { state1, state2, state3 } => {
            let s1 = load_state(&state1)?;
            let s2 = load_state(&state2)?;
            let s3 = load_state(&state3)?;
            let analysis = triplets::classify_triplet(&s1, &s2, &s3)
                .map_err(|e| Failure::Parse(e.to_string()))?;
            match &analysis.class {
                triplets::TripletClass::Independent => println!("class: independent"),
                triplets::TripletClass::Parallel => println!("class: parallel"),
                triplets::TripletClass::PauliCase(p) => {
                    println!("class: pauli (P = {})", p.to_letter_string());
                }
                triplets::TripletClass::SCase(x) => {
                    println!("class: s-gate (frame qubit {})", x + 1);
                }
                triplets::TripletClass::CZCase(x, y) => {
                    println!("class: cz (frame qubits {}, {})", x + 1, y + 1);
                }
            }
            if let Some(c) = &analysis.coefficients {
                println!("dependence: s1 = c2*s2 + c3*s3");
                for (name, v) in [("c2", &c[0]), ("c3", &c[1])] {
                    println!("{name} = {v} = {}", format_complex(v.to_complex()));
                }
            }
            Ok(())
        }
        Command::Orbit { graph } => {
            let g = parse_graph_file(&read(&graph)?)
                .map_err(|e| Failure::Parse(format!("{}: {e}", graph.display())))?;
            const MAX_ORBIT_VERTICES: usize = 10;
            let orbit = g
                .lc_orbit(MAX_ORBIT_VERTICES)
                .map_err(|e| Failure::Guard(e.to_string()))?;
            println!("vertices {}", g.num_vertices());
            println!("orbit size {}", orbit.len());
            for member in &orbit {
                let edges: Vec<String> = member
                    .edges()
                    .iter()
                    .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
                    .collect();
                println!("{}", if edges.is_empty() { "-".into() } else { edges.join(",") });
            }
            Ok(())
        }
        Command::Verify { suite, seed, cases, sequential } => {
            let mode = if sequential { RunMode::Sequential } else { RunMode::Parallel };
            let reports = match &suite {
                Some(name) => match verify::run_suite(name, seed, cases, mode) {
                    Some(r) => vec![r],
                    None => {
                        return Err(Failure::Usage(format!(
                            "unknown suite `{name}`; available: {}",
                            verify::SUITE_NAMES.join(", ")
                        )))
                    }
                },
                None => verify::run_all(seed, cases, mode),
            };
            let mut failed = false;
            let mut out = String::new();
            for r in &reports {
                writeln!(
                    out,
                    "suite {}: {} cases, {} mismatches",
                    r.suite,
                    r.cases,
                    r.mismatches.len()
                )
                .unwrap();
                for m in &r.mismatches {
                    writeln!(out, "  {m}").unwrap();
                }
                failed |= !r.ok();
            }
            print!("{out}");
            if failed {
                Err(Failure::Mismatch)
            } else {
                Ok(())
            }
        }
    }
}

/// Graph file: optional comments, a `vertices n` line, then 1-indexed
/// edge lines `u v`.
fn parse_graph_file(text: &str) -> Result<Graph, String> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or("empty graph file")?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["vertices", n] => n.parse::<usize>().ok().filter(|&n| n >= 1),
        _ => None,
    }
    .ok_or("expected `vertices n` header")?;
    let rest: String = lines.map(|l| format!("{l}\n")).collect();
    Graph::from_edge_list(n, &rest).map_err(|e| e.to_string())
}
