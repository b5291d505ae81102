//! The `p2pack` command line.
//!
//! Exit codes: 0 success / YES, 1 NO or failed verification, 2 usage or
//! input error, 3 oracle refused the input size.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use p2pack_core::oracle::{max_packing_dp, min_total_edge_cover_bruteforce, DP_CAP, TEC_EDGE_CAP};
use p2pack_core::{kernelize, solve, Error as CoreError, Instance, KernelOutcome};

use crate::gen::{gen_gnp, gen_planted};
use crate::io::{parse_dimacs, write_dimacs, write_packing, write_result, write_trace};
use crate::verify::{corpus_from_spec, run_all};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

/// Environment variable overriding the oracle size cap (vertices for the
/// packing DP, edges for the total edge cover search).
pub const ORACLE_CAP_ENV: &str = "P2PACK_ORACLE_CAP";

#[derive(Parser, Debug)]
#[command(name = "p2pack", version, about = "Vertex-disjoint P2-packing solver")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide whether k disjoint P2s exist; prints the result and a certificate.
    Solve {
        #[arg(short)]
        k: usize,
        /// DIMACS input; stdin if absent.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Print the reduced instance in DIMACS with the trace as comments.
    Kernelize {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Exact maximum packing (or minimum total edge cover) for small graphs.
    Oracle {
        #[arg(long)]
        tec: bool,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Generate an instance in DIMACS.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run the property suite on a corpus: default, quick, or a directory.
    Verify {
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// CSV of solve times on G(n, 0.3) graphs with k = n / 3.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// k planted disjoint P2s plus random extra edges.
    Planted {
        k: usize,
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Erdős–Rényi G(n, p).
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(i32, String);

fn input_error(msg: impl ToString) -> Failure {
    Failure(EXIT_ERROR, msg.to_string())
}

/// Runs the CLI on `args` (without the program name) with the given stdin.
pub fn run_captured(args: &[&str], stdin: &[u8]) -> Output {
    run(args.iter().copied(), &mut &*stdin)
}

pub fn run<'a>(args: impl IntoIterator<Item = &'a str>, stdin: &mut dyn Read) -> Output {
    let mut out = Output {
        code: EXIT_OK,
        stdout: String::new(),
        stderr: String::new(),
    };
    let cli = match Cli::try_parse_from(std::iter::once("p2pack").chain(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                out.code = EXIT_ERROR;
                out.stderr = text;
            } else {
                out.stdout = text;
            }
            return out;
        }
    };
    match dispatch(cli.cmd, stdin, &mut out) {
        Ok(code) => out.code = code,
        Err(Failure(code, msg)) => {
            out.code = code;
            writeln!(out.stderr, "p2pack: {msg}").unwrap();
        }
    }
    out
}

fn read_graph(
    file: Option<PathBuf>,
    stdin: &mut dyn Read,
    out: &mut Output,
) -> Result<p2pack_core::Graph, Failure> {
    let text = match file {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(input_error)?;
            s
        }
    };
    let parsed = parse_dimacs(&text).map_err(input_error)?;
    for w in &parsed.warnings {
        writeln!(out.stderr, "warning: {w}").unwrap();
    }
    Ok(parsed.graph)
}

fn oracle_cap(default: usize) -> Result<usize, Failure> {
    match std::env::var(ORACLE_CAP_ENV) {
        Err(_) => Ok(default),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| input_error(format!("{ORACLE_CAP_ENV}={v} is not an integer"))),
    }
}

fn core_failure(e: CoreError) -> Failure {
    match e {
        CoreError::OracleRefused { .. } => Failure(EXIT_REFUSED, e.to_string()),
        _ => input_error(e),
    }
}

fn dispatch(cmd: Cmd, stdin: &mut dyn Read, out: &mut Output) -> Result<i32, Failure> {
    match cmd {
        Cmd::Solve { k, file } => {
            let g = read_graph(file, stdin, out)?;
            let r = solve(&Instance::new(g, k)).map_err(core_failure)?;
            out.stdout.push_str(&write_result(&r));
            Ok(if r.answer.is_yes() { EXIT_OK } else { EXIT_NO })
        }
        Cmd::Kernelize { k, file } => {
            let g = read_graph(file, stdin, out)?;
            let s = &mut out.stdout;
            match kernelize(&Instance::new(g, k)).map_err(core_failure)? {
                KernelOutcome::EarlyYes { certificate, trace } => {
                    writeln!(s, "c early_yes certificate_size {}", certificate.len()).unwrap();
                    comment(s, &write_trace(&trace));
                    comment(s, &write_packing(&certificate));
                    s.push_str("c k 0\np edge 0 0\n");
                }
                KernelOutcome::Reduced(kernel) => {
                    writeln!(s, "c k {}", kernel.instance.k).unwrap();
                    writeln!(s, "c packing_size {}", kernel.packing.len()).unwrap();
                    comment(s, &write_trace(&kernel.trace));
                    for (i, orig) in kernel.to_original.iter().enumerate() {
                        writeln!(s, "c map {} {}", i + 1, orig + 1).unwrap();
                    }
                    s.push_str(&write_dimacs(&kernel.instance.graph));
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Oracle { tec, file } => {
            let g = read_graph(file, stdin, out)?;
            if tec {
                let (size, edges) = min_total_edge_cover_bruteforce(&g, oracle_cap(TEC_EDGE_CAP)?)
                    .map_err(core_failure)?;
                writeln!(out.stdout, "min_total_edge_cover {size}").unwrap();
                for (u, v) in edges {
                    writeln!(out.stdout, "e {} {}", u + 1, v + 1).unwrap();
                }
            } else {
                let (size, witness) =
                    max_packing_dp(&g, oracle_cap(DP_CAP)?).map_err(core_failure)?;
                writeln!(out.stdout, "max_packing {size}").unwrap();
                out.stdout.push_str(&write_packing(&witness));
            }
            Ok(EXIT_OK)
        }
        Cmd::Gen { kind } => {
            let g = match kind {
                GenKind::Planted { k, extra, seed } => {
                    gen_planted(k, extra, seed).map_err(input_error)?.graph
                }
                GenKind::Gnp { n, p, seed } => gen_gnp(n, p, seed).map_err(input_error)?,
            };
            out.stdout.push_str(&write_dimacs(&g));
            Ok(EXIT_OK)
        }
        Cmd::Verify { corpus } => {
            let corpus = corpus_from_spec(&corpus).map_err(input_error)?;
            let reports = run_all(&corpus);
            writeln!(out.stdout, "corpus instances={}", corpus.len()).unwrap();
            for r in &reports {
                writeln!(out.stdout, "{r}").unwrap();
                for v in &r.violations {
                    writeln!(out.stdout, "  violation {}: {v}", r.id).unwrap();
                }
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_NO
            })
        }
        Cmd::Bench { sizes, seed } => {
            let s = &mut out.stdout;
            s.push_str("n,m,k,answer,micros,rule1,rule2,crowns,augmentation_rounds\n");
            for (i, &n) in sizes.iter().enumerate() {
                let g = gen_gnp(n, 0.3, seed + i as u64).map_err(input_error)?;
                let k = (n / 3).max(1);
                let m = g.m();
                let start = Instant::now();
                let r = solve(&Instance::new(g, k)).map_err(core_failure)?;
                let micros = start.elapsed().as_micros();
                let st = r.stats;
                writeln!(
                    s,
                    "{n},{m},{k},{},{micros},{},{},{},{}",
                    if r.answer.is_yes() { "YES" } else { "NO" },
                    st.rule1_applications,
                    st.rule2_applications,
                    st.crowns,
                    st.augmentation_rounds
                )
                .unwrap();
            }
            Ok(EXIT_OK)
        }
    }
}

fn comment(s: &mut String, lines: &str) {
    for line in lines.lines() {
        writeln!(s, "c {line}").unwrap();
    }
}

/// Entry point for the binary: real argv, stdin, stdout and stderr.
pub fn main_with_std() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = run(
        args.iter().map(String::as_str),
        &mut std::io::stdin().lock(),
    );
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
