use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use amk::suite::{render_markdown, run_suite, Preset};
use amk::{write_dimacs, BenchConfig};
use amk_core::encode::build_formula;
use amk_core::oracle::{
    check_ac_by_up_seeded, find_counterexample, AcWitness, DEFAULT_AC_SEED, EXHAUSTIVE_LIMIT,
};
use amk_core::pigeonhole::generate_pigeonhole;
use amk_core::{count_report, CnfFormula, EncodingId, Outcome, PigeonholeInstance};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ENV: u8 = 3;

/// At-most-k CNF encodings: generate, measure, verify and benchmark.
#[derive(Parser)]
#[command(name = "amk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the DIMACS encoding of "at most K of variables 1..N".
    Encode {
        #[arg(long, short)]
        encoding: EncodingId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Print auxiliary-variable and clause counts over a range of N.
    Count {
        #[arg(long, short)]
        encoding: EncodingId,
        /// Inclusive range, `A..B`.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check encodings against the brute-force oracle for every N <= max-n.
    Verify {
        /// Encoding to check; all six when omitted.
        #[arg(long, short)]
        encoding: Option<EncodingId>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Delete one seeded-random clause from each formula before checking.
        #[arg(long)]
        mutate: bool,
    },
    /// Report whether unit propagation enforces arc consistency.
    Propcheck {
        #[arg(long, short)]
        encoding: EncodingId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Sampling seed used when N is too large for exhaustive checking.
        #[arg(long, default_value_t = DEFAULT_AC_SEED)]
        seed: u64,
    },
    /// Write a pigeonhole instance as DIMACS.
    Pigeonhole {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "pd")]
        amo: EncodingId,
        #[arg(long, default_value = "sc")]
        amk: EncodingId,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark suite against an external solver.
    Bench {
        /// key=value config file (solver, args, timeout, parallelism).
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum)]
        suite: Preset,
        /// Overrides the configured solver.
        #[arg(long)]
        solver: Option<PathBuf>,
        /// Overrides the configured timeout, in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the markdown table here instead of stdout.
        #[arg(long)]
        markdown: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end `{b}`"))?;
    if a == 0 || a > b {
        return Err(format!("range must satisfy 1 <= A <= B, got {a}..{b}"));
    }
    Ok((a, b))
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Encode {
            encoding,
            n,
            k,
            out,
        } => {
            let (f, outcome) = build_formula(encoding, n, k).map_err(|e| fail(EXIT_USAGE, e))?;
            if outcome == Outcome::TriviallyTrue && n > 1 {
                log::warn!("k={k} >= n={n}: constraint is trivially true, no clauses emitted");
            }
            emit_formula(&f, out.as_deref())?;
            Ok(0)
        }
        Command::Count {
            encoding,
            n_range: (lo, hi),
            step,
            k,
        } => {
            if step == 0 {
                return Err(fail(EXIT_USAGE, "--step must be positive"));
            }
            let mut out = io::stdout().lock();
            let w = |r: io::Result<()>| r.map_err(|e| fail(EXIT_ENV, e));
            w(writeln!(out, "n,aux_vars,clauses"))?;
            for n in (lo..=hi).step_by(step) {
                let r = count_report(encoding, n, k).map_err(|e| fail(EXIT_USAGE, e))?;
                w(writeln!(out, "{},{},{}", r.n, r.aux_vars, r.clauses))?;
            }
            Ok(0)
        }
        Command::Verify {
            encoding,
            max_n,
            seed,
            mutate,
        } => verify(encoding, max_n, seed, mutate),
        Command::Propcheck {
            encoding,
            n,
            k,
            seed,
        } => {
            let r = check_ac_by_up_seeded(encoding, n, k, seed).map_err(|e| fail(EXIT_USAGE, e))?;
            let scope = if r.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            };
            match &r.witness {
                None => println!("AC: yes ({} seeds, {scope})", r.seeds_tested),
                Some(AcWitness::Unforced { seed, input }) => println!(
                    "AC: no (seed {} leaves x{input} unforced; {} seeds, {scope})",
                    fmt_seed(seed),
                    r.seeds_tested
                ),
                Some(AcWitness::Conflict { seed }) => {
                    println!("AC: no (seed {} propagates to a conflict)", fmt_seed(seed));
                    return Ok(EXIT_CHECK_FAILED);
                }
            }
            Ok(0)
        }
        Command::Pigeonhole {
            p,
            h,
            k,
            amo,
            amk,
            out,
        } => {
            let inst =
                PigeonholeInstance::new(p, h, k, amo, amk).map_err(|e| fail(EXIT_USAGE, e))?;
            let f = generate_pigeonhole(&inst).map_err(|e| fail(EXIT_USAGE, e))?;
            emit_formula(&f, out.as_deref())?;
            Ok(0)
        }
        Command::Bench {
            config,
            suite,
            solver,
            timeout,
            csv,
            markdown,
        } => {
            let mut cfg = match config {
                Some(path) => BenchConfig::load(&path).map_err(|e| fail(EXIT_USAGE, e))?,
                None => BenchConfig::default(),
            };
            if let Some(s) = solver {
                cfg.solver = Some(s);
            }
            if let Some(t) = timeout {
                if !(t.is_finite() && t > 0.0) {
                    return Err(fail(EXIT_USAGE, "--timeout must be positive"));
                }
                cfg.timeout = Duration::from_secs_f64(t);
            }
            let solver_cfg = cfg.solver_config().map_err(|e| fail(EXIT_ENV, e))?;
            let instances = suite.instances();
            let io_err = |e: io::Error| fail(EXIT_ENV, e);
            let results = match &csv {
                Some(path) => run_suite(
                    &instances,
                    &solver_cfg,
                    cfg.parallelism,
                    File::create(path).map_err(io_err)?,
                ),
                None => run_suite(
                    &instances,
                    &solver_cfg,
                    cfg.parallelism,
                    io::stdout().lock(),
                ),
            }
            .map_err(io_err)?;
            let md = render_markdown(&results, solver_cfg.timeout);
            match &markdown {
                Some(path) => std::fs::write(path, md).map_err(io_err)?,
                None => {
                    let mut out = io::stdout().lock();
                    if csv.is_none() {
                        writeln!(out).map_err(io_err)?;
                    }
                    out.write_all(md.as_bytes()).map_err(io_err)?;
                }
            }
            for r in &results {
                if let Some(msg) = &r.message {
                    log::warn!("{} {}/{}: {msg}", r.label, r.amo, r.amk);
                }
            }
            let solver_failed = results.iter().any(|r| r.verdict == amk::Verdict::Error);
            Ok(if solver_failed { EXIT_ENV } else { 0 })
        }
    }
}

fn fmt_seed(seed: &[u32]) -> String {
    if seed.is_empty() {
        return "{}".into();
    }
    seed.iter()
        .map(|v| format!("x{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn emit_formula(f: &CnfFormula, out: Option<&Path>) -> Result<(), Failure> {
    let written = match out {
        Some(path) => File::create(path).and_then(|file| write_dimacs(f, file)),
        None => write_dimacs(f, io::stdout().lock()),
    };
    written.map_err(|e| fail(EXIT_ENV, e))
}

fn verify(
    encoding: Option<EncodingId>,
    max_n: usize,
    seed: u64,
    mutate: bool,
) -> Result<u8, Failure> {
    if max_n > EXHAUSTIVE_LIMIT {
        return Err(fail(
            EXIT_USAGE,
            format!("--max-n {max_n} exceeds the oracle limit of {EXHAUSTIVE_LIMIT}"),
        ));
    }
    let encodings = match encoding {
        Some(e) => vec![e],
        None => EncodingId::ALL.to_vec(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = io::stdout().lock();
    let mut failures = 0usize;
    let mut checked = 0usize;
    for e in encodings {
        for n in 1..=max_n {
            for k in e.sweep_bounds(n) {
                let (mut f, _) = build_formula(e, n, k).map_err(|err| fail(EXIT_USAGE, err))?;
                let mut note = String::new();
                if mutate && f.num_clauses() > 0 {
                    let drop = rng.random_range(0..f.num_clauses());
                    note = format!(" (clause {} deleted)", drop + 1);
                    f = f.without_clause(drop);
                }
                checked += 1;
                let cex = find_counterexample(&f, n, k).map_err(|err| fail(EXIT_USAGE, err))?;
                let line = match cex {
                    None => format!("{e} n={n} k={k}{note}: ok"),
                    Some(c) => {
                        failures += 1;
                        let bits: String = c
                            .inputs
                            .iter()
                            .map(|&b| if b { '1' } else { '0' })
                            .collect();
                        format!(
                            "{e} n={n} k={k}{note}: FAIL inputs x1..x{n}={bits} popcount={} formula {}",
                            c.popcount(),
                            if c.extendable { "satisfiable" } else { "unsatisfiable" }
                        )
                    }
                };
                writeln!(out, "{line}").map_err(|err| fail(EXIT_ENV, err))?;
            }
        }
    }
    writeln!(out, "checked {checked}, failed {failures}").map_err(|err| fail(EXIT_ENV, err))?;
    Ok(if failures == 0 { 0 } else { EXIT_CHECK_FAILED })
}
