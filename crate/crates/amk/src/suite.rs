//! Pigeonhole benchmark suites: one solver run per (instance, encoding)
//! cell, streamed as CSV and summarized as a markdown table.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use amk_core::pigeonhole::generate_pigeonhole;
use amk_core::{EncodingId, PigeonholeInstance};

use crate::solver::{run_solver, SolverConfig, Verdict};

pub const CSV_HEADER: [&str; 9] = [
    "instance", "amo", "amk", "verdict", "encode_s", "solve_s", "total_s", "vars", "clauses",
];

#[derive(Debug, Clone)]
pub struct BenchResult {
    pub label: String,
    pub amo: EncodingId,
    pub amk: EncodingId,
    pub verdict: Verdict,
    pub encode: Duration,
    pub solve: Duration,
    pub vars: u32,
    pub clauses: usize,
    /// `verify_model` on the solver's model, when it printed one.
    pub model_verified: Option<bool>,
    pub message: Option<String>,
}

impl BenchResult {
    pub fn total(&self) -> Duration {
        self.encode + self.solve
    }

    fn csv_record(&self) -> [String; 9] {
        [
            self.label.clone(),
            self.amo.to_string(),
            self.amk.to_string(),
            self.verdict.to_string(),
            format!("{:.3}", self.encode.as_secs_f64()),
            format!("{:.3}", self.solve.as_secs_f64()),
            format!("{:.3}", self.total().as_secs_f64()),
            self.vars.to_string(),
            self.clauses.to_string(),
        ]
    }
}

/// Generates the instance, solves it and checks any model returned.
pub fn run_cell(inst: &PigeonholeInstance, cfg: &SolverConfig) -> BenchResult {
    let start = Instant::now();
    let generated = generate_pigeonhole(inst);
    let encode = start.elapsed();
    let mut result = BenchResult {
        label: inst.label(),
        amo: inst.amo,
        amk: inst.amk,
        verdict: Verdict::Error,
        encode,
        solve: Duration::ZERO,
        vars: 0,
        clauses: 0,
        model_verified: None,
        message: None,
    };
    let f = match generated {
        Ok(f) => f,
        Err(e) => {
            result.message = Some(e.to_string());
            return result;
        }
    };
    result.vars = f.num_vars();
    result.clauses = f.num_clauses();
    let out = run_solver(&f, cfg);
    result.verdict = out.verdict;
    result.solve = out.wall;
    result.message = out.message;
    result.model_verified = out.model.map(|m| inst.verify_model(&m));
    result
}

/// Runs every cell, writing a CSV row to `csv_out` as each finishes. Rows
/// arrive in completion order; the returned results are in input order.
pub fn run_suite<W: Write>(
    instances: &[PigeonholeInstance],
    cfg: &SolverConfig,
    parallelism: usize,
    csv_out: W,
) -> io::Result<Vec<BenchResult>> {
    let mut csv = csv::Writer::from_writer(csv_out);
    csv.write_record(CSV_HEADER)?;
    csv.flush()?;

    let mut results: Vec<Option<BenchResult>> = vec![None; instances.len()];
    let next = AtomicUsize::new(0);
    let workers = parallelism.clamp(1, instances.len().max(1));
    std::thread::scope(|scope| -> io::Result<()> {
        let (tx, rx) = mpsc::channel();
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(inst) = instances.get(i) else { break };
                log::info!("running {} amo={} amk={}", inst.label(), inst.amo, inst.amk);
                if tx.send((i, run_cell(inst, cfg))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (i, r) in rx {
            csv.write_record(r.csv_record())?;
            csv.flush()?;
            results[i] = Some(r);
        }
        Ok(())
    })?;
    Ok(results
        .into_iter()
        .map(|r| r.expect("every cell ran"))
        .collect())
}

fn column_name(r: &BenchResult, uniform_amo: bool) -> String {
    if uniform_amo || r.amo == r.amk {
        r.amk.name().to_uppercase()
    } else {
        format!(
            "{}/{}",
            r.amo.name().to_uppercase(),
            r.amk.name().to_uppercase()
        )
    }
}

/// Markdown table with one row per instance and one column per encoding.
/// Totals are in seconds; timeouts read `>T` and failures `ERR`.
pub fn render_markdown(results: &[BenchResult], timeout: Duration) -> String {
    let uniform_amo =
        results.windows(2).all(|w| w[0].amo == w[1].amo) && results.iter().any(|r| r.amo != r.amk);
    let mut rows: Vec<&str> = Vec::new();
    let mut cols: Vec<String> = Vec::new();
    let mut cells: HashMap<(&str, String), String> = HashMap::new();
    for r in results {
        let col = column_name(r, uniform_amo);
        if !rows.contains(&r.label.as_str()) {
            rows.push(&r.label);
        }
        if !cols.contains(&col) {
            cols.push(col.clone());
        }
        let cell = match r.verdict {
            Verdict::Timeout => format!(">{}", fmt_secs(timeout)),
            Verdict::Error => "ERR".to_string(),
            Verdict::Sat | Verdict::Unsat => format!("{:.2}", r.total().as_secs_f64()),
        };
        cells.insert((&r.label, col), cell);
    }

    let mut md = String::from("| P-H-K |");
    for c in &cols {
        let _ = write!(md, " {c} |");
    }
    md.push_str("\n|---|");
    md.push_str(&"---:|".repeat(cols.len()));
    md.push('\n');
    for row in rows {
        let _ = write!(md, "| {row} |");
        for c in &cols {
            let cell = cells.get(&(row, c.clone())).map_or("", String::as_str);
            let _ = write!(md, " {cell} |");
        }
        md.push('\n');
    }
    md
}

fn fmt_secs(d: Duration) -> String {
    let s = d.as_secs_f64();
    if s.fract() == 0.0 {
        format!("{s:.0}")
    } else {
        format!("{s}")
    }
}

/// Benchmark row sets: an at-most-one family (`K = 1`) and an at-most-k
/// family, each split into desk-scale and large parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// At-most-one, small unsatisfiable rows.
    AmoSmall,
    /// At-most-one, remaining rows.
    AmoLarge,
    /// At-most-k with PD rows, desk-scale rows.
    AmkSmall,
    /// At-most-k with PD rows, remaining rows.
    AmkLarge,
}

const AMO_ENCODINGS: [EncodingId; 4] = [
    EncodingId::Bisect,
    EncodingId::ParallelCounter,
    EncodingId::Product,
    EncodingId::SequentialCounter,
];

const AMK_ENCODINGS: [EncodingId; 3] = [
    EncodingId::BinaryAdder,
    EncodingId::ParallelCounter,
    EncodingId::SequentialCounter,
];

impl Preset {
    pub fn rows(self) -> &'static [(usize, usize, usize)] {
        match self {
            Preset::AmoSmall => &[(12, 11, 1), (13, 12, 1), (14, 13, 1)],
            Preset::AmoLarge => &[
                (15, 14, 1),
                (16, 15, 1),
                (100, 100, 1),
                (200, 200, 1),
                (300, 300, 1),
                (400, 400, 1),
                (500, 500, 1),
            ],
            Preset::AmkSmall => &[(21, 5, 4), (26, 5, 5)],
            Preset::AmkLarge => &[
                (19, 9, 2),
                (22, 7, 3),
                (25, 6, 4),
                (100, 20, 5),
                (200, 40, 5),
                (300, 60, 5),
                (400, 80, 5),
                (500, 100, 5),
            ],
        }
    }

    /// Cells in row-major order. The at-most-one presets use the encoding
    /// under test for both constraint families; the at-most-k presets always
    /// use PD for the rows.
    pub fn instances(self) -> Vec<PigeonholeInstance> {
        let amo_family = matches!(self, Preset::AmoSmall | Preset::AmoLarge);
        let mut out = Vec::new();
        for &(p, h, k) in self.rows() {
            if amo_family {
                for e in AMO_ENCODINGS {
                    out.push(
                        PigeonholeInstance::new(p, h, k, e, e).expect("preset rows are valid"),
                    );
                }
            } else {
                for e in AMK_ENCODINGS {
                    out.push(
                        PigeonholeInstance::new(p, h, k, EncodingId::Product, e)
                            .expect("preset rows are valid"),
                    );
                }
            }
        }
        out
    }
}
