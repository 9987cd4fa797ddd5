//! Std companion to `amk-core`: DIMACS files, an external SAT solver
//! harness, pigeonhole benchmark suites and the `amk` command line.

pub mod config;
pub mod dimacs_io;
pub mod solver;
pub mod suite;

pub use config::{BenchConfig, ConfigError};
pub use dimacs_io::{read_dimacs, read_dimacs_file, write_dimacs, write_dimacs_file, ReadError};
pub use solver::{find_solver, run_solver, SolveOutcome, SolverConfig, Verdict};
pub use suite::{render_markdown, run_cell, run_suite, BenchResult, Preset};
