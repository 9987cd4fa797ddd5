//! `key=value` benchmark configuration.
//!
//! ```text
//! # comments (also trailing ones) and blank lines are ignored
//! solver = /usr/local/bin/kissat
//! args = -q
//! timeout = 60
//! parallelism = 1
//! ```

use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::solver::{find_solver, SolverConfig};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no SAT solver configured and none of the known solvers is on PATH (set AMK_SOLVER or `solver=` in the config)")]
    NoSolver,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub solver: Option<PathBuf>,
    pub args: Vec<String>,
    pub timeout: Duration,
    pub parallelism: usize,
    pub sat_exit: i32,
    pub unsat_exit: i32,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            solver: None,
            args: Vec::new(),
            timeout: Duration::from_secs(1200),
            parallelism: 1,
            sat_exit: 10,
            unsat_exit: 20,
        }
    }
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = BenchConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError::Syntax {
                line: idx + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "solver" => cfg.solver = Some(PathBuf::from(value)),
                "args" => cfg.args = value.split_whitespace().map(String::from).collect(),
                "timeout" => {
                    let secs: f64 = value
                        .parse()
                        .ok()
                        .filter(|s: &f64| s.is_finite() && *s > 0.0)
                        .ok_or_else(|| {
                            err(format!("timeout must be a positive number, got `{value}`"))
                        })?;
                    cfg.timeout = Duration::from_secs_f64(secs);
                }
                "parallelism" => {
                    cfg.parallelism =
                        value
                            .parse()
                            .ok()
                            .filter(|&p: &usize| p >= 1)
                            .ok_or_else(|| {
                                err(format!("parallelism must be at least 1, got `{value}`"))
                            })?;
                }
                "sat_exit" | "unsat_exit" => {
                    let code: i32 = value
                        .parse()
                        .map_err(|_| err(format!("{key} must be an integer, got `{value}`")))?;
                    if key == "sat_exit" {
                        cfg.sat_exit = code;
                    } else {
                        cfg.unsat_exit = code;
                    }
                }
                _ => return Err(err(format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Solver settings, falling back to [`find_solver`] when no solver is set.
    pub fn solver_config(&self) -> Result<SolverConfig, ConfigError> {
        let executable = self
            .solver
            .clone()
            .or_else(find_solver)
            .ok_or(ConfigError::NoSolver)?;
        Ok(SolverConfig {
            executable,
            args: self.args.clone(),
            timeout: self.timeout,
            sat_exit: self.sat_exit,
            unsat_exit: self.unsat_exit,
        })
    }
}
