//! Runs an external DIMACS solver on a formula.
//!
//! The formula goes to a temporary file passed as the last argument. The
//! verdict comes from the exit code (10 SAT, 20 UNSAT by default) and, when
//! the code is anything else, from an `s SATISFIABLE` / `s UNSATISFIABLE`
//! line on stdout.

use std::fmt;
use std::io::{Read, Seek, SeekFrom};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use amk_core::{Assignment, CnfFormula, Lit};
use wait_timeout::ChildExt;

use crate::dimacs_io::write_dimacs;

/// Executable names tried, in order, when no solver is configured.
pub const KNOWN_SOLVERS: &[&str] = &[
    "kissat",
    "cadical",
    "cryptominisat5",
    "glucose",
    "minisat",
    "lingeling",
    "varisat",
    "splr",
    "picosat",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Sat,
    Unsat,
    Timeout,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Sat => "SAT",
            Verdict::Unsat => "UNSAT",
            Verdict::Timeout => "TIMEOUT",
            Verdict::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub executable: PathBuf,
    pub args: Vec<String>,
    pub timeout: Duration,
    pub sat_exit: i32,
    pub unsat_exit: i32,
}

impl SolverConfig {
    pub fn new(executable: impl Into<PathBuf>, timeout: Duration) -> Self {
        SolverConfig {
            executable: executable.into(),
            args: Vec::new(),
            timeout,
            sat_exit: 10,
            unsat_exit: 20,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    /// Wall time of the solver process.
    pub wall: Duration,
    /// Model from `v` lines, when the solver printed one for a SAT verdict.
    pub model: Option<Assignment>,
    pub message: Option<String>,
}

impl SolveOutcome {
    fn error(wall: Duration, message: impl Into<String>) -> Self {
        SolveOutcome {
            verdict: Verdict::Error,
            wall,
            model: None,
            message: Some(message.into()),
        }
    }
}

/// First solver found: `$AMK_SOLVER`, then [`KNOWN_SOLVERS`] on `$PATH`.
pub fn find_solver() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("AMK_SOLVER").filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    KNOWN_SOLVERS.iter().find_map(|name| which(name))
}

fn which(name: &str) -> Option<PathBuf> {
    let path = std::env::var_os("PATH")?;
    std::env::split_paths(&path)
        .map(|dir| dir.join(name))
        .find(|p| is_executable(p))
}

fn is_executable(p: &Path) -> bool {
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        p.metadata()
            .map(|m| m.is_file() && m.permissions().mode() & 0o111 != 0)
            .unwrap_or(false)
    }
    #[cfg(not(unix))]
    {
        p.is_file()
    }
}

pub fn run_solver(f: &CnfFormula, cfg: &SolverConfig) -> SolveOutcome {
    let start = Instant::now();
    let input = match tempfile::Builder::new().suffix(".cnf").tempfile() {
        Ok(t) => t,
        Err(e) => return SolveOutcome::error(start.elapsed(), format!("temp file: {e}")),
    };
    if let Err(e) = write_dimacs(f, input.as_file()) {
        return SolveOutcome::error(start.elapsed(), format!("writing DIMACS: {e}"));
    }
    let mut stdout = match tempfile::tempfile() {
        Ok(t) => t,
        Err(e) => return SolveOutcome::error(start.elapsed(), format!("temp file: {e}")),
    };
    let captured = match stdout.try_clone() {
        Ok(t) => t,
        Err(e) => return SolveOutcome::error(start.elapsed(), format!("temp file: {e}")),
    };

    let start = Instant::now();
    let spawned = Command::new(&cfg.executable)
        .args(&cfg.args)
        .arg(input.path())
        .stdin(Stdio::null())
        .stdout(Stdio::from(captured))
        .stderr(Stdio::null())
        .spawn();
    let mut child = match spawned {
        Ok(c) => c,
        Err(e) => {
            return SolveOutcome::error(
                start.elapsed(),
                format!("cannot run {}: {e}", cfg.executable.display()),
            )
        }
    };
    let status = match child.wait_timeout(cfg.timeout) {
        Ok(Some(status)) => status,
        Ok(None) => {
            let _ = child.kill();
            let _ = child.wait();
            return SolveOutcome {
                verdict: Verdict::Timeout,
                wall: start.elapsed(),
                model: None,
                message: None,
            };
        }
        Err(e) => return SolveOutcome::error(start.elapsed(), format!("waiting for solver: {e}")),
    };
    let wall = start.elapsed();

    let mut out = String::new();
    if let Err(e) = stdout
        .seek(SeekFrom::Start(0))
        .and_then(|_| stdout.read_to_string(&mut out))
    {
        return SolveOutcome::error(wall, format!("reading solver output: {e}"));
    }

    let verdict = match status.code() {
        Some(c) if c == cfg.sat_exit => Verdict::Sat,
        Some(c) if c == cfg.unsat_exit => Verdict::Unsat,
        code => match status_line(&out) {
            Some(v) => v,
            None => {
                return SolveOutcome::error(
                    wall,
                    format!("unrecognized solver result (exit {code:?})"),
                )
            }
        },
    };
    let model = if verdict == Verdict::Sat {
        match parse_model(&out, f.num_vars()) {
            Ok(m) => m,
            Err(msg) => return SolveOutcome::error(wall, msg),
        }
    } else {
        None
    };
    SolveOutcome {
        verdict,
        wall,
        model,
        message: None,
    }
}

fn status_line(out: &str) -> Option<Verdict> {
    out.lines().find_map(|l| match l.trim() {
        "s SATISFIABLE" => Some(Verdict::Sat),
        "s UNSATISFIABLE" => Some(Verdict::Unsat),
        _ => None,
    })
}

/// Collects `v` lines into an assignment; `Ok(None)` if there are none.
fn parse_model(out: &str, num_vars: u32) -> Result<Option<Assignment>, String> {
    let mut model = Assignment::new(num_vars);
    let mut any = false;
    for line in out.lines() {
        let Some(rest) = line
            .strip_prefix("v ")
            .or_else(|| (line.trim() == "v").then_some(""))
        else {
            continue;
        };
        any = true;
        for tok in rest.split_whitespace() {
            let v: i32 = tok
                .parse()
                .map_err(|_| format!("bad model literal `{tok}`"))?;
            if v == 0 {
                continue;
            }
            let lit = Lit::from_dimacs(v).ok_or_else(|| format!("bad model literal `{tok}`"))?;
            if lit.var().id() > num_vars {
                return Err(format!("model literal {v} out of range"));
            }
            if !model.assign(lit) {
                return Err(format!("model assigns variable {} twice", lit.var()));
            }
        }
    }
    Ok(any.then_some(model))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_lines() {
        assert_eq!(
            status_line("c hi\ns SATISFIABLE\nv 1 0\n"),
            Some(Verdict::Sat)
        );
        assert_eq!(status_line("s UNSATISFIABLE\n"), Some(Verdict::Unsat));
        assert_eq!(status_line("s UNKNOWN\n"), None);
    }

    #[test]
    fn models() {
        let m = parse_model("s SATISFIABLE\nv 1 -2\nv 3 0\n", 3)
            .unwrap()
            .unwrap();
        assert_eq!(
            m.true_lits().map(|l| l.to_dimacs()).collect::<Vec<_>>(),
            vec![1, -2, 3]
        );
        assert!(parse_model("s SATISFIABLE\n", 3).unwrap().is_none());
        assert!(parse_model("v 4 0\n", 3).is_err());
        assert!(parse_model("v 1 -1 0\n", 3).is_err());
    }

    #[test]
    fn missing_executable_is_an_error_verdict() {
        let f = CnfFormula::new(1, vec![], vec![]).unwrap();
        let cfg = SolverConfig::new("/nonexistent/solver", Duration::from_secs(1));
        let out = run_solver(&f, &cfg);
        assert_eq!(out.verdict, Verdict::Error);
        assert!(out.message.unwrap().contains("cannot run"));
    }
}
