use std::path::PathBuf;
use std::process::Command;

/// A DIMACS solver for tests: whatever `find_solver` sees, else the
/// python-sat front end shipped in `scripts/` when python-sat is importable.
pub fn test_solver() -> Option<PathBuf> {
    if let Some(p) = amk::find_solver() {
        return Some(p);
    }
    let script = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts/pysat-dimacs.py");
    let has_pysat = Command::new("python3")
        .args(["-c", "import pysat.solvers"])
        .status()
        .map(|s| s.success())
        .unwrap_or(false);
    (has_pysat && script.exists()).then_some(script)
}
