use std::process::{Command, Output};

use amk_core::dimacs::parse_dimacs;

fn amk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amk"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn encode_writes_parseable_dimacs() {
    let o = amk(&["encode", "--encoding", "sc", "--n", "4", "--k", "2"]);
    assert!(o.status.success());
    let f = parse_dimacs(&stdout(&o)).unwrap();
    assert_eq!((f.num_vars(), f.num_clauses()), (10, 12));
    assert!(f.comments()[0].contains("encoding=sc n=4 k=2"));
}

#[test]
fn unsupported_bound_is_a_usage_error() {
    let o = amk(&["encode", "-e", "bs", "--n", "5", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k=1 only"));
}

#[test]
fn count_prints_one_row_per_n() {
    let o = amk(&["count", "-e", "pd", "--n-range", "8..10", "--k", "1"]);
    assert!(o.status.success());
    let rows: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(rows.len(), 4, "{rows:?}");
    assert!(rows[2].contains("24"), "{rows:?}");
}

#[test]
fn verify_passes_and_mutation_is_caught() {
    let ok = amk(&["verify", "-e", "sc", "--max-n", "6"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = amk(&[
        "verify", "-e", "sc", "--max-n", "6", "--mutate", "--seed", "3",
    ]);
    assert_eq!(bad.status.code(), Some(1), "{}", stdout(&bad));
    assert_eq!(amk(&["verify", "--max-n", "13"]).status.code(), Some(2));
}

#[test]
fn propcheck_distinguishes_sc_and_pc() {
    let sc = amk(&["propcheck", "-e", "sc", "--n", "5", "--k", "2"]);
    assert_eq!(sc.status.code(), Some(0));
    assert!(stdout(&sc).starts_with("AC: yes"));
    // lacking AC is reported, not treated as a failure
    let pc = amk(&["propcheck", "-e", "pc", "--n", "4", "--k", "2"]);
    assert_eq!(pc.status.code(), Some(0));
    assert!(stdout(&pc).starts_with("AC: no"));
}

#[test]
fn pigeonhole_writes_expected_size() {
    let o = amk(&[
        "pigeonhole",
        "--p",
        "3",
        "--h",
        "2",
        "--k",
        "1",
        "--amo",
        "pw",
        "--amk",
        "pw",
    ]);
    assert!(o.status.success());
    let f = parse_dimacs(&stdout(&o)).unwrap();
    // 3 ALO + 3 row AMOs of 1 clause + 2 column AMOs of 3 clauses
    assert_eq!((f.num_vars(), f.num_clauses()), (6, 12));
}

#[test]
fn bench_without_solver_is_an_environment_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_amk"))
        .args(["bench", "--suite", "amo-small"])
        .env("PATH", "")
        .env_remove("AMK_SOLVER")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
