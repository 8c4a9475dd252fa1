use std::process::{Command, Output};

fn exactcomb(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_exactcomb"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn logan_window_matches_golden_file() {
    let o = exactcomb(&["table", "--kind", "cycle", "--nmin", "-4", "--nmax", "4", "--kmin", "-4", "--kmax", "4"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/logan_cycle.tsv"));
}

#[test]
fn json_table_is_exact_strings() {
    let o = exactcomb(
        &["table", "--kind", "subset", "--nmin", "0", "--nmax", "3", "--kmin", "0", "--kmax", "3", "--format", "json"],
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "subset");
    assert_eq!(v["entries"][3], serde_json::json!(["0", "1", "3", "1"]));
}

#[test]
fn table_cap_exits_3() {
    let o = exactcomb(
        &["table", "--kind", "subset", "--nmin", "0", "--nmax", "9", "--kmin", "0", "--kmax", "9"],
        &[("EXACTCOMB_TABLE_CAP", "10")],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("cap of 10"));
}

#[test]
fn oracle_cap_exits_3() {
    let o = exactcomb(&["oracle", "--what", "perms", "--params", "n=12", "k=3"], &[]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_error_reports_position_and_expectations() {
    let o = exactcomb(&["eval", "sum(k,"], &[]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 1, column 7"), "{err}");
    assert!(err.contains("`[`"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn eval_with_bindings_and_strong_zero() {
    let o = exactcomb(&["eval", "sum(k, [0<=k<=n], k*(k-1)*(n-k))", "--bind", "n=5"], &[]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "30\n"));
    let o = exactcomb(&["eval", "[k != 0]/k", "--bind", "k=0", "--canonical"], &[]);
    assert_eq!(stdout(&o), "[k != 0] / k\n");
    let o = exactcomb(&["eval", "[k != 0]/k", "--bind", "k=0"], &[]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0\n"));
    let o = exactcomb(&["eval", "1/[k = 0]", "--bind", "k=1"], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("division by zero"));
}

#[test]
fn usage_errors_exit_2_and_help_exits_0() {
    assert_eq!(exactcomb(&["bogus"], &[]).status.code(), Some(2));
    assert_eq!(exactcomb(&["table", "--kind", "nope"], &[]).status.code(), Some(2));
    let help = exactcomb(&["--help"], &[]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("Usage"));
}

#[test]
fn convert_and_oracle_outputs() {
    let o = exactcomb(&["convert", "--poly", "0,0,0,1", "--from", "power", "--to", "falling"], &[]);
    assert_eq!(stdout(&o), "0,1,3,1\n");
    let o = exactcomb(&["oracle", "--what", "omega", "--params", "fence=2", "n=4", "strict=true"], &[]);
    assert_eq!(stdout(&o), "11\n");
}

#[test]
fn single_identity_verification() {
    let o = exactcomb(&["verify", "--identity", "1.9", "--params", "A=1,2", "B=2,3", "f=1,1"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds = true"));
    let o = exactcomb(&["verify", "--identity", "9.99"], &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_per_seed() {
    let a = exactcomb(&["verify", "--suite", "stirling", "--seed", "7"], &[]);
    let b = exactcomb(&["verify", "--suite", "stirling", "--seed", "7"], &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("seed 7: 6 checks, 0 failed\n"));
}

#[test]
fn reciprocal_series_reports_exact_identity() {
    let o = exactcomb(&["series", "--id", "2.14", "--params", "z=1/2", "n=10"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("partial_plus_remainder_equals_1/z: true"));
}

#[test]
fn real_arguments_accept_rationals() {
    let o = exactcomb(
        &["asym", "--alpha", "1/2", "--z", "100", "--terms", "5", "--kind", "rising", "--compare-gamma"],
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("relative_error_exact: "), "{out}");
    let o = exactcomb(&["series", "--id", "2.27", "--params", "z=10", "alpha=1/2"], &[]);
    assert!(stdout(&o).contains("converged: true"));
    assert_eq!(
        exactcomb(&["asym", "--alpha", "abc", "--z", "1", "--terms", "1", "--kind", "rising"], &[]).status.code(),
        Some(2)
    );
}
