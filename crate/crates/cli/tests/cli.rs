use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use detdio::{determinant, parse_matrix, BigInt, IntMat};
use tempfile::TempDir;

const EXAMPLE2: &str = "2 2 -3 4\n2 2 1 2\n";
const EXAMPLE3: &str = "# known block\n1 2 -3 4\n0 1 1 2\n";

fn detdio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detdio"))
        .args(args)
        .env_remove("DETDIO_MINOR_CAP")
        .output()
        .expect("failed to spawn detdio")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gd_of_example_three() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex3.mat", EXAMPLE3);
    let o = detdio(&["gd", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");

    let o = detdio(&["gd", s(&f), "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ltf 1\nminors 1\n");
}

#[test]
fn solvable_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex3.mat", EXAMPLE3);
    let o = detdio(&["solvable", s(&f), "-d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "solvable\n");

    let g = write(&dir, "ex2.mat", EXAMPLE2);
    let o = detdio(&["solvable", s(&g), "-d", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "unsolvable\n");
}

#[test]
fn solve_linear_unsolvable_names_the_gcd() {
    let o = detdio(&["solve-linear", "-a", "2 4", "-d", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unsolvable: gcd 2 does not divide 3"));
}

#[test]
fn solve_linear_prints_a_solution() {
    let o = detdio(&["solve-linear", "-a", "6 10 15", "-d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let x = parse_matrix(&stdout(&o)).unwrap();
    let value: BigInt = x.row(0).iter().zip([6, 10, 15]).map(|(v, a)| v * a).sum();
    assert_eq!(value, BigInt::from(1));
}

#[test]
fn complete_two_variable_form() {
    let o = detdio(&["complete", "-a", "3 5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5 -3\n");
    let o = detdio(&["complete", "-a", "0 0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn det_and_shape_errors() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "m.mat", "2 -3\n1 1\n");
    let o = detdio(&["det", s(&f)]);
    assert_eq!(stdout(&o), "5\n");
    let g = write(&dir, "w.mat", EXAMPLE2);
    let o = detdio(&["det", s(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not square"));
}

#[test]
fn ltf_emits_transform_that_verifies() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex2.mat", EXAMPLE2);
    let u = dir.path().join("u.mat");
    let uinv = dir.path().join("uinv.mat");
    let o = detdio(&[
        "ltf",
        s(&f),
        "--emit-transform",
        s(&u),
        "--emit-inverse",
        s(&uinv),
        "--trace",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 0 0 0\n5 2 0 0\n");
    let trace = stderr(&o);
    assert!(trace.lines().all(|l| l.starts_with("op kind=")));
    assert_eq!(trace.lines().next(), Some("op kind=addmul args=1,0,-1"));

    let l = write(&dir, "l.mat", &stdout(&o));
    let o = detdio(&["verify", s(&f), s(&u), "--ltf", s(&l)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS\n");

    let u_text = fs::read_to_string(&u).unwrap();
    let inv_text = fs::read_to_string(&uinv).unwrap();
    let product = detdio::multiply(
        &parse_matrix(&u_text).unwrap(),
        &parse_matrix(&inv_text).unwrap(),
    )
    .unwrap();
    assert_eq!(product, IntMat::identity(4));
}

#[test]
fn verify_paper_fixture_and_failure() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "ex2.mat", EXAMPLE2);
    let u = write(&dir, "u.mat", "-1 2 -5 -1\n0 0 0 1\n-1 0 2 0\n0 -1 4 0\n");
    let l = write(&dir, "l.mat", "1 0 0 0\n-3 2 0 0\n");
    let o = detdio(&["verify", s(&m), s(&u), "--ltf", s(&l)]);
    assert_eq!(stdout(&o), "PASS\n");
    let wrong = write(&dir, "wrong.mat", "1 0 0 0\n0 2 0 0\n");
    let o = detdio(&["verify", s(&m), s(&u), "--ltf", s(&wrong)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "FAIL\n");
}

#[test]
fn solve_output_passes_verify() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex3.mat", EXAMPLE3);
    for side in ["top", "bottom"] {
        let o = detdio(&["solve", s(&f), "-d", "2", "--orientation", side]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let out = stdout(&o);
        assert!(out.ends_with("# det = 2\n"), "{out}");
        let x = write(&dir, "x.mat", &out);
        let o = detdio(&["verify", s(&f), s(&x), "-d", "2", "--orientation", side]);
        assert_eq!(stdout(&o), "PASS\n");

        let known = parse_matrix(EXAMPLE3).unwrap();
        let unknown = parse_matrix(&out).unwrap();
        let full = match side {
            "top" => known.vstack(&unknown).unwrap(),
            _ => unknown.vstack(&known).unwrap(),
        };
        assert_eq!(determinant(&full).unwrap(), BigInt::from(2));
    }
}

#[test]
fn solve_unsolvable_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex2.mat", EXAMPLE2);
    let o = detdio(&["solve", s(&f), "-d", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("unsolvable"));
}

#[test]
fn negative_target_is_normalized() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex3.mat", EXAMPLE3);
    let o = detdio(&["solve", s(&f), "-d", "-2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# note: d = -2 normalized to 2\n"));
    assert!(out.ends_with("# det = 2\n"));
}

#[test]
fn empty_known_block_needs_cols() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "empty.mat", "# nothing known\n");
    let o = detdio(&["solve", s(&f), "-d", "5", "--cols", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 0 0\n0 1 0\n0 0 5\n# det = 5\n");
    let o = detdio(&["solve", s(&f), "-d", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_report_position() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.mat", "1 2\n3 x\n");
    let o = detdio(&["gd", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 3"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(detdio(&["gd"]).status.code(), Some(2));
    assert_eq!(detdio(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        detdio(&["complete", "-a", "3 5", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        detdio(&["gd", "/nonexistent/file.mat"]).status.code(),
        Some(2)
    );
}

#[test]
fn rank_deficient_input() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "dep.mat", "1 2 3\n2 4 6\n");
    let o = detdio(&["gd", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    let o = detdio(&["solvable", s(&f), "-d", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn minor_cap_from_environment() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex3.mat", EXAMPLE3);
    let o = Command::new(env!("CARGO_BIN_EXE_detdio"))
        .args(["gd", s(&f), "--method", "minors"])
        .env("DETDIO_MINOR_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap is 5"));
    let o = Command::new(env!("CARGO_BIN_EXE_detdio"))
        .args(["gd", s(&f), "--method", "minors"])
        .env("DETDIO_MINOR_CAP", "6")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn json_output_uses_strings() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex2.mat", EXAMPLE2);
    let o = detdio(&["--json", "ltf", s(&f)]);
    assert_eq!(
        stdout(&o),
        "[[\"1\",\"0\",\"0\",\"0\"],[\"5\",\"2\",\"0\",\"0\"]]\n"
    );
    let o = detdio(&["gd", s(&f), "--json"]);
    assert_eq!(stdout(&o), "\"2\"\n");
}

#[test]
fn output_is_deterministic_and_reparses() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex3.mat", EXAMPLE3);
    for args in [
        vec!["ltf", s(&f)],
        vec!["solve", s(&f), "-d", "6"],
        vec!["complete", "-a", "6 10 15"],
    ] {
        let a = detdio(&args);
        let b = detdio(&args);
        assert_eq!(a.stdout, b.stdout);
        assert!(parse_matrix(&stdout(&a)).is_ok());
    }
}

#[test]
fn in_process_runner() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = detdio_cli::run_with_env(
        ["detdio", "solve-linear", "-a", "3 5", "-d", "1"],
        None,
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let x = parse_matrix(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(
        BigInt::from(3) * &x[(0, 0)] + BigInt::from(5) * &x[(0, 1)],
        BigInt::from(1)
    );
}
