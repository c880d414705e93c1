use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dewrithe")).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dewrithe"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Runs `args`, expects success, and returns stdout.
fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn assert_fails(args: &[&str], code: i32) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(code), "{args:?}: {}{}", stdout(&o), stderr(&o));
    let err = stderr(&o);
    assert_eq!(err.trim_end().lines().count(), 1, "diagnostic is one line: {err:?}");
    assert!(stdout(&o).is_empty());
}

#[test]
fn braid_verbs() {
    assert_eq!(ok(&["braid", "eq", "B3: 1 2 1", "B3: 2 1 2"]), "equal\n");
    assert_eq!(ok(&["braid", "eq", "B3: 1 2", "B3: 2 1"]), "not equal\n");
    assert_eq!(ok(&["braid", "writhe", "B3: 1 2 -1"]), "1\n");
    assert_eq!(ok(&["braid", "perm", "B3: 1 2"]), "[3 1 2]\n");
    assert_eq!(ok(&["braid", "tensor", "B2: 1", "B2: -1"]), "B4: 1 -3\n");
    assert_eq!(ok(&["braid", "cnm", "2", "1"]), "B3: 1 2\n");
    assert_eq!(ok(&["braid", "conjcheck", "B3: 1 -2"]), "holds\n");
    // σ₁σ₂σ₁ is the half twist on three strands
    assert_eq!(ok(&["braid", "nf", "B3: 2 1 2"]), "Δ^1\n");
    assert_eq!(ok(&["braid", "nf", "B3: 1 -1"]), "Δ^0\n");
}

#[test]
fn hexagon_table_is_all_ok() {
    let out = ok(&["hexagon", "--max", "5"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("p q r diagram pathA pathB ok"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(' ').collect()).collect();
    assert_eq!(rows.len(), 2 * 6 * 6 * 6);
    for row in &rows {
        assert_eq!(row.len(), 7);
        assert_eq!(row[4], row[5]);
        assert_eq!(row[6], "ok");
    }
    // c_{p,q} ↦ pq: the first diagram at (2,3,4) is 3·4 + 2·7 = 26
    assert!(rows.iter().any(|r| r[..6] == ["2", "3", "4", "1", "26", "26"]));
}

#[test]
fn configuration_verbs() {
    // Δ = (0−1)²(0−i)²(1−i)² = 1 · (−1) · (−2i) = 2i
    assert_eq!(ok(&["disc", &fixture("triangle.conf")]), "0 2\n");
    // δ = log(2i)/(2πi) = 1/4 − i·ln2/(2π)
    let out = ok(&["anomaly", &fixture("triangle.conf")]);
    let first: Vec<f64> = out.lines().next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
    assert!((first[0] - 0.25).abs() < 1e-12);
    assert!((first[1] + 2f64.ln() / (2.0 * std::f64::consts::PI)).abs() < 1e-12);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn realize_wind_and_extract() {
    let word = "B4: 1 -2 3 3 -1";
    let o = run(&["realize", "--word", word, "--steps", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n=4 frames=60\n\n"), "{}", &text[..40]);
    let winding = run_with_stdin(&["winding", "-"], &text);
    assert_eq!(stdout(&winding), "1\n");
    let extracted = run_with_stdin(&["extract", "--loop", "-"], &text);
    let back = stdout(&extracted);
    assert_eq!(ok(&["braid", "eq", back.trim_end(), word]), "equal\n");
    for seed in ["1", "7"] {
        let again = run_with_stdin(&["--seed", seed, "extract", "--loop", "-"], &text);
        assert_eq!(ok(&["braid", "eq", stdout(&again).trim_end(), word]), "equal\n");
    }
}

#[test]
fn series_verbs() {
    assert_eq!(ok(&["compose", "K=4; a1=1", "K=4; a2=1"]), "K=4; a1=1 a2=1 a3=1\n");
    assert_eq!(ok(&["invert", "K=3; a1=1"]), "K=3; a1=1 a2=1\n");
    assert_eq!(ok(&["coproduct", "--n", "1"]), "xi'1 + xi1\n");
    assert_eq!(ok(&["coproduct", "--n", "2"]), "xi'2 + xi2 + xi1^2*xi'1\n");
    let dims = ok(&["dims", "--max", "8"]);
    assert_eq!(dims.lines().next(), Some("degree xi x"));
    // generators in degrees 1, 3, 7
    let expected = ["0 1 1", "1 1 1", "2 1 1", "3 2 2", "4 2 2", "5 2 2", "6 3 3", "7 4 4", "8 4 4"];
    assert_eq!(dims.lines().skip(1).collect::<Vec<_>>(), expected);
}

#[test]
fn malformed_input_exits_2() {
    assert_fails(&["frobnicate"], 2);
    assert_fails(&[], 2);
    assert_fails(&["braid"], 2);
    assert_fails(&["braid", "writhe", "B3: 3"], 2);
    assert_fails(&["braid", "writhe", "B3 1 2"], 2);
    assert_fails(&["braid", "eq", "B3: 1", "B4: 1"], 2);
    assert_fails(&["braid", "cnm", "two", "1"], 2);
    assert_fails(&["hexagon"], 2);
    assert_fails(&["disc", &fixture("malformed.conf")], 2);
    assert_fails(&["disc", &fixture("does-not-exist.conf")], 2);
    assert_fails(&["winding", &fixture("short.loop")], 2);
    assert_fails(&["realize", "--word", "B3: 1", "--steps", "3"], 2);
    assert_fails(&["compose", "K=4; a1=1", "K=5; a1=1"], 2);
    assert_fails(&["invert", "K=4; a9=1"], 2);
    assert_fails(&["coproduct", "--n", "0"], 2);
    assert_fails(&["--seed", "-1", "selftest"], 2);
}

#[test]
fn degenerate_input_exits_3() {
    assert_fails(&["disc", &fixture("collision.conf")], 3);
    assert_fails(&["anomaly", &fixture("collision.conf")], 3);
    assert_fails(&["winding", &fixture("collision.loop")], 3);
    assert_fails(&["extract", "--loop", &fixture("collision.loop")], 3);
    assert_fails(&["winding", &fixture("coarse.loop")], 3);
}

#[test]
fn help_lists_every_verb() {
    let help = ok(&["--help"]);
    for verb in [
        "braid", "hexagon", "disc", "anomaly", "winding", "realize", "extract", "compose", "invert",
        "coproduct", "dims", "selftest",
    ] {
        assert!(help.contains(&format!("\n  {verb} ")), "missing {verb}");
    }
    let braid_help = ok(&["braid", "--help"]);
    for verb in ["nf", "eq", "writhe", "perm", "tensor", "cnm", "conjcheck"] {
        assert!(braid_help.contains(&format!("braid {verb} <")), "missing braid {verb}");
    }
}

#[test]
fn selftest_is_deterministic_and_passes() {
    let mut pass_sets = Vec::new();
    for seed in ["0", "1", "2"] {
        let first = run(&["selftest", "--seed", seed]);
        assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
        let text = stdout(&first);
        assert!(text.starts_with(&format!("selftest seed={seed}\n")));
        let names: Vec<String> = text
            .lines()
            .filter_map(|l| l.strip_prefix("PASS "))
            .map(|l| l.split(' ').next().unwrap().to_string())
            .collect();
        assert!(text.trim_end().ends_with(&format!("{n}/{n} properties passed", n = names.len())));
        pass_sets.push(names);
    }
    assert!(pass_sets.windows(2).all(|w| w[0] == w[1]));
}
