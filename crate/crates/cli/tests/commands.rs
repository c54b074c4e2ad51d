use std::path::Path;
use std::process::{Command, Output};

use funident_cli::report::Report;

fn funident(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_funident")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_report(path: &Path) -> Report {
    Report::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn eval_even_anchor() {
    let o = funident(&["eval", "--A", "1", "--B", "t", "--x", "t^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t\n");
}

#[test]
fn eval_odd_anchor_and_negative_power() {
    let o = funident(&["eval", "--A", "t+1", "--B", "t^2", "--x", "t^-1"]);
    assert_eq!(o.status.code(), Some(0));
    // f(t^-1) = t^-1 B
    assert_eq!(stdout(&o), "t\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "--A", "1", "--B", "t"][..],
        &["eval", "--A", "1", "--B", "t", "--x", "t+"],
        &["eval", "--A", "1", "--B", "t", "--x", "1/(t+t)"],
        &["solve", "--field", "4", "--n", "1"],
        &["solve", "--field", "5", "--n", "0"],
        &["solve", "--field", "5", "--matrix", "2,5", "--n", "1"],
        &["solve", "--n", "1"],
        &["frobnicate"],
    ] {
        assert_eq!(funident(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unit_cap_exits_3() {
    let o = funident(&["solve", "--matrix", "2,5", "--n", "1", "--unit-cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("480"));
}

#[test]
fn verify_passes_and_fault_is_caught() {
    let base = ["verify", "--A", "t^3+1", "--B", "(t+1)/t", "--samples", "100"];
    assert_eq!(funident(&base).status.code(), Some(0));
    let mut faulty = base.to_vec();
    faulty.push("--inject-fault");
    let o = funident(&faulty);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("counterexample"));
}

#[test]
fn hua_residuals_vanish() {
    for ring in ["rational", "quaternion"] {
        let o = funident(&["hua", "--ring", ring, "--dim", "2", "--samples", "20", "--seed", "3"]);
        assert_eq!(o.status.code(), Some(0), "{ring}");
    }
}

#[test]
fn solve_no_go_and_example_regime() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let out_s = out.to_str().unwrap();

    let o = funident(&["solve", "--field", "5", "--n", "3", "--family", "pair", "--out", out_s]);
    assert_eq!(o.status.code(), Some(0));
    let r = read_report(&out);
    assert_eq!(r.dimension, Some(0));
    assert_eq!(r.flagged_example_regime, Some(false));
    assert_eq!(r.basis, Some(vec![]));

    let o = funident(&["solve", "--field", "3", "--n", "4", "--family", "pair", "--out", out_s]);
    assert_eq!(o.status.code(), Some(0));
    let r = read_report(&out);
    assert!(r.dimension.unwrap() >= 1);
    assert_eq!(r.flagged_example_regime, Some(true));
    for pair in r.basis.unwrap() {
        assert!(pair.f.iter().chain(&pair.g).flatten().all(|&c| c < 3));
    }
}

#[test]
fn matrix_solve_reports_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.json");
    let o = funident(&["solve", "--matrix", "2,2", "--n", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = read_report(&out);
    let basis = r.basis.unwrap();
    assert_eq!(basis.len(), r.dimension.unwrap());
    for pair in basis {
        assert_eq!(pair.f.len(), 4);
        assert!(pair.f.iter().all(|row| row.len() == 4 && row.iter().all(|&c| c < 2)));
    }
}

#[test]
fn sweep_writes_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let o = funident(&["sweep", "--p-max", "5", "--n-max", "4", "--family", "pair", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = read_report(&out);
    let rows = r.details.unwrap()["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 3 * 4);
    assert!(r.failures.is_empty());
}

fn normalized(mut r: Report) -> Report {
    r.elapsed_ms = 0;
    r
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let runs: [&[&str]; 4] = [
        &["verify", "--A", "t", "--B", "1", "--samples", "50", "--seed", "9", "--inject-fault"],
        &["hua", "--ring", "quaternion", "--samples", "30", "--seed", "4"],
        &["solve", "--matrix", "2,2", "--n", "3"],
        &["sweep", "--p-max", "3", "--k-max", "2", "--n-max", "3"],
    ];
    for args in runs {
        let reports: Vec<Report> = ["a.json", "b.json"]
            .iter()
            .zip([false, true])
            .map(|(name, sequential)| {
                let path = dir.path().join(name);
                let mut full = args.to_vec();
                full.extend(["--out", path.to_str().unwrap()]);
                if sequential {
                    full.push("--sequential");
                }
                funident(&full);
                normalized(read_report(&path))
            })
            .collect();
        assert_eq!(reports[0], reports[1], "{args:?}");
    }
}

#[test]
fn seed_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let run = |seed: &str, name: &str| {
        let path = dir.path().join(name);
        funident(&["hua", "--ring", "rational", "--samples", "40", "--seed", seed, "--out", path.to_str().unwrap()]);
        read_report(&path)
    };
    let (a, b) = (run("0", "a.json"), run("1", "b.json"));
    assert_eq!(a.seed, 0);
    assert_eq!(b.seed, 1);
}
