use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leewaring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn bounds_csv() {
    let out = run(&["bounds", "--m", "2..4", "--r", "2..3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,r,g,h,case,rho");
    assert_eq!(lines.len(), 1 + 6);
    assert!(lines.contains(&"3,3,3,2,ODD_R_LE,2"));

    let out = run(&["bounds", "--m", "2", "--r", "5", "--format", "csv"]);
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols[2], "2");
    assert_eq!(cols[3], "2");
}

#[test]
fn bounds_csv_is_stable() {
    let args = ["bounds", "--m", "1..12", "--r", "1..12", "--format", "csv"];
    let a = stdout(&run(&args));
    let mut threaded = vec!["--threads", "3"];
    threaded.extend_from_slice(&args);
    assert_eq!(a, stdout(&run(&threaded)));
}

#[test]
fn bounds_json_round_trips() {
    let out = run(&["bounds", "--m", "5..6", "--r", "3", "--format", "json"]);
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["h"], 3);
    assert_eq!(rows[1]["h"], 4);
    assert_eq!(rows[1]["case"], "ODD_R_LE");
}

#[test]
fn bad_ranges_are_usage_errors() {
    for args in [
        &["bounds", "--m", "0..3", "--r", "2"][..],
        &["bounds", "--m", "4..2", "--r", "2"],
        &["bounds", "--m", "x", "--r", "2"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn construct_reports() {
    let out = run(&["construct", "--m", "6", "--r", "3", "--norm", "lee"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("norm: 4"));
    assert!(text.contains("admissible: true"));

    let out = run(&["construct", "--m", "1", "--r", "3", "--norm", "one"]);
    let text = stdout(&out);
    assert!(text.contains("(0,0,0)"));
    assert!(text.contains("norm: 0"));

    let out = run(&[
        "construct",
        "--m",
        "8",
        "--r",
        "3",
        "--norm",
        "lee",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 5);
    assert_eq!(v["target"], 5);
    assert_eq!(v["admissible"], true);
}

#[test]
fn check_exit_codes() {
    let out = run(&["check", "--m", "4", "--vec", "0,2", "--norm", "lee"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("norm: 2"));

    let out = run(&[
        "check", "--m", "3", "--vec", "1,1", "--norm", "lee", "--format", "json",
    ]);
    assert_eq!(code(&out), 3);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["admissible"], false);
    assert_eq!(v["canonical_shift"], 2);

    let out = run(&["check", "--m", "5", "--vec", "0,0,0", "--norm", "one"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("norm: 0"));

    assert_eq!(
        code(&run(&[
            "check", "--m", "5", "--vec", "1,a", "--norm", "one"
        ])),
        2
    );
}

#[test]
fn negative_coordinates_reduce() {
    let out = run(&[
        "check", "--m", "5", "--vec", "-1,0", "--norm", "lee", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vector"], serde_json::json!([4, 0]));
}

#[test]
fn oracle_matches() {
    let out = run(&["oracle", "--m", "5", "--r", "3", "--norm", "lee"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("3 = 3 MATCH"));

    let out = run(&[
        "oracle", "--m", "3", "--r", "3", "--norm", "one", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["max_norm"], 3);
    assert_eq!(v["formula"], 3);
    assert_eq!(v["match"], true);
}

#[test]
fn oracle_budget() {
    let out = run(&["oracle", "--m", "7", "--r", "9", "--norm", "lee"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("5764801"));

    let out = run(&[
        "oracle", "--m", "4", "--r", "4", "--norm", "lee", "--budget", "10",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn oracle_output_ignores_thread_count() {
    let args = [
        "oracle", "--m", "5", "--r", "7", "--norm", "lee", "--format", "csv",
    ];
    let single = stdout(&run(&[&["--threads", "1"][..], &args].concat()));
    let many = stdout(&run(&[&["--threads", "6"][..], &args].concat()));
    assert_eq!(single, many);
}

#[test]
fn waring_commands() {
    let out = run(&["waring", "thm1", "--p", "3", "--r", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("computed 4 = formula 4 MATCH"));

    let out = run(&["waring", "thm2", "--p", "5", "--r", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["computed_g"], 3);
    assert_eq!(v["formula_g"], 3);
    assert_eq!(v["match"], true);
    assert_eq!(v["q"], 25);

    let out = run(&["waring", "generic", "--p", "2", "--n", "2", "--k", "3"]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("NONE"));

    let out = run(&["waring", "remarks", "--p", "7", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn waring_hypothesis_errors() {
    let out = run(&["waring", "thm1", "--p", "2", "--r", "7"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("p is not a primitive root modulo r"));

    assert_eq!(code(&run(&["waring", "thm1", "--p", "4", "--r", "3"])), 2);
    assert_eq!(code(&run(&["waring", "thm2", "--p", "2", "--r", "3"])), 2);
    assert_eq!(
        code(&run(&[
            "waring", "thm1", "--p", "3", "--r", "7", "--budget", "100"
        ])),
        2
    );
}
