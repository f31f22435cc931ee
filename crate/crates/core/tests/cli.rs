use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirling-lab"))
        .args(args)
        .env_remove("STIRLING_LAB_CACHE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

#[test]
fn every_method_prints_the_same_value() {
    for method in ["recurrence", "explicit", "oracle", "egf"] {
        let out = run(&[
            "value", "--kind", "lah", "--r", "2", "--s", "2", "--n", "8", "--k", "3", "--method",
            method,
        ]);
        assert_eq!(out.status.code(), Some(0), "{method}");
        assert_eq!(stdout(&out), "29520\n", "{method}");
    }
}

#[test]
fn oracle_above_cap_exits_3() {
    let out = run(&[
        "value", "--kind", "s2", "--r", "0", "--s", "1", "--n", "14", "--k", "3", "--method",
        "oracle",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));

    let out = run(&[
        "value", "--kind", "s2", "--r", "0", "--s", "1", "--n", "14", "--k", "3", "--method",
        "oracle", "--cap", "14",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // S(14, 3)
    assert_eq!(stdout(&out), "788970\n");
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(
        run(&["value", "--kind", "s1", "--r", "0", "--s", "0", "--n", "3", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["value", "--kind", "nope", "--r", "0", "--s", "1", "--n", "3", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["table", "--kind", "s1", "--r", "0", "--s", "1", "--n-max", "41"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
}

#[test]
fn out_of_domain_cell_is_zero() {
    let out = run(&[
        "value", "--kind", "s1", "--r", "4", "--s", "1", "--n", "3", "--k", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn csv_table_lists_in_domain_cells() {
    let out = run(&[
        "table", "--kind", "s2", "--r", "1", "--s", "2", "--n-max", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        rows,
        [
            "n,k,value",
            "2,1,1",
            "3,1,1",
            "4,1,1",
            "4,2,3",
            "5,1,1",
            "5,2,10",
            "6,1,1",
            "6,2,25",
            "6,3,15"
        ]
    );
}

#[test]
fn markdown_and_json_tables_render() {
    let md = stdout(&run(&[
        "table", "--kind", "lah", "--r", "0", "--s", "1", "--n-max", "3", "--format", "md",
    ]));
    assert!(md.lines().any(|l| l.starts_with("| n \\ k |")));
    assert!(md
        .lines()
        .any(|l| l.starts_with("| 3 |") && l.contains("| 6 |")));

    let json = stdout(&run(&[
        "table", "--kind", "lah", "--r", "0", "--s", "1", "--n-max", "3", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).expect("json");
    assert_eq!(v["kind"], "lah");
    assert_eq!(v["entries"].as_array().map(|a| a.len()), Some(7));
}

#[test]
fn table_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = run(&[
        "table",
        "--kind",
        "s1",
        "--r",
        "2",
        "--s",
        "2",
        "--n-max",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("\n8,3,"));
}

#[test]
fn verify_exit_code_follows_failures() {
    let out = run(&["verify", "--suite", "cross"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failing"));

    let out = run(&["verify", "--suite", "reductions", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL s2-p-split"));

    let out = run(&["verify", "--suite", "special-values"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "advisory reports do not fail the run"
    );
}

#[test]
fn verify_json_is_parseable() {
    let out = run(&["verify", "--suite", "nested-sums", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert!(v["reports"].as_array().is_some_and(|r| !r.is_empty()));
}

#[test]
fn fixtures_report_misprints() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out = run(&["fixtures", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.ends_with("13 files, 544 cells, 5 mismatches\n"));
    assert!(text.contains("(13, 3) fixture=145774080 computed=149402880"));

    let out = run(&["fixtures", dir.join("lah_r2_s2.csv").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn generated_table_passes_as_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lah_r3_s2.csv");
    run(&[
        "table",
        "--kind",
        "lah",
        "--r",
        "3",
        "--s",
        "2",
        "--n-max",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = run(&["fixtures", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_fixture_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s1_r0_s1.csv");
    std::fs::write(
        &path,
        "# x\n# kind=s1 r=0 s=1 n_min=0 n_max=2\nn,k,value\n2,1,-1\n",
    )
    .unwrap();
    assert_eq!(
        run(&["fixtures", path.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let renamed = dir.path().join("s2_r0_s1.csv");
    std::fs::write(
        &renamed,
        "# x\n# kind=s1 r=0 s=1 n_min=0 n_max=2\nn,k,value\n2,1,1\n",
    )
    .unwrap();
    assert_eq!(
        run(&["fixtures", renamed.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn tiny_cache_cap_still_answers() {
    let out = Command::new(env!("CARGO_BIN_EXE_stirling-lab"))
        .args([
            "value", "--kind", "lah", "--r", "2", "--s", "2", "--n", "8", "--k", "3",
        ])
        .env("STIRLING_LAB_CACHE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "29520\n");

    let out = Command::new(env!("CARGO_BIN_EXE_stirling-lab"))
        .args([
            "value", "--kind", "lah", "--r", "2", "--s", "2", "--n", "8", "--k", "3",
        ])
        .env("STIRLING_LAB_CACHE_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
