//! CLI contract: byte-identical reruns, the documented exit codes, the
//! sweep CSV schema and the volume JSON schema. Criterion 10 of the
//! acceptance suite.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypersf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn criterion_10_determinism_and_exit_codes() {
    // byte-identical reruns of a JSON record
    let args = [
        "area", "-a", "1.2", "-b", "1", "-c", "2", "-H", "1", "--method", "all", "--json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        first.stdout, second.stdout,
        "area --json output must be byte-identical"
    );

    let args = [
        "classify",
        "--spec",
        tableau_path(),
        "--x",
        "-0.3,0.2,-0.07",
        "--json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        first.stdout, second.stdout,
        "classify --json output must be byte-identical"
    );

    // exit 2: validation (a > b violated)
    let out = run(&["area", "-a", "1", "-b", "1.2", "-c", "2", "-H", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // exit 2: clap usage error
    let out = run(&["area", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));

    // exit 3: out of region with --strict names the violated condition
    let out = run(&[
        "area", "-a", "10", "-b", "1", "-c", "1", "-H", "1", "--method", "closed", "--strict",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("x3"),
        "stderr should name the x3 condition: {stderr}"
    );

    // exit 4: series that cannot meet the stopping rule in budget
    let out = run(&[
        "eval",
        "2f1",
        "-a",
        "0.5",
        "-b",
        "0.7",
        "-c",
        "0.2",
        "-z",
        "0.9999999",
    ]);
    assert_eq!(
        out.status.code(),
        Some(4),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    println!("criterion 10: PASS — deterministic JSON and exit codes 0/2/3/4");
}

fn tableau_path() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/area_tableau.json")
}

#[test]
fn volume_json_schema() {
    let out = run(&[
        "volume", "-a", "2", "-b", "1", "-c", "1", "-H", "1", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["command"], "volume");
    for key in ["volume", "v_cylinder", "v_shell", "lambda"] {
        assert!(v["outputs"][key].is_string(), "missing output {key}");
    }
    let vol: f64 = v["outputs"]["volume"].as_str().unwrap().parse().unwrap();
    assert!((vol - 8.0 * std::f64::consts::PI / 3.0).abs() < 1e-10);
}

#[test]
fn volume_degenerate_cap_warns() {
    let out = run(&["volume", "-a", "2", "-b", "1", "-c", "1", "-H", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate cap"));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("volume = 0.00000000000000e0"), "{stdout}");
}

#[test]
fn sweep_csv_schema_and_monotonicity() {
    let out = run(&[
        "sweep", "--param", "H", "--from", "0.1", "--to", "1.0", "--steps", "10", "-a", "1.2",
        "-b", "1", "-c", "2", "-H", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "param,value,area_closed,area_oracle,rel_err,volume"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    let mut prev = 0.0f64;
    for row in &rows {
        assert_eq!(row[0], "H");
        let area: f64 = row[2].parse().unwrap();
        assert!(area > prev, "area column must increase monotonically");
        prev = area;
    }

    // a 1-step sweep equals the area command's closed value
    let out = run(&[
        "sweep", "--param", "H", "--from", "0.5", "--to", "0.5", "--steps", "1", "-a", "1.2", "-b",
        "1", "-c", "2", "-H", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let sweep_area: f64 = row[2].parse().unwrap();

    let out = run(&[
        "area", "-a", "1.2", "-b", "1", "-c", "2", "-H", "0.5", "--method", "closed", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let area: f64 = v["outputs"]["area_closed"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(sweep_area, area);

    // malformed range
    let out = run(&[
        "sweep", "--param", "H", "--from", "1.0", "--to", "0.1", "--steps", "5", "-a", "1.2", "-b",
        "1", "-c", "2", "-H", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "sweep", "--param", "H", "--from", "0.1", "--to", "1.0", "--steps", "0", "-a", "1.2", "-b",
        "1", "-c", "2", "-H", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_theorem_paths_agree() {
    let out = run(&[
        "eval", "theorem1", "--sigma", "2", "--lambda", "1", "--s", "1", "--path", "all", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let closed: f64 = v["outputs"]["closed_value"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((closed - 5.0 * std::f64::consts::FRAC_PI_4).abs() < 1e-10);
    let agreement: f64 = v["agreement"].as_str().unwrap().parse().unwrap();
    assert!(agreement < 1e-9);
}

#[test]
fn eval_meijer_g_paths_agree() {
    // the surface-area kernel through both paths: contour line and
    // decomposition
    let out = run(&[
        "eval", "meijer_g", "--upper", "1.5,0,2", "--lower", "0,1,0", "--gm", "2", "--gn", "2",
        "-z", "4", "--path", "all", "--json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let mb: f64 = v["outputs"]["mb_value"].as_str().unwrap().parse().unwrap();
    let dec: f64 = v["outputs"]["decompose_value"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((mb - dec).abs() <= 1e-6 * dec.abs(), "{mb} vs {dec}");
    // m = n = 0 kernel at z = 4
    assert!((dec - -14.750060614637316).abs() <= 1e-8 * 14.75);
}

#[test]
fn eval_pfq_series_and_line() {
    let out = run(&[
        "eval", "pfq", "--upper", "0.5,1", "--lower", "2", "-z", "-0.9", "--path", "all", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let series: f64 = v["outputs"]["series_value"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    // 2F1(1/2,1;2;z) = 2(1 - sqrt(1-z))/z
    let z = -0.9f64;
    let want = 2.0 * (1.0 - (1.0 - z).sqrt()) / z;
    assert!((series - want).abs() < 1e-10);
    let agreement: f64 = v["agreement"].as_str().unwrap().parse().unwrap();
    assert!(agreement < 1e-7);

    // at the |z| = 1 boundary the stopping rule cannot fire at the default
    // tolerance within the term budget: exit 4
    let out = run(&[
        "eval", "pfq", "--upper", "0.5,1", "--lower", "2", "-z", "-1", "--path", "series",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn sweep_json_to_file() {
    let path = std::env::temp_dir().join(format!("hypersf_sweep_{}.json", std::process::id()));
    let out = run(&[
        "sweep",
        "--param",
        "c",
        "--from",
        "1.5",
        "--to",
        "3.0",
        "--steps",
        "4",
        "-a",
        "1.2",
        "-b",
        "1",
        "-c",
        "2",
        "-H",
        "1",
        "--out",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rows: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["param"], "c");
        let rel: f64 = row["rel_err"].as_str().unwrap().parse().unwrap();
        assert!(rel < 1e-8);
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn eval_tableau_at_origin() {
    let out = run(&[
        "eval",
        "sd",
        "--spec",
        tableau_path(),
        "--x",
        "0,0,0",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let value: f64 = v["outputs"]["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(value, 1.0);
}

#[test]
fn eval_2f1_log_value() {
    let out = run(&[
        "eval", "2f1", "-a", "1", "-b", "1", "-c", "2", "-z", "0.5", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let value: f64 = v["outputs"]["series_value"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 2.0 * std::f64::consts::LN_2).abs() < 1e-9);
}

#[test]
fn classify_area_tableau_is_case_ii() {
    let out = run(&["classify", "--spec", tableau_path(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outputs"]["case"], "II");
    assert_eq!(v["outputs"]["deltas"], "[0, 0, 0]");
}

#[test]
fn env_var_tolerance_is_honored() {
    // a sloppy tolerance via HYPERSF_TOL must still succeed and be recorded
    let out = bin()
        .args([
            "area", "-a", "1.2", "-b", "1", "-c", "2", "-H", "1", "--method", "closed", "--json",
        ])
        .env("HYPERSF_TOL", "1e-6")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["inputs"]["tol"].as_str().unwrap(), "1.00000000000000e-6");
}
