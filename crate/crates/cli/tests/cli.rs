use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bockstein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn group(report: &Value, degree: i64, key: &str) -> String {
    report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["degree"] == degree)
        .unwrap()[key]["group"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn rp2_integral_cohomology() {
    let report = json(&["cohomology", "--generate", "rp2", "--int"]);
    let groups: Vec<String> = (0..=2).map(|k| group(&report, k, "integral")).collect();
    assert_eq!(groups, ["0", "0", "Z/2"]);
    assert_eq!(
        report["rows"][3]["integral"]["invariant_factors"],
        serde_json::json!([2])
    );
}

#[test]
fn circle_and_dunce_cap() {
    let circle = json(&["cohomology", "--generate", "cycle:5", "--int"]);
    assert_eq!(group(&circle, 1, "integral"), "Z");
    let cap = json(&["cohomology", "--generate", "dunce:6", "--mod", "4"]);
    assert_eq!(group(&cap, 1, "mod"), "Z/2");
}

#[test]
fn local_bockstein_and_expect_zero() {
    let report = json(&[
        "local-bockstein",
        "--generate",
        "rp2",
        "-k",
        "3",
        "--mod",
        "2",
    ]);
    assert_eq!(report["is_zero"], false);
    assert_eq!(report["witnesses"][0]["tau"], serde_json::json!([]));
    let strict = run(&[
        "local-bockstein",
        "--generate",
        "rp2",
        "-k",
        "3",
        "--mod",
        "2",
        "--expect-zero",
    ]);
    assert_eq!(strict.status.code(), Some(1));
    let odd = run(&[
        "local-bockstein",
        "--generate",
        "rp2",
        "-k",
        "3",
        "--mod",
        "3",
        "--expect-zero",
    ]);
    assert_eq!(odd.status.code(), Some(0));
    let simplicial = run(&[
        "bockstein",
        "--generate",
        "rp2",
        "-k",
        "1",
        "--mod",
        "2",
        "--expect-zero",
    ]);
    assert_eq!(simplicial.status.code(), Some(1));
}

#[test]
fn prime_sweep_and_sr_ideal() {
    let sweep = json(&["prime-sweep", "--generate", "rp2", "-k", "3"]);
    assert_eq!(sweep["primes"], serde_json::json!([2]));
    let bounded = json(&[
        "prime-sweep",
        "--generate",
        "rp2",
        "-k",
        "3",
        "--prime-bound",
        "1",
    ]);
    assert_eq!(bounded["primes"], serde_json::json!([]));
    let ideal = json(&["sr-ideal", "--generate", "rp2"]);
    let expected = serde_json::json!([
        [1, 2, 3],
        [1, 2, 4],
        [1, 3, 5],
        [1, 4, 6],
        [1, 5, 6],
        [2, 3, 6],
        [2, 4, 5],
        [2, 5, 6],
        [3, 4, 5],
        [3, 4, 6]
    ]);
    assert_eq!(ideal["generators"], expected);
}

#[test]
fn hochster_single_face() {
    let by_tau = json(&[
        "hochster",
        "--generate",
        "rp2",
        "--mod",
        "2",
        "-k",
        "3",
        "--tau",
        "1",
    ]);
    let by_u = json(&[
        "hochster",
        "--generate",
        "rp2",
        "--mod",
        "2",
        "-k",
        "3",
        "--u",
        "-2,0,0,0,0,0",
    ]);
    assert_eq!(by_tau, by_u);
    assert_eq!(by_tau["rows"][0]["orders"], serde_json::json!([2]));
    let empty = json(&[
        "hochster",
        "--generate",
        "rp2",
        "--mod",
        "2",
        "-k",
        "3",
        "--tau",
        "",
    ]);
    assert_eq!(empty["rows"][0]["link_degree"], 2);
}

#[test]
fn generated_files_feed_every_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "rp2",
        "dunce:3",
        "cycle:4",
        "simplex-boundary:4",
        "random:7,2,0.5,3",
    ] {
        let path = dir.path().join("complex.json");
        std::fs::write(&path, stdout(&["generate", spec, "--format", "json"])).unwrap();
        let p = path.to_str().unwrap();
        let generated = json(&["cohomology", "--generate", spec, "--int", "--mod", "6"]);
        assert_eq!(
            json(&["cohomology", "--input", p, "--int", "--mod", "6"]),
            generated,
            "{spec}"
        );
        for args in [
            vec!["bockstein", "-k", "1", "--mod", "4"],
            vec!["local-bockstein", "-k", "3", "--mod", "2"],
            vec!["sr-ideal"],
            vec!["hochster", "--mod", "3", "-k", "2"],
            vec!["prime-sweep", "-k", "3"],
        ] {
            let mut from_file = args.clone();
            from_file.extend(["--input", p]);
            let mut from_spec = args.clone();
            from_spec.extend(["--generate", spec]);
            assert_eq!(json(&from_file), json(&from_spec), "{spec} {args:?}");
        }
        // pretty output is the same JSON
        let pretty: Value = serde_json::from_str(&stdout(&["generate", spec])).unwrap();
        let compact: Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(pretty, compact);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for format in ["json", "tsv", "pretty"] {
        for args in [
            vec![
                "hochster",
                "--generate",
                "dunce:4",
                "--mod",
                "4",
                "-k",
                "16",
            ],
            vec![
                "local-bockstein",
                "--generate",
                "dunce:6",
                "--mod",
                "2",
                "-k",
                "22",
            ],
            vec!["prime-sweep", "--generate", "dunce:6", "-k", "22"],
            vec![
                "cohomology",
                "--generate",
                "random:8,3,0.5,9",
                "--int",
                "--mod",
                "9",
            ],
        ] {
            let mut full = args.clone();
            full.extend(["--format", format]);
            let first = stdout(&full);
            full.extend(["--threads", "1"]);
            assert_eq!(first, stdout(&full), "{full:?}");
            assert_eq!(first, stdout(&full), "{full:?}");
        }
    }
}

#[test]
fn input_errors_exit_with_two() {
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "{{\"n\": 3, \"facets\": [[1, 4]]}}").unwrap();
    let p = bad.path().to_str().unwrap();
    for args in [
        vec!["cohomology", "--input", p, "--int"],
        vec![
            "cohomology",
            "--input",
            "/nonexistent/complex.json",
            "--int",
        ],
        vec!["cohomology", "--generate", "klein-bottle", "--int"],
        vec!["cohomology", "--generate", "rp2", "--mod", "1"],
        vec!["cohomology", "--generate", "rp2"],
        vec!["cohomology", "--generate", "rp2", "--input", p, "--int"],
        vec![
            "local-bockstein",
            "--generate",
            "rp2",
            "-k",
            "3",
            "--mod",
            "6",
        ],
        vec![
            "hochster",
            "--generate",
            "rp2",
            "--mod",
            "2",
            "-k",
            "3",
            "--u",
            "1,0,0,0,0,0",
        ],
        vec![
            "hochster",
            "--generate",
            "rp2",
            "--mod",
            "2",
            "-k",
            "3",
            "--tau",
            "7",
        ],
        vec!["generate", "rp2", "--format", "tsv"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
