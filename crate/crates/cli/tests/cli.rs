use std::process::{Command, Output};

use hecke_core::central::{CentralExpansion, Centre, Method};
use hecke_core::combin::Partition;
use hecke_core::hecke::HeckeElement;
use hecke_core::table::CoefficientTable;

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hecke(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

#[test]
fn expand_gamma_degree_three() {
    assert_eq!(
        stdout(&["expand-gamma", "--n", "3", "--lambda", "2,1"]),
        "T[2 1 3] + T[1 3 2] + T[3 2 1]\n"
    );
    assert_eq!(
        stdout(&["expand-gamma", "--n", "3", "--lambda", "3"]),
        "T[2 3 1] + T[3 1 2] + T[3 2 1] * x\n"
    );
}

#[test]
fn table_degree_four() {
    let expected = concat!(
        "           (1,1,1,1)  (2,1,1)  (3,1)  (2,2)  (4)\n",
        "(1,1,1,1)  24         12*x     4*x^2  6*x^2  x^3\n",
        "(2,1,1)               2        2*x    2*x    x^2\n",
        "(3,1)                          1      0      x\n",
        "(2,2)                                 2      x\n",
        "(4)                                          1\n",
    );
    assert_eq!(stdout(&["table", "--n", "4"]), expected);
    assert_eq!(
        stdout(&["table", "--n", "4", "--method", "direct"]),
        expected
    );
}

#[test]
fn coefficient_in_degree_ten() {
    let out = stdout(&[
        "coeff",
        "--n",
        "10",
        "--alpha",
        "3,2,2,1,1,1",
        "--lambda",
        "5,3,2",
    ]);
    assert_eq!(out, "19*x^3\n");
}

#[test]
fn coefficient_reports_direct_agreement() {
    let out = stdout(&["coeff", "--n", "4", "--alpha", "2,1,1", "--lambda", "3,1"]);
    assert_eq!(out, "2*x\ndirect: 2*x [agree]\n");
}

#[test]
fn unsorted_input_is_normalized_with_notice() {
    let out = hecke(&["coeff", "--n", "4", "--alpha", "1,2,1", "--lambda", "4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("read as the partition (2,1,1)"));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "x^2\ndirect: x^2 [agree]\n"
    );
}

#[test]
fn expand_norm_on_both_bases() {
    assert_eq!(
        stdout(&["expand-norm", "--n", "3", "--alpha", "1,1,1"]),
        "G(1,1,1) * 6 + G(2,1) * 3*x + G(3) * x^2\n"
    );
    assert_eq!(
        stdout(&["expand-norm", "--n", "3", "--alpha", "3", "--basis", "t"]),
        "T[2 3 1] + T[3 1 2] + T[3 2 1] * x\n"
    );
}

#[test]
fn q_form_of_coefficients() {
    assert_eq!(
        stdout(&["expand-norm", "--n", "3", "--alpha", "2,1", "--q"]),
        "G(2,1) + G(3) * (1 - q^(-1))\n"
    );
}

#[test]
fn character_and_projection() {
    assert_eq!(
        stdout(&[
            "character",
            "--n",
            "5",
            "--lambda",
            "3,2",
            "--alpha",
            "2,2,1"
        ]),
        "2\n"
    );
    assert_eq!(
        stdout(&["project", "--n", "4", "--alpha", "2,1,1", "--lambda", "2,2"]),
        "N((2),(1,1)) + N((1,1),(2))\n"
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--n", "5", "--format", "json"][..],
        &[
            "expand-norm",
            "--n",
            "5",
            "--alpha",
            "2,2,1",
            "--basis",
            "t",
        ][..],
        &["verify", "--suite", "class-elements", "--bound", "4"][..],
    ] {
        let first = stdout(args);
        assert_eq!(first, stdout(args), "{args:?}");
        let mut sequential = args.to_vec();
        sequential.extend(["--jobs", "1"]);
        assert_eq!(first, stdout(&sequential), "{args:?} with one thread");
        let mut uncached = args.to_vec();
        uncached.push("--no-cache");
        assert_eq!(first, stdout(&uncached), "{args:?} without caches");
    }
}

#[test]
fn json_round_trips() {
    let centre = Centre::default();
    let table: CoefficientTable =
        serde_json::from_str(&stdout(&["table", "--n", "5", "--format", "json"])).unwrap();
    assert_eq!(
        table,
        CoefficientTable::build(&centre, 5, Method::Direct).unwrap()
    );

    let e: CentralExpansion = serde_json::from_str(&stdout(&[
        "expand-norm",
        "--n",
        "4",
        "--alpha",
        "2,1,1",
        "--format",
        "json",
    ]))
    .unwrap();
    let alpha: Partition = "2,1,1".parse().unwrap();
    assert_eq!(
        e,
        centre
            .expand_norm(alpha.as_composition(), Method::Formula)
            .unwrap()
    );

    let g: HeckeElement = serde_json::from_str(&stdout(&[
        "expand-gamma",
        "--n",
        "4",
        "--lambda",
        "2,2",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(g, centre.gamma(&"2,2".parse().unwrap()).unwrap());
}

#[test]
fn csv_table_has_one_row_per_partition() {
    let text = stdout(&["table", "--n", "4", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["alpha", "(1,1,1,1)", "(2,1,1)", "(3,1)", "(2,2)", "(4)"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(&rows[2], vec!["(3,1)", "0", "0", "1", "0", "x"]);
}

#[test]
fn exit_codes() {
    let bad = hecke(&["coeff", "--n", "3", "--alpha", "2,x", "--lambda", "3"]);
    assert_eq!(bad.status.code(), Some(2));
    let wrong_size = hecke(&["coeff", "--n", "3", "--alpha", "2,2", "--lambda", "3"]);
    assert_eq!(wrong_size.status.code(), Some(2));
    let unknown = hecke(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let too_big = hecke(&["table", "--n", "7", "--method", "direct"]);
    assert_eq!(too_big.status.code(), Some(2));
    let suite = hecke(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(suite.status.code(), Some(2));
}

#[test]
fn verify_runs_selected_suites() {
    let out = stdout(&[
        "verify",
        "--suite",
        "mountain",
        "--suite",
        "main-theorem",
        "--bound",
        "4",
    ]);
    assert!(out.contains("[PASS] mountain (n <= 4"));
    assert!(out.contains("[PASS] main-theorem (n <= 4"));
    assert!(out.ends_with("2 suites, 0 failed\n"));
    assert!(stdout(&["verify", "--list"]).contains("positivity-order"));
}
