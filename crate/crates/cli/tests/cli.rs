//! Contract tests for the command-line interface: documented invocations,
//! the exit-code matrix, format selection, and the JSON round-trip
//! guarantee.

mod common;

use common::*;
use qappell::{
    appell_report, connection_report, moments_from_recurrence, quasi_report, recurrence_report,
    scaled_family, ttrr_coeffs, PolyFamily, QParam, QuasiParams, Rational, VerifyReport,
};

#[test]
fn documented_gen_csv_prints_three_rows() {
    let out = qappell(&[
        "gen",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "0, 1: 1\n1, x: 1, 1: -2\n2, x^2: 1, x: -6, 1: 7\n"
    );
}

#[test]
fn documented_verify_appell_passes() {
    let out = qappell(&[
        "verify",
        "--theorem",
        "appell",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "8",
    ]);
    assert_eq!(code_of(&out), 0);
    let stdout = stdout_of(&out);
    assert_eq!(stdout.lines().count(), 1);
    assert!(stdout.starts_with("{\"theorem\":\"appell\""));
    assert!(stdout.contains("\"pass\":true"));
}

#[test]
fn documented_verify_all_quasi_prints_four_pass_reports() {
    let out = qappell(&[
        "verify",
        "--theorem",
        "all",
        "--family",
        "quasi",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--lambda",
        "1",
        "--q",
        "2",
        "--max-degree",
        "8",
    ]);
    assert_eq!(code_of(&out), 0);
    let stdout = stdout_of(&out);
    let reports: Vec<VerifyReport> = stdout
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is a report"))
        .collect();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r.pass));
    let labels: Vec<&str> = reports.iter().map(|r| r.theorem.as_str()).collect();
    assert_eq!(labels, vec!["appell", "quasi", "3.1", "3.2"]);
}

#[test]
fn usage_errors_exit_with_code_2_and_name_the_flag() {
    let cases: Vec<(&[&str], &str)> = vec![
        // missing required parameter for the family
        (
            &["gen", "--family", "asc", "--q", "2", "--max-degree", "3"],
            "--a",
        ),
        (
            &[
                "gen",
                "--family",
                "quasi",
                "--alpha",
                "1",
                "--beta",
                "1",
                "--q",
                "2",
                "--max-degree",
                "3",
            ],
            "--lambda",
        ),
        // parameter that does not belong to the family
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "1",
                "--alpha",
                "2",
                "--q",
                "2",
                "--max-degree",
                "3",
            ],
            "--alpha",
        ),
        (
            &[
                "gen",
                "--family",
                "scaled",
                "--alpha",
                "1",
                "--beta",
                "2",
                "--lambda",
                "1",
                "--q",
                "2",
                "--max-degree",
                "3",
            ],
            "--lambda",
        ),
        // guarded values
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "0",
                "--q",
                "2",
                "--max-degree",
                "3",
            ],
            "--a",
        ),
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "1",
                "--q",
                "1",
                "--max-degree",
                "3",
            ],
            "--q",
        ),
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "1",
                "--q",
                "-2/2",
                "--max-degree",
                "3",
            ],
            "--q",
        ),
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "1",
                "--q",
                "2",
                "--max-degree",
                "65",
            ],
            "--max-degree",
        ),
        // no decimals anywhere
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "0.5",
                "--q",
                "2",
                "--max-degree",
                "3",
            ],
            "--a",
        ),
        (
            &[
                "gen",
                "--family",
                "asc",
                "--a",
                "1",
                "--q",
                "2.0",
                "--max-degree",
                "3",
            ],
            "--q",
        ),
        // the recurrence checks need enough members to extract constants
        (
            &[
                "verify",
                "--theorem",
                "rec31",
                "--family",
                "quasi",
                "--alpha",
                "1",
                "--beta",
                "1",
                "--lambda",
                "1",
                "--q",
                "2",
                "--max-degree",
                "2",
            ],
            "--max-degree",
        ),
        (
            &[
                "verify",
                "--theorem",
                "all",
                "--family",
                "quasi",
                "--alpha",
                "1",
                "--beta",
                "1",
                "--lambda",
                "1",
                "--q",
                "2",
                "--max-degree",
                "2",
            ],
            "--max-degree",
        ),
    ];
    for (args, flag) in cases {
        let out = qappell(args);
        assert_eq!(code_of(&out), 2, "args: {args:?}");
        let stderr = stderr_of(&out);
        assert!(
            stderr.contains(flag),
            "diagnostic for {args:?} should mention {flag}, got: {stderr}"
        );
        assert!(stdout_of(&out).is_empty(), "no data output for {args:?}");
    }
}

#[test]
fn unknown_values_are_rejected_by_the_parser() {
    for args in [
        vec!["gen", "--family", "nope", "--q", "2", "--max-degree", "3"],
        vec![
            "verify",
            "--theorem",
            "everything",
            "--family",
            "asc",
            "--a",
            "1",
            "--q",
            "2",
            "--max-degree",
            "3",
        ],
        vec!["frobnicate"],
    ] {
        let out = qappell(&args);
        assert_eq!(code_of(&out), 2, "args: {args:?}");
    }
}

#[test]
fn verification_failures_exit_with_code_1_in_every_format() {
    // An orthogonal family genuinely fails the quasi-orthogonality clause,
    // and the verdict must not depend on the output format.
    for format in ["json", "csv", "latex"] {
        let out = qappell(&[
            "verify",
            "--theorem",
            "quasi",
            "--family",
            "asc",
            "--a",
            "1",
            "--q",
            "2",
            "--max-degree",
            "6",
            "--format",
            format,
        ]);
        assert_eq!(code_of(&out), 1, "format {format}");
        assert!(stderr_of(&out).is_empty(), "format {format}");
        assert!(!stdout_of(&out).is_empty(), "format {format}");
    }
}

#[test]
fn orthogonal_families_pass_appell_and_rec31_but_fail_the_quasi_side() {
    let out = qappell(&[
        "verify",
        "--theorem",
        "all",
        "--family",
        "scaled",
        "--alpha",
        "1",
        "--beta",
        "2",
        "--q",
        "2",
        "--max-degree",
        "6",
    ]);
    assert_eq!(code_of(&out), 1);
    let stdout = stdout_of(&out);
    let reports: Vec<VerifyReport> = stdout
        .lines()
        .map(|line| serde_json::from_str(line).unwrap())
        .collect();
    let verdicts: Vec<(&str, bool)> = reports
        .iter()
        .map(|r| (r.theorem.as_str(), r.pass))
        .collect();
    assert_eq!(
        verdicts,
        vec![
            ("appell", true),
            ("quasi", false),
            ("3.1", true),
            ("3.2", false)
        ]
    );
}

#[test]
fn env_var_sets_the_default_format_and_the_flag_overrides_it() {
    let args = [
        "gen",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "2",
    ];
    let by_env = qappell_env(&args, "QAPPELL_FORMAT", "csv");
    assert_eq!(code_of(&by_env), 0);
    assert_eq!(
        stdout_of(&by_env),
        stdout_of(&qappell(&[
            "gen",
            "--family",
            "asc",
            "--a",
            "1",
            "--q",
            "2",
            "--max-degree",
            "2",
            "--format",
            "csv",
        ]))
    );

    let mut flag_args: Vec<&str> = args.to_vec();
    flag_args.extend(["--format", "json"]);
    let by_flag = qappell_env(&flag_args, "QAPPELL_FORMAT", "csv");
    assert!(stdout_of(&by_flag).starts_with("{"));

    let bad_env = qappell_env(&args, "QAPPELL_FORMAT", "yaml");
    assert_eq!(code_of(&bad_env), 2);
}

#[test]
fn out_flag_writes_the_file_instead_of_stdout() {
    let path = std::env::temp_dir().join(format!("qappell-out-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let to_file = qappell(&[
        "gen",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "3",
        "--out",
        path_str,
    ]);
    assert_eq!(code_of(&to_file), 0);
    assert!(stdout_of(&to_file).is_empty());

    let to_stdout = qappell(&[
        "gen",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "3",
    ]);
    let written = std::fs::read_to_string(&path).expect("file was written");
    assert_eq!(written, stdout_of(&to_stdout));
    std::fs::remove_file(&path).ok();

    let bad = qappell(&[
        "gen",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "3",
        "--out",
        "/nonexistent-dir/qappell.json",
    ]);
    assert_eq!(code_of(&bad), 2);
}

#[test]
fn moments_match_the_frozen_table() {
    let out = qappell(&[
        "moments",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "0, 1\n1, 2\n2, 5\n3, 16\n");

    let tiny = qappell(&[
        "moments",
        "--family",
        "asc",
        "--a",
        "1",
        "--q",
        "2",
        "--max-degree",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout_of(&tiny), "0, 1\n");
}

#[test]
fn latex_renderings_are_wellformed_tabulars() {
    for args in [
        vec![
            "gen",
            "--family",
            "quasi",
            "--alpha",
            "1",
            "--beta",
            "1",
            "--lambda",
            "1",
            "--q",
            "2",
            "--max-degree",
            "3",
            "--format",
            "latex",
        ],
        vec![
            "moments",
            "--family",
            "scaled",
            "--alpha",
            "1",
            "--beta",
            "3",
            "--q",
            "1/2",
            "--max-degree",
            "2",
            "--format",
            "latex",
        ],
        vec![
            "verify",
            "--theorem",
            "all",
            "--family",
            "quasi",
            "--alpha",
            "1",
            "--beta",
            "1",
            "--lambda",
            "2",
            "--q",
            "3",
            "--max-degree",
            "4",
            "--format",
            "latex",
        ],
    ] {
        let out = qappell(&args);
        let stdout = stdout_of(&out);
        assert!(stdout.starts_with("\\begin{tabular}"), "args {args:?}");
        assert!(stdout.ends_with("\\end{tabular}\n"), "args {args:?}");
    }
}

#[test]
fn emitted_json_families_reverify_to_identical_reports() {
    // The round-trip guarantee: parse the family `gen` printed, rerun every
    // check on the parsed value, and compare against the reports `verify`
    // printed for the same flags.
    let flags = [
        "--family",
        "quasi",
        "--alpha",
        "3/2",
        "--beta",
        "-2",
        "--lambda",
        "5/3",
        "--q",
        "1/2",
        "--max-degree",
        "7",
    ];
    let mut gen_args = vec!["gen"];
    gen_args.extend(flags);
    let family: PolyFamily =
        serde_json::from_str(&stdout_of(&qappell(&gen_args))).expect("family parses back");

    let mut verify_args = vec!["verify", "--theorem", "all"];
    verify_args.extend(flags);
    let printed: Vec<VerifyReport> = stdout_of(&qappell(&verify_args))
        .lines()
        .map(|line| serde_json::from_str(line).unwrap())
        .collect();

    let q = QParam::new(Rational::new(1, 2)).unwrap();
    let params = QuasiParams::new(
        Rational::new(3, 2),
        Rational::new(-2, 1),
        Rational::new(5, 3),
        q.clone(),
    )
    .unwrap();
    let tables = ttrr_coeffs(params.alpha(), params.beta(), &q, 12).unwrap();
    let functional = moments_from_recurrence(&tables);
    let related = scaled_family(params.alpha(), params.beta(), &q, 7).unwrap();
    let recomputed = vec![
        appell_report(&family, &q).unwrap(),
        quasi_report(&family, &functional).unwrap(),
        recurrence_report(&family, params.lambda(), &q).unwrap(),
        connection_report(&family, &related, &params).unwrap(),
    ];
    assert_eq!(printed, recomputed);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code_of(&qappell(&["--help"])), 0);
    assert_eq!(code_of(&qappell(&["--version"])), 0);
    assert_eq!(code_of(&qappell(&["gen", "--help"])), 0);
}
