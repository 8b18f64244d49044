//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn mtv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn seq_outputs_exact_rationals() {
    let out = mtv(&["seq", "B", "10", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.trim().ends_with("5/66"), "{text}");

    let out = mtv(&["seq", "GG", "10", "--format", "csv"]);
    assert!(stdout(&out).trim().ends_with(",0,155"));

    let out = mtv(&["seq", "B", "3"]);
    assert_eq!(stdout(&out), "1\n-1/2\n1/6\n0\n");

    let out = mtv(&["seq", "X", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn triangle_emission_matches_reference_cells() {
    let out = mtv(&["triangle", "EE", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().nth(10).unwrap().contains("23536"));

    let out = mtv(&["triangle", "H", "10"]);
    let text = stdout(&out);
    assert!(text.lines().nth(9).unwrap().contains("17,0,14,-6,6,-14,0,-17,0"));

    let out = mtv(&["triangle", "G", "3", "--format", "json"]);
    assert_eq!(stdout(&out).trim(), "[[0],[0,0],[0,1,2],[0,1,1,0]]");

    let out = mtv(&["triangle", "Q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_round_trips_to_exact_integers() {
    let out = mtv(&["triangle", "GG", "10"]);
    let text = stdout(&out);
    for (k, line) in text.lines().enumerate() {
        for (j, cell) in line.split(',').enumerate() {
            if j <= k {
                let parsed: num_bigint::BigInt = cell.parse().unwrap();
                assert_eq!(
                    parsed,
                    mtv_core::triangles::dumont_triangle(k, j).unwrap(),
                    "({k},{j})"
                );
            } else {
                assert!(cell.is_empty());
            }
        }
    }
}

#[test]
fn perm_count_matches_known_values() {
    let out = mtv(&["perm-count", "downup", "--start", "4,1"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = mtv(&["perm-count", "downup", "--total", "5"]);
    assert_eq!(stdout(&out).trim(), "16");
    let out = mtv(&["perm-count", "dumont", "--start", "5,2"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = mtv(&["perm-count", "dumont", "--total", "7"]);
    assert_eq!(stdout(&out).trim(), "17");
    let out = mtv(&["perm-count", "downup", "--total", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tvalue_evaluation_and_errors() {
    let out = mtv(&["tvalue", "T", "2", "--truncation", "20000", "--precision", "96"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2.4674011002723396"), "{text}");
    assert!(text.contains("bounded"), "{text}");

    let out = mtv(&["tvalue", "Ttilde", "1", "--truncation", "20000", "--precision", "96"]);
    let text = stdout(&out);
    assert!(text.contains("1.5707963267948966"), "{text}");

    let out = mtv(&["tvalue", "T", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mtv(&["tvalue", "T", "1,x"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mtv(&["tvalue", "T", "-", "--truncation", "20000"]);
    assert!(stdout(&out).contains("= 1.0"));
}

#[test]
fn calt_single_term_equals_t_tilde() {
    let flags = ["--truncation", "20000", "--precision", "96"];
    let a = mtv(&[&["calt", "E", "2", "0"], &flags[..]].concat());
    let b = mtv(&[&["tvalue", "Ttilde", "2"], &flags[..]].concat());
    let va = stdout(&a).lines().next().unwrap().split('=').nth(1).unwrap().trim().to_string();
    let vb = stdout(&b).lines().next().unwrap().split('=').nth(1).unwrap().trim().to_string();
    assert_eq!(va, vb);
}

#[test]
fn verify_subcommand_reports_and_exit_codes() {
    let out = mtv(&["verify", "--filter", "kt", "--truncation", "20000", "--precision", "96"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.ends_with("pass")).count(), 5);
    assert!(text.contains("5 checks, 5 passed, 0 failed"));

    let out = mtv(&[
        "verify", "--filter", "thm13", "--tol", "1e-6", "--truncation", "20000", "--precision",
        "96",
    ]);
    assert!(out.status.success());

    let out = mtv(&[
        "verify", "--filter", "duality", "--format", "json", "--truncation", "20000",
        "--precision", "96",
    ]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 4);

    let out = mtv(&["verify", "--filter", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mtv(&[
        "verify", "--mutation-probe", "--truncation", "20000", "--precision", "96",
    ]);
    assert!(out.status.success(), "probe run succeeds when every probe FAILs");
    assert_eq!(stdout(&out).matches("FAIL").count(), 3);
}

#[test]
fn config_file_precedence() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("mtv-test-{}.conf", std::process::id()));
    std::fs::write(&path, "precision = 96\ntruncation = 20000\n# comment\n").unwrap();
    let out = mtv(&["--config", path.to_str().unwrap(), "tvalue", "T", "2"]);
    assert!(out.status.success());

    // flag overrides the file
    let out = mtv(&[
        "--config",
        path.to_str().unwrap(),
        "tvalue",
        "T",
        "2",
        "--precision",
        "64",
    ]);
    assert!(out.status.success());

    std::fs::write(&path, "nonsense = 1\n").unwrap();
    let out = mtv(&["--config", path.to_str().unwrap(), "tvalue", "T", "2"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(&path, "precision = 8\n").unwrap();
    let out = mtv(&["--config", path.to_str().unwrap(), "tvalue", "T", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let _ = std::fs::remove_file(&path);
}

#[test]
fn bare_subcommands_use_defaults() {
    for args in [
        &["seq"][..],
        &["triangle"][..],
        &["perm-count"][..],
        &["tvalue"][..],
        &["calt"][..],
        &["verify"][..],
    ] {
        let out = mtv(args);
        assert!(out.status.success(), "mtv {args:?} failed");
    }
}
