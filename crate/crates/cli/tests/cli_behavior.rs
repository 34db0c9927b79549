//! Exit-code contract and error reporting of the binary: 0 success,
//! 1 domain errors, 2 usage errors; errors go to stderr and name the
//! offending input.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_altset"))
}

fn data(file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(file)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn success_exits_zero_with_clean_stderr() {
    let (code, stdout, stderr) = run(&["classify", "w^2 + 3"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, "infinite\n");
    assert!(stderr.is_empty());
}

#[test]
fn domain_errors_exit_one() {
    // standard part of an infinite element
    let (code, stdout, stderr) = run(&["st", "w"]);
    assert_eq!(code, Some(1));
    assert!(stdout.is_empty());
    assert!(stderr.contains("no standard part"), "stderr: {stderr}");

    // malformed expression
    let (code, _, stderr) = run(&["classify", "3 +"]);
    assert_eq!(code, Some(1));
    assert!(stderr.contains("parse error"));

    // sequence with a denominator root
    let (code, _, stderr) = run(&["prolong", "(1)/(n - 3)"]);
    assert_eq!(code, Some(1));
    assert!(stderr.contains("index 3"));

    // unreadable file is named in the message
    let (code, _, stderr) = run(&["connected", "--points", "/no/such/file", "--theta", "1"]);
    assert_eq!(code, Some(1));
    assert!(stderr.contains("/no/such/file"));

    // invalid horizon band
    let (code, _, stderr) = run(&["feasible-scan", "--soft", "9", "--hard", "9"]);
    assert_eq!(code, Some(1));
    assert!(stderr.contains("soft=9"));

    // family/subcommand kind mismatch
    let (code, _, stderr) = run(&["sigma", "--family", "infinitesimal-band", "--x", "0"]);
    assert_eq!(code, Some(1));
    assert!(stderr.contains("pi"));
}

#[test]
fn usage_errors_exit_two() {
    // unknown flag is rejected, not ignored
    let (code, _, _) = run(&["classify", "--bogus", "w"]);
    assert_eq!(code, Some(2));

    // unknown subcommand
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, Some(2));

    // an indiscernibility mode flag is required...
    let (code, _, _) = run(&["connected", "--points", &data("grid.txt")]);
    assert_eq!(code, Some(2));

    // ...and only one may be given
    let (code, _, _) = run(&[
        "connected",
        "--points",
        &data("grid.txt"),
        "--theta",
        "1",
        "--epsilon",
        "1",
    ]);
    assert_eq!(code, Some(2));
}

#[test]
fn spec_modes_are_all_reachable() {
    let grid = data("grid.txt");
    let (code, stdout, _) = run(&["connected", "--points", &grid, "--epsilon", "1/3"]);
    assert_eq!(code, Some(0));
    assert!(stdout.starts_with("connected="));

    // at ideal scale, distinct standard rationals are all discernible
    let (code, stdout, _) = run(&["connected", "--points", &grid, "--ideal-scale", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.lines().next(), Some("connected=false"));
}

#[test]
fn figure_output_reparses_as_a_point_file() {
    let (code, stdout, _) = run(&[
        "figure",
        "--points",
        &data("origin.txt"),
        "--ambient",
        &data("grid.txt"),
        "--theta",
        "1",
    ]);
    assert_eq!(code, Some(0));
    let reparsed = altset::continuum::parse_points(&stdout).unwrap();
    assert_eq!(reparsed.len(), stdout.lines().count());
}

#[test]
fn config_flags_override_config_file() {
    let config = data("horizon.cfg");
    let (code, stdout, _) = run(&[
        "feasible-scan",
        "--config",
        &config,
        "--soft",
        "2",
        "--hard",
        "4",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(
        stdout,
        "n=0 verdict=In\nn=1 verdict=In\nn=2 verdict=BeyondHorizon\nn=3 verdict=BeyondHorizon\nn=4 verdict=Out\n"
    );
}
