mod common;

use std::process::{Command, Output};

use common::fixture;
use tempfile::tempdir;
use varqa::hamiltonian::{exact_diagonalize, PauliHamiltonian, SpinOrdering};
use varqa::scan::{read_hamiltonian, Format, CSV_HEADER};

fn varqa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varqa")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn scan_prints_csv_for_a_fixture() {
    let src = format!("0.735={}", fixture("pauli/h2_0.735.pauli").display());
    let out = varqa(&["scan", &src, "--digitizer", "d1", "--no-timings", "--threads", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "0.735");
    assert_eq!(row[4], "2048");
    assert_eq!(row[6], "");
    let varqa: f64 = row[1].parse().unwrap();
    let exact: f64 = row[2].parse().unwrap();
    assert!(varqa >= exact - 1e-9);
}

#[test]
fn empty_source_list_writes_header_only() {
    let dir = tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = varqa(&["scan", "--output", csv.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(csv).unwrap().trim_end(), CSV_HEADER.join(","));
}

#[test]
fn config_file_paths_resolve_against_its_directory() {
    let dir = tempdir().unwrap();
    std::fs::copy(fixture("pauli/h2_1.000.pauli"), dir.path().join("h2.pauli")).unwrap();
    let config = dir.path().join("scan.toml");
    std::fs::write(
        &config,
        r#"
seed = 3
timings = false
output = "curve.csv"
report = "curve.txt"

[[sources]]
label = "1.000"
path = "h2.pauli"

[digitizer]
kind = "d1"
mode = "random"
trials = 64
"#,
    )
    .unwrap();
    let out = varqa(&["scan", "--config", config.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).is_empty());
    let csv = std::fs::read_to_string(dir.path().join("curve.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.lines().nth(1).unwrap().starts_with("1.000,"));
    assert!(dir.path().join("curve.txt").exists());
}

#[test]
fn missing_source_exits_with_two() {
    let out = varqa(&["scan", "x=/nonexistent/h.pauli"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonexistent"));
}

#[test]
fn unknown_config_key_exits_with_two() {
    let dir = tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    std::fs::write(&config, "sead = 1\n").unwrap();
    let out = varqa(&["scan", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_row_exits_with_one_and_keeps_other_rows() {
    let dir = tempdir().unwrap();
    let tiny = dir.path().join("tiny.pauli");
    std::fs::write(&tiny, "# qubits: 2\n-1 II\n0.5 ZI\n0.5 IZ\n").unwrap();
    let h2 = fixture("pauli/h2_1.000.pauli");
    let out = varqa(&[
        "scan",
        &format!("tiny={}", tiny.display()),
        &format!("h2={}", h2.display()),
        "--digitizer",
        "d1",
        "--excited-k",
        "5",
        "--no-timings",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(!rows[0].ends_with(','), "tiny row should carry an error: {}", rows[0]);
    assert!(rows[1].ends_with(','), "h2 row should succeed: {}", rows[1]);
}

#[test]
fn convert_fcidump_round_trips_through_pauli_text() {
    let dir = tempdir().unwrap();
    let input = fixture("fcidump/h2_0.735.fcidump");
    let output = dir.path().join("h2.pauli");
    let out = varqa(&["convert", input.to_str().unwrap(), output.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let written = std::fs::read_to_string(&output).unwrap();
    let reread = PauliHamiltonian::from_text(&written).unwrap();
    assert_eq!(reread.to_text(), written);
    let direct = read_hamiltonian(
        &std::fs::read_to_string(&input).unwrap(),
        Format::Fcidump,
        SpinOrdering::Blocked,
    )
    .unwrap();
    let a = exact_diagonalize(&reread).unwrap().ground_energy();
    let b = exact_diagonalize(&direct).unwrap().ground_energy();
    assert!((a - b).abs() < 1e-12);
    assert_eq!(written, std::fs::read_to_string(fixture("pauli/h2_0.735.pauli")).unwrap());
}

#[test]
fn convert_rejects_fcidump_output() {
    let dir = tempdir().unwrap();
    let out = varqa(&[
        "convert",
        fixture("pauli/h2_0.735.pauli").to_str().unwrap(),
        dir.path().join("x.fcidump").to_str().unwrap(),
        "--to",
        "fcidump",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
