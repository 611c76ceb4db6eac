#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data/inventories")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn ontoqual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ontoqual"))
        .args(args)
        .output()
        .expect("spawn ontoqual")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// The golden runs: file name and CLI arguments, fixtures by file name.
pub const GOLDEN_RUNS: &[(&str, &[&str])] = &[
    ("evaluate-spo.txt", &["evaluate", "spo.json"]),
    (
        "evaluate-processco-v1.2.txt",
        &["evaluate", "processco-v1.2.json"],
    ),
    (
        "evaluate-processco-v1.3.txt",
        &["evaluate", "processco-v1.3.json"],
    ),
    (
        "compare-spo-processco.txt",
        &["compare", "spo.json", "processco-v1.2.json"],
    ),
    (
        "compare-all.txt",
        &[
            "compare",
            "spo.json",
            "processco-v1.2.json",
            "processco-v1.3.json",
        ],
    ),
    (
        "diff-processco.txt",
        &["diff", "processco-v1.2.json", "processco-v1.3.json"],
    ),
    (
        "evaluate-processco-v1.2.csv",
        &["evaluate", "processco-v1.2.json", "--format", "csv"],
    ),
    (
        "compare-spo-processco.csv",
        &[
            "compare",
            "spo.json",
            "processco-v1.2.json",
            "--format",
            "csv",
        ],
    ),
    (
        "diff-processco.csv",
        &[
            "diff",
            "processco-v1.2.json",
            "processco-v1.3.json",
            "--format",
            "csv",
        ],
    ),
];

/// Runs a golden case, resolving `*.json` arguments to bundled fixtures.
pub fn render_golden(args: &[&str]) -> Output {
    let resolved: Vec<String> = args
        .iter()
        .map(|a| {
            if a.ends_with(".json") {
                fixture(a)
            } else {
                a.to_string()
            }
        })
        .collect();
    let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
    ontoqual(&refs)
}

/// `Ok` on a byte-for-byte match, otherwise the first differing line.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).map_err(|e| format!("cannot update {}: {e}", path.display()))?;
        return Ok(());
    }
    let expected =
        fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    if expected == actual {
        return Ok(());
    }
    let line = expected
        .lines()
        .zip(actual.lines())
        .position(|(e, a)| e != a)
        .unwrap_or_else(|| expected.lines().count().min(actual.lines().count()));
    Err(format!(
        "{name} differs at line {}: expected {:?}, got {:?}",
        line + 1,
        expected.lines().nth(line).unwrap_or("<eof>"),
        actual.lines().nth(line).unwrap_or("<eof>")
    ))
}
