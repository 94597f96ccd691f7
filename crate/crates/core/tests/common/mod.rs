#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

pub const BLESS_ENV: &str = "MOBIUSKIT_BLESS";

#[derive(Deserialize)]
pub struct GoldenCase {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn manifest() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(crate_dir().join("tests/golden/manifest.json")).expect("manifest");
    serde_json::from_str(&text).expect("manifest parses")
}

/// Runs one case from the crate directory; returns (exit code, stdout).
pub fn run_case(case: &GoldenCase) -> (i32, String) {
    let args: Vec<String> = std::iter::once("mobiuskit".to_string()).chain(case.args.iter().cloned()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let cwd = std::env::current_dir().expect("cwd");
    assert_eq!(cwd, crate_dir(), "golden cases run from the crate directory");
    let code = mobiuskit::cli::run_with_env(&args, None, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 report"))
}

/// Checks every case against its committed report, rewriting the reports
/// instead when the bless variable is set.
pub fn check_goldens() -> Vec<(String, Result<(), String>)> {
    let bless = std::env::var_os(BLESS_ENV).is_some();
    let dir = crate_dir().join("tests/golden");
    manifest()
        .iter()
        .map(|case| {
            let (code, out) = run_case(case);
            let path = dir.join(format!("{}.json", case.name));
            let verdict = if code != case.exit {
                Err(format!("exit {code}, expected {}", case.exit))
            } else if bless {
                std::fs::write(&path, &out).map_err(|e| e.to_string())
            } else {
                match std::fs::read_to_string(&path) {
                    Ok(expected) if expected == out => Ok(()),
                    Ok(_) => Err(format!("output differs from {}", path.display())),
                    Err(e) => Err(format!("{}: {e}", path.display())),
                }
            };
            (case.name.clone(), verdict)
        })
        .collect()
}

/// Data files that no golden case reads.
pub fn unexercised_data_files() -> Vec<String> {
    let used: BTreeSet<String> = manifest()
        .iter()
        .flat_map(|c| c.args.iter().filter(|a| a.starts_with("data/")).cloned())
        .collect();
    let mut missing = Vec::new();
    for entry in std::fs::read_dir(crate_dir().join("data")).expect("data dir") {
        let name = entry.expect("entry").file_name().to_string_lossy().into_owned();
        let rel = format!("data/{name}");
        if !used.contains(&rel) {
            missing.push(rel);
        }
    }
    missing.sort();
    missing
}

pub fn data(name: &str) -> PathBuf {
    crate_dir().join("data").join(Path::new(name))
}
