use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

/// Runs the binary and returns the exit code with the parsed report (Null
/// when nothing was printed).
pub fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_toricslip")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let value =
        if stdout.trim().is_empty() { Value::Null } else { serde_json::from_str(&stdout).expect("one JSON document") };
    (out.status.code().expect("exit code"), value)
}

/// Like [`run`] but requires exit status 0.
#[allow(dead_code)]
pub fn ok(args: &[&str]) -> Value {
    let (code, value) = run(args);
    assert_eq!(code, 0, "{args:?} exited with {code}");
    value
}

#[allow(dead_code)]
pub fn strings(v: &Value) -> Vec<String> {
    v.as_array().expect("array").iter().map(|s| s.as_str().expect("string").to_string()).collect()
}
