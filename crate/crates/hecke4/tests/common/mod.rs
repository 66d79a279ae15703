//! Helper for driving the compiled binary from integration tests.

#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
    report: Option<Value>,
}

impl Run {
    /// The `results` subtree of the printed report. Panics when the run
    /// produced no parseable report, so failures stay loud.
    pub fn results(&self) -> &Value {
        self.report
            .as_ref()
            .and_then(|r| r.get("results"))
            .unwrap_or_else(|| panic!("no results in report; stderr: {}", self.stderr))
    }

    pub fn meta(&self) -> &Value {
        self.report
            .as_ref()
            .and_then(|r| r.get("meta"))
            .unwrap_or_else(|| panic!("no meta in report; stderr: {}", self.stderr))
    }
}

pub fn hecke4(args: &[&str]) -> Run {
    hecke4_env(args, &[])
}

pub fn hecke4_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hecke4"));
    cmd.args(args);
    cmd.env_remove("HECKE4_BUDGET");
    for (key, value) in env {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("stdout is UTF-8");
    let stderr = String::from_utf8(out.stderr).expect("stderr is UTF-8");
    let report = serde_json::from_str(&stdout).ok();
    Run {
        status: out.status.code().expect("exit code"),
        stdout,
        stderr,
        report,
    }
}
