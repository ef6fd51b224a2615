//! Helpers for driving the compiled `arrange` binary from integration tests.
//! Every run strips `ARRANGE_THREADS` so the ambient environment cannot
//! change exit codes or output bytes. Each test target uses a subset.
#![allow(dead_code)]

use std::process::{Command, Output};

use serde_json::Value;

pub fn arrange(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrange"))
        .args(args)
        .env_remove("ARRANGE_THREADS")
        .output()
        .expect("binary spawns")
}

pub fn arrange_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrange"))
        .args(args)
        .env_remove("ARRANGE_THREADS")
        .env(key, value)
        .output()
        .expect("binary spawns")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

pub fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

/// Parses stdout as the single JSON object the command contract promises.
pub fn json(out: &Output) -> Value {
    serde_json::from_str(stdout_str(out).trim()).expect("one JSON object on stdout")
}
