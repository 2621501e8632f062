#![allow(dead_code)]

use std::process::{Command, Output};

/// Runs the binary with a scrubbed environment so ambient QAPPELL_FORMAT
/// cannot leak into assertions.
pub fn qappell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qappell"))
        .args(args)
        .env_remove("QAPPELL_FORMAT")
        .output()
        .expect("binary should run")
}

pub fn qappell_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qappell"))
        .args(args)
        .env_remove("QAPPELL_FORMAT")
        .env(key, value)
        .output()
        .expect("binary should run")
}

pub fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

pub fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

pub fn code_of(output: &Output) -> i32 {
    output.status.code().expect("process exited normally")
}
