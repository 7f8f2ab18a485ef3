//! The `pv` command-line tool as a library, so it can be driven in-process.
//!
//! Exit codes: 0 success, 1 domain error (singular or improper input, bad
//! axis), 2 usage or parse error, 3 fuzzing found a counterexample.

pub mod commands;
pub mod wire;

use std::io::{Read, Write};

use clap::Parser;

use crate::commands::{execute, Cli, TOL_ENV};

/// Runs `pv` with the given arguments (including the program name) and
/// returns the exit code. Results go to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return e.exit_code();
        }
    };
    let env_tol = std::env::var(TOL_ENV).ok();
    match execute(&cli, stdin, env_tol.as_deref()) {
        Ok(out) => {
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return 2;
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "pv: {e}");
            e.exit_code()
        }
    }
}
