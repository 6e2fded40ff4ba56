//! The `fockcalc` command line: operator files in, JSON reports out.
//!
//! [`run`] parses arguments and executes a command in-process, returning
//! what the binary would print and its exit code.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod registry;
pub mod report;
pub mod suites;

use std::ffi::OsString;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::{CliError, EXIT_MALFORMED, EXIT_PASS};

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn execute(cli: &Cli) -> Result<commands::Rendered, CliError> {
    let load = |s: &args::Source, tol: Option<f64>| input::load(s.file.as_deref(), s.example.as_deref(), tol);
    match &cli.command {
        Command::Adjoint { source } => commands::adjoint(load(source, None)?),
        Command::Check { source, mode, tol } => commands::check(load(source, None)?, *mode, *tol),
        Command::Spectrum { source, mode, kmax, n, tol } => commands::spectrum_cmd(load(source, None)?, (*mode).into(), *kmax, *n, *tol),
        Command::Sb { source, direction } => commands::sb(load(source, None)?, *direction),
        Command::Verify { source, suite, seed, n, nodes } => commands::verify(load(source, None)?, *suite, *seed, *n, *nodes),
        Command::Examples => Ok(commands::list_examples()),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let stdout = if cli.text { r.text } else { serde_json::to_string_pretty(&r.json).expect("json renders") + "\n" };
            Outcome { code: r.code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
