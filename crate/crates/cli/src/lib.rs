//! Library half of the `bdk` binary, so every subcommand is callable from tests.

mod args;
mod commands;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use thiserror::Error;

pub use args::{Cli, Command, FamilyArg, Format, Record};
pub use commands::{cmd_analyze, cmd_closed_form, cmd_kovacic, cmd_simulate, Config};
pub use verify::{cmd_verify, pde_check, verify_report, Check, VerifyReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Exact(#[from] exactmath::ExactError),
    #[error(transparent)]
    Pipeline(#[from] galois_pipeline::PipelineError),
    #[error(transparent)]
    Model(#[from] birthdeath::ModelError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("rendering output: {0}")]
    Render(String),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 for environment failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Render(_) => 1,
            _ => 2,
        }
    }
}

/// What a subcommand produced: the rendered document and whether every
/// check inside it passed (only `verify` can say no).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn dispatch(command: &Command, stdout: &mut dyn Write) -> Result<bool, CliError> {
    let (out, path) = match command {
        Command::Kovacic(a) => (cmd_kovacic(a)?, a.out.as_deref()),
        Command::Analyze(a) => (cmd_analyze(a)?, a.output.as_deref()),
        Command::Simulate(a) => (cmd_simulate(a)?, a.output.as_deref()),
        Command::ClosedForm(a) => (cmd_closed_form(a)?, a.output.as_deref()),
        Command::Verify(a) => (cmd_verify(a)?, a.output.as_deref()),
    };
    emit(&out.text, path, stdout)?;
    Ok(out.ok)
}

/// Parses `argv` and runs it; returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli.command, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
