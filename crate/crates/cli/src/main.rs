use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

mod args;
mod commands;
mod output;

use args::{Cli, Command, ConfigFile};
use output::{manifest_path, RunManifest, Table};

/// Everything that ends a run early, with its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, config or grid shape.
    Usage(String),
    /// The library rejected the inputs or could not evaluate them.
    Domain(String),
    /// Writing the results failed.
    Io(String),
}

impl From<cespot::Error> for Failure {
    fn from(e: cespot::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) | Failure::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Io(m) => m,
        }
    }
}

const VERIFY_FAILED: u8 = 3;

fn emit<S: Serialize>(
    table: &Table,
    command: &str,
    settings: &S,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let io_err = |e: &dyn std::fmt::Display| Failure::Io(e.to_string());
    match output {
        None => {
            let stdout = io::stdout();
            table.write(stdout.lock()).map_err(|e| io_err(&e))
        }
        Some(path) => {
            let file =
                File::create(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            table.write(BufWriter::new(file)).map_err(|e| io_err(&e))?;
            let manifest = RunManifest::new(command, settings, path).map_err(|e| io_err(&e))?;
            let mpath = manifest_path(path);
            let mut json = serde_json::to_string_pretty(&manifest).map_err(|e| io_err(&e))?;
            json.push('\n');
            std::fs::write(&mpath, json)
                .map_err(|e| Failure::Io(format!("{}: {e}", mpath.display())))
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path).map_err(Failure::Usage)?,
        None => ConfigFile::default(),
    };
    let output = cli.output.as_deref();
    match cli.command {
        Command::Potential(a) => {
            let s = a.resolve(file.potential);
            emit(&commands::potential(&s)?, "potential", &s, output)?;
        }
        Command::Scatter(a) => {
            let s = a.resolve(file.scatter);
            emit(&commands::scatter(&s)?, "scatter", &s, output)?;
        }
        Command::Qnm(a) => {
            let s = a.resolve(file.qnm);
            emit(&commands::qnm_table(&s)?, "qnm", &s, output)?;
        }
        Command::Verify(a) => {
            let s = a.resolve(file.verify);
            let report = commands::verify(&s)?;
            if output.is_some() {
                emit(&commands::report_table(&report), "verify", &s, output)?;
            }
            let mut stdout = io::stdout().lock();
            write!(stdout, "{report}").map_err(|e| Failure::Io(e.to_string()))?;
            if !report.all_passed() {
                return Ok(VERIFY_FAILED);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
