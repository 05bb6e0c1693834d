mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::{CliError, Output};

fn emit(out: &Output, format: Format, path: Option<&Path>) -> Result<(), String> {
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        Format::Text => out.text.clone(),
    };
    match path {
        Some(p) => fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format, out) = match &cli.command {
        Command::Table(a) => (commands::table(a), a.common.format, a.common.out.clone()),
        Command::Splitting(a) => (commands::splitting(a), a.common.format, a.common.out.clone()),
        Command::Dimtable(a) => (commands::dimtable(a), a.common.format, a.common.out.clone()),
        Command::Syzygies(a) => (commands::syzygies(a), a.common.format, a.common.out.clone()),
        Command::Construct(a) => (
            commands::construct(a),
            a.syzygy.common.format,
            a.syzygy.common.out.clone(),
        ),
        Command::Verify(a) => (commands::verify(a), a.common.format, a.common.out.clone()),
        Command::Unexpected(a) => (commands::unexpected(a), a.common.format, a.common.out.clone()),
        Command::Reproduce(a) => (commands::reproduce(a), a.format, a.out.clone()),
    };
    let (output, code) = match result {
        Ok(o) => (Some(o), 0),
        Err(CliError::ChecksFailed(o)) => (Some(o), 3),
        Err(e) => {
            let code = e.exit_code();
            match e {
                CliError::Core(err) => eprintln!("error: {err}"),
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::ChecksFailed(_) => unreachable!(),
            }
            (None, code)
        }
    };
    if let Some(o) = output {
        if let Err(e) = emit(&o, format, out.as_deref()) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code as u8)
}
