//! Command-line front end: argument parsing, dispatch, output formats and exit codes.

pub mod args;
pub mod checks;
pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Command, Format};
use commands::{execute, CliError, Context};
use output::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SYMCHAR_CACHE_DIR").map(PathBuf::from));
    let mut ctx = Context { cache_dir, diag: err };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &mut ctx)),
            Err(e) => Err(CliError::Failed(format!("cannot start thread pool: {e}"))),
        },
        None => execute(&cli.command, &mut ctx),
    };
    match result {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            let failed = matches!(cli.command, Command::Check { .. })
                && report.payload.get("passed") == Some(&json!(false));
            if failed {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(ctx.diag, "error: {e}");
            let report = Report::new(json!({
                "error": {"kind": e.kind(), "message": e.to_string()},
            }));
            let format = if cli.format == Format::Csv { Format::Json } else { cli.format };
            let _ = out.write_all(report.render(format).as_bytes());
            e.exit_code()
        }
    }
}
