//! The `plotforge` command: render, validate and serve plot specs.

pub mod commands;
pub mod protocol;
pub mod serve;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "plotforge", version, about = "Render, validate and serve plot specs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Png,
    Eps,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Render a spec to one PNG or EPS file.
    Render {
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        #[arg(long, value_enum, default_value_t = Format::Png)]
        format: Format,
    },
    /// Check a spec without rendering; prints one issue per line.
    Validate { spec: PathBuf },
    /// Serve the viewer protocol over WebSocket.
    Serve {
        spec: PathBuf,
        #[arg(long, default_value_t = 8765)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
    },
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Cmd::Render {
            spec,
            out,
            width,
            height,
            format,
        } => commands::render(&spec, &out, width, height, format),
        Cmd::Validate { spec } => {
            let report = commands::validate(&spec);
            let mut out = io::stdout().lock();
            for line in &report.lines {
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            return report.exit_code;
        }
        Cmd::Serve { spec, port, bind } => serve::run(&spec, &bind, port),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
