//! Command-line front end for `shiftbound`.
//!
//! [`run`] takes the argument list and the process streams and returns the
//! exit code, so the binary is a thin wrapper and tests drive it in memory.

mod args;
mod commands;
mod error;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, GridSpec, MethodArg};
pub use error::{CliError, Result};

fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    let mut io = commands::Io { stdin, out };
    match cli.command {
        Command::Bounds(a) => commands::bounds(a, &mut io),
        Command::Profile(a) => commands::profile(a, &mut io),
        Command::Graph(a) => commands::graph(a, &mut io),
        Command::Region(a) => commands::region(a, &mut io),
        Command::Spread(a) => commands::spread(a, &mut io),
        Command::Bench(a) => commands::bench(a, &mut io),
        Command::Er(a) => commands::er(a, &mut io),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return CliError::Usage(e.to_string()).exit_code();
        }
    };
    match dispatch(cli, stdin, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
