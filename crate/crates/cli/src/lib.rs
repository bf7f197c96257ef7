//! Command-line surface: the semiring file format, the report document and
//! the subcommand dispatcher behind the `semiring` binary.

mod commands;
pub mod file;
pub mod report;

use clap::error::ErrorKind;
use clap::Parser;

pub use file::{parse_semiring_file, serialize_semiring, ParseError};
pub use report::{emit_report, Format, Input, Report, Verdict, SCHEMA_VERSION};

use commands::Cli;

/// Runs one invocation (`argv[0]` is the program name) and returns the exit
/// code with the rendered document.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let json = argv.iter().any(|a| a == "--json");
    match Cli::try_parse_from(&argv) {
        Ok(cli) => {
            let format = if cli.json { Format::Json } else { Format::Text };
            let report = commands::execute(cli.command);
            (report.verdict.exit_code(), emit_report(&report, format))
        }
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            (0, e.render().to_string())
        }
        Err(e) if json => {
            let report = Report::error("usage", None, e.kind().to_string());
            (1, emit_report(&report, Format::Json))
        }
        Err(e) => (1, e.render().to_string()),
    }
}
