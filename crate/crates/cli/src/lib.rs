//! The `central` command line: argument parsing, command dispatch and output
//! rendering, kept in a library so tests can drive it in-process.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod oeis;
pub mod output;

use std::ffi::OsString;

use clap::Parser;

pub use config::{CliConfig, OeisMode, OutputFormat};
pub use error::{exit, CliError};

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs one command. The transport
/// is used only by `identify --online` on a cache miss.
pub fn run<I, T>(argv: I, transport: &mut dyn oeis::Transport) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: exit::USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: exit::OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = CliConfig::from(&cli);
    match commands::execute(&cli.command, &config, transport) {
        Ok(done) => {
            let code = if config.strict && done.failures > 0 {
                exit::STRICT_FAILURE
            } else {
                exit::OK
            };
            let mut stderr: String = done.warnings.iter().map(|w| format!("{w}\n")).collect();
            if done.failures > 0 {
                stderr.push_str(&format!(
                    "{} verification report(s) failed\n",
                    done.failures
                ));
            }
            Outcome {
                code,
                stdout: done.output.render(config.output_format, config.timestamp),
                stderr,
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
