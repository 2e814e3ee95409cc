use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use crate::args::Cli;

/// Enough for 10 Hankel terms plus the fit holdout.
pub const DEFAULT_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OeisMode {
    /// Cache only; never opens a connection.
    Offline,
    Online,
}

/// Settings shared by every subcommand. `order >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub order: usize,
    pub output_format: OutputFormat,
    pub oeis_mode: OeisMode,
    pub cache_dir: PathBuf,
    pub strict: bool,
    pub timestamp: bool,
}

impl From<&Cli> for CliConfig {
    fn from(cli: &Cli) -> Self {
        CliConfig {
            order: cli.order,
            output_format: cli.format,
            oeis_mode: if cli.online {
                OeisMode::Online
            } else {
                OeisMode::Offline
            },
            cache_dir: cli.cache_dir.clone(),
            strict: cli.strict,
            timestamp: !cli.no_timestamp,
        }
    }
}
