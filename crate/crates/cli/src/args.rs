use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{OutputFormat, DEFAULT_ORDER};

#[derive(Debug, Parser)]
#[command(
    name = "central",
    version,
    about = "Central (C) transform, Riordan arrays and Hankel transforms of integer sequences"
)]
pub struct Cli {
    /// Truncation order for generating-function expansions (at least 2).
    #[arg(long, global = true, env = "CENTRAL_ORDER", default_value_t = DEFAULT_ORDER, value_parser = parse_order)]
    pub order: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Directory holding cached OEIS responses.
    #[arg(
        long,
        global = true,
        env = "CENTRAL_CACHE_DIR",
        default_value = ".central-cache"
    )]
    pub cache_dir: PathBuf,

    /// Allow `identify` to query oeis.org; otherwise only the cache is read.
    #[arg(long, global = true)]
    pub online: bool,

    /// Exit with status 5 when any verification report fails.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Leave the timestamp out of JSON output.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_order(text: &str) -> Result<usize, String> {
    let n: usize = text.parse().map_err(|e| format!("{e}"))?;
    if n < 2 {
        return Err("order must be at least 2".into());
    }
    Ok(n)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a generating function, e.g. "(1-sqrt(1-4*x))/(2*x)".
    Expand {
        #[arg(allow_hyphen_values = true)]
        gf: String,
    },
    /// C transform 1/(sqrt(1-4x) g(x c(x)^2)) of a generating function or sequence.
    Ctransform(SeriesInput),
    /// Inverse C transform.
    Cinverse(SeriesInput),
    /// Hankel transform of a sequence.
    Hankel {
        #[command(flatten)]
        input: SequenceInput,
        /// Number of determinants.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Rational generating function reproducing a sequence, with holdout check.
    Fitgf {
        #[command(flatten)]
        input: SequenceInput,
        #[arg(long, default_value_t = 4)]
        num_deg: usize,
        #[arg(long, default_value_t = 4)]
        den_deg: usize,
    },
    /// Expand the J-fraction 1/(1 - b0 x + a1 x^2/(1 - b1 x + ...)).
    Jfrac {
        /// Leading linear coefficients b0, b1, ...
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        linear: Vec<String>,
        /// Pattern repeated after the leading linear coefficients.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        repeat: Vec<String>,
        /// Coupling coefficients a1, a2, ...; a single value is used at every level.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "1"
        )]
        coupling: Vec<String>,
    },
    /// Check the identities and conjectures of one family, or `all`.
    Verify(VerifyArgs),
    /// Reproduce a table of transforms.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        /// Largest r for the aerated table.
        #[arg(long, default_value_t = 12)]
        rows: usize,
    },
    /// Look a sequence up in the OEIS (cache only unless --online).
    Identify {
        #[command(flatten)]
        input: SequenceInput,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SeriesInput {
    /// Generating-function expression.
    #[arg(allow_hyphen_values = true)]
    pub gf: Option<String>,
    /// Sequence file: JSON array of decimal strings, or one value per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SequenceInput {
    /// Comma-separated terms, e.g. 1,2,6,20,70.
    #[arg(allow_hyphen_values = true)]
    pub terms: Option<String>,
    /// Sequence file: JSON array of decimal strings, or one value per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Family id (linear-ratio, quadratic-denominator, ...), numeric alias, or `all`.
    pub family: String,
    /// Values for parameter a: a list `-2,1` or a range `-3..3`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Values for parameter b, same syntax.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Values for parameter r, same syntax.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Values for parameter s, same syntax.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Hankel terms compared per conjecture.
    #[arg(long, default_value_t = central_core::families::DEFAULT_PREFIX)]
    pub prefix: usize,
    /// Include the worked examples even when a parameter grid is given.
    #[arg(long, conflicts_with = "no_examples")]
    pub examples: bool,
    /// Leave out the worked examples.
    #[arg(long)]
    pub no_examples: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Simple inputs with their images and Hankel generating functions.
    Simple,
    /// Images of (1+x^r)/(1-x^r) as rational functions.
    Aerated,
    /// Tree-mutation sequences and their pre-images.
    Trees,
}
