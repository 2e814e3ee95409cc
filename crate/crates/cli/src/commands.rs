use std::fs;
use std::path::Path;

use central_core::ctransform::{c_inverse, c_transform};
use central_core::families::{
    aerated, format_table, tables, trees, verify_family, Family, VerificationReport, VerifyOptions,
};
use central_core::hankel::hankel_transform_series;
use central_core::series::{format_rational, parse_rational};
use central_core::{
    expand_str, fit_rational_gf, hankel_transform, jfraction_expand, IntSequence, JFraction,
    PowerSeries, Rational,
};
use serde_json::{json, Map, Value};

use crate::args::{Command, SequenceInput, SeriesInput, TableKind, VerifyArgs};
use crate::config::CliConfig;
use crate::error::CliError;
use crate::oeis::{self, Cache, Transport};
use crate::output::{self, Output};

/// Result of one command: its output and whether any verification failed.
pub struct Executed {
    pub output: Output,
    pub failures: usize,
    pub warnings: Vec<String>,
}

impl From<Output> for Executed {
    fn from(output: Output) -> Self {
        Executed {
            output,
            failures: 0,
            warnings: Vec::new(),
        }
    }
}

pub fn execute(
    command: &Command,
    config: &CliConfig,
    transport: &mut dyn Transport,
) -> Result<Executed, CliError> {
    match command {
        Command::Expand { gf } => {
            let s = expand_str(gf, config.order)?;
            Ok(series_output("expand", gf, &s).into())
        }
        Command::Ctransform(input) => {
            let (label, g) = read_series(input, config.order)?;
            Ok(series_output("ctransform", &label, &c_transform(&g)?).into())
        }
        Command::Cinverse(input) => {
            let (label, h) = read_series(input, config.order)?;
            Ok(series_output("cinverse", &label, &c_inverse(&h)?).into())
        }
        Command::Hankel { input, count } => {
            let seq = read_sequence(input)?;
            let h = hankel_transform(&seq, *count)?;
            let mut fields = Map::new();
            fields.insert("input".into(), json!(decimal(&seq)));
            fields.insert("count".into(), json!(count));
            Ok(output::terms("hankel", fields, decimal(&h)).into())
        }
        Command::Fitgf {
            input,
            num_deg,
            den_deg,
        } => {
            let seq = read_sequence(input)?;
            let gf = fit_rational_gf(&seq, *num_deg, *den_deg)?;
            let text = gf.to_text();
            let mut json = Map::new();
            json.insert("command".into(), json!("fitgf"));
            json.insert("input".into(), json!(decimal(&seq)));
            json.insert("gf".into(), json!(text));
            json.insert(
                "numerator".into(),
                json!(rationals(gf.numerator().coeffs())),
            );
            json.insert(
                "denominator".into(),
                json!(rationals(gf.denominator().coeffs())),
            );
            let csv = output::csv_text(&["gf"], &[vec![text.clone()]]);
            Ok(Output {
                json,
                text: format!("{text}\n"),
                csv,
            }
            .into())
        }
        Command::Jfrac {
            linear,
            repeat,
            coupling,
        } => jfrac(linear, repeat, coupling, config.order).map(Into::into),
        Command::Verify(args) => verify(args),
        Command::Table { which, rows } => table(*which, *rows),
        Command::Identify { input } => identify(input, config, transport),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_sequence(text: &str) -> Result<IntSequence, CliError> {
    IntSequence::parse(text).map_err(CliError::Parse)
}

/// A generating function expanded to `order`, or a sequence file taken at
/// its own length.
fn read_series(input: &SeriesInput, order: usize) -> Result<(String, PowerSeries), CliError> {
    match (&input.gf, &input.file) {
        (Some(gf), _) => Ok((gf.clone(), expand_str(gf, order)?)),
        (None, Some(path)) => {
            let seq = parse_sequence(&read_file(path)?)?;
            if seq.is_empty() {
                return Err(CliError::Usage(format!(
                    "{} holds no terms",
                    path.display()
                )));
            }
            Ok((path.display().to_string(), seq.to_series()))
        }
        (None, None) => Err(CliError::Usage(
            "give a generating function or --file".into(),
        )),
    }
}

fn read_sequence(input: &SequenceInput) -> Result<IntSequence, CliError> {
    let seq = match (&input.terms, &input.file) {
        (Some(terms), _) => parse_sequence(terms)?,
        (None, Some(path)) => parse_sequence(&read_file(path)?)?,
        (None, None) => return Err(CliError::Usage("give terms or --file".into())),
    };
    if seq.is_empty() {
        return Err(CliError::Usage("the sequence has no terms".into()));
    }
    Ok(seq)
}

fn decimal(seq: &IntSequence) -> Vec<String> {
    seq.terms().iter().map(ToString::to_string).collect()
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn series_output(command: &str, input: &str, s: &PowerSeries) -> Output {
    let mut fields = Map::new();
    fields.insert("input".into(), json!(input));
    fields.insert("order".into(), json!(s.order()));
    output::terms(command, fields, rationals(s.coeffs()))
}

fn parse_values(values: &[String], what: &str) -> Result<Vec<Rational>, CliError> {
    values
        .iter()
        .map(|v| {
            parse_rational(v).map_err(|_| CliError::Usage(format!("{what}: `{v}` is not a number")))
        })
        .collect()
}

fn jfrac(
    linear: &[String],
    repeat: &[String],
    coupling: &[String],
    order: usize,
) -> Result<Output, CliError> {
    let mut lin = parse_values(linear, "--linear")?;
    let pattern = parse_values(repeat, "--repeat")?;
    // depth d fixes the first 2d coefficients
    let needed = (order + 1).div_ceil(2);
    if !pattern.is_empty() {
        let mut cycle = pattern.iter().cycle();
        while lin.len() < needed {
            lin.push(cycle.next().expect("non-empty pattern").clone());
        }
    }
    let couplings = parse_values(coupling, "--coupling")?;
    let levels = lin.len() - 1;
    let quad = match couplings.len() {
        1 => vec![couplings[0].clone(); levels],
        n if n >= levels => couplings[..levels].to_vec(),
        n => {
            return Err(CliError::Usage(format!(
                "depth {} needs {levels} coupling coefficients, got {n}",
                lin.len()
            )))
        }
    };
    let j = JFraction::new(lin, quad)?;
    let s = jfraction_expand(&j, order);
    let mut fields = Map::new();
    fields.insert("linear".into(), json!(rationals(j.linear())));
    fields.insert("coupling".into(), json!(rationals(j.quadratic())));
    fields.insert("order".into(), json!(order));
    fields.insert("exact_terms".into(), json!(j.exact_terms()));
    Ok(output::terms("jfrac", fields, rationals(s.coeffs())))
}

/// `-3..3` (inclusive) or a comma-separated list.
pub fn parse_param_list(text: &str) -> Result<Vec<i64>, String> {
    let int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{t}` is not an integer"))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (int(lo)?, int(hi.trim_start_matches('='))?);
        if lo > hi {
            return Err(format!("empty range {text}"));
        }
        return Ok((lo..=hi).collect());
    }
    let values: Vec<i64> = text.split(',').map(int).collect::<Result<_, _>>()?;
    Ok(values)
}

fn verify(args: &VerifyArgs) -> Result<Executed, CliError> {
    let given: Vec<(&str, &String)> = [
        ("a", &args.a),
        ("b", &args.b),
        ("r", &args.r),
        ("s", &args.s),
    ]
    .into_iter()
    .filter_map(|(name, v)| v.as_ref().map(|v| (name, v)))
    .collect();
    let families: Vec<Family> = if args.family == "all" {
        if let Some((name, _)) = given.first() {
            return Err(CliError::Usage(format!(
                "--{name} needs a single family, not `all`"
            )));
        }
        Family::ALL.to_vec()
    } else {
        vec![args
            .family
            .parse::<Family>()
            .map_err(|_| CliError::Usage(format!("unknown family `{}`", args.family)))?]
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for family in &families {
        let names = family.parameters();
        let mut options = VerifyOptions {
            prefix: args.prefix,
            examples: !args.no_examples && (args.examples || given.is_empty()),
            ..VerifyOptions::default()
        };
        for (name, text) in &given {
            let position = names.iter().position(|n| n == name).ok_or_else(|| {
                CliError::Usage(format!("family `{family}` has no parameter {name}"))
            })?;
            let values =
                parse_param_list(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))?;
            if position == 0 {
                options.first = Some(values);
            } else {
                options.second = Some(values);
            }
        }
        // one-sided grids keep the other parameter's default sweep
        if names.len() == 2 && (options.first.is_some() != options.second.is_some()) {
            let full = central_core::families::DEFAULT_RANGE.to_vec();
            options.first.get_or_insert_with(|| full.clone());
            options.second.get_or_insert(full);
        }
        reports.extend(verify_family(*family, &options));
    }

    let failures = reports.iter().filter(|r| !r.passed()).count();
    let label = if families.len() == 1 {
        families[0].id().to_string()
    } else {
        "all".into()
    };
    let mut json = Map::new();
    json.insert("command".into(), json!("verify"));
    json.insert("family".into(), json!(label));
    json.insert("prefix".into(), json!(args.prefix));
    json.insert("passed".into(), json!(reports.len() - failures));
    json.insert("failed".into(), json!(failures));
    json.insert(
        "reports".into(),
        serde_json::to_value(&reports).expect("reports serialize"),
    );
    let text = format!(
        "{}{} claims checked, {} failed\n",
        format_table(&reports),
        reports.len(),
        failures
    );
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.claim_id.clone(),
                r.parameter_text(),
                if r.passed() { "pass" } else { "fail" }.to_string(),
                r.prefix_length.to_string(),
                rationals(&r.computed_prefix).join(" "),
                rationals(&r.expected_prefix).join(" "),
                r.note.clone(),
            ]
        })
        .collect();
    let csv = output::csv_text(
        &[
            "claim_id",
            "parameters",
            "status",
            "prefix_length",
            "computed",
            "expected",
            "note",
        ],
        &rows,
    );
    Ok(Executed {
        output: Output { json, text, csv },
        failures,
        warnings: Vec::new(),
    })
}

const TABLE_TERMS: usize = 8;

/// Order for tables: enough for `TABLE_TERMS` Hankel determinants.
const TABLE_ORDER: usize = 2 * TABLE_TERMS;

fn joined(v: &[Rational]) -> String {
    rationals(v).join(",")
}

fn table(which: TableKind, rows: usize) -> Result<Executed, CliError> {
    let (name, columns, body): (&str, &[&str], Vec<Vec<String>>) = match which {
        TableKind::Simple => {
            let mut body = Vec::new();
            for row in tables::basic_rows()
                .into_iter()
                .chain(tables::further_rows())
            {
                let img = c_transform(&expand_str(row.input, TABLE_ORDER)?)?;
                let h = hankel_transform_series(&img, TABLE_TERMS)?;
                let hgf = central_core::RationalGF::from_ints(row.hankel.0, row.hankel.1)?;
                body.push(vec![
                    row.input.to_string(),
                    if row.image.is_empty() {
                        "-".into()
                    } else {
                        row.image.to_string()
                    },
                    joined(&img.coeffs()[..TABLE_TERMS]),
                    joined(&h),
                    hgf.to_text(),
                ]);
            }
            (
                "simple",
                &["input", "image", "image_terms", "hankel_terms", "hankel_gf"],
                body,
            )
        }
        TableKind::Aerated => {
            let mut body = Vec::new();
            for r in 1..=rows.max(1) {
                let img = aerated::image(r, TABLE_ORDER.max(2 * r + 2))?;
                body.push(vec![
                    r.to_string(),
                    aerated::ratio_formula_gf(r - 1)?.to_text(),
                    joined(&img.coeffs()[..TABLE_TERMS]),
                    aerated::central_binomial_agreement(r)?.to_string(),
                ]);
            }
            (
                "aerated",
                &["r", "image_gf", "image_terms", "central_binomial_agreement"],
                body,
            )
        }
        TableKind::Trees => {
            let mut body = Vec::new();
            for row in trees::tree_rows() {
                let pre = expand_str(row.preimage, TABLE_ORDER)?;
                let img = c_transform(&pre)?;
                body.push(vec![
                    row.image_id.to_string(),
                    row.comment.to_string(),
                    row.preimage.to_string(),
                    if row.preimage_id.is_empty() {
                        "-".into()
                    } else {
                        row.preimage_id.to_string()
                    },
                    joined(&pre.coeffs()[..TABLE_TERMS]),
                    joined(&img.coeffs()[..TABLE_TERMS]),
                ]);
            }
            (
                "trees",
                &[
                    "image_id",
                    "image",
                    "preimage_gf",
                    "preimage_id",
                    "preimage_terms",
                    "image_terms",
                ],
                body,
            )
        }
    };
    let mut fields = Map::new();
    fields.insert("table".into(), json!(name));
    Ok(output::table("table", fields, columns, body).into())
}

fn identify(
    input: &SequenceInput,
    config: &CliConfig,
    transport: &mut dyn Transport,
) -> Result<Executed, CliError> {
    let seq = read_sequence(input)?;
    let mut warnings = Vec::new();
    if seq.len() < oeis::RECOMMENDED_TERMS {
        warnings.push(format!(
            "warning: {} terms may match many entries; {} or more are recommended",
            seq.len(),
            oeis::RECOMMENDED_TERMS
        ));
    }
    let result = oeis::lookup(
        &seq,
        config.oeis_mode,
        &Cache::new(&config.cache_dir),
        transport,
    );
    let mut json = Map::new();
    json.insert("command".into(), json!("identify"));
    if let Value::Object(fields) = serde_json::to_value(&result).expect("result serializes") {
        json.extend(fields);
    }
    json.insert("identified".into(), json!(result.identified()));
    let source = serde_json::to_value(result.source).expect("source serializes");
    let source = source.as_str().unwrap_or_default();
    let text = if result.identified() {
        let mut t: String = result
            .matches
            .iter()
            .map(|m| format!("{}  {}\n", m.a_number, m.name))
            .collect();
        t.push_str(&format!(
            "({} matches, source: {source})\n",
            result.matches.len()
        ));
        t
    } else {
        format!("unidentified: {}\n", result.reason.as_deref().unwrap_or(""))
    };
    let rows: Vec<Vec<String>> = result
        .matches
        .iter()
        .map(|m| vec![m.a_number.clone(), m.name.clone(), source.to_string()])
        .collect();
    Ok(Executed {
        output: Output {
            json,
            text,
            csv: output::csv_text(&["a_number", "name", "source"], &rows),
        },
        failures: 0,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_lists() {
        assert_eq!(
            parse_param_list("-3..3").unwrap(),
            (-3..=3).collect::<Vec<_>>()
        );
        assert_eq!(parse_param_list("-2").unwrap(), vec![-2]);
        assert_eq!(parse_param_list("1, -2,3").unwrap(), vec![1, -2, 3]);
        assert!(parse_param_list("3..1").is_err());
        assert!(parse_param_list("a").is_err());
    }
}
