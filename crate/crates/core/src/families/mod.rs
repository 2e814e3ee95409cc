//! Family verifiers: each checks stated identities about C-transform images
//! of a parametrized input family and returns one report per claim.

pub mod aerated;
pub mod cubic;
pub mod equal_hankel;
pub mod invert;
pub mod linear_ratio;
pub mod lucas;
pub mod narayana;
pub mod quadratic_denominator;
pub mod report;
pub(crate) mod support;
pub mod tables;
pub mod trees;

use std::fmt;
use std::str::FromStr;

pub use report::{format_table, Status, VerificationReport};

use crate::Error;
use support::{grid1, grid2};

/// Default Hankel prefix length for conjecture checks.
pub const DEFAULT_PREFIX: usize = 10;

/// Default parameter sweep for two-parameter families.
pub const DEFAULT_RANGE: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];

/// Series order for the proved identities of the invert family.
const INVERT_ORDER: usize = 20;

/// Order used for the Narayana round trips.
const NARAYANA_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SimpleTables,
    LinearRatio,
    QuadraticDenominator,
    Invert,
    CubicDenominator,
    Lucas,
    Aerated,
    Narayana,
    Trees,
    EqualHankel,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::SimpleTables,
        Family::LinearRatio,
        Family::QuadraticDenominator,
        Family::Invert,
        Family::CubicDenominator,
        Family::Lucas,
        Family::Aerated,
        Family::Narayana,
        Family::Trees,
        Family::EqualHankel,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::SimpleTables => "simple-tables",
            Family::LinearRatio => "linear-ratio",
            Family::QuadraticDenominator => "quadratic-denominator",
            Family::Invert => "invert",
            Family::CubicDenominator => "cubic-denominator",
            Family::Lucas => "lucas",
            Family::Aerated => "aerated",
            Family::Narayana => "narayana",
            Family::Trees => "trees",
            Family::EqualHankel => "equal-hankel",
        }
    }

    /// Short numeric aliases accepted alongside the ids.
    pub fn alias(self) -> Option<&'static str> {
        match self {
            Family::SimpleTables => Some("4"),
            Family::LinearRatio => Some("5"),
            Family::QuadraticDenominator => Some("6"),
            Family::Invert => Some("6x2"),
            Family::CubicDenominator => Some("7"),
            Family::Lucas => Some("8"),
            Family::Aerated => Some("9"),
            Family::Narayana => Some("10"),
            Family::Trees => Some("11"),
            Family::EqualHankel => Some("12"),
        }
    }

    /// Input generating function, with parameter names in braces.
    pub fn input_form(self) -> &'static str {
        match self {
            Family::SimpleTables => "tabulated inputs",
            Family::LinearRatio => "(1+a*x)/(1+b*x)",
            Family::QuadraticDenominator => "(1+a*x)/(1-b*x^2)",
            Family::Invert => "(1+a*x)/(1-x^2)",
            Family::CubicDenominator => "(1+a*x)/(1-x^3)",
            Family::Lucas => "(1-(r-2)*x+x^2)/(1-s*x-x^2)",
            Family::Aerated => "(1+x^r)/(1-x^r)",
            Family::Narayana => "pre-images of sum_k N(n,k) r^k",
            Family::Trees => "tree-mutation table",
            Family::EqualHankel => "((1+x)/(1-x))^2 and its reciprocal",
        }
    }

    /// Names of the swept parameters.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Family::LinearRatio | Family::QuadraticDenominator => &["a", "b"],
            Family::Invert | Family::CubicDenominator => &["a"],
            Family::Lucas => &["r", "s"],
            Family::Aerated | Family::Narayana => &["r"],
            Family::SimpleTables | Family::Trees | Family::EqualHankel => &[],
        }
    }

    fn default_first(self) -> Vec<i64> {
        match self {
            Family::Aerated => (1..=12).collect(),
            Family::Narayana => (0..=3).collect(),
            _ => DEFAULT_RANGE.to_vec(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s || f.alias() == Some(s))
            .ok_or_else(|| Error::Invalid(format!("unknown family `{s}`")))
    }
}

/// Parameter values and prefix length for a verification run. `None` keeps
/// the family default for that parameter.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub first: Option<Vec<i64>>,
    pub second: Option<Vec<i64>>,
    pub prefix: usize,
    /// Also check the worked examples attached to the family.
    pub examples: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            first: None,
            second: None,
            prefix: DEFAULT_PREFIX,
            examples: true,
        }
    }
}

/// Runs one family over its parameter grid, in parameter order.
pub fn verify_family(family: Family, options: &VerifyOptions) -> Vec<VerificationReport> {
    let m = options.prefix;
    let first = options
        .first
        .clone()
        .unwrap_or_else(|| family.default_first());
    let second = options
        .second
        .clone()
        .unwrap_or_else(|| DEFAULT_RANGE.to_vec());
    let pairs = |f: fn(i64, i64, usize) -> Vec<VerificationReport>| -> Vec<VerificationReport> {
        if first == second {
            grid2(&first, |a, b| f(a, b, m))
        } else {
            first
                .iter()
                .flat_map(|&a| grid1(&second, |b| f(a, b, m)))
                .collect()
        }
    };
    let mut out = match family {
        Family::SimpleTables => tables::verify_simple_tables(m),
        Family::LinearRatio => pairs(linear_ratio::verify_linear_ratio),
        Family::QuadraticDenominator => pairs(quadratic_denominator::verify_quadratic_denominator),
        Family::Invert => grid1(&first, |a| invert::verify_invert_family(a, INVERT_ORDER)),
        Family::CubicDenominator => grid1(&first, |a| cubic::verify_cubic_denominator(a, m)),
        Family::Lucas => pairs(lucas::verify_lucas_family),
        Family::Aerated => grid1(&first, |r| {
            if r < 1 {
                Vec::new()
            } else {
                aerated::verify_aerated(r as usize, m)
            }
        }),
        Family::Narayana => grid1(&first, |r| {
            if r < 0 {
                Vec::new()
            } else {
                narayana::narayana_preimage(r, NARAYANA_ORDER)
            }
        }),
        Family::Trees => trees::verify_trees_table(m),
        Family::EqualHankel => equal_hankel::verify_equal_hankel(m),
    };
    if options.examples {
        out.extend(match family {
            Family::LinearRatio => linear_ratio::linear_ratio_examples(m),
            Family::QuadraticDenominator => {
                quadratic_denominator::quadratic_denominator_examples(m)
            }
            Family::Invert => invert::invert_examples(),
            Family::CubicDenominator => cubic::cubic_examples(m),
            Family::Lucas => lucas::lucas_examples(m),
            Family::Aerated => aerated::aerated_examples(),
            Family::Narayana => narayana::narayana_examples(NARAYANA_ORDER),
            Family::SimpleTables | Family::Trees | Family::EqualHankel => Vec::new(),
        });
    }
    out
}

/// Every family at its defaults.
pub fn all_reports(prefix: usize) -> Vec<VerificationReport> {
    let options = VerifyOptions {
        prefix,
        ..VerifyOptions::default()
    };
    Family::ALL
        .iter()
        .flat_map(|&f| verify_family(f, &options))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_aliases_parse() {
        for f in Family::ALL {
            assert_eq!(f.id().parse::<Family>().unwrap(), f);
            assert_eq!(f.alias().unwrap().parse::<Family>().unwrap(), f);
        }
        assert!("13".parse::<Family>().is_err());
    }
}
