//! Integer sequences indexed from 0, with JSON and CSV forms.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::series::{PowerSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntSequence(Vec<BigInt>);

impl IntSequence {
    pub fn new(terms: Vec<BigInt>) -> Self {
        IntSequence(terms)
    }

    pub fn from_i64s<I: IntoIterator<Item = i64>>(terms: I) -> Self {
        IntSequence(terms.into_iter().map(BigInt::from).collect())
    }

    /// Coefficients of `s`, asserting each one is an integer.
    pub fn from_series(s: &PowerSeries) -> Result<Self> {
        s.to_integers().map(IntSequence)
    }

    pub fn to_series(&self) -> PowerSeries {
        PowerSeries::from_bigints(&self.0)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, n: usize) -> Self {
        IntSequence(self.0[..n.min(self.0.len())].to_vec())
    }

    /// One decimal value per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for t in &self.0 {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }

    /// Reads either a JSON array (of strings or numbers) or comma/newline
    /// separated decimal values.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            let raw: Vec<serde_json::Value> = serde_json::from_str(trimmed)
                .map_err(|e| Error::Invalid(format!("sequence JSON: {e}")))?;
            return raw
                .iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => parse_int(s),
                    serde_json::Value::Number(n) => parse_int(&n.to_string()),
                    other => Err(Error::Invalid(format!("`{other}` is not an integer"))),
                })
                .collect::<Result<Vec<_>>>()
                .map(IntSequence);
        }
        trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_int)
            .collect::<Result<Vec<_>>>()
            .map(IntSequence)
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("`{s}` is not an integer")))
}

impl Index<usize> for IntSequence {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl From<Vec<BigInt>> for IntSequence {
    fn from(v: Vec<BigInt>) -> Self {
        IntSequence(v)
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

impl Serialize for IntSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Vec::<String>::deserialize(deserializer)?;
        v.iter()
            .map(|s| parse_int(s))
            .collect::<Result<Vec<_>>>()
            .map(IntSequence)
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    #[test]
    fn parse_formats() {
        let want = IntSequence::from_i64s([1, -2, 30]);
        assert_eq!(IntSequence::parse(r#"["1", "-2", "30"]"#).unwrap(), want);
        assert_eq!(IntSequence::parse("[1, -2, 30]").unwrap(), want);
        assert_eq!(IntSequence::parse("1,-2,30").unwrap(), want);
        assert_eq!(IntSequence::parse("1\n-2\n30\n").unwrap(), want);
        assert!(IntSequence::parse("1, x").is_err());
        assert!(IntSequence::parse("[1.5]").is_err());
    }

    #[test]
    fn json_keeps_big_values() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = IntSequence::new(vec![big.clone(), BigInt::from(-1)]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"["123456789012345678901234567890","-1"]"#);
        assert_eq!(serde_json::from_str::<IntSequence>(&text).unwrap(), s);
        assert_eq!(s.to_csv(), "123456789012345678901234567890\n-1\n");
    }

    #[test]
    fn series_export_requires_integers() {
        let s = PowerSeries::new(vec![ratio(1, 1), ratio(1, 2)]);
        assert!(matches!(
            IntSequence::from_series(&s),
            Err(Error::NonIntegral { index: 1, .. })
        ));
    }
}
