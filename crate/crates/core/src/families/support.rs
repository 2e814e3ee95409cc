//! Shared plumbing for the family verifiers.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expr::expand_str;
use crate::families::report::{Claims, VerificationReport};
use crate::hankel::{fit_rational_gf_rational, hankel_transform_series, holdout_size, RationalGF};
use crate::series::{rat, PowerSeries, Rational};

/// Terms compared by exact series identities (coefficients 0..=20).
pub const IDENTITY_TERMS: usize = 21;

/// First `n` coefficients of `s`.
pub fn prefix(s: &PowerSeries, n: usize) -> Result<Vec<Rational>> {
    if s.coeffs().len() < n {
        return Err(Error::InsufficientTerms {
            needed: n,
            got: s.coeffs().len(),
        });
    }
    Ok(s.coeffs()[..n].to_vec())
}

/// First `n` coefficients of a fallible series.
pub fn prefix_of(s: &Result<PowerSeries>, n: usize) -> Result<Vec<Rational>> {
    s.as_ref().map_err(Clone::clone).and_then(|s| prefix(s, n))
}

/// First `n` Hankel determinants of a fallible series.
pub fn hankel_of(s: &Result<PowerSeries>, n: usize) -> Result<Vec<Rational>> {
    s.as_ref()
        .map_err(Clone::clone)
        .and_then(|s| hankel_transform_series(s, n))
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&t| rat(t)).collect()
}

/// Substitutes `{name}` placeholders with parenthesized integers.
pub fn fill(template: &str, params: &[(&str, i64)]) -> String {
    params.iter().fold(template.to_string(), |acc, (k, v)| {
        acc.replace(&format!("{{{k}}}"), &format!("({v})"))
    })
}

pub fn gf(template: &str, params: &[(&str, i64)], order: usize) -> Result<PowerSeries> {
    expand_str(&fill(template, params), order)
}

/// Smallest prefix length (at least 10) leaving `d1 + d2 + 1` terms for the
/// linear solve after the holdout is set aside.
pub fn fit_prefix_len(d1: usize, d2: usize) -> usize {
    (10..)
        .find(|&len| len - holdout_size(len) > d1 + d2)
        .expect("unbounded search")
}

/// Series order large enough for `m` Hankel terms and any fit used here
/// (rational forms up to degree 6 over 7).
pub fn work_order(m: usize) -> usize {
    2 * m.max(fit_prefix_len(6, 7))
}

/// Coefficients of `p` then `q`, zero-padded to `d1 + 1` and `d2 + 1`.
fn padded_form(gf: &RationalGF, d1: usize, d2: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(d1 + d2 + 2);
    out.extend((0..=d1).map(|k| gf.numerator().coeff(k)));
    out.extend((0..=d2).map(|k| gf.denominator().coeff(k)));
    out
}

/// Checks a Hankel generating-function claim twice: termwise against the
/// expansion of `claimed`, and by refitting a rational form to the computed
/// Hankel prefix and comparing canonical coefficients.
pub(crate) fn hankel_claims(
    claims: &mut Claims,
    label: &str,
    image: &Result<PowerSeries>,
    claimed: Result<RationalGF>,
    m: usize,
    note: &str,
) {
    let image = match image {
        Ok(s) => s,
        Err(e) => {
            claims.values(label, Err(e.clone()), Ok(Vec::new()), note);
            return;
        }
    };
    let claimed = match claimed {
        Ok(g) => g,
        Err(e) => {
            claims.values(label, Ok(Vec::new()), Err(e), note);
            return;
        }
    };
    let mut note = note.to_string();
    let computed = hankel_transform_series(image, m);
    claims.values(label, computed, prefix(&claimed.expand(m), m), note.clone());

    let (d1, d2) = (claimed.numerator().degree(), claimed.denominator().degree());
    let len = fit_prefix_len(d1, d2);
    let fitted =
        hankel_transform_series(image, len).and_then(|h| fit_rational_gf_rational(&h, d1, d2));
    if !note.is_empty() {
        note.push_str("; ");
    }
    note.push_str(&format!("refit on {len} terms, coefficients of p then q"));
    claims.values(
        &format!("{label}-fit"),
        fitted.map(|g| padded_form(&g, d1, d2)),
        Ok(padded_form(&claimed, d1, d2)),
        note,
    );
}

/// Expected-side rational function from integer coefficient lists.
pub fn rational(numerator: &[i64], denominator: &[i64]) -> Result<RationalGF> {
    RationalGF::from_ints(numerator, denominator)
}

/// Notes when reducing a claimed form lowered its nominal degrees.
pub fn degeneracy_note(
    claimed: &Result<RationalGF>,
    nominal_num: usize,
    nominal_den: usize,
) -> String {
    match claimed {
        Ok(g) if g.numerator().degree() < nominal_num || g.denominator().degree() < nominal_den => {
            format!(
                "claimed form degenerates to {} at these parameters",
                g.to_text()
            )
        }
        _ => String::new(),
    }
}

/// Number of leading coefficients on which two series agree.
pub fn agreement_length(a: &PowerSeries, b: &PowerSeries) -> usize {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .take_while(|(x, y)| x == y)
        .count()
}

/// Runs `f` on every grid cell concurrently; output keeps row-major order.
pub fn grid2<F>(range: &[i64], f: F) -> Vec<VerificationReport>
where
    F: Fn(i64, i64) -> Vec<VerificationReport> + Sync,
{
    let cells: Vec<(i64, i64)> = range
        .iter()
        .flat_map(|&a| range.iter().map(move |&b| (a, b)))
        .collect();
    cells.par_iter().map(|&(a, b)| f(a, b)).flatten().collect()
}

pub fn grid1<F>(range: &[i64], f: F) -> Vec<VerificationReport>
where
    F: Fn(i64) -> Vec<VerificationReport> + Sync,
{
    range.par_iter().map(|&a| f(a)).flatten().collect()
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_lengths() {
        assert_eq!(fit_prefix_len(1, 2), 10);
        assert_eq!(fit_prefix_len(3, 4), 12);
        assert_eq!(fit_prefix_len(6, 7), 18);
        assert_eq!(work_order(10), 36);
    }

    #[test]
    fn templates() {
        assert_eq!(
            fill("(1+{a}*x)/(1+{b}*x)", &[("a", -2), ("b", 1)]),
            "(1+(-2)*x)/(1+(1)*x)"
        );
    }
}
