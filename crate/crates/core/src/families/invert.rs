//! Images of `(1 + a x)/(1 - x^2)`: generalized INVERT transforms of the
//! Catalan numbers.

use num_bigint::BigInt;

use crate::ctransform::{c_transform, catalan_transform, invert_alpha};
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{gf, ints, prefix_of, IDENTITY_TERMS};
use crate::riordan::RiordanArray;
use crate::series::{catalan_gf, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "invert";
const INPUT: &str = "(1+{a}*x)/(1-x^2)";

pub(crate) fn image(a: i64, order: usize) -> Result<PowerSeries> {
    gf(INPUT, &[("a", a)], order).and_then(|g| c_transform(&g))
}

/// `(1, x c)(1/(1-x), x/(1-x))(1/(1-x), x)` applied to `1/g`.
pub(crate) fn riordan_route(reciprocal_input: &str, a: i64, order: usize) -> Result<PowerSeries> {
    let chain = RiordanArray::catalan_matrix(order)
        .multiply(&RiordanArray::pascal(order))?
        .multiply(&RiordanArray::appell(gf("1/(1-x)", &[], order)?)?)?;
    chain.apply(&gf(reciprocal_input, &[("a", a)], order)?)
}

pub fn verify_invert_family(a: i64, order: usize) -> Vec<VerificationReport> {
    let terms = order + 1;
    let mut claims = Claims::new(FAMILY, &[("a", a)]);
    let img = image(a, order);
    claims.series(
        "closed-form",
        &img,
        gf("c(x)/(1+({a}-1)*x*c(x))", &[("a", a)], order),
        terms,
        "",
    );
    claims.series(
        "invert-of-catalan",
        &img,
        invert_alpha(&catalan_gf(order), a - 1),
        terms,
        "alpha = a - 1",
    );
    claims.series(
        "riordan-route",
        &img,
        riordan_route("(1-x^2)/(1+{a}*x)", a, order),
        terms,
        "",
    );
    claims.series(
        "riordan-route-reduced",
        &img,
        gf("1/((1-x)*(1+({a}-1)*x))", &[("a", a)], order)
            .and_then(|h| RiordanArray::catalan_matrix(order).apply(&h)),
        terms,
        "",
    );
    claims.series(
        "product-form",
        &img,
        gf("1/((1-x*c(x))*(1+({a}-1)*x*c(x)))", &[("a", a)], order),
        terms,
        "",
    );
    claims.finish()
}

/// Fine numbers from `2 F_n + F_(n-1) = C_n`.
pub fn fine_numbers(count: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    let catalan = catalan_gf(count.max(1)).to_integers().expect("integral");
    for n in 0..count {
        let next = match n {
            0 => BigInt::from(1),
            _ => (&catalan[n] - &out[n - 1]) / 2,
        };
        out.push(next);
    }
    out
}

pub fn invert_examples() -> Vec<VerificationReport> {
    let order = IDENTITY_TERMS - 1;
    let mut out = Vec::new();

    let mut claims = Claims::new(FAMILY, &[("a", 2)]);
    claims.values(
        "input",
        prefix_of(&gf(INPUT, &[("a", 2)], order), 9),
        Ok(ints(&[1, 2, 1, 2, 1, 2, 1, 2, 1])),
        "",
    );
    let img = image(2, order);
    claims.series(
        "fine-numbers-gf",
        &img,
        gf("c(x)/(1+x*c(x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "fine-numbers",
        prefix_of(&img, IDENTITY_TERMS),
        Ok(fine_numbers(IDENTITY_TERMS)
            .into_iter()
            .map(Rational::from_integer)
            .collect()),
        "2 F(n) + F(n-1) = C(n)",
    );
    out.extend(claims.finish());

    let mut claims = Claims::new(FAMILY, &[("a", 1)]);
    claims.series(
        "catalan",
        &image(1, order),
        Ok(catalan_gf(order)),
        IDENTITY_TERMS,
        "",
    );
    out.extend(claims.finish());

    let mut claims = Claims::new(FAMILY, &[("a", 0)]);
    let img = image(0, order);
    claims.series(
        "catalan-squared",
        &img,
        gf("c(x)^2", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "prefix",
        prefix_of(&img, 5),
        Ok(ints(&[1, 2, 5, 14, 42])),
        "",
    );
    out.extend(claims.finish());

    // (1+2x)/(1-x^3) against the Catalan transform of "n+1 then n"
    let mut claims = Claims::new(FAMILY, &[]);
    let source = gf("(1+x^3)/(1-x^2)^2", &[], order);
    claims.values(
        "follow-n-plus-one-by-n",
        prefix_of(&source, 13),
        Ok(ints(&[1, 0, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5, 7])),
        "",
    );
    claims.series(
        "catalan-transform-image",
        &gf("(1+2*x)/(1-x^3)", &[], order).and_then(|g| c_transform(&g)),
        source.and_then(|s| catalan_transform(&s)),
        IDENTITY_TERMS,
        "",
    );
    out.extend(claims.finish());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fine_numbers_prefix() {
        let want: Vec<BigInt> = [1, 0, 1, 2, 6, 18, 57, 186, 622]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(fine_numbers(9), want);
    }

    #[test]
    fn family_and_examples_pass() {
        let reports: Vec<_> = (-3..=3)
            .flat_map(|a| verify_invert_family(a, 20))
            .chain(invert_examples())
            .collect();
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }
}
