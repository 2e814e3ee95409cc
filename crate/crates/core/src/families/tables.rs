//! Small tables of simple images and the Hankel transforms of those images.

use num_bigint::BigInt;

use crate::ctransform::c_transform;
use crate::expr::expand_str;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    hankel_claims, hankel_of, prefix_of, rational, work_order, IDENTITY_TERMS,
};
use crate::series::{binomial, rat, zero_pow, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "simple-tables";

/// One row: input GF, image GF, and the image's Hankel GF as integer
/// numerator and denominator coefficients.
#[derive(Debug, Clone, Copy)]
pub struct SimpleRow {
    pub input: &'static str,
    pub image: &'static str,
    pub hankel: (&'static [i64], &'static [i64]),
    /// Closed formula for the image terms, when one is tabulated.
    pub image_term: Option<fn(i64) -> Rational>,
}

fn central(n: i64) -> Rational {
    Rational::from_integer(binomial(2 * n, n))
}

fn odd_central(n: i64) -> Rational {
    Rational::from_integer(binomial(2 * n + 1, n + 1))
}

fn catalan(n: i64) -> Rational {
    Rational::from_integer(binomial(2 * n, n) / BigInt::from(n + 1))
}

/// `-0^n - 2 C(2n-1, n+1)` with the generalized `C(-1, 1) = -1`.
fn powers_of_two_image(n: i64) -> Rational {
    rat(-zero_pow(n)) - Rational::from_integer(BigInt::from(2) * binomial(2 * n - 1, n + 1))
}

/// `-C(2n-1, n+1)` with the generalized `C(-1, 1) = -1`.
fn negated_binomial(n: i64) -> Rational {
    -Rational::from_integer(binomial(2 * n - 1, n + 1))
}

fn shifted_catalan(n: i64) -> Rational {
    catalan(n + 1)
}

/// Rows given both as sequences and as generating functions.
pub fn basic_rows() -> Vec<SimpleRow> {
    vec![
        SimpleRow {
            input: "1/(1+x)",
            image: "(1+x*c(x)^2)/sqrt(1-4*x)",
            hankel: (&[1], &[1, -1]),
            image_term: Some(odd_central),
        },
        SimpleRow {
            input: "1",
            image: "1/sqrt(1-4*x)",
            hankel: (&[1], &[1, -2]),
            image_term: Some(central),
        },
        SimpleRow {
            input: "1/(1-x)",
            image: "c(x)",
            hankel: (&[1], &[1, -1]),
            image_term: Some(catalan),
        },
        SimpleRow {
            input: "1/(1-2*x)",
            image: "(-1+3*x+sqrt(1-4*x))/(x*sqrt(1-4*x))",
            hankel: (&[1, -4], &[1, -2, 4]),
            image_term: Some(powers_of_two_image),
        },
    ]
}

pub fn further_rows() -> Vec<SimpleRow> {
    vec![
        SimpleRow {
            input: "(1-x)/(1+x)",
            image: "1/(1-4*x)",
            hankel: (&[1], &[1]),
            image_term: None,
        },
        SimpleRow {
            input: "(1-2*x)/(1+x)",
            image: "(1+3*sqrt(1-4*x))/(2*sqrt(1-4*x)*(2-9*x))",
            hankel: (&[1], &[1, 1]),
            image_term: None,
        },
        SimpleRow {
            input: "(1+x)/(1-x)",
            image: "1",
            hankel: (&[1], &[1]),
            image_term: None,
        },
        SimpleRow {
            input: "(1+x)/(1-x-x^2)",
            image: "",
            hankel: (&[1, -3, 2, -1], &[1, -2, 3, -2, 1]),
            image_term: Some(negated_binomial),
        },
        SimpleRow {
            input: "1/(1-x^2)",
            image: "(c(x)-1)/x",
            hankel: (&[1], &[1, -1]),
            image_term: Some(shifted_catalan),
        },
    ]
}

/// `2^(n+1) cos(pi (n+1)/3)`, exact: `2 cos` cycles through 2, 1, -1, -2, -1, 1.
pub fn cosine_hankel(n: i64) -> Rational {
    const TWICE_COS: [i64; 6] = [2, 1, -1, -2, -1, 1];
    rat(TWICE_COS[((n + 1) % 6) as usize]) * Rational::from_integer(BigInt::from(2).pow(n as u32))
}

fn image(row: &SimpleRow, order: usize) -> Result<PowerSeries> {
    expand_str(row.input, order).and_then(|g| c_transform(&g))
}

fn check_row(claims: &mut Claims, label: &str, row: &SimpleRow, m: usize) {
    let order = work_order(m);
    let img = image(row, order);
    if !row.image.is_empty() {
        claims.series(
            &format!("{label}-image"),
            &img,
            expand_str(row.image, order),
            IDENTITY_TERMS,
            row.input,
        );
    }
    if let Some(f) = row.image_term {
        claims.values(
            &format!("{label}-image-terms"),
            prefix_of(&img, IDENTITY_TERMS),
            Ok((0..IDENTITY_TERMS as i64).map(f).collect()),
            row.input,
        );
    }
    hankel_claims(
        claims,
        &format!("{label}-hankel"),
        &img,
        rational(row.hankel.0, row.hankel.1),
        m,
        row.input,
    );
}

pub fn verify_simple_tables(m: usize) -> Vec<VerificationReport> {
    let mut claims = Claims::new(FAMILY, &[]);
    for (i, row) in basic_rows().iter().enumerate() {
        check_row(&mut claims, &format!("basic-{}", i + 1), row, m);
    }
    for (i, row) in further_rows().iter().enumerate() {
        check_row(&mut claims, &format!("further-{}", i + 1), row, m);
    }
    let sequences: [(&str, Vec<Rational>); 3] = [
        (
            "basic-1-input",
            (0..8)
                .map(|n| rat(if n % 2 == 0 { 1 } else { -1 }))
                .collect(),
        ),
        ("basic-2-input", (0..8).map(|n| rat(zero_pow(n))).collect()),
        ("basic-4-input", (0..8).map(|n| rat(1 << n)).collect()),
    ];
    let inputs = ["1/(1+x)", "1", "1/(1-2*x)"];
    for ((label, want), input) in sequences.into_iter().zip(inputs) {
        claims.values(label, prefix_of(&expand_str(input, 7), 8), Ok(want), "");
    }
    let order = work_order(m);
    let ones: Vec<Rational> = vec![rat(1); m];
    for (label, input) in [
        ("basic-1-hankel-terms", "1/(1+x)"),
        ("basic-3-hankel-terms", "1/(1-x)"),
    ] {
        let img = expand_str(input, order).and_then(|g| c_transform(&g));
        claims.values(label, hankel_of(&img, m), Ok(ones.clone()), "1, 1, 1, ...");
    }
    let img = expand_str("1", order).and_then(|g| c_transform(&g));
    claims.values(
        "basic-2-hankel-terms",
        hankel_of(&img, m),
        Ok((0..m as u32)
            .map(|n| Rational::from_integer(BigInt::from(2).pow(n)))
            .collect()),
        "2^n",
    );
    let img = expand_str("1/(1-2*x)", order).and_then(|g| c_transform(&g));
    claims.values(
        "basic-4-hankel-cosine",
        hankel_of(&img, m),
        Ok((0..m as i64).map(cosine_hankel).collect()),
        "2^(n+1) cos(pi (n+1)/3)",
    );
    claims.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_claims_pass() {
        let reports = verify_simple_tables(10);
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }

    #[test]
    fn powers_of_two_image_terms() {
        let terms: Vec<Rational> = (0..5).map(powers_of_two_image).collect();
        assert_eq!(terms, vec![rat(1), rat(0), rat(-2), rat(-10), rat(-42)]);
    }
}
