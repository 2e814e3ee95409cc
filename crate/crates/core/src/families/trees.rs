//! Pre-images of sequences counting mutations in ordered trees.
//!
//! Image expressions use the shorthands `B = 1/sqrt(1-4x)` and `C = c(x)`.

use num_bigint::BigInt;

use crate::ctransform::{binomial_transform_k, c_inverse, c_transform};
use crate::expr::expand_str;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    hankel_claims, hankel_of, ints, prefix_of, rational, sign, IDENTITY_TERMS,
};
use crate::hankel::{jfraction_expand, JFraction};
use crate::series::{binomial, rat, ratio, zero_pow, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "trees";

/// `(1 - sqrt(5 - 4C))/(2xC)`.
const T0: &str = "(1-sqrt(5-4*C))/(2*x*C)";

/// Expected side of a table row.
#[derive(Debug, Clone, Copy)]
pub enum Image {
    /// Expression with `B` and `C` shorthands.
    Gf(&'static str),
    /// Closed formula for the `n`-th term.
    Formula(fn(i64) -> Rational),
}

#[derive(Debug, Clone, Copy)]
pub struct TreeRow {
    pub image_id: &'static str,
    pub comment: &'static str,
    pub preimage: &'static str,
    pub preimage_id: &'static str,
    pub image: Image,
}

fn int(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn a000346(n: i64) -> Rational {
    int(BigInt::from(2) * BigInt::from(4).pow(n as u32) - binomial(2 * n + 1, n + 1))
}

fn a001700(n: i64) -> Rational {
    int(binomial(2 * n + 1, n + 1))
}

fn a002057(n: i64) -> Rational {
    int(BigInt::from(4) * binomial(2 * n + 3, n)) / rat(n + 4)
}

fn a097613(n: i64) -> Rational {
    ratio(3 * n + 1, 2 * n + 2) * int(binomial(2 * n, n)) + ratio(zero_pow(n), 2)
}

fn a243585(n: i64) -> Rational {
    int((0..=n)
        .map(|k| binomial(2 * n, n - k) * binomial(2 * k, k))
        .sum())
}

fn a257589(n: i64) -> Rational {
    int(BigInt::from((2 * n + 1) * (2 * n + 1)) * binomial(2 * n, n)) / rat(n + 1)
}

/// Rows of the mutation table, with the corrected entries noted in `comment`.
pub fn tree_rows() -> Vec<TreeRow> {
    vec![
        TreeRow {
            image_id: "A000346",
            comment: "2*4^n - C(2n+1,n+1)",
            preimage: "(1-x)/(1+x)^2",
            preimage_id: "A157142",
            image: Image::Formula(a000346),
        },
        TreeRow {
            image_id: "A001700",
            comment: "C(2n+1,n+1)",
            preimage: "1/(1+x)",
            preimage_id: "A033999",
            image: Image::Formula(a001700),
        },
        TreeRow {
            image_id: "A002057",
            comment: "[x^n] c(x)^4",
            preimage: "1/((1-x)*(1+x)^3)",
            preimage_id: "A002620 signed",
            image: Image::Formula(a002057),
        },
        TreeRow {
            image_id: "A007852",
            comment: "T0 = (1 - sqrt(5-4C))/(2xC)",
            preimage: "(1-x*c(x))/(1-x)",
            preimage_id: "A099324",
            image: Image::Gf(T0),
        },
        TreeRow {
            image_id: "A007856",
            comment: "(B/C) T0",
            preimage: "1-x*c(x)",
            preimage_id: "A115140",
            image: Image::Gf("B/C*(1-sqrt(5-4*C))/(2*x*C)"),
        },
        TreeRow {
            image_id: "A097070",
            comment: "(B+1)/2 + x B^3",
            preimage: "(1-x-x^2+x^3)/(1-x+2*x^2)",
            preimage_id: "A004442 reciprocal",
            image: Image::Gf("(B+1)/2+x*B^3"),
        },
        TreeRow {
            image_id: "A097613",
            comment: "(3n+1)/(2n+2) C(2n,n) + 0^n/2",
            preimage: "(1+x)/(1+x+x^2)",
            preimage_id: "A057078",
            image: Image::Formula(a097613),
        },
        TreeRow {
            image_id: "A114121",
            comment: "(sqrt(1-4x) + 1 - 2x)/(2(1-4x))",
            preimage: "1-x^2",
            preimage_id: "",
            image: Image::Gf("(sqrt(1-4*x)+1-2*x)/(2*(1-4*x))"),
        },
        TreeRow {
            image_id: "A243585",
            comment: "sum_k C(2n,n-k) C(2k,k)",
            preimage: "sqrt(1-4*x)",
            preimage_id: "A002420",
            image: Image::Formula(a243585),
        },
        TreeRow {
            image_id: "A257589",
            comment: "(2n+1)^2 C_n",
            preimage: "(1-x)^2/((1+x)*(1+4*x-x^2))",
            preimage_id: "",
            image: Image::Formula(a257589),
        },
    ]
}

/// Expands the `B` and `C` shorthands.
pub fn expand_shorthand(text: &str) -> String {
    text.replace('B', "(1/sqrt(1-4*x))").replace('C', "c(x)")
}

fn shorthand(text: &str, order: usize) -> Result<PowerSeries> {
    expand_str(&expand_shorthand(text), order)
}

fn formula(f: fn(i64) -> Rational, terms: usize) -> Vec<Rational> {
    (0..terms as i64).map(f).collect()
}

pub fn image_of(row: &TreeRow, order: usize) -> Result<PowerSeries> {
    expand_str(row.preimage, order).and_then(|g| c_transform(&g))
}

pub fn expected_image(row: &TreeRow, order: usize) -> Result<Vec<Rational>> {
    match row.image {
        Image::Gf(text) => shorthand(text, order).map(PowerSeries::into_coeffs),
        Image::Formula(f) => Ok(formula(f, order + 1)),
    }
}

fn fib(n: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..n {
        let t = &a + &b;
        a = b;
        b = t;
    }
    a
}

pub fn verify_trees_table(m: usize) -> Vec<VerificationReport> {
    let order = IDENTITY_TERMS - 1;
    let terms = order + 1;
    let mut out = Vec::new();

    let mut rows = Claims::new(FAMILY, &[]);
    for row in tree_rows() {
        let img = image_of(&row, order);
        rows.values(
            &format!("{}-round-trip", row.image_id),
            prefix_of(&img, terms),
            expected_image(&row, order),
            row.comment,
        );
        let back = img.as_ref().map_err(Clone::clone).and_then(c_inverse);
        rows.series(
            &format!("{}-preimage", row.image_id),
            &back,
            expand_str(row.preimage, order),
            terms,
            "",
        );
    }
    out.extend(rows.finish());

    let mut claims = Claims::new(FAMILY, &[]);
    let row_image = |id: &str| {
        let row = tree_rows()
            .into_iter()
            .find(|r| r.image_id == id)
            .expect("known row");
        image_of(&row, 2 * m + 20)
    };

    // A000346
    let img = row_image("A000346");
    claims.series(
        "A000346-gf",
        &img,
        shorthand("(1/(1-4*x)-B)/(2*x)", order),
        terms,
        "",
    );
    let odd: Vec<Rational> = (0..m as i64).map(|n| sign(n) * rat(2 * n + 1)).collect();
    claims.values(
        "A000346-hankel",
        hankel_of(&img, m),
        Ok(odd.clone()),
        "(-1)^n (2n+1)",
    );
    claims.values(
        "A000346-hankel-is-preimage",
        prefix_of(&expand_str("(1-x)/(1+x)^2", order), m),
        Ok(odd),
        "",
    );

    // A001700
    claims.values(
        "A001700-prefix",
        prefix_of(&row_image("A001700"), 5),
        Ok(ints(&[1, 3, 10, 35, 126])),
        "",
    );

    // A002057
    let img = row_image("A002057");
    claims.series("A002057-c4", &img, shorthand("C^4", order), terms, "");
    claims.values(
        "A002057-preimage-formula",
        prefix_of(&expand_str("1/((1-x)*(1+x)^3)", order), terms),
        Ok((0..terms as i64)
            .map(|n| sign(n) * rat((n + 2) * (n + 2) / 4))
            .collect()),
        "(-1)^n floor((n+2)^2/4)",
    );
    hankel_claims(
        &mut claims,
        "A002057-hankel",
        &img,
        rational(&[1, -2, 0, -1], &[1, 0, 2, 0, 1]),
        m,
        "",
    );
    claims.values(
        "A002057-hankel-formula",
        hankel_of(&img, m),
        Ok((0..m as i64)
            .map(|n| sign(n * (n + 1) / 2) * rat((n + 3) / 2))
            .collect()),
        "sign (-1)^C(n+1,2)",
    );

    // A007852 / A099324
    let pre = expand_str("(1-x*c(x))/(1-x)", order);
    claims.values(
        "A099324-prefix",
        prefix_of(&pre, 11),
        Ok(ints(&[
            1, 0, -1, -3, -8, -22, -64, -196, -625, -2055, -6917,
        ])),
        "partial sums of 1 - x c(x)",
    );
    claims.series(
        "A099324-printed-form-identity",
        &expand_str("(1+sqrt(1+4*x))/(2*(1+x))", order),
        expand_str("(1+x*c(-x))/(1+x)", order),
        terms,
        "this form is the x -> -x image of the listed prefix",
    );
    claims.values(
        "A007852-prefix",
        prefix_of(&row_image("A007852"), 11),
        Ok(ints(&[
            1, 2, 7, 29, 131, 625, 3099, 15818, 82595, 439259, 2371632,
        ])),
        "",
    );
    let periodic: Vec<Rational> = (0..m)
        .map(|n| [rat(1), rat(-1), rat(0)][n % 3].clone())
        .collect();
    let pre_wide = expand_str("(1-x*c(x))/(1-x)", 2 * m);
    claims.values(
        "A099324-hankel",
        hankel_of(&pre_wide, m),
        Ok(periodic.clone()),
        "",
    );
    hankel_claims(
        &mut claims,
        "A099324-hankel-gf",
        &pre_wide,
        rational(&[1], &[1, 1, 1]),
        m,
        "",
    );
    claims.values(
        "A099324-printed-form-hankel",
        hankel_of(&expand_str("(1+x*c(-x))/(1+x)", 2 * m), m),
        Ok(periodic),
        "",
    );

    // A007856 / A115140
    let img = row_image("A007856");
    claims.values(
        "A007856-prefix",
        prefix_of(&img, 6),
        Ok(ints(&[1, 3, 12, 52, 236, 1109])),
        "",
    );
    claims.series(
        "A115140-reciprocal",
        &expand_str("1-x*c(x)", order),
        expand_str("1/c(x)", order),
        terms,
        "",
    );
    let a115140 = expand_str("1-x*c(x)", 2 * m + 20);
    claims.values(
        "A115140-hankel",
        hankel_of(&a115140, m),
        Ok((0..m as i64).map(|n| sign(n) * rat(n + 1)).collect()),
        "",
    );
    hankel_claims(
        &mut claims,
        "A115140-hankel-gf",
        &a115140,
        rational(&[1], &[1, 2, 1]),
        m,
        "",
    );

    // A097070
    let img = row_image("A097070");
    claims.values(
        "A097070-formula",
        prefix_of(&img, terms),
        Ok((0..terms as i64)
            .map(|n| (rat(zero_pow(n)) + int(BigInt::from(n + 1) * binomial(2 * n, n))) / rat(2))
            .collect()),
        "(0^n + (n+1) C(2n,n))/2",
    );
    claims.series(
        "A097070-inverse-binomial",
        &img.as_ref()
            .map_err(Clone::clone)
            .and_then(|s| binomial_transform_k(s, -1)),
        expand_str(
            "1/(2*sqrt(1-2*x-3*x^2))+1/(2*(1+x))+x/((1-3*x)*sqrt(1-2*x-3*x^2))",
            order,
        ),
        terms,
        "",
    );
    claims.values(
        "A097070-hankel",
        hankel_of(&img, 11),
        Ok(ints(&[1, 5, -14, -26, 43, 63, -88, -116, 149, 185, -226])),
        "",
    );
    hankel_claims(
        &mut claims,
        "A097070-hankel-gf",
        &img,
        rational(&[1, 5, -11, -11, 4], &[1, 0, 3, 0, 3, 0, 1]),
        m,
        "",
    );
    let a004442 = expand_str("(1-x+2*x^2)/((1-x)*(1-x^2))", order);
    claims.values(
        "A004442-prefix",
        prefix_of(&a004442, 18),
        Ok(ints(&[
            1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 17, 16,
        ])),
        "",
    );
    claims.values(
        "A004442-formula",
        prefix_of(&a004442, terms),
        Ok((0..terms as i64).map(|n| rat(n) + sign(n)).collect()),
        "n + (-1)^n",
    );
    claims.series(
        "A004442-reciprocal",
        &a004442
            .as_ref()
            .map_err(Clone::clone)
            .and_then(PowerSeries::recip),
        expand_str("(1-x-x^2+x^3)/(1-x+2*x^2)", order),
        terms,
        "",
    );

    // A097613
    claims.values(
        "A057078-prefix",
        prefix_of(&expand_str("(1+x)/(1+x+x^2)", order), 9),
        Ok(ints(&[1, 0, -1, 1, 0, -1, 1, 0, -1])),
        "",
    );

    // A243585
    claims.series(
        "A002420-reciprocal",
        &expand_str("sqrt(1-4*x)", order),
        expand_str("1/(1/sqrt(1-4*x))", order),
        terms,
        "",
    );

    // A257589
    claims.values(
        "A257589-preimage-formula",
        prefix_of(&expand_str("(1-x)^2/((1+x)*(1+4*x-x^2))", order), terms),
        Ok((0..terms as i64)
            .map(|n| sign(n) * int(fib(3 * n + 4) + fib(3 * n + 1) - BigInt::from(2)) / rat(2))
            .collect()),
        "(-1)^n (F(3n+4) + F(3n+1) - 2)/2",
    );
    out.extend(claims.finish());
    out.extend(jfraction_claims(m));
    out
}

/// Linear coefficients `first, 4, 0, 4, 0, ...` of length `depth`.
fn alternating_linear(first: i64, depth: usize) -> Vec<i64> {
    (0..depth)
        .map(|k| match k {
            0 => first,
            k if k % 2 == 1 => 4,
            _ => 0,
        })
        .collect()
}

fn jfraction_claims(m: usize) -> Vec<VerificationReport> {
    let order = IDENTITY_TERMS - 1;
    let terms = order + 1;
    let depth = terms.div_ceil(2);
    let mut claims = Claims::new(FAMILY, &[]);

    let a004442_image =
        expand_str("(1-x+2*x^2)/((1-x)*(1-x^2))", order).and_then(|g| c_transform(&g));
    claims.series(
        "A004442-image-gf",
        &a004442_image,
        expand_str(
            "sqrt(1-4*x)*(1-2*x-(1-4*x)*sqrt(1-4*x))/(2*x*(2-11*x+16*x^2))",
            order,
        ),
        terms,
        "",
    );
    claims.values(
        "A004442-image-prefix",
        prefix_of(&a004442_image, 11),
        Ok(ints(&[
            1, 2, 3, 0, -26, -150, -641, -2408, -8402, -27948, -90034,
        ])),
        "",
    );
    let jf = JFraction::uniform_coupling(&alternating_linear(2, depth), 1)
        .map(|j| jfraction_expand(&j, order));
    claims.series(
        "A004442-image-jfraction",
        &a004442_image,
        jf,
        terms,
        "linear 2, 4, 0, 4, 0, ...",
    );
    let wide = expand_str("(1-x+2*x^2)/((1-x)*(1-x^2))", 2 * m + 20).and_then(|g| c_transform(&g));
    claims.values(
        "A004442-image-hankel",
        hankel_of(&wide, m),
        Ok((0..m as i64).map(|n| sign(n * (n + 1) / 2)).collect()),
        "(-1)^C(n+1,2)",
    );

    let jf = JFraction::uniform_coupling(&alternating_linear(1, depth), 1)
        .map(|j| jfraction_expand(&j, order));
    claims.values(
        "A158499-shifted-jfraction-prefix",
        prefix_of(&jf, 10),
        Ok(ints(&[1, 1, 0, -5, -24, -90, -312, -1053, -3536, -11934])),
        "linear 1, 4, 0, 4, 0, ...",
    );
    claims.series(
        "A158499-shifted-jfraction-gf",
        &jf,
        expand_str(
            "sqrt(1-4*x)*(1-2*x-(1-4*x)*sqrt(1-4*x))/(x*(1-2*x)*(3-8*x+sqrt(1-4*x)))",
            order,
        ),
        terms,
        "",
    );
    let shifted_pre = jf.as_ref().map_err(Clone::clone).and_then(c_inverse);
    claims.values(
        "A158499-shifted-preimage",
        prefix_of(&shifted_pre, 11),
        Ok(ints(&[1, 1, 3, 3, 5, 5, 7, 7, 9, 9, 11])),
        "",
    );
    claims.series(
        "A158499-shifted-preimage-gf",
        &shifted_pre,
        expand_str("(1+x^2)/((1-x)^2*(1+x))", order),
        terms,
        "",
    );

    let a158499 = expand_str("(1+x^2)/(1-x)", order).and_then(|g| c_transform(&g));
    claims.values(
        "A158499-prefix",
        prefix_of(&a158499, 11),
        Ok(ints(&[
            1, 1, 1, 0, -5, -24, -90, -312, -1053, -3536, -11934,
        ])),
        "",
    );
    claims.values(
        "A158499-preimage",
        prefix_of(
            &a158499.as_ref().map_err(Clone::clone).and_then(c_inverse),
            11,
        ),
        Ok(ints(&[1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2])),
        "",
    );
    claims.values(
        "A158499-is-shift",
        prefix_of(&a158499, terms).map(|v| v[1..].to_vec()),
        prefix_of(&jf, terms - 1),
        "",
    );
    claims.values(
        "A158499-binomial-sum",
        prefix_of(&a158499, terms),
        Ok((0..terms as i64)
            .map(|n| {
                int((0..=n)
                    .map(|k| binomial(2 * n, n - k) * BigInt::from(sign_i(k * (k + 1) / 2)))
                    .sum())
            })
            .collect()),
        "sum_k C(2n,n-k) (-1)^C(k+1,2)",
    );
    claims.values(
        "A158499-sign-pattern",
        prefix_of(&expand_str("(1-x)/(1+x^2)", order), terms),
        Ok((0..terms as i64).map(|n| sign(n * (n + 1) / 2)).collect()),
        "",
    );
    claims.finish()
}

fn sign_i(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}
