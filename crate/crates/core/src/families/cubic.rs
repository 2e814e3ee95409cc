//! Images of `(1 + a x)/(1 - x^3)`.

use crate::ctransform::c_transform;
use crate::families::invert;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    degeneracy_note, gf, hankel_claims, hankel_of, ints, prefix_of, rational, work_order,
    IDENTITY_TERMS,
};
use crate::hankel::RationalGF;
use crate::riordan::RiordanArray;
use crate::series::{catalan_gf, rat, ratio, zero_pow, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "cubic-denominator";
const INPUT: &str = "(1+{a}*x)/(1-x^3)";

fn image(a: i64, order: usize) -> Result<PowerSeries> {
    gf(INPUT, &[("a", a)], order).and_then(|g| c_transform(&g))
}

/// Hankel generating function of the image, with linear numerator
/// coefficient `1 - a`.
pub fn conjectured_hankel(a: i64) -> Result<RationalGF> {
    let t = a + 1;
    rational(&[1, 1 - a, 1, -1], &[1, -t, t * t - 1, -t, 1])
}

pub fn verify_cubic_denominator(a: i64, m: usize) -> Vec<VerificationReport> {
    let p = [("a", a)];
    let order = work_order(m);
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(a, order);
    claims.series(
        "closed-form",
        &img,
        gf("(1+x*c(x)^3)/(1+({a}-1)*x*c(x))", &p, order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "closed-form-squared",
        &img,
        gf("(1-x)*c(x)^2/(1+({a}-1)*x*c(x))", &p, order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "riordan-route",
        &img,
        invert::riordan_route("(1-x^3)/(1+{a}*x)", a, order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "riordan-route-reduced",
        &img,
        gf("(1-x+x^2)/((1-x)^2*(1+({a}-1)*x))", &p, order)
            .and_then(|h| RiordanArray::catalan_matrix(order).apply(&h)),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "ratio-to-invert-image",
        &img,
        invert::image(a, order).and_then(|s| Ok(&s * &gf("(1-x)*c(x)", &[], order)?)),
        IDENTITY_TERMS,
        "(1-x) c(x) times the image of (1+ax)/(1-x^2)",
    );
    let claimed = conjectured_hankel(a);
    let note = degeneracy_note(&claimed, 3, 4);
    hankel_claims(&mut claims, "hankel-conjecture", &img, claimed, m, &note);
    claims.finish()
}

pub fn cubic_examples(m: usize) -> Vec<VerificationReport> {
    let order = work_order(m);
    let mut out = Vec::new();

    let mut claims = Claims::new(FAMILY, &[]);
    claims.series(
        "catalan-cube-identity",
        &gf("1+x*c(x)^3", &[], order),
        gf("(1-x)*c(x)^2", &[], order),
        IDENTITY_TERMS,
        "1 + x c^3 = (1-x) c^2",
    );
    out.extend(claims.finish());

    let mut claims = Claims::new(FAMILY, &[("a", 1)]);
    claims.values(
        "input",
        prefix_of(&gf(INPUT, &[("a", 1)], order), 11),
        Ok(ints(&[1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1])),
        "",
    );
    let img = image(1, order);
    claims.series(
        "image-sqrt-form",
        &img,
        gf("((1-x)*(1-2*x-sqrt(1-4*x)))/(2*x^2)", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "image",
        &img,
        gf("1+x*c(x)^3", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "image-prefix",
        prefix_of(&img, 10),
        Ok(ints(&[1, 1, 3, 9, 28, 90, 297, 1001, 3432, 11934])),
        "",
    );
    let catalan = catalan_gf(IDENTITY_TERMS);
    claims.values(
        "image-formula",
        prefix_of(&img, IDENTITY_TERMS),
        Ok((0..IDENTITY_TERMS as i64)
            .map(|n| rat(zero_pow(n)) + ratio(3 * n, n + 2) * catalan.coeff(n as usize))
            .collect()),
        "0^n + 3n C(n)/(n+2)",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, 0, 1, -1], &[1, -2, 3, -2, 1]),
        m,
        "",
    );
    claims.values(
        "hankel-prefix",
        hankel_of(&img, 11),
        Ok(ints(&[1, 2, 2, -1, -5, -5, 1, 8, 8, -1, -11])),
        "",
    );
    out.extend(claims.finish());

    let mut claims = Claims::new(FAMILY, &[("a", 2)]);
    claims.values(
        "input",
        prefix_of(&gf(INPUT, &[("a", 2)], order), 11),
        Ok(ints(&[1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2])),
        "",
    );
    let img = image(2, order);
    claims.series(
        "image-sqrt-form",
        &img,
        gf("((1-x)*(1-x-(1+x)*sqrt(1-4*x)))/(2*x^2*(x+2))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "image",
        &img,
        gf("(1+x*c(x)^3)/(1+x*c(x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "image-times-fine",
        &img,
        gf("(1-x)*c(x)*c(x)/(1+x*c(x))", &[], order),
        IDENTITY_TERMS,
        "(1-x) c(x) times the Fine generating function",
    );
    claims.values(
        "image-prefix",
        prefix_of(&img, 10),
        Ok(ints(&[1, 0, 2, 5, 16, 51, 168, 565, 1934, 6716])),
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, -1, 1, -1], &[1, -3, 8, -3, 1]),
        m,
        "",
    );
    out.extend(claims.finish());

    let mut claims = Claims::new(FAMILY, &[("a", 0)]);
    claims.values(
        "input",
        prefix_of(&gf(INPUT, &[("a", 0)], order), 11),
        Ok(ints(&[1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0])),
        "",
    );
    let img = image(0, order);
    claims.values(
        "image-prefix",
        prefix_of(&img, 11),
        Ok(ints(&[
            1, 2, 6, 19, 62, 207, 704, 2431, 8502, 30056, 107236,
        ])),
        "",
    );
    claims.series(
        "image",
        &img,
        gf("(1+x*c(x)^3)*c(x)", &[], order),
        IDENTITY_TERMS,
        "",
    );
    out.extend(claims.finish());
    out
}

/// Hankel prefix of the `a = 0` image, for comparison with the printed
/// periodic sequence `1, 0, 1, 1, 0, 1, ...`.
pub fn zero_parameter_hankel(count: usize) -> Result<Vec<Rational>> {
    hankel_of(&image(0, 2 * count), count)
}
