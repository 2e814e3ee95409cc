//! Images of `(1 + a x)/(1 + b x)`.

use crate::ctransform::c_transform;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    degeneracy_note, gf, hankel_claims, ints, prefix_of, rational, work_order, IDENTITY_TERMS,
};
use crate::riordan::RiordanArray;
use crate::series::{rat, PowerSeries};
use crate::Result;

const FAMILY: &str = "linear-ratio";
const INPUT: &str = "(1+{a}*x)/(1+{b}*x)";

pub(crate) fn image(params: &[(&str, i64)], order: usize) -> Result<PowerSeries> {
    gf(INPUT, params, order).and_then(|g| c_transform(&g))
}

/// Conjectured Hankel generating function of the image.
pub fn conjectured_hankel(a: i64, b: i64) -> Result<crate::hankel::RationalGF> {
    rational(
        &[1, -b * (a + b)],
        &[1, -2 * (1 + a * b), (a + b) * (a + b)],
    )
}

/// Closed forms of the image and the Hankel conjecture at one `(a, b)`.
pub fn verify_linear_ratio(a: i64, b: i64, m: usize) -> Vec<VerificationReport> {
    let p = [("a", a), ("b", b)];
    let order = work_order(m);
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "closed-form",
        &img,
        gf(
            "(1+({b}-1)*x*c(x))/((1-2*x*c(x))*(1+({a}-1)*x*c(x)))",
            &p,
            order,
        ),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "sqrt-form",
        &img,
        gf(
            "(sqrt(1-4*x)*({a}-{b})+2*x*({a}-1)*({b}-1)+{a}+{b})/(2*sqrt(1-4*x)*(x*({a}-1)^2+{a}))",
            &p,
            order,
        ),
        IDENTITY_TERMS,
        "",
    );
    let claimed = conjectured_hankel(a, b);
    let note = degeneracy_note(&claimed, 1, 2);
    hankel_claims(&mut claims, "hankel-conjecture", &img, claimed, m, &note);
    claims.finish()
}

/// The individually discussed parameter pairs and their stated images.
pub fn linear_ratio_examples(m: usize) -> Vec<VerificationReport> {
    let order = work_order(m);
    let mut out = Vec::new();

    let p = [("a", -2), ("b", 1)];
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "image",
        &img,
        gf("1/(sqrt(1-4*x)*(1-3*x*c(x)))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "image-product",
        &img,
        gf("1/((1-2*x*c(x))*(1-3*x*c(x)))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1], &[1, 1]),
        m,
        "(-1)^n",
    );
    out.extend(claims.finish());

    let p = [("a", 1), ("b", 2)];
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "image",
        &img,
        gf("(1+x*c(x))/(1-2*x*c(x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, -6], &[1, -6, 9]),
        m,
        "",
    );
    out.extend(claims.finish());

    let p = [("a", 1), ("b", 3)];
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "image",
        &img,
        gf("(1+2*x*c(x))/(1-2*x*c(x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    let source = gf("(1+2*x)/(1-2*x)", &[], order);
    claims.values(
        "catalan-matrix-source",
        prefix_of(&source, 5),
        Ok(ints(&[1, 4, 8, 16, 32])),
        "",
    );
    let via_catalan = source.and_then(|h| RiordanArray::catalan_matrix(order).apply(&h));
    claims.series(
        "image-via-catalan-matrix",
        &img,
        via_catalan,
        IDENTITY_TERMS,
        "(1, x c(x)) applied to 1,4,8,16,...",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, -12], &[1, -8, 16]),
        m,
        "",
    );
    out.extend(claims.finish());

    let p = [("a", 1), ("b", 4)];
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "image",
        &img,
        gf("(1+3*x*c(x))/(1-2*x*c(x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "image-sqrt-form",
        &img,
        gf("(5*sqrt(1-4*x)-3*(1-4*x))/(2*(1-4*x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, -20], &[1, -10, 25]),
        m,
        "",
    );
    out.extend(claims.finish());

    let p = [("a", -2), ("b", -1)];
    let mut claims = Claims::new(FAMILY, &p);
    let input = gf(INPUT, &p, order);
    claims.values(
        "input",
        prefix_of(&input, 11),
        Ok(ints(&[1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1])),
        "",
    );
    let img = image(&p, order);
    claims.values(
        "image-prefix",
        prefix_of(&img, 10),
        Ok(ints(&[1, 3, 12, 51, 222, 978, 4338, 19323, 86310, 386250])),
        "",
    );
    claims.series(
        "image",
        &img,
        gf("1/(1-3*x*c(x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1], &[1, -3]),
        m,
        "3^n",
    );
    out.extend(claims.finish());

    out.extend(shifted_parameter_form());
    out
}

/// With `b = a + 1` the conjecture reduces to a one-parameter form.
fn shifted_parameter_form() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for a in -3..=3i64 {
        let mut claims = Claims::new(FAMILY, &[("a", a), ("b", a + 1)]);
        let general = conjectured_hankel(a, a + 1).map(|g| g.expand(12).into_coeffs());
        let special = rational(
            &[1, -(a + 1) * (2 * a + 1)],
            &[1, -2 * (a * (a + 1) + 1), (2 * a + 1) * (2 * a + 1)],
        )
        .map(|g| g.expand(12).into_coeffs());
        claims.values("hankel-shifted-form", general, special, "");
        if a == -2 {
            claims.values(
                "hankel-shifted-form-value",
                conjectured_hankel(a, a + 1).map(|g| g.expand(8).into_coeffs()),
                Ok((0..9).map(|n| rat(3i64.pow(n))).collect()),
                "",
            );
        }
        out.extend(claims.finish());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::support::ints;

    #[test]
    fn printed_case_has_alternating_hankel() {
        let reports = verify_linear_ratio(-2, 1, 10);
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
        let h = conjectured_hankel(-2, 1).unwrap().expand(5).into_coeffs();
        assert_eq!(h, ints(&[1, -1, 1, -1, 1, -1]));
    }

    #[test]
    fn examples_pass() {
        let reports = linear_ratio_examples(10);
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }
}
