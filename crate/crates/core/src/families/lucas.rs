//! Images of `(1 - (r-2) x + x^2)/(1 - s x - x^2)`, computed directly and
//! through a product of Riordan arrays.

use crate::ctransform::c_transform;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    degeneracy_note, gf, hankel_claims, hankel_of, ints, prefix_of, rational, work_order,
    IDENTITY_TERMS,
};
use crate::hankel::RationalGF;
use crate::riordan::RiordanArray;
use crate::series::PowerSeries;
use crate::Result;

const FAMILY: &str = "lucas";
const INPUT: &str = "(1-({r}-2)*x+x^2)/(1-{s}*x-x^2)";

pub fn conjectured_hankel(r: i64, s: i64) -> Result<RationalGF> {
    rational(&[1, -s * (r + s - 2)], &[1, 2 * s * (2 - r), 4 * s * s])
}

/// `((1 - s x - x^2)/(1+x)^2, x/(1+x)^2)`.
fn reciprocal_array(s: i64, order: usize) -> Result<RiordanArray> {
    RiordanArray::from_exprs(&format!("(1-({s})*x-x^2)/(1+x)^2"), "x/(1+x)^2", order)
}

/// The image as `(1/sqrt(1-4x), x c^2) * reciprocal_array * 1/(1-rx)`.
pub fn riordan_product_image(r: i64, s: i64, order: usize) -> Result<PowerSeries> {
    let product =
        RiordanArray::central_binomial_array(order).multiply(&reciprocal_array(s, order)?)?;
    product.apply(&gf("1/(1-{r}*x)", &[("r", r)], order)?)
}

pub fn verify_lucas_family(r: i64, s: i64, m: usize) -> Vec<VerificationReport> {
    let p = [("r", r), ("s", s)];
    let order = work_order(m);
    let mut claims = Claims::new(FAMILY, &p);
    let input = gf(INPUT, &p, order);
    let img = input.as_ref().map_err(Clone::clone).and_then(c_transform);
    let closed = gf("(sqrt(1-4*x)-{s}*x)/((1-{r}*x)*sqrt(1-4*x))", &p, order);
    claims.series("closed-form", &img, closed, IDENTITY_TERMS, "");
    claims.series(
        "riordan-product",
        &img,
        riordan_product_image(r, s, order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "input-array",
        &input,
        RiordanArray::from_exprs(&format!("(1-({r}-2)*x+x^2)/(1-x^2)"), "x/(1-x^2)", order)
            .and_then(|arr| arr.apply(&gf("1/(1-{s}*x)", &p, order)?)),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "reciprocal-array",
        &input
            .as_ref()
            .map_err(Clone::clone)
            .and_then(PowerSeries::recip),
        reciprocal_array(s, order).and_then(|arr| arr.apply(&gf("1/(1-{r}*x)", &p, order)?)),
        IDENTITY_TERMS,
        "",
    );
    let product = reciprocal_array(s, order)
        .and_then(|arr| RiordanArray::central_binomial_array(order).multiply(&arr));
    let appell = gf("1-{s}*x/sqrt(1-4*x)", &p, order).and_then(RiordanArray::appell);
    claims.series(
        "product-multiplier",
        &product
            .as_ref()
            .map(|a| a.g().clone())
            .map_err(Clone::clone),
        appell.as_ref().map(|a| a.g().clone()).map_err(Clone::clone),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "product-function",
        &product
            .as_ref()
            .map(|a| a.f().clone())
            .map_err(Clone::clone),
        Ok(PowerSeries::x(order)),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "appell-form",
        &img,
        appell.and_then(|arr| arr.apply(&gf("1/(1-{r}*x)", &p, order)?)),
        IDENTITY_TERMS,
        "",
    );
    let claimed = conjectured_hankel(r, s);
    let note = degeneracy_note(&claimed, 1, 2);
    hankel_claims(&mut claims, "hankel-conjecture", &img, claimed, m, &note);
    claims.finish()
}

pub fn lucas_examples(m: usize) -> Vec<VerificationReport> {
    let order = work_order(m);
    let p = [("r", 2), ("s", -1)];
    let mut claims = Claims::new(FAMILY, &p);
    let input = gf(INPUT, &p, order);
    claims.series(
        "input-reduced",
        &input,
        gf("(1+x^2)/(1+x-x^2)", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "input-prefix",
        prefix_of(&input, 11),
        Ok(ints(&[1, -1, 3, -4, 7, -11, 18, -29, 47, -76, 123])),
        "",
    );
    let img = input.and_then(|g| c_transform(&g));
    claims.series(
        "image",
        &img,
        gf("(sqrt(1-4*x)+x)/((1-2*x)*sqrt(1-4*x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "image-prefix",
        prefix_of(&img, 10),
        Ok(ints(&[1, 3, 8, 22, 64, 198, 648, 2220, 7872, 28614])),
        "",
    );
    claims.values(
        "hankel-prefix",
        hankel_of(&img, 11),
        Ok(ints(&[1, -1, -4, 4, 16, -16, -64, 64, 256, -256, -1024])),
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, -1], &[1, 0, 4]),
        m,
        "",
    );
    claims.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_case() {
        assert_eq!(
            conjectured_hankel(2, -1).unwrap(),
            rational(&[1, -1], &[1, 0, 4]).unwrap()
        );
        let reports: Vec<_> = verify_lucas_family(2, -1, 10)
            .into_iter()
            .chain(lucas_examples(10))
            .collect();
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }
}
