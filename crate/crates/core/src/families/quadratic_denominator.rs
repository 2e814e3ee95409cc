//! Images of `(1 + a x)/(1 - b x^2)`.

use num_traits::Signed;

use crate::ctransform::c_transform;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    degeneracy_note, gf, hankel_claims, hankel_of, ints, prefix_of, rational, work_order,
    IDENTITY_TERMS,
};
use crate::hankel::RationalGF;
use crate::riordan::RiordanArray;
use crate::series::{binomial, rat, ratio, zero_pow, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "quadratic-denominator";
const INPUT: &str = "(1+{a}*x)/(1-{b}*x^2)";

fn image(params: &[(&str, i64)], order: usize) -> Result<PowerSeries> {
    gf(INPUT, params, order).and_then(|g| c_transform(&g))
}

/// Conjectured Hankel generating function: cubic over quartic. The `x^2`
/// denominator coefficient carries `2 b^2`; with `b^2` it fails off `b = 0`.
pub fn conjectured_hankel(a: i64, b: i64) -> Result<RationalGF> {
    let (a2, b2) = (a * a, b * b);
    rational(
        &[1, -3 * b, b2 * (2 + b), -b2 * b2],
        &[
            1,
            -2 * (1 + b),
            a2 + 4 * b - 2 * a2 * b + 2 * b2 + a2 * b2,
            -2 * b2 * (1 + b),
            b2 * b2,
        ],
    )
}

pub fn verify_quadratic_denominator(a: i64, b: i64, m: usize) -> Vec<VerificationReport> {
    let p = [("a", a), ("b", b)];
    let order = work_order(m);
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "closed-form",
        &img,
        gf(
            "c(x)*(1-2*x*c(x)+(1-{b})*x^2*c(x)^2)/((1-2*x*c(x))*(1+({a}-1)*x*c(x)))",
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
            "(sqrt(1-4*x)*({b}+x*({a}*({b}+1)-2*{b}))+2*x^2*({a}-1)*({b}-1)+x*(4*{b}-{a}*({b}-1))-{b})\
             /(2*x*sqrt(1-4*x)*(x*({a}-1)^2+{a}))",
            &p,
            order,
        ),
        IDENTITY_TERMS,
        "denominator carries a factor x",
    );
    let claimed = conjectured_hankel(a, b);
    let note = degeneracy_note(&claimed, 3, 4);
    hankel_claims(&mut claims, "hankel-conjecture", &img, claimed, m, &note);
    claims.finish()
}

/// `sum_k 1/(n-k+1) C(n-1, n-k) C(n, k) d_k`.
fn narayana_sum(d: &[Rational], n: i64) -> Rational {
    (0..=n)
        .map(|k| {
            Rational::from_integer(binomial(n - 1, n - k) * binomial(n, k)) * &d[k as usize]
                / rat(n - k + 1)
        })
        .sum()
}

pub fn quadratic_denominator_examples(m: usize) -> Vec<VerificationReport> {
    let order = work_order(m);
    let mut out = Vec::new();

    let p = [("a", 2), ("b", 0)];
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.series(
        "image",
        &img,
        gf("(1-x+sqrt(1-4*x))/((2+x)*sqrt(1-4*x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.series(
        "image-via-catalan-matrix",
        &img,
        gf("(1-x)/(1-x-2*x^2)", &[], order)
            .and_then(|h| RiordanArray::catalan_matrix(order).apply(&h)),
        IDENTITY_TERMS,
        "Jacobsthal variant under (1, x c(x))",
    );
    claims.series(
        "jacobsthal-factored",
        &gf("(1-x)/(1-x-2*x^2)", &[], order),
        gf("(1-x)/((1+x)*(1-2*x))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "hankel-prefix",
        hankel_of(&img, 11),
        Ok(ints(&[1, 2, 0, -8, -16, 0, 64, 128, 0, -512, -1024])),
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1], &[1, -2, 4]),
        m,
        "",
    );
    out.extend(claims.finish());

    let p = [("a", 1), ("b", -1)];
    let mut claims = Claims::new(FAMILY, &p);
    let img = image(&p, order);
    claims.values(
        "image-prefix",
        prefix_of(&img, 7),
        Ok(ints(&[1, 1, 4, 15, 56, 210, 792])),
        "",
    );
    claims.values(
        "image-formula",
        prefix_of(&img, IDENTITY_TERMS),
        Ok((0..IDENTITY_TERMS as i64)
            .map(|n| {
                let s: num_bigint::BigInt =
                    (0..=n).map(|k| binomial(n, k) * binomial(n, k + 1)).sum();
                Rational::from_integer(s) + rat(zero_pow(n))
            })
            .collect()),
        "0^n + sum_k C(n,k) C(n,k+1)",
    );
    claims.series(
        "image-sqrt-form",
        &img,
        gf("((1-4*x-sqrt(1-4*x))*(1-2*x))/(2*x*(4*x-1))", &[], order),
        IDENTITY_TERMS,
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, 3, 1, -1], &[1, 0, 2, 0, 1]),
        m,
        "",
    );
    let h = hankel_of(&img, 11);
    claims.values(
        "hankel-prefix",
        h.clone(),
        Ok(ints(&[1, 3, -1, -7, 1, 11, -1, -15, 1, 19, -1])),
        "",
    );
    claims.values(
        "hankel-absolute-shifted",
        h.map(|v| {
            std::iter::once(rat(0))
                .chain(v.iter().map(|t| t.abs()))
                .collect()
        }),
        Ok(ints(&[0, 1, 3, 1, 7, 1, 11, 1, 15, 1, 19, 1])),
        "",
    );
    out.extend(claims.finish());

    let p = [("a", 1), ("b", -2)];
    let mut claims = Claims::new(FAMILY, &p);
    let input = gf(INPUT, &p, order);
    claims.values(
        "input",
        prefix_of(&input, 11),
        Ok(ints(&[1, 1, -2, -2, 4, 4, -8, -8, 16, 16, -32])),
        "",
    );
    claims.values(
        "input-formula",
        prefix_of(&input, IDENTITY_TERMS),
        Ok((0..IDENTITY_TERMS as i64)
            .map(|n| crate::families::support::sign(n / 2) * rat(1i64 << (n / 2)))
            .collect()),
        "(-2)^floor(n/2); the sign (-1)^C(n+1,2) gives 1, -1, -2, 2, ...",
    );
    let reciprocal = input
        .as_ref()
        .map_err(Clone::clone)
        .and_then(PowerSeries::recip);
    claims.values(
        "reciprocal",
        prefix_of(&reciprocal, 11),
        Ok(ints(&[1, -1, 3, -3, 3, -3, 3, -3, 3, -3, 3])),
        "",
    );
    let img = image(&p, order);
    claims.values(
        "image-prefix",
        prefix_of(&img, 9),
        Ok(ints(&[1, 1, 5, 20, 77, 294, 1122, 4290, 16445])),
        "",
    );
    claims.series(
        "image-sqrt-form",
        &img,
        gf(
            "(sqrt(1-4*x)*(5*x-2)+12*x^2-11*x+2)/(2*x*(4*x-1))",
            &[],
            order,
        ),
        IDENTITY_TERMS,
        "",
    );
    hankel_claims(
        &mut claims,
        "hankel",
        &img,
        rational(&[1, 6, 0, -16], &[1, 2, 9, 8, 16]),
        m,
        "numerator term -16x^3",
    );
    let reciprocal_image = reciprocal.and_then(|r| c_transform(&r));
    hankel_claims(
        &mut claims,
        "reciprocal-image-hankel",
        &reciprocal_image,
        rational(&[1], &[1, 1, 4]),
        m,
        "",
    );
    let source = gf("(1-x+3*x^2)/(1-x)^2", &[], order);
    claims.values(
        "narayana-source",
        prefix_of(&source, 8),
        Ok(ints(&[1, 1, 4, 7, 10, 13, 16, 19])),
        "",
    );
    let d: Vec<Rational> = (0..IDENTITY_TERMS as i64)
        .map(|k| rat(3 * k + 3 * zero_pow(k) - 2))
        .collect();
    claims.values(
        "narayana-source-formula",
        prefix_of(&source, IDENTITY_TERMS),
        Ok(d.clone()),
        "3k + 3*0^k - 2",
    );
    claims.values(
        "narayana-sum",
        prefix_of(&img, IDENTITY_TERMS),
        Ok((0..IDENTITY_TERMS as i64)
            .map(|n| narayana_sum(&d, n))
            .collect()),
        "",
    );
    claims.values(
        "closed-formula",
        prefix_of(&img, IDENTITY_TERMS),
        Ok((0..IDENTITY_TERMS as i64)
            .map(|n| {
                ratio(3 * n - 1, n + 1) * Rational::from_integer(binomial(2 * n - 1, n - 1))
                    + rat(zero_pow(n))
            })
            .collect()),
        "(3n-1)/(n+1) C(2n-1,n-1) + 0^n",
    );
    let shifted = img
        .as_ref()
        .map_err(Clone::clone)
        .map(|s| PowerSeries::new(s.coeffs()[1..].to_vec()));
    hankel_claims(
        &mut claims,
        "shifted-image-hankel",
        &shifted,
        rational(&[1, -4], &[1, 1, 4]),
        m,
        "",
    );
    out.extend(claims.finish());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The corrected conjecture reproduces the worked example's denominator
    /// `(1 + x + 4x^2)^2`.
    #[test]
    fn conjecture_matches_worked_example() {
        let g = conjectured_hankel(1, -2).unwrap();
        assert_eq!(g, rational(&[1, 6, 0, -16], &[1, 2, 9, 8, 16]).unwrap());
    }

    #[test]
    fn examples_pass() {
        let reports = quadratic_denominator_examples(10);
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }
}
