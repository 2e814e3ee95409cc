//! Images of the aerated sequences `(1 + x^r)/(1 - x^r)`, their rational
//! closed forms, and the fractions obtained by evaluating those forms.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::ctransform::c_transform;
use crate::expr::expand_str;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{agreement_length, ints, prefix_of, IDENTITY_TERMS};
use crate::hankel::RationalGF;
use crate::poly::Poly;
use crate::riordan::RiordanArray;
use crate::series::{binomial, central_binomial_gf, rat, ratio, PowerSeries, Rational};
use crate::{Error, Result};

const FAMILY: &str = "aerated";

pub fn input(r: usize, order: usize) -> Result<PowerSeries> {
    expand_str(&format!("(1+x^{r})/(1-x^{r})"), order)
}

pub fn image(r: usize, order: usize) -> Result<PowerSeries> {
    c_transform(&input(r, order)?)
}

/// Tabulated closed forms for `r = 1..=6`.
pub fn table_gf(r: usize) -> Option<RationalGF> {
    let (p, q): (&[i64], &[i64]) = match r {
        1 => (&[1], &[1]),
        2 => (&[1], &[1, -2]),
        3 => (&[1, -1], &[1, -3]),
        4 => (&[1, -2], &[1, -4, 2]),
        5 => (&[1, -3, 1], &[1, -5, 5]),
        6 => (&[1, -4, 3], &[1, -6, 9, -2]),
        _ => return None,
    };
    RationalGF::from_ints(p, q).ok()
}

/// `sum_j C(n-j, j) (-x)^j`, zero for negative `n`.
fn alternating_diagonal(n: i64) -> Poly {
    if n < 0 {
        return Poly::new(Vec::new());
    }
    Poly::new(
        (0..=n)
            .map(|j| {
                let s = if j % 2 == 0 { 1 } else { -1 };
                Rational::from_integer(binomial(n - j, j) * BigInt::from(s))
            })
            .collect(),
    )
}

/// `u_n / (u_n - 2x u_(n-1))` with `u_n` the alternating diagonal sums;
/// index `n` gives the image for `r = n + 1`.
pub fn ratio_formula_gf(n: usize) -> Result<RationalGF> {
    let u = alternating_diagonal(n as i64);
    let v = alternating_diagonal(n as i64 - 1).mul(&Poly::from_ints(&[0, 2]));
    let den = Poly::new(
        (0..=u.degree().max(v.degree()))
            .map(|k| u.coeff(k) - v.coeff(k))
            .collect(),
    );
    RationalGF::new(u, den)
}

/// Row `n` of a Riordan array, reversed so that `x^n p(1/x)` is returned.
fn reversed_row(g: &str, n: usize) -> Result<Poly> {
    let arr = RiordanArray::from_exprs(g, "x/(1+x)^2", n + 1)?;
    let row: Result<Vec<Rational>> = (0..=n).map(|k| arr.element(n, n - k)).collect();
    Ok(Poly::new(row?))
}

/// Quotient of orthogonal-polynomial families evaluated at `1/x`: for odd
/// `r = 2m+1` it is `P_m/R_m`, for even `r = 2m` it is `(1/x) Q_(m-1)/S_m`.
pub fn orthogonal_quotient_gf(r: usize) -> Result<RationalGF> {
    if r == 0 {
        return Err(Error::Invalid("r must be at least 1".into()));
    }
    let m = r / 2;
    if r % 2 == 1 {
        RationalGF::new(
            reversed_row("1/(1+x)", m)?,
            reversed_row("(1-x)/(1+x)^2", m)?,
        )
    } else {
        RationalGF::new(
            reversed_row("1/(1+x)^2", m - 1)?,
            reversed_row("(1-x)/(1+x)", m)?,
        )
    }
}

pub fn verify_aerated(r: usize, _m: usize) -> Vec<VerificationReport> {
    let order = (IDENTITY_TERMS - 1).max(2 * r + 2);
    let terms = order + 1;
    let mut claims = Claims::new(FAMILY, &[("r", r as i64)]);
    if r == 0 {
        claims.values(
            "image",
            Err(Error::Invalid("r must be at least 1".into())),
            Ok(Vec::new()),
            "",
        );
        return claims.finish();
    }
    let img = image(r, order);
    if let Some(t) = table_gf(r) {
        let note = match r {
            3 => "numerator 1 - x",
            6 => "cubic denominator term -2x^3",
            _ => "",
        };
        claims.series("table", &img, Ok(t.expand(order)), terms, note);
    }
    claims.series(
        "ratio-formula",
        &img,
        ratio_formula_gf(r - 1).map(|g| g.expand(order)),
        terms,
        "diagonal-sum index r - 1",
    );
    claims.series(
        "orthogonal-quotient",
        &img,
        orthogonal_quotient_gf(r).map(|g| g.expand(order)),
        terms,
        "polynomial index floor(r/2)",
    );
    claims.values(
        "central-binomial-agreement",
        img.as_ref()
            .map(|s| vec![rat(agreement_length(s, &central_binomial_gf(order)) as i64)])
            .map_err(Clone::clone),
        Ok(vec![rat(r as i64)]),
        "leading terms shared with C(2n,n)",
    );
    claims.finish()
}

/// Values of the closed forms at `x = point` for `r = 1..=count`.
pub fn evaluated_fractions(point: i64, count: usize) -> Result<Vec<Rational>> {
    (1..=count)
        .map(|r| {
            ratio_formula_gf(r - 1)?
                .eval(&rat(point))
                .ok_or_else(|| Error::Invalid(format!("pole at x = {point} for r = {r}")))
        })
        .collect()
}

fn fractions(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(p, q)| ratio(p, q)).collect()
}

/// `coeff * num^2 + den^2` for each reduced fraction.
fn quadratic_form(values: &[Rational], coeff: i64) -> Vec<Rational> {
    values
        .iter()
        .map(|v| {
            let (p, q) = (v.numer().abs(), v.denom().abs());
            Rational::from_integer(BigInt::from(coeff) * &p * &p + &q * &q)
        })
        .collect()
}

fn powers(base: i64, from: u32, count: usize) -> Vec<Rational> {
    (0..count as u32)
        .map(|k| Rational::from_integer(BigInt::from(base).pow(from + k)))
        .collect()
}

pub fn aerated_examples() -> Vec<VerificationReport> {
    let order = IDENTITY_TERMS - 1;
    let mut claims = Claims::new(FAMILY, &[]);
    let inputs: [(usize, &[i64], &[i64]); 4] = [
        (1, &[1, 2, 2, 2], &[1, -2, 2, -2]),
        (2, &[1, 0, 2, 0, 2, 0], &[1, 0, -2, 0, 2, 0]),
        (
            3,
            &[1, 0, 0, 2, 0, 0, 2, 0, 0],
            &[1, 0, 0, -2, 0, 0, 2, 0, 0],
        ),
        (
            4,
            &[1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0],
            &[1, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0],
        ),
    ];
    for (r, seq, recip) in inputs {
        let s = input(r, order);
        claims.values(
            &format!("input-r{r}"),
            prefix_of(&s, seq.len()),
            Ok(ints(seq)),
            "",
        );
        let inv = s.and_then(|s| s.recip());
        claims.values(
            &format!("reciprocal-r{r}"),
            prefix_of(&inv, recip.len()),
            Ok(ints(recip)),
            "",
        );
    }

    let printed = RationalGF::from_ints(&[1, -9, 28, -35, 15, -1], &[1, -11, 44, -77, 55, -11]);
    claims.values(
        "printed-long-form-prefix",
        printed
            .as_ref()
            .map(|g| g.expand(10).into_coeffs())
            .map_err(Clone::clone),
        Ok(ints(&[
            1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756,
        ])),
        "denominator powers read as 1..5",
    );
    claims.series(
        "printed-long-form-is-r11",
        &image(11, order),
        printed
            .as_ref()
            .map(|g| g.expand(order))
            .map_err(Clone::clone),
        IDENTITY_TERMS,
        "",
    );
    claims.values(
        "printed-long-form-is-diagonal-index-10",
        ratio_formula_gf(10).map(|g| g.expand(order).into_coeffs()),
        printed.map(|g| g.expand(order).into_coeffs()),
        "",
    );
    let agreement: Result<Vec<Rational>> = (1..=12)
        .map(|r| {
            image(r, 2 * r + 2)
                .map(|s| rat(agreement_length(&s, &central_binomial_gf(2 * r + 2)) as i64))
        })
        .collect();
    claims.values(
        "central-binomial-agreement",
        agreement,
        Ok((1..=12).map(rat).collect()),
        "r = 1..12",
    );

    let at_two = evaluated_fractions(2, 11);
    claims.values(
        "fractions-at-2",
        at_two.clone(),
        Ok(fractions(&[
            (1, 1),
            (-1, 3),
            (1, 5),
            (-3, 1),
            (-1, 11),
            (5, 9),
            (-7, 13),
            (3, 31),
            (17, 5),
            (-11, 57),
            (23, 67),
        ])),
        "last value 23/67",
    );
    claims.values(
        "fractions-at-2-numerators",
        at_two
            .as_ref()
            .map(|v| {
                v.iter()
                    .map(|f| Rational::from_integer(f.numer().clone()))
                    .collect()
            })
            .map_err(Clone::clone),
        Ok(ints(&[1, -1, 1, -3, -1, 5, -7, 3, 17, -11, 23])),
        "",
    );
    claims.values(
        "fractions-at-2-denominators",
        at_two
            .as_ref()
            .map(|v| {
                v.iter()
                    .map(|f| Rational::from_integer(f.denom().clone()))
                    .collect()
            })
            .map_err(Clone::clone),
        Ok(ints(&[1, 3, 5, 1, 11, 9, 13, 31, 5, 57, 67])),
        "",
    );
    claims.values(
        "diophantine-at-2",
        at_two
            .as_ref()
            .map(|v| quadratic_form(v, 7))
            .map_err(Clone::clone),
        Ok(powers(2, 3, 11)),
        "7 p^2 + q^2 = 2^(k+3)",
    );
    claims.values(
        "signed-numerators-at-2",
        prefix_of(&expand_str("1/(1-x+2*x^2)", order), 10),
        Ok(ints(&[1, 1, -1, -3, -1, 5, 7, -3, -17, -11])),
        "",
    );
    claims.values(
        "signed-denominators-at-2",
        prefix_of(&expand_str("(1-4*x)/(1-x+2*x^2)", order), 13),
        Ok(ints(&[
            1, -3, -5, 1, 11, 9, -13, -31, -5, 57, 67, -47, -181,
        ])),
        "",
    );

    let at_four = evaluated_fractions(4, 11);
    claims.values(
        "fractions-at-4",
        at_four.clone(),
        Ok(fractions(&[
            (1, 1),
            (-1, 7),
            (3, 11),
            (-7, 17),
            (5, 61),
            (-33, 7),
            (-13, 251),
            (119, 223),
            (-171, 781),
            (305, 1673),
            (-989, 1451),
        ])),
        "",
    );
    claims.values(
        "diophantine-at-4",
        at_four
            .as_ref()
            .map(|v| quadratic_form(v, 15))
            .map_err(Clone::clone),
        Ok(powers(4, 2, 11)),
        "15 p^2 + q^2 = 4^(k+2)",
    );
    claims.values(
        "signed-denominators-at-4",
        prefix_of(&expand_str("(1-8*x)/(1-x+4*x^2)", order), 11),
        Ok(ints(&[
            1, -7, -11, 17, 61, -7, -251, -223, 781, 1673, -1451,
        ])),
        "",
    );
    claims.values(
        "signed-numerators-at-4",
        prefix_of(&expand_str("1/(1-x+4*x^2)", order), 11),
        Ok(ints(&[1, 1, -3, -7, 5, 33, 13, -119, -171, 305, 989])),
        "",
    );
    claims.values(
        "numerators-at-4",
        at_four.map(|v| {
            v.iter()
                .map(|f| Rational::from_integer(f.numer().clone()))
                .collect()
        }),
        Ok(ints(&[1, -1, 3, -7, 5, -33, -13, 119, -171, 305, -989])),
        "",
    );
    claims.finish()
}

/// First index where `C((1+x^r)/(1-x^r))` and `C(2n,n)` differ.
pub fn central_binomial_agreement(r: usize) -> Result<usize> {
    let order = 2 * r + 2;
    Ok(agreement_length(
        &image(r, order)?,
        &central_binomial_gf(order),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        assert_eq!(
            table_gf(2).unwrap(),
            RationalGF::from_ints(&[1], &[1, -2]).unwrap()
        );
        assert_eq!(
            table_gf(4).unwrap(),
            RationalGF::from_ints(&[1, -2], &[1, -4, 2]).unwrap()
        );
        for r in 1..=6 {
            assert_eq!(
                table_gf(r).unwrap().expand(20),
                image(r, 20).unwrap(),
                "r = {r}"
            );
        }
    }

    #[test]
    fn closed_forms_match_direct_transform() {
        for r in 1..=8 {
            let direct = image(r, 20).unwrap();
            assert_eq!(
                ratio_formula_gf(r - 1).unwrap().expand(20),
                direct,
                "ratio r = {r}"
            );
            assert_eq!(
                orthogonal_quotient_gf(r).unwrap().expand(20),
                direct,
                "quotient r = {r}"
            );
        }
    }

    /// Agreement with C(2n,n) covers exactly r terms; at r = 10 the term of
    /// index 10 is two less than C(20,10).
    #[test]
    fn central_binomial_agreement_is_r() {
        for r in 1..=12 {
            assert_eq!(central_binomial_agreement(r).unwrap(), r);
        }
        let img = image(10, 12).unwrap();
        assert_eq!(img.coeff(10), &rat(184754));
        assert_eq!(central_binomial_gf(12).coeff(10), &rat(184756));
    }

    #[test]
    fn fraction_pairs_satisfy_quadratic_forms() {
        let two = evaluated_fractions(2, 11).unwrap();
        assert_eq!(two[10], ratio(23, 67));
        assert_eq!(quadratic_form(&two, 7), powers(2, 3, 11));
        assert_eq!(
            quadratic_form(&evaluated_fractions(4, 11).unwrap(), 15),
            powers(4, 2, 11)
        );
    }

    #[test]
    fn examples_pass() {
        let reports = aerated_examples();
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }
}
