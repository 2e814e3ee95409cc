//! Pairs of sequences whose images share a Hankel transform:
//! `((1+x)/(1-x))^2` against its reciprocal, and the doubled versions.

use crate::ctransform::{binomial_transform_k, c_transform};
use crate::expr::expand_str;
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{
    fit_prefix_len, hankel_claims, hankel_of, ints, prefix_of, rational, sign, IDENTITY_TERMS,
};
use crate::series::{rat, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "equal-hankel";

fn image(input: &str, order: usize) -> Result<PowerSeries> {
    expand_str(input, order).and_then(|g| c_transform(&g))
}

fn pow_neg2(n: i64) -> Rational {
    sign(n) * rat(1i64 << n)
}

pub fn verify_equal_hankel(m: usize) -> Vec<VerificationReport> {
    let order = IDENTITY_TERMS - 1;
    let terms = order + 1;
    let wide = 2 * m.max(fit_prefix_len(6, 7)) + 4;
    let mut claims = Claims::new(FAMILY, &[]);

    let a = expand_str("((1+x)/(1-x))^2", order);
    claims.values(
        "input",
        prefix_of(&a, 12),
        Ok(ints(&[1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44])),
        "",
    );
    let a_star = a
        .as_ref()
        .map_err(Clone::clone)
        .and_then(PowerSeries::recip);
    claims.values(
        "reciprocal",
        prefix_of(&a_star, 12),
        Ok(ints(&[1, -4, 8, -12, 16, -20, 24, -28, 32, -36, 40, -44])),
        "",
    );
    claims.values(
        "reciprocal-alternates",
        prefix_of(&a_star, terms),
        prefix_of(&a, terms).map(|v| {
            v.iter()
                .enumerate()
                .map(|(n, t)| sign(n as i64) * t)
                .collect()
        }),
        "",
    );

    let img = image("((1+x)/(1-x))^2", wide);
    let img_star = image("((1-x)/(1+x))^2", wide);
    claims.series("image", &img, expand_str("sqrt(1-4*x)", wide), wide + 1, "");
    claims.values(
        "image-prefix",
        prefix_of(&img, 5),
        Ok(ints(&[1, -2, -2, -4, -10])),
        "",
    );
    claims.series(
        "reciprocal-image",
        &img_star,
        expand_str("1/sqrt(1-4*x)^3", wide),
        wide + 1,
        "",
    );

    let odd: Vec<Rational> = (0..m as i64)
        .map(|n| rat(2 * n + 1) * pow_neg2(n))
        .collect();
    claims.values(
        "hankel",
        hankel_of(&img, m),
        Ok(odd.clone()),
        "(2n+1)(-2)^n",
    );
    claims.values(
        "reciprocal-hankel",
        hankel_of(&img_star, m),
        Ok(odd),
        "(2n+1)(-2)^n",
    );
    hankel_claims(
        &mut claims,
        "hankel-gf",
        &img,
        rational(&[1, -2], &[1, 4, 4]),
        m,
        "",
    );
    hankel_claims(
        &mut claims,
        "reciprocal-hankel-gf",
        &img_star,
        rational(&[1, -2], &[1, 4, 4]),
        m,
        "",
    );

    let inverse_binomial = img_star
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|s| binomial_transform_k(s, -4));
    claims.series(
        "fourth-inverse-binomial",
        &inverse_binomial,
        expand_str("sqrt(1+4*x)", wide),
        wide + 1,
        "",
    );
    claims.values(
        "sign-alternation",
        prefix_of(&inverse_binomial, terms),
        prefix_of(&img, terms).map(|v| {
            v.iter()
                .enumerate()
                .map(|(n, t)| sign(n as i64) * t)
                .collect()
        }),
        "",
    );
    claims.values(
        "hankel-invariance-binomial",
        hankel_of(&inverse_binomial, m),
        hankel_of(&img_star, m),
        "",
    );

    let doubled = image("((1+x^2)/(1-x^2))^2", wide);
    let doubled_star = image("((1-x^2)/(1+x^2))^2", wide);
    claims.series(
        "doubled-image",
        &doubled,
        expand_str("sqrt(1-4*x)/(1-2*x)^2", wide),
        wide + 1,
        "numerator sqrt(1-4x)",
    );
    claims.series(
        "doubled-reciprocal-image",
        &doubled_star,
        expand_str("(1-2*x)^2/sqrt(1-4*x)^3", wide),
        wide + 1,
        "",
    );
    let h = hankel_of(&doubled, 11);
    claims.values(
        "doubled-hankel-prefix",
        h.clone(),
        Ok(ints(&[
            1, -2, 12, -24, 80, -160, 448, -896, 2304, -4608, 11264,
        ])),
        "",
    );
    claims.values(
        "doubled-hankel-formula",
        h.clone(),
        Ok((0..11)
            .map(|n| pow_neg2(n) * rat(2 * (n / 2) + 1))
            .collect()),
        "(-2)^n (2 floor(n/2) + 1)",
    );
    hankel_claims(
        &mut claims,
        "doubled-hankel-gf",
        &doubled,
        rational(&[1, 0, 4], &[1, 2, -4, -8]),
        m,
        "",
    );
    let h_star = hankel_of(&doubled_star, 11);
    claims.values(
        "doubled-reciprocal-hankel-prefix",
        h_star
            .as_ref()
            .map(|v| v[..10].to_vec())
            .map_err(Clone::clone),
        Ok(ints(&[
            1, 6, -36, 360, -1200, 5600, -15680, 56448, -145152, 456192,
        ])),
        "",
    );
    hankel_claims(
        &mut claims,
        "doubled-reciprocal-hankel-gf",
        &doubled_star,
        rational(
            &[1, 8, -36, 192, -144, 128, 64],
            &[1, 2, -12, -24, 48, 96, -64, -128],
        ),
        m,
        "",
    );
    let ratios: Result<Vec<Rational>> = match (&h, &h_star) {
        (Ok(h), Ok(hs)) => Ok(hs.iter().zip(h).map(|(a, b)| a / b).collect()),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    claims.values(
        "ratio-sequence",
        ratios.clone(),
        Ok(ints(&[1, -3, -3, -15, -15, -35, -35, -63, -63, -99, -99])),
        "",
    );
    claims.values(
        "ratio-sequence-gf",
        ratios,
        rational(&[1, -4, -2, -4, 1], &[1, -1, -2, 2, 1, -1]).map(|g| g.expand(10).into_coeffs()),
        "",
    );
    claims.values(
        "ratio-denominator-factored",
        expand_str("(1+x)^2*(1-x)^3", 5).map(PowerSeries::into_coeffs),
        Ok(ints(&[1, -1, -2, 2, 1, -1])),
        "",
    );
    claims.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_claims_pass() {
        let reports = verify_equal_hankel(8);
        assert!(
            reports.iter().all(VerificationReport::passed),
            "{}",
            crate::families::format_table(&reports)
        );
    }

    /// The doubled image carries `sqrt(1-4x)` in its numerator, not `1-4x`.
    #[test]
    fn doubled_image_numerator() {
        let img = image("((1+x^2)/(1-x^2))^2", 10).unwrap();
        assert_ne!(img, expand_str("(1-4*x)/(1-2*x)^2", 10).unwrap());
        assert_eq!(img, expand_str("sqrt(1-4*x)/(1-2*x)^2", 10).unwrap());
    }
}
