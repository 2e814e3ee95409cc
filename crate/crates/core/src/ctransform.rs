//! The central transform `C(g) = 1 / (sqrt(1-4x) g(x c(x)^2))` in its four
//! equivalent forms, its inverse, and the classical transforms it is built
//! from (binomial, Catalan, INVERT(alpha), partial sums).
//!
//! The closed form is the primary path. The constructive route (central
//! elements of a half matrix), the `binom(2n, n-k)` sum and the A039599
//! matrix route exist to cross-check it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::riordan::RiordanArray;
use crate::sequence::IntSequence;
use crate::series::{binomial, catalan_gf, format_rational, rat, zero_pow, PowerSeries, Rational};

fn require_unit_constant(s: &PowerSeries, what: &str) -> Result<()> {
    if s.coeff(0).is_one() {
        Ok(())
    } else {
        Err(Error::Normalization {
            what: format!("{what}(0)"),
            found: format_rational(s.coeff(0)),
            expected: "1".into(),
        })
    }
}

fn require_unit_first(a: &IntSequence, what: &str) -> Result<()> {
    match a.terms().first() {
        Some(t) if t.is_one() => Ok(()),
        Some(t) => Err(Error::Normalization {
            what: format!("{what}_0"),
            found: t.to_string(),
            expected: "1".into(),
        }),
        None => Err(Error::InsufficientTerms { needed: 1, got: 0 }),
    }
}

/// `x c(x)^2` to order `n`.
fn x_c_squared(n: usize) -> PowerSeries {
    let c = catalan_gf(n);
    c.mul(&c).shift_up(1).truncate(n)
}

fn sqrt_one_minus_4x(n: usize) -> PowerSeries {
    let s = &PowerSeries::one(n) - &PowerSeries::monomial(1, rat(4), n);
    s.sqrt().expect("1 - 4x has a unit constant term")
}

/// Closed form of the central transform; output order equals input order.
pub fn c_transform(g: &PowerSeries) -> Result<PowerSeries> {
    require_unit_constant(g, "g")?;
    let n = g.order();
    let inner = g.compose(&x_c_squared(n))?;
    sqrt_one_minus_4x(n).mul(&inner).recip()
}

/// Central elements `t[2n][n]` of `Pascal . (g, x)^-1`, built step by step.
pub fn c_transform_constructive(g: &PowerSeries) -> Result<IntSequence> {
    require_unit_constant(g, "g")?;
    let n = g.order();
    // t[2n][n] only sees g_0..g_n, so padding g with zeros is harmless
    let big = (2 * n).max(1);
    let padded = PowerSeries::from_polynomial(g.coeffs(), big);
    let appell_inverse = RiordanArray::appell(padded)?.inverse()?;
    let array = RiordanArray::pascal(big).multiply(&appell_inverse)?;
    let central = (0..=n)
        .map(|k| array.element(2 * k, k))
        .collect::<Result<Vec<Rational>>>()?;
    IntSequence::from_series(&PowerSeries::new(central))
}

/// `b_n = sum_k binom(2n, n-k) a*_k`, with `a*` the reciprocal of `a`.
pub fn c_transform_sequence(a: &IntSequence) -> Result<IntSequence> {
    let star = reciprocal_sequence(a)?;
    let n = a.len();
    Ok(IntSequence::new(
        (0..n)
            .map(|i| {
                (0..=i)
                    .map(|k| binomial(2 * i as i64, (i - k) as i64) * &star[k])
                    .sum()
            })
            .collect(),
    ))
}

/// `(c(x), x c(x)^2) . 1/((1-x) g)`: Catalan transform of the binomial
/// transform of the partial sums of the reciprocal.
pub fn c_transform_matrix_path(g: &PowerSeries) -> Result<PowerSeries> {
    require_unit_constant(g, "g")?;
    let n = g.order();
    let h = partial_sums(&g.recip()?)?;
    RiordanArray::a039599(n.max(1))
        .apply(&h)
        .map(|s| s.truncate(n))
}

/// Reciprocal sequence `a*`, the coefficients of `1 / g`.
pub fn reciprocal_sequence(a: &IntSequence) -> Result<IntSequence> {
    require_unit_first(a, "a")?;
    IntSequence::from_series(&a.to_series().recip()?)
}

/// Inverse transform `g = 1 / ((1-x)/(1+x) h(x/(1+x)^2))`.
pub fn c_inverse(h: &PowerSeries) -> Result<PowerSeries> {
    require_unit_constant(h, "h")?;
    let n = h.order();
    let one = PowerSeries::one(n);
    let one_plus_x = &one + &PowerSeries::x(n);
    let u = PowerSeries::x(n).div(&one_plus_x.mul(&one_plus_x))?;
    let weight = (&one - &PowerSeries::x(n)).div(&one_plus_x)?;
    weight.mul(&h.compose(&u)?).recip()
}

/// `a*_n = sum_k (-1)^(n-k) (2n + 0^n)/(n + k + 0^(n+k)) binom(n+k, 2k) b_k`,
/// the entries of A110162 applied to `b`.
pub fn reciprocal_preimage_sequence(b: &IntSequence) -> Result<IntSequence> {
    require_unit_first(b, "b")?;
    let mut out = Vec::with_capacity(b.len());
    for n in 0..b.len() as i64 {
        let mut acc = Rational::zero();
        for k in 0..=n {
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            let weight = Rational::new(
                BigInt::from(sign * (2 * n + zero_pow(n))),
                BigInt::from(n + k + zero_pow(n + k)),
            );
            acc += weight
                * Rational::from_integer(binomial(n + k, 2 * k))
                * Rational::from_integer(b[k as usize].clone());
        }
        if !acc.is_integer() {
            return Err(Error::NonIntegral {
                index: n as usize,
                value: format_rational(&acc),
            });
        }
        out.push(acc.to_integer());
    }
    Ok(IntSequence::new(out))
}

/// INVERT(alpha): `f / (1 + alpha x f)`.
pub fn invert_alpha(f: &PowerSeries, alpha: i64) -> Result<PowerSeries> {
    let n = f.order();
    let denom = &PowerSeries::one(n) + &f.shift_up(1).truncate(n).scale(&rat(alpha));
    f.div(&denom)
}

/// `k`-th binomial transform `1/(1-kx) s(x/(1-kx))`; negative `k` gives the
/// inverse transforms.
pub fn binomial_transform_k(s: &PowerSeries, k: i64) -> Result<PowerSeries> {
    let n = s.order();
    let base = &PowerSeries::one(n) - &PowerSeries::monomial(1, rat(k), n);
    let weight = base.recip()?;
    let u = PowerSeries::x(n).mul(&weight);
    Ok(weight.mul(&s.compose(&u)?))
}

/// Binomial transform `1/(1-x) s(x/(1-x))`, Pascal's triangle applied to `s`.
pub fn binomial_transform(s: &PowerSeries) -> Result<PowerSeries> {
    binomial_transform_k(s, 1)
}

/// Catalan transform `s(x c(x))`.
pub fn catalan_transform(s: &PowerSeries) -> Result<PowerSeries> {
    let n = s.order();
    s.compose(&catalan_gf(n).shift_up(1).truncate(n))
}

/// Partial sums: multiplication by `1/(1-x)`.
pub fn partial_sums(s: &PowerSeries) -> Result<PowerSeries> {
    let n = s.order();
    s.div(&(&PowerSeries::one(n) - &PowerSeries::x(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::expand_str;

    fn e(text: &str, n: usize) -> PowerSeries {
        expand_str(text, n).unwrap()
    }

    fn ints(v: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(v.iter().copied())
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            c_transform(&e("1/(1-x)", 4)).unwrap(),
            ints(&[1, 1, 2, 5, 14])
        );
        assert_eq!(c_transform(&e("1", 4)).unwrap(), ints(&[1, 2, 6, 20, 70]));
        assert_eq!(
            c_transform(&e("(1+x)/(1-x)", 4)).unwrap(),
            ints(&[1, 0, 0, 0, 0])
        );
    }

    #[test]
    fn rejects_non_unit_constant() {
        assert!(matches!(
            c_transform(&e("2+x", 4)),
            Err(Error::Normalization { .. })
        ));
        assert!(matches!(
            c_inverse(&e("3", 4)),
            Err(Error::Normalization { .. })
        ));
        assert!(matches!(
            c_transform_sequence(&IntSequence::from_i64s([2, 1])),
            Err(Error::Normalization { .. })
        ));
        assert!(matches!(
            reciprocal_preimage_sequence(&IntSequence::from_i64s([0, 1])),
            Err(Error::Normalization { .. })
        ));
    }

    #[test]
    fn constructive_examples() {
        assert_eq!(
            c_transform_constructive(&e("1/(1-x)", 4)).unwrap(),
            IntSequence::from_i64s([1, 1, 2, 5, 14])
        );
        assert_eq!(
            c_transform_constructive(&e("1", 3)).unwrap(),
            IntSequence::from_i64s([1, 2, 6, 20])
        );
        assert_eq!(
            c_transform_constructive(&e("1/(1+x)", 3)).unwrap(),
            IntSequence::from_i64s([1, 3, 10, 35])
        );
        assert_eq!(
            c_transform_constructive(&e("1", 0)).unwrap(),
            IntSequence::from_i64s([1])
        );
    }

    #[test]
    fn sequence_examples() {
        let ones = IntSequence::from_i64s([1; 5]);
        assert_eq!(
            c_transform_sequence(&ones).unwrap(),
            IntSequence::from_i64s([1, 1, 2, 5, 14])
        );
        let delta = IntSequence::from_i64s([1, 0, 0, 0, 0]);
        assert_eq!(
            c_transform_sequence(&delta).unwrap(),
            IntSequence::from_i64s([1, 2, 6, 20, 70])
        );
        let a = IntSequence::from_i64s([1, -1, -1, -1, -1, -1]);
        assert_eq!(
            c_transform_sequence(&a).unwrap(),
            IntSequence::from_i64s([1, 3, 12, 51, 222, 978])
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(c_inverse(&e("c(x)", 6)).unwrap(), ints(&[1; 7]));
        assert_eq!(c_inverse(&e("1", 5)).unwrap(), ints(&[1, 2, 2, 2, 2, 2]));
        assert_eq!(
            c_inverse(&e("1/sqrt(1-4*x)", 5)).unwrap(),
            ints(&[1, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn reciprocal_preimage_examples() {
        // oracle: coefficients of 1 - x from the expression evaluator
        let catalan = IntSequence::from_series(&e("c(x)", 8)).unwrap();
        let want = IntSequence::from_series(&e("1-x", 8)).unwrap();
        assert_eq!(reciprocal_preimage_sequence(&catalan).unwrap(), want);

        let central = IntSequence::from_i64s([1, 2, 6, 20, 70]);
        assert_eq!(
            reciprocal_preimage_sequence(&central).unwrap(),
            IntSequence::from_i64s([1, 0, 0, 0, 0])
        );

        let a158499 =
            IntSequence::from_i64s([1, 1, 1, 0, -5, -24, -90, -312, -1053, -3536, -11934]);
        assert_eq!(
            reciprocal_preimage_sequence(&a158499).unwrap(),
            IntSequence::from_i64s([1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1])
        );
    }

    #[test]
    fn reciprocal_preimage_matches_series_route() {
        let b = IntSequence::from_i64s([1, 5, -3, 8, 0, 2]);
        let via_series = c_inverse(&b.to_series()).unwrap().recip().unwrap();
        assert_eq!(
            reciprocal_preimage_sequence(&b).unwrap().to_series(),
            via_series
        );
    }

    #[test]
    fn invert_alpha_examples() {
        let n = 10;
        let c = e("c(x)", n);
        assert_eq!(invert_alpha(&c, 1).unwrap(), e("c(x)/(1+x*c(x))", n));
        let f = e("(1+3*x)/(1-x-x^3)", n);
        assert_eq!(invert_alpha(&f, 0).unwrap(), f);
        assert_eq!(invert_alpha(&c, -1).unwrap(), e("c(x)^2", n));
    }

    #[test]
    fn binomial_transform_examples() {
        assert_eq!(
            binomial_transform(&ints(&[1, 0, 0])).unwrap(),
            ints(&[1, 1, 1])
        );
        assert_eq!(
            binomial_transform(&ints(&[1; 4])).unwrap(),
            ints(&[1, 2, 4, 8])
        );
        // oracle: Pascal matrix-vector product
        let s = e("(1-x)/(1-x-2*x^2)", 9);
        let via_matrix = RiordanArray::pascal(9).matrix().mul_vector(s.coeffs());
        assert_eq!(
            binomial_transform(&s).unwrap().coeffs(),
            via_matrix.as_slice()
        );
    }

    #[test]
    fn inverse_binomial_by_four() {
        let s = e("1/sqrt(1-4*x)^3", 10);
        assert_eq!(binomial_transform_k(&s, -4).unwrap(), e("sqrt(1+4*x)", 10));
    }

    #[test]
    fn catalan_transform_examples() {
        assert_eq!(catalan_transform(&e("1/(1-x)", 8)).unwrap(), e("c(x)", 8));
        assert_eq!(catalan_transform(&e("1", 8)).unwrap(), e("1", 8));
        let a028242: Vec<i64> = (0..7)
            .map(|n| if n % 2 == 0 { n / 2 + 1 } else { n / 2 })
            .collect();
        assert_eq!(
            catalan_transform(&ints(&a028242)).unwrap(),
            ints(&[1, 0, 2, 5, 16, 51, 168])
        );
    }

    #[test]
    fn partial_sums_examples() {
        assert_eq!(partial_sums(&ints(&[1, 1, 1])).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(
            partial_sums(&ints(&[1, -1, 1, -1])).unwrap(),
            ints(&[1, 0, 1, 0])
        );
        let star = reciprocal_sequence(&IntSequence::from_i64s([1, 3, -2, 5, 1, 0])).unwrap();
        let mut running = BigInt::zero();
        let oracle: Vec<BigInt> = star
            .terms()
            .iter()
            .map(|t| {
                running += t;
                running.clone()
            })
            .collect();
        assert_eq!(
            partial_sums(&star.to_series()).unwrap(),
            PowerSeries::from_bigints(&oracle)
        );
    }

    #[test]
    fn four_routes_agree_on_a_fixed_input() {
        let g = e("(1+2*x-x^3)/(1-x+3*x^2)", 12);
        let closed = c_transform(&g).unwrap();
        assert_eq!(c_transform_constructive(&g).unwrap().to_series(), closed);
        assert_eq!(
            c_transform_sequence(&IntSequence::from_series(&g).unwrap())
                .unwrap()
                .to_series(),
            closed
        );
        assert_eq!(c_transform_matrix_path(&g).unwrap(), closed);
    }
}
