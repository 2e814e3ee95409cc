//! C pre-images of the Narayana row polynomials evaluated at `r`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ctransform::{c_inverse, c_transform};
use crate::families::report::{Claims, VerificationReport};
use crate::families::support::{gf, ints, prefix, prefix_of};
use crate::series::{binomial, catalan_gf, PowerSeries, Rational};
use crate::Result;

const FAMILY: &str = "narayana";

/// Quartic under the square root of the pre-image forms.
const QUARTIC: &str = "sqrt(1-2*({r}-1)*x+({r}^2-6*{r}+3)*x^2-2*({r}-1)*x^3+x^4)";

/// `N(n,k) = C(n,k) C(n+1,k) / (k+1)` for `0 <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarayanaTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl NarayanaTriangle {
    /// Rows `0..size`.
    pub fn new(size: usize) -> Self {
        let rows = (0..size as i64)
            .map(|n| {
                (0..=n)
                    .map(|k| binomial(n, k) * binomial(n + 1, k) / BigInt::from(k + 1))
                    .collect()
            })
            .collect();
        NarayanaTriangle { rows }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// `sum_k N(n,k) r^k`, with `0^0 = 1`.
    pub fn row_value(&self, n: usize, r: i64) -> BigInt {
        let r = BigInt::from(r);
        let mut power = BigInt::one();
        let mut total = BigInt::zero();
        for t in &self.rows[n] {
            total += t * &power;
            power *= &r;
        }
        total
    }

    pub fn row_values(&self, r: i64) -> Vec<BigInt> {
        (0..self.rows.len()).map(|n| self.row_value(n, r)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows.iter().all(|row| row.iter().eq(row.iter().rev()))
    }
}

/// Pre-image of `sum_k N(n,k) r^k`: a square root of a quartic over `2(1-x^2)`.
pub fn preimage(r: i64, order: usize) -> Result<PowerSeries> {
    gf(
        &format!("(1-({{r}}-1)*x+x^2+{QUARTIC})/(2*(1-x^2))"),
        &[("r", r)],
        order,
    )
}

/// Pre-image of `1 + x * sum_k N(n,k) r^k`; requires `r != 0`.
pub fn unshifted_preimage(r: i64, order: usize) -> Result<PowerSeries> {
    gf(
        &format!("2*{{r}}*x*(1+x)/((1-x)*(1+({{r}}+1)*x+x^2-{QUARTIC}))"),
        &[("r", r)],
        order,
    )
}

fn big(v: Vec<BigInt>) -> Vec<Rational> {
    v.into_iter().map(Rational::from_integer).collect()
}

pub fn narayana_preimage(r: i64, order: usize) -> Vec<VerificationReport> {
    let terms = order + 1;
    let mut claims = Claims::new(FAMILY, &[("r", r)]);
    let triangle = NarayanaTriangle::new(terms + 1);
    let target = big(triangle.row_values(r));
    let pre = preimage(r, order);
    let img = pre.as_ref().map_err(Clone::clone).and_then(c_transform);
    claims.values(
        "round-trip",
        prefix_of(&img, terms),
        Ok(target[..terms].to_vec()),
        "",
    );
    claims.values(
        "inverse-route",
        c_inverse(&PowerSeries::new(target[..terms].to_vec())).and_then(|s| prefix(&s, terms)),
        prefix_of(&pre, terms),
        "",
    );
    match r {
        0 => claims.series(
            "reduced",
            &pre,
            gf("(1+x+x^2)/(1-x^2)", &[], order),
            terms,
            "",
        ),
        1 => claims.series("reduced", &pre, gf("1/(1-x^2)", &[], order), terms, ""),
        _ => {}
    }
    if r != 0 {
        claims.values(
            "row-generating-function",
            Ok(target[..terms].to_vec()),
            prefix_of(
                &gf(
                    "(1-({r}+1)*x-sqrt(1-2*({r}+1)*x+({r}-1)^2*x^2))/(2*{r}*x^2)",
                    &[("r", r)],
                    order,
                ),
                terms,
            ),
            "",
        );
        let unshifted = unshifted_preimage(r, order).and_then(|g| c_transform(&g));
        let mut shifted_target = vec![Rational::one()];
        shifted_target.extend_from_slice(&target[..terms - 1]);
        claims.values(
            "unshifted-round-trip",
            prefix_of(&unshifted, terms),
            Ok(shifted_target),
            "",
        );
    }
    claims.finish()
}

pub fn narayana_examples(order: usize) -> Vec<VerificationReport> {
    let mut claims = Claims::new(FAMILY, &[]);
    let triangle = NarayanaTriangle::new(13);
    claims.values(
        "symmetry",
        Ok(vec![Rational::from_integer(BigInt::from(
            triangle.is_symmetric() as i64,
        ))]),
        Ok(ints(&[1])),
        "rows 0..12",
    );
    claims.values(
        "row-sums",
        Ok(big(triangle.row_values(1))),
        Ok(catalan_gf(13).coeffs()[1..].to_vec()),
        "C(n+1), rows 0..12",
    );
    claims.values(
        "catalan-shifted",
        Ok(big(triangle.row_values(1)[..4].to_vec())),
        Ok(ints(&[1, 2, 5, 14])),
        "",
    );
    let little_schroeder = unshifted_preimage(2, order);
    claims.values(
        "little-schroeder-preimage",
        prefix_of(&little_schroeder, 11),
        Ok(ints(&[1, 1, 0, -1, -4, -11, -30, -83, -236, -689, -2056])),
        "",
    );
    claims.series(
        "little-schroeder-preimage-form",
        &little_schroeder,
        gf(
            "4*x*(1+x)/((1-x)*(1+3*x+x^2-sqrt(1-2*x-5*x^2-2*x^3+x^4)))",
            &[],
            order,
        ),
        order + 1,
        "",
    );
    claims.finish()
}
