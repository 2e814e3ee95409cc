//! Hankel transforms by fraction-free elimination, rational generating
//! function reconstruction with holdout validation, and J-fraction expansion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expr::expand_str;
use crate::poly::Poly;
use crate::sequence::IntSequence;
use crate::series::{PowerSeries, Rational};

/// Determinant of an integer matrix by Bareiss fraction-free elimination
/// with row pivoting.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant over the rationals by Gaussian elimination.
pub fn rational_determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        let (top, below) = m.split_at_mut(k + 1);
        for row in below {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] / &pivot;
            for (x, p) in row[k..].iter_mut().zip(&top[k][k..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}

fn hankel_matrix<T: Clone>(a: &[T], size: usize) -> Vec<Vec<T>> {
    (0..size)
        .map(|i| (0..size).map(|j| a[i + j].clone()).collect())
        .collect()
}

/// `h_n = det[a_{i+j}]_{0 <= i,j <= n}` for `n = 0..count`.
pub fn hankel_transform(a: &IntSequence, count: usize) -> Result<IntSequence> {
    let needed = (2 * count).saturating_sub(1);
    if a.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: a.len(),
        });
    }
    let terms = a.terms();
    let dets: Vec<BigInt> = (0..count)
        .into_par_iter()
        .map(|n| bareiss_determinant(&hankel_matrix(terms, n + 1)))
        .collect();
    Ok(IntSequence::new(dets))
}

/// Hankel transform of a series' coefficients; uses the integer path when
/// every coefficient is integral and rational elimination otherwise.
pub fn hankel_transform_series(s: &PowerSeries, count: usize) -> Result<Vec<Rational>> {
    if let Ok(ints) = IntSequence::from_series(s) {
        return Ok(hankel_transform(&ints, count)?.to_rationals());
    }
    let needed = (2 * count).saturating_sub(1);
    if s.coeffs().len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: s.coeffs().len(),
        });
    }
    Ok((0..count)
        .into_par_iter()
        .map(|n| rational_determinant(&hankel_matrix(s.coeffs(), n + 1)))
        .collect())
}

/// `p(x) / q(x)` in lowest terms with `q(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalGF {
    numerator: Poly,
    denominator: Poly,
}

impl RationalGF {
    /// Reduces by the polynomial gcd and scales so that `q(0) = 1`.
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let g = numerator.gcd(&denominator);
        let (p, q) = if g.is_zero() || g.degree() == 0 {
            (numerator, denominator)
        } else {
            (numerator.div_rem(&g).0, denominator.div_rem(&g).0)
        };
        let q0 = q.coeff(0);
        if q0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let s = q0.recip();
        Ok(RationalGF {
            numerator: p.scale(&s),
            denominator: q.scale(&s),
        })
    }

    pub fn from_ints(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(numerator), Poly::from_ints(denominator))
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn expand(&self, order: usize) -> PowerSeries {
        let p = PowerSeries::from_polynomial(self.numerator.coeffs(), order);
        let q = PowerSeries::from_polynomial(self.denominator.coeffs(), order);
        p.div(&q).expect("denominator has unit constant term")
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(x);
        (!d.is_zero()).then(|| self.numerator.eval(x) / d)
    }

    /// Canonical text `"(p(x)) / (q(x))"`, readable by the expression parser.
    pub fn to_text(&self) -> String {
        format!(
            "({}) / ({})",
            self.numerator.to_text(),
            self.denominator.to_text()
        )
    }

    /// Reads `p / q` text back, for any expression that evaluates to a
    /// polynomial over a polynomial (used for round trips and fixtures).
    pub fn parse(numerator: &str, denominator: &str, max_degree: usize) -> Result<Self> {
        let p = expand_str(numerator, max_degree)?;
        let q = expand_str(denominator, max_degree)?;
        Self::new(Poly::new(p.into_coeffs()), Poly::new(q.into_coeffs()))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for RationalGF {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

/// Number of trailing terms withheld from the linear solve.
pub fn holdout_size(len: usize) -> usize {
    (len / 4).max(4)
}

/// Smallest `p/q` (denominator degree first, then numerator degree) whose
/// expansion reproduces every supplied term, including the held-out tail
/// that the linear solve never sees.
pub fn fit_rational_gf(
    h: &IntSequence,
    max_num_deg: usize,
    max_den_deg: usize,
) -> Result<RationalGF> {
    fit_rational_gf_rational(&h.to_rationals(), max_num_deg, max_den_deg)
}

pub fn fit_rational_gf_rational(
    h: &[Rational],
    max_num_deg: usize,
    max_den_deg: usize,
) -> Result<RationalGF> {
    let len = h.len();
    let holdout = holdout_size(len);
    let needed = max_num_deg + max_den_deg + 1 + holdout;
    if len < needed {
        return Err(Error::InsufficientTerms { needed, got: len });
    }
    let fit_len = len - holdout;
    let at = |i: isize| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            h[i as usize].clone()
        }
    };
    let target = PowerSeries::new(h.to_vec());
    for dq in 0..=max_den_deg {
        for dp in 0..=max_num_deg {
            // rows: [x^j](q h) = 0 for dp < j < fit_len, unknowns q_1..q_dq
            let rows: Vec<Vec<Rational>> = (dp + 1..fit_len)
                .map(|j| {
                    let mut row: Vec<Rational> =
                        (1..=dq).map(|i| at(j as isize - i as isize)).collect();
                    row.push(-at(j as isize));
                    row
                })
                .collect();
            let Some(q_tail) = solve_consistent(rows, dq) else {
                continue;
            };
            let mut q = vec![Rational::one()];
            q.extend(q_tail);
            let p: Vec<Rational> = (0..=dp)
                .map(|k| {
                    (0..=k.min(dq))
                        .map(|i| &q[i] * at(k as isize - i as isize))
                        .sum()
                })
                .collect();
            let Ok(gf) = RationalGF::new(Poly::new(p), Poly::new(q)) else {
                continue;
            };
            if gf.expand(len - 1) == target {
                return Ok(gf);
            }
        }
    }
    Err(Error::NoFit {
        max_num_deg,
        max_den_deg,
    })
}

/// Solves an augmented linear system exactly. Free variables are set to
/// zero; `None` when the system is inconsistent.
fn solve_consistent(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row[c..=unknowns].iter_mut().zip(&pivot_row[c..=unknowns]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][unknowns].clone();
    }
    Some(x)
}

/// `1/(1 - b0 x + a1 x^2/(1 - b1 x + a2 x^2/(1 - ...)))`, with a plus sign
/// in front of every `x^2` coupling term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JFraction {
    linear: Vec<Rational>,
    quadratic: Vec<Rational>,
}

impl JFraction {
    pub fn new(linear: Vec<Rational>, quadratic: Vec<Rational>) -> Result<Self> {
        if linear.is_empty() {
            return Err(Error::Invalid("a J-fraction needs depth >= 1".into()));
        }
        if quadratic.len() + 1 != linear.len() {
            return Err(Error::Invalid(format!(
                "depth {} needs {} quadratic coefficients, got {}",
                linear.len(),
                linear.len() - 1,
                quadratic.len()
            )));
        }
        Ok(JFraction { linear, quadratic })
    }

    /// Linear coefficients from `linear`, every coupling coefficient set to `coupling`.
    pub fn uniform_coupling(linear: &[i64], coupling: i64) -> Result<Self> {
        let lin: Vec<Rational> = linear.iter().map(|&b| crate::series::rat(b)).collect();
        let quad = vec![crate::series::rat(coupling); lin.len().saturating_sub(1)];
        Self::new(lin, quad)
    }

    pub fn depth(&self) -> usize {
        self.linear.len()
    }

    pub fn linear(&self) -> &[Rational] {
        &self.linear
    }

    pub fn quadratic(&self) -> &[Rational] {
        &self.quadratic
    }

    /// Coefficients `0..exact_terms()` do not depend on levels below the last.
    pub fn exact_terms(&self) -> usize {
        2 * self.depth()
    }
}

/// Bottom-up evaluation of a J-fraction to order `order`.
pub fn jfraction_expand(j: &JFraction, order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let x = PowerSeries::x(order);
    let level = |b: &Rational| &one - &x.scale(b);
    let last = j.depth() - 1;
    let mut value = level(&j.linear[last]).recip().expect("unit constant term");
    for i in (0..last).rev() {
        let coupling = value.shift_up(2).truncate(order).scale(&j.quadratic[i]);
        value = (&level(&j.linear[i]) + &coupling)
            .recip()
            .expect("unit constant term");
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn seq(v: &[i64]) -> IntSequence {
        IntSequence::from_i64s(v.iter().copied())
    }

    #[test]
    fn hankel_examples() {
        let catalan = IntSequence::from_series(&expand_str("c(x)", 8).unwrap()).unwrap();
        assert_eq!(hankel_transform(&catalan, 4).unwrap(), seq(&[1, 1, 1, 1]));
        let central = seq(&[1, 2, 6, 20, 70, 252, 924]);
        assert_eq!(hankel_transform(&central, 4).unwrap(), seq(&[1, 2, 4, 8]));
        let a007854 = seq(&[1, 3, 12, 51, 222, 978, 4338]);
        assert_eq!(hankel_transform(&a007854, 4).unwrap(), seq(&[1, 3, 9, 27]));
    }

    #[test]
    fn hankel_needs_terms() {
        assert_eq!(
            hankel_transform(&seq(&[1, 2, 3]), 3),
            Err(Error::InsufficientTerms { needed: 5, got: 3 })
        );
    }

    #[test]
    fn hankel_rational_fallback() {
        let s = PowerSeries::new(vec![rat(1), crate::series::ratio(1, 2), rat(1)]);
        // det [[1, 1/2], [1/2, 1]] = 3/4
        assert_eq!(
            hankel_transform_series(&s, 2).unwrap(),
            vec![rat(1), crate::series::ratio(3, 4)]
        );
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m: Vec<Vec<BigInt>> = [[0, 1, 2], [1, 0, 3], [4, -3, 8]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(bareiss_determinant(&m), BigInt::from(-2));
    }

    #[test]
    fn fit_examples() {
        assert_eq!(
            fit_rational_gf(&seq(&[1; 10]), 2, 2).unwrap(),
            RationalGF::from_ints(&[1], &[1, -1]).unwrap()
        );
        assert_eq!(
            fit_rational_gf(&seq(&[1, -1, -4, 4, 16, -16, -64, 64, 256, -256]), 1, 2).unwrap(),
            RationalGF::from_ints(&[1, -1], &[1, 0, 4]).unwrap()
        );
        assert_eq!(
            fit_rational_gf(&seq(&[1, 2, 0, -8, -16, 0, 64, 128, 0, -512]), 1, 2).unwrap(),
            RationalGF::from_ints(&[1], &[1, -2, 4]).unwrap()
        );
    }

    #[test]
    fn fit_uses_holdout() {
        // fits the first six terms with 1/(1-x) but the tail disagrees
        let data = seq(&[1, 1, 1, 1, 1, 1, 2, 3, 4, 5]);
        assert!(matches!(
            fit_rational_gf(&data, 1, 1),
            Err(Error::NoFit { .. })
        ));
        assert!(matches!(
            fit_rational_gf(&seq(&[1, 1, 1]), 1, 1),
            Err(Error::InsufficientTerms { needed: 7, got: 3 })
        ));
    }

    #[test]
    fn gf_is_reduced_and_normalized() {
        // (2 - 2x) / (2 - 4x + 2x^2) = 1 / (1 - x)
        let gf = RationalGF::from_ints(&[2, -2], &[2, -4, 2]).unwrap();
        assert_eq!(gf, RationalGF::from_ints(&[1], &[1, -1]).unwrap());
        assert_eq!(gf.to_text(), "(1) / (1 - x)");
    }

    #[test]
    fn gf_text_round_trips_through_parser() {
        let gf = RationalGF::from_ints(&[1, 3, 1, -1], &[1, 0, 2, 0, 1]).unwrap();
        let text = gf.to_text();
        assert_eq!(text, "(1 + 3*x + x^2 - x^3) / (1 + 2*x^2 + x^4)");
        assert_eq!(expand_str(&text, 12).unwrap(), gf.expand(12));
    }

    #[test]
    fn jfraction_examples() {
        let mut lin = vec![2];
        lin.extend((0..12).map(|i| if i % 2 == 0 { 4 } else { 0 }));
        let j = JFraction::uniform_coupling(&lin, 1).unwrap();
        assert_eq!(
            jfraction_expand(&j, 6),
            PowerSeries::from_ints([1, 2, 3, 0, -26, -150, -641])
        );
        lin[0] = 1;
        let j = JFraction::uniform_coupling(&lin, 1).unwrap();
        assert_eq!(
            jfraction_expand(&j, 6),
            PowerSeries::from_ints([1, 1, 0, -5, -24, -90, -312])
        );
        let flat = JFraction::uniform_coupling(&[0], 1).unwrap();
        assert_eq!(jfraction_expand(&flat, 4), PowerSeries::one(4));
    }

    #[test]
    fn jfraction_shape_checked() {
        assert!(JFraction::new(vec![], vec![]).is_err());
        assert!(JFraction::new(vec![rat(1), rat(2)], vec![]).is_err());
        assert_eq!(
            JFraction::uniform_coupling(&[1, 2, 3], 1)
                .unwrap()
                .exact_terms(),
            6
        );
    }
}
