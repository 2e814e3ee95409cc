//! Truncated formal power series over arbitrary-precision rationals.
//!
//! A [`PowerSeries`] of order `N` knows the coefficients of `x^0 ..= x^N`.
//! Binary operations truncate to the smaller order of their operands;
//! composition and reversion keep the full order because the inner series
//! has no constant term.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact fraction with positive denominator, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` when `q == 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("`{text}` is not a fraction"));
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Square root of a rational, if it is the square of one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series from its known coefficients; the order is `len - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series needs at least one coefficient"
        );
        PowerSeries { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(rat).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Polynomial given by `coeffs`, zero-padded (or cut) to `order`.
    pub fn from_polynomial(coeffs: &[Rational], order: usize) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, Rational::zero());
        Self::new(c)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c * x^k` truncated at `order`.
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(1, Rational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, or `None` beyond the truncation order.
    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    /// Coefficient of `x^k`. Panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`; the result knows `k` more coefficients.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![Rational::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    /// Divides by `x^k`, which requires the first `k` coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::NonRemovableDivision {
                valuation: k,
                order: self.order(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        // Clear denominators so the convolution runs over integers.
        let (a, da) = common_denominator(&self.coeffs[..=n]);
        let (b, db) = common_denominator(&other.coeffs[..=n]);
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().take(n + 1 - i).enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let d = da * db;
        Self::new(
            out.into_iter()
                .map(|c| Rational::new(c, d.clone()))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// Quotient `self / other`; the divisor must have a nonzero constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        let a = &self.coeffs[..=n];
        let b = &other.coeffs[..=n];
        let b0 = b[0].clone();
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if let (Some(a), Some(b)) = (integers(a), integers(b)) {
            if b[0].magnitude().is_one() {
                return Ok(Self::new(
                    unit_division(&a, &b)
                        .into_iter()
                        .map(Rational::from_integer)
                        .collect(),
                ));
            }
        }
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = a[k].clone();
            for i in 1..=k {
                if !b[i].is_zero() {
                    acc -= &b[i] * &out[k - i];
                }
            }
            out.push(acc / &b0);
        }
        Ok(Self::new(out))
    }

    /// Quotient allowing a removable factor `x^v`: when the divisor starts at
    /// `x^v`, the numerator's first `v` coefficients must vanish and both are
    /// shifted down before dividing. The result loses `v` orders.
    pub fn div_removable(&self, other: &Self) -> Result<Self> {
        let v = match other.valuation() {
            Some(v) => v,
            None => {
                return Err(Error::NonRemovableDivision {
                    valuation: other.order() + 1,
                    order: other.order(),
                })
            }
        };
        if v == 0 {
            return self.div(other);
        }
        if self.order() < v {
            return Err(Error::NonRemovableDivision {
                valuation: v,
                order: self.order(),
            });
        }
        if self.coeffs[..v].iter().any(|c| !c.is_zero()) {
            return Err(Error::ZeroConstantTerm);
        }
        self.shift_down(v)?.div(&other.shift_down(v)?)
    }

    /// `self(u(x))` by Horner's rule; `u` must have zero constant term.
    pub fn compose(&self, u: &Self) -> Result<Self> {
        if !u.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant {
                term: format_rational(&u.coeffs[0]),
            });
        }
        let n = self.order().min(u.order());
        let u = u.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&u);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse of `f = x + f_2 x^2 + ...`.
    ///
    /// Solved one coefficient at a time: with `g` correct through `x^(k-1)`,
    /// the coefficient of `x^k` in `f(g)` is `g_k` plus known terms, so
    /// `g_k` is minus the coefficient of `x^k` in `f(g_{<k})`.
    pub fn reversion(&self) -> Result<Self> {
        if self.order() < 1 {
            return Err(Error::Invalid("reversion needs order >= 1".into()));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::Normalization {
                what: "f(0)".into(),
                found: format_rational(&self.coeffs[0]),
                expected: "0".into(),
            });
        }
        if !self.coeffs[1].is_one() {
            return Err(Error::Normalization {
                what: "[x^1] f".into(),
                found: format_rational(&self.coeffs[1]),
                expected: "1".into(),
            });
        }
        let n = self.order();
        let mut g = Self::x(n);
        for k in 2..=n {
            let fk = self.truncate(k).compose(&g.truncate(k))?;
            g.coeffs[k] = -fk.coeffs[k].clone();
        }
        Ok(g)
    }

    /// Principal square root: the branch whose leading coefficient is the
    /// positive root. A leading factor `x^(2m)` is pulled out as `x^m`.
    pub fn sqrt(&self) -> Result<Self> {
        let v = match self.valuation() {
            Some(v) => v,
            None => return Ok(self.clone()),
        };
        if v % 2 == 1 {
            return Err(Error::NonSquareConstant {
                term: format!("{}*x^{}", self.coeffs[v], v),
            });
        }
        let base = self.shift_down(v)?;
        let r0 = rational_sqrt(&base.coeffs[0]).ok_or_else(|| Error::NonSquareConstant {
            term: format_rational(&base.coeffs[0]),
        })?;
        let two_r0 = &r0 * rat(2);
        let mut out: Vec<Rational> = Vec::with_capacity(base.coeffs.len());
        out.push(r0);
        for n in 1..base.coeffs.len() {
            let mut acc = base.coeffs[n].clone();
            for i in 1..n {
                acc -= &out[i] * &out[n - i];
            }
            out.push(acc / &two_r0);
        }
        let root = Self::new(out);
        Ok(if v == 0 { root } else { root.shift_up(v / 2) })
    }

    /// Exact integer coefficients, failing on the first fraction.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        index,
                        value: format_rational(c),
                    })
                }
            })
            .collect()
    }

    /// Evaluates the known coefficients as a polynomial at `x`.
    pub fn eval_polynomial(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.coeffs.len())
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        f.write_str(&terms.join(", "))
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(PowerSeries::new(coeffs))
    }
}

/// Integer numerators over a shared denominator (the lcm of all denominators).
fn common_denominator(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&d / c.denom()))
        .collect();
    (nums, d)
}

fn integers(coeffs: &[Rational]) -> Option<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|c| c.is_integer().then(|| c.numer().clone()))
        .collect()
}

/// `a / b` over the integers when `b[0] = ±1`.
fn unit_division(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let negate = b[0].is_negative();
    let mut out: Vec<BigInt> = Vec::with_capacity(a.len());
    for k in 0..a.len() {
        let mut acc = a[k].clone();
        for i in 1..=k {
            if !b[i].is_zero() {
                acc -= &b[i] * &out[k - i];
            }
        }
        out.push(if negate { -acc } else { acc });
    }
    out
}

/// Catalan generating function `c(x) = (1 - sqrt(1 - 4x)) / (2x)`.
pub fn catalan_gf(order: usize) -> PowerSeries {
    let mut c = Vec::with_capacity(order + 1);
    let mut cur = BigInt::one();
    for n in 0..=order {
        c.push(Rational::from_integer(cur.clone()));
        cur = cur * BigInt::from(2 * (2 * n + 1)) / BigInt::from(n + 2);
    }
    PowerSeries::new(c)
}

/// `1 / sqrt(1 - 4x)`, the central binomial coefficients.
pub fn central_binomial_gf(order: usize) -> PowerSeries {
    PowerSeries::new(
        (0..=order)
            .map(|n| Rational::from_integer(binomial(2 * n as i64, n as i64)))
            .collect(),
    )
}

/// Binomial coefficient with the usual extension to negative upper index
/// (`binom(n, k) = n (n-1) ... (n-k+1) / k!`) and zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `0^n` with `0^0 = 1`.
pub fn zero_pow(n: i64) -> i64 {
    i64::from(n == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(v.iter().copied())
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
    }

    #[test]
    fn mul_ones_is_naturals() {
        let ones = s(&[1; 6]);
        assert_eq!(ones.mul(&ones), s(&[1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn mul_truncates_to_min_order() {
        assert_eq!(s(&[1, 1, 1, 1]).mul(&s(&[1, 1])).order(), 1);
    }

    #[test]
    fn div_examples() {
        assert_eq!(
            s(&[1, 0, 0, 0]).div(&s(&[1, -1, 0, 0])).unwrap(),
            s(&[1, 1, 1, 1])
        );
        assert_eq!(
            s(&[1, 0, 0, 0]).div(&s(&[1, 1, 0, 0])).unwrap(),
            s(&[1, -1, 1, -1])
        );
        assert_eq!(
            s(&[1, 0, -1, 0]).div(&s(&[1, -1, 0, 0])).unwrap(),
            s(&[1, 1, 0, 0])
        );
    }

    #[test]
    fn div_rejects_zero_constant() {
        assert_eq!(s(&[1, 0]).div(&s(&[0, 1])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn removable_division_loses_orders() {
        // (x - x^2) / (2x) = (1 - x) / 2
        let q = s(&[0, 1, -1, 0]).div_removable(&s(&[0, 2, 0, 0])).unwrap();
        assert_eq!(q, PowerSeries::new(vec![ratio(1, 2), ratio(-1, 2), rat(0)]));
        assert!(s(&[1, 1, 0]).div_removable(&s(&[0, 1, 0])).is_err());
    }

    #[test]
    fn compose_geometric_into_binomial() {
        let a = s(&[1; 5]);
        let u = s(&[0, 1, 1, 1, 1]);
        // 1/(1 - x/(1-x)) = (1-x)/(1-2x); the binomial transform adds the 1/(1-x) factor
        assert_eq!(a.compose(&u).unwrap(), s(&[1, 1, 2, 4, 8]));
        assert_eq!(
            s(&[1; 5]).mul(&a.compose(&u).unwrap()),
            s(&[1, 2, 4, 8, 16])
        );
        let id = PowerSeries::x(4);
        assert_eq!(a.compose(&id).unwrap(), a);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        assert!(matches!(
            s(&[1, 1]).compose(&s(&[1, 1])),
            Err(Error::NonZeroConstant { .. })
        ));
    }

    #[test]
    fn reversion_of_x_one_minus_x_is_xc() {
        let f = s(&[0, 1, -1, 0, 0, 0]);
        assert_eq!(f.reversion().unwrap(), s(&[0, 1, 1, 2, 5, 14]));
        assert_eq!(PowerSeries::x(5).reversion().unwrap(), PowerSeries::x(5));
        let f = s(&[0, 1, 1, 1, 1]);
        assert_eq!(f.reversion().unwrap(), s(&[0, 1, -1, 1, -1]));
    }

    #[test]
    fn reversion_rejects_unnormalized() {
        assert!(matches!(
            s(&[0, 2, 1]).reversion(),
            Err(Error::Normalization { .. })
        ));
        assert!(matches!(
            s(&[1, 1, 1]).reversion(),
            Err(Error::Normalization { .. })
        ));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(s(&[1, 0, 0]).sqrt().unwrap(), s(&[1, 0, 0]));
        assert_eq!(
            s(&[1, -4, 0, 0, 0]).sqrt().unwrap(),
            s(&[1, -2, -2, -4, -10])
        );
        assert_eq!(s(&[1, 2, 1, 0]).sqrt().unwrap(), s(&[1, 1, 0, 0]));
        assert_eq!(s(&[0, 0, 4, 4, 1]).sqrt().unwrap(), s(&[0, 2, 1, 0]));
    }

    #[test]
    fn sqrt_rejects_non_square() {
        assert!(matches!(
            s(&[2, 1]).sqrt(),
            Err(Error::NonSquareConstant { .. })
        ));
        assert!(matches!(
            s(&[-1, 1]).sqrt(),
            Err(Error::NonSquareConstant { .. })
        ));
        assert!(matches!(
            s(&[0, 1, 1]).sqrt(),
            Err(Error::NonSquareConstant { .. })
        ));
    }

    #[test]
    fn catalan_identities() {
        let n = 15;
        let c = catalan_gf(n);
        let x = PowerSeries::x(n);
        let one = PowerSeries::one(n);
        // c = 1 + x c^2
        assert_eq!(c, &one + &(&x * &c.mul(&c)));
        // 1 / (1 - x c) = c
        assert_eq!(one.div(&(&one - &(&x * &c))).unwrap(), c);
        // sqrt(1 - 4x) = 1 - 2 x c
        let root = (&one - &PowerSeries::monomial(1, rat(4), n))
            .sqrt()
            .unwrap();
        assert_eq!(root, &one - &(&x * &c).scale(&rat(2)));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(-1, 1), BigInt::from(-1));
        assert_eq!(binomial(-1, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(PowerSeries::new(vec![rat(1), ratio(-1, 2)])).unwrap();
        assert_eq!(v, serde_json::json!({"order": 1, "coeffs": ["1", "-1/2"]}));
        let back: PowerSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back.coeff(1), &ratio(-1, 2));
        assert!(serde_json::from_value::<PowerSeries>(
            serde_json::json!({"order": 3, "coeffs": ["1"]})
        )
        .is_err());
    }
}
