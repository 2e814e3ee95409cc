//! The integer Riordan group: pairs `(g, f)` with `g(0) = 1`, `f(0) = 0` and
//! `f'(0) = 1`, acting as lower-triangular matrices `t[n][k] = [x^n] g f^k`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expr::expand_str;
use crate::series::{format_rational, rat, PowerSeries, Rational};

pub struct RiordanArray {
    g: PowerSeries,
    f: PowerSeries,
    // g * f^k for k = 0..=order, filled on first use
    columns: OnceLock<Vec<PowerSeries>>,
}

impl Clone for RiordanArray {
    fn clone(&self) -> Self {
        RiordanArray {
            g: self.g.clone(),
            f: self.f.clone(),
            columns: self.columns.clone(),
        }
    }
}

impl PartialEq for RiordanArray {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.f == other.f
    }
}

impl Eq for RiordanArray {}

impl fmt::Debug for RiordanArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RiordanArray")
            .field("g", &self.g)
            .field("f", &self.f)
            .finish()
    }
}

impl RiordanArray {
    /// Validates and builds `(g, f)`, truncated to the smaller of the two orders.
    pub fn new(g: PowerSeries, f: PowerSeries) -> Result<Self> {
        let order = g.order().min(f.order());
        if order < 1 {
            return Err(Error::Invalid("a Riordan array needs order >= 1".into()));
        }
        let g = g.truncate(order);
        let f = f.truncate(order);
        if !g.coeff(0).is_one() {
            return Err(Error::Normalization {
                what: "g(0)".into(),
                found: format_rational(g.coeff(0)),
                expected: "1".into(),
            });
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::Normalization {
                what: "f(0)".into(),
                found: format_rational(f.coeff(0)),
                expected: "0".into(),
            });
        }
        if !f.coeff(1).is_one() {
            return Err(Error::Normalization {
                what: "f'(0)".into(),
                found: format_rational(f.coeff(1)),
                expected: "1".into(),
            });
        }
        Ok(RiordanArray {
            g,
            f,
            columns: OnceLock::new(),
        })
    }

    /// Builds an array from two generating-function expressions.
    pub fn from_exprs(g: &str, f: &str, order: usize) -> Result<Self> {
        Self::new(expand_str(g, order)?, expand_str(f, order)?)
    }

    pub fn identity(order: usize) -> Self {
        Self::new(PowerSeries::one(order), PowerSeries::x(order)).expect("identity is normalized")
    }

    /// The Appell element `(g, x)`.
    pub fn appell(g: PowerSeries) -> Result<Self> {
        let order = g.order();
        Self::new(g, PowerSeries::x(order))
    }

    /// Pascal's triangle `(1/(1-x), x/(1-x))`, A007318.
    pub fn pascal(order: usize) -> Self {
        Self::named("1/(1-x)", "x/(1-x)", order)
    }

    /// The Catalan matrix `(1, x c(x))`, A106566.
    pub fn catalan_matrix(order: usize) -> Self {
        Self::named("1", "x*c(x)", order)
    }

    /// `(1/sqrt(1-4x), x c(x)^2)` with entries `binom(2n, n-k)`, A094527.
    pub fn central_binomial_array(order: usize) -> Self {
        Self::named("1/sqrt(1-4*x)", "x*c(x)^2", order)
    }

    /// `(c(x), x c(x)^2)`, A039599.
    pub fn a039599(order: usize) -> Self {
        Self::named("c(x)", "x*c(x)^2", order)
    }

    /// `((1-x)/(1+x), x/(1+x)^2)`, A110162: the inverse of A094527.
    pub fn a110162(order: usize) -> Self {
        Self::named("(1-x)/(1+x)", "x/(1+x)^2", order)
    }

    /// `(1/(1-2x), x/(1-x))`, A055248.
    pub fn a055248(order: usize) -> Self {
        Self::named("1/(1-2*x)", "x/(1-x)", order)
    }

    fn named(g: &str, f: &str, order: usize) -> Self {
        Self::from_exprs(g, f, order.max(1)).expect("named array is well formed")
    }

    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        Self::new(self.g.truncate(order), self.f.truncate(order))
    }

    fn columns(&self) -> &[PowerSeries] {
        self.columns.get_or_init(|| {
            let mut cols = Vec::with_capacity(self.order() + 1);
            let mut cur = self.g.clone();
            for _ in 0..=self.order() {
                let next = cur.mul(&self.f);
                cols.push(cur);
                cur = next;
            }
            cols
        })
    }

    /// `t[n][k] = [x^n] g f^k`.
    pub fn element(&self, n: usize, k: usize) -> Result<Rational> {
        if k > n || n > self.order() {
            return Err(Error::IndexOutOfRange {
                n,
                k,
                order: self.order(),
            });
        }
        Ok(self.columns()[k].coeff(n).clone())
    }

    /// The leading `order + 1` rows.
    pub fn matrix(&self) -> TriangularMatrix {
        let cols = self.columns();
        TriangularMatrix::new(
            (0..=self.order())
                .map(|n| (0..=n).map(|k| cols[k].coeff(n).clone()).collect())
                .collect(),
        )
    }

    /// Group product `(g, f) . (u, v) = (g u(f), v(f))`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        let f = self.f.truncate(n);
        let g = self.g.truncate(n).mul(&other.g.compose(&f)?);
        Self::new(g, other.f.compose(&f)?)
    }

    /// `(g, f)^-1 = (1 / g(fbar), fbar)`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.reversion()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Self::new(g, fbar)
    }

    /// Fundamental theorem: `(g, f) . h = g h(f)`.
    pub fn apply(&self, h: &PowerSeries) -> Result<PowerSeries> {
        let n = self.order().min(h.order());
        Ok(self.g.truncate(n).mul(&h.compose(&self.f.truncate(n))?))
    }

    /// `phi = Rev(x^2 / F)` together with `x phi' / phi`.
    fn half_parameter(&self) -> Result<(PowerSeries, PowerSeries)> {
        let f_over_x = self.f.shift_down(1)?;
        let x2_over_f = PowerSeries::one(f_over_x.order())
            .div(&f_over_x)?
            .shift_up(1);
        let phi = x2_over_f.reversion()?;
        let x_dphi = phi.derivative().shift_up(1);
        let weight = x_dphi.div_removable(&phi)?;
        Ok((phi, weight))
    }

    fn half_order(&self) -> Result<usize> {
        let h = self.order() / 2;
        if h < 1 {
            return Err(Error::Invalid(format!(
                "halves of an array of order {} carry no off-diagonal data",
                self.order()
            )));
        }
        Ok(h)
    }

    /// Vertical half `(t[2n-k][n])`: `(x phi' G(phi) / phi, phi)`, exposed to order `N/2`.
    pub fn vertical_half(&self) -> Result<Self> {
        let h = self.half_order()?;
        let (phi, weight) = self.half_parameter()?;
        let g = weight.mul(&self.g.compose(&phi)?);
        Self::new(g.truncate(h), phi.truncate(h))
    }

    /// Horizontal half `(t[2n][n+k])`: `(x phi'/phi, phi) . (G, F)`, exposed to order `N/2`.
    pub fn horizontal_half(&self) -> Result<Self> {
        let h = self.half_order()?;
        let (phi, weight) = self.half_parameter()?;
        let left = Self::new(weight, phi)?;
        left.multiply(self)?.truncate(h)
    }
}

/// Leading rows of a lower-triangular matrix; row `n` holds `n + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularMatrix {
    rows: Vec<Vec<Rational>>,
}

impl TriangularMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(
                row.len(),
                n + 1,
                "row {n} of a triangular matrix needs {} entries",
                n + 1
            );
        }
        TriangularMatrix { rows }
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            Rational::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// The leading `size` rows.
    pub fn truncate(&self, size: usize) -> Self {
        Self::new(self.rows[..size].to_vec())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size().min(other.size());
        Self::new(
            (0..n)
                .map(|i| {
                    (0..=i)
                        .map(|j| (j..=i).map(|m| &self.rows[i][m] * &other.rows[m][j]).sum())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn mul_vector(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.size().min(v.len());
        (0..n)
            .map(|i| (0..=i).map(|j| &self.rows[i][j] * &v[j]).sum())
            .collect()
    }

    /// Integer rows; a fraction anywhere is an error.
    pub fn to_integer_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (n, row) in self.rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for v in row {
                if !v.is_integer() {
                    return Err(Error::NonIntegral {
                        index: n,
                        value: format_rational(v),
                    });
                }
                r.push(v.to_integer());
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Right-aligned columns, zeros shown above the diagonal.
    pub fn to_text(&self) -> String {
        let n = self.size();
        let cells: Vec<Vec<String>> = (0..n)
            .map(|i| (0..n).map(|j| format_rational(&self.get(i, j))).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| format!("{c:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Serialize for TriangularMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        use serde_json::value::RawValue;
        let rows = self.to_integer_rows().map_err(S::Error::custom)?;
        // raw JSON numbers keep arbitrary precision intact
        let raw = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| RawValue::from_string(v.to_string()))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(S::Error::custom)?;
        raw.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::catalan_gf;

    fn rows(m: &TriangularMatrix) -> Vec<Vec<i64>> {
        m.to_integer_rows()
            .unwrap()
            .iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    #[test]
    fn constructors_validate() {
        assert!(RiordanArray::from_exprs("1/(1-x)", "x", 6).is_ok());
        assert!(RiordanArray::from_exprs("1/(1-x)", "x/(1-x)", 6).is_ok());
        let err = RiordanArray::from_exprs("1", "2*x", 6).unwrap_err();
        assert!(
            matches!(err, Error::Normalization { ref what, ref found, .. } if what == "f'(0)" && found == "2")
        );
        assert!(matches!(
            RiordanArray::from_exprs("2", "x", 6),
            Err(Error::Normalization { .. })
        ));
        assert!(matches!(
            RiordanArray::from_exprs("1", "1+x", 6),
            Err(Error::Normalization { .. })
        ));
    }

    #[test]
    fn element_examples() {
        assert_eq!(RiordanArray::pascal(6).element(4, 2).unwrap(), rat(6));
        assert_eq!(
            RiordanArray::central_binomial_array(6)
                .element(3, 1)
                .unwrap(),
            rat(15)
        );
        assert_eq!(RiordanArray::a110162(6).element(3, 1).unwrap(), rat(9));
    }

    #[test]
    fn element_out_of_range() {
        let p = RiordanArray::pascal(4);
        assert!(matches!(
            p.element(2, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            p.element(5, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn multiply_examples() {
        let n = 10;
        let prod = RiordanArray::pascal(n)
            .multiply(&RiordanArray::from_exprs("1-x", "x", n).unwrap())
            .unwrap();
        assert_eq!(
            prod,
            RiordanArray::from_exprs("(1-2*x)/(1-x)^2", "x/(1-x)", n).unwrap()
        );

        let a = RiordanArray::a110162(n);
        assert_eq!(a.multiply(&RiordanArray::identity(n)).unwrap(), a);

        let prod = RiordanArray::catalan_matrix(n)
            .multiply(&RiordanArray::pascal(n))
            .unwrap();
        assert_eq!(prod, RiordanArray::a039599(n));
    }

    #[test]
    fn inverse_examples() {
        let n = 10;
        let inv = RiordanArray::from_exprs("1/(1-x)", "x", n)
            .unwrap()
            .inverse()
            .unwrap();
        assert_eq!(inv, RiordanArray::from_exprs("1-x", "x", n).unwrap());
        let inv = RiordanArray::from_exprs("1", "x*(1-x)", n)
            .unwrap()
            .inverse()
            .unwrap();
        assert_eq!(inv, RiordanArray::catalan_matrix(n));
        let inv = RiordanArray::central_binomial_array(n).inverse().unwrap();
        assert_eq!(inv, RiordanArray::a110162(n));
    }

    #[test]
    fn apply_examples() {
        let partial = RiordanArray::from_exprs("1/(1-x)", "x", 5).unwrap();
        let h = expand_str("1/(1-x)", 5).unwrap();
        assert_eq!(
            partial.apply(&h).unwrap(),
            PowerSeries::from_ints([1, 2, 3, 4, 5, 6])
        );

        let delta = PowerSeries::one(5);
        assert_eq!(
            RiordanArray::pascal(5).apply(&delta).unwrap(),
            PowerSeries::from_ints([1; 6])
        );

        let h = expand_str("1/(1-2*x)", 12).unwrap();
        let got = RiordanArray::catalan_matrix(12).apply(&h).unwrap();
        assert_eq!(got, expand_str("1/(1-2*x*c(x))", 12).unwrap());
    }

    #[test]
    fn apply_matches_matrix_vector_product() {
        let a = RiordanArray::a039599(9);
        let h = expand_str("(1+2*x)/(1-x-x^3)", 9).unwrap();
        let via_matrix = a.matrix().mul_vector(h.coeffs());
        assert_eq!(a.apply(&h).unwrap().coeffs(), via_matrix.as_slice());
    }

    #[test]
    fn vertical_half_examples() {
        let a = RiordanArray::from_exprs("(1-2*x)/(1-x)^2", "x/(1-x)", 12).unwrap();
        let v = a.vertical_half().unwrap();
        assert_eq!(v.order(), 6);
        assert_eq!(v, RiordanArray::from_exprs("c(x)", "x*c(x)", 6).unwrap());
        assert_eq!(v.g(), &catalan_gf(6));

        let id = RiordanArray::identity(8);
        assert_eq!(id.vertical_half().unwrap(), RiordanArray::identity(4));
    }

    #[test]
    fn vertical_half_of_pascal_is_central_binomials() {
        let p = RiordanArray::pascal(16);
        let v = p.vertical_half().unwrap();
        for n in 0..=8 {
            // oracle: read t(2n, n) straight from Pascal's matrix view
            assert_eq!(v.element(n, 0).unwrap(), p.element(2 * n, n).unwrap());
        }
        assert_eq!(v.element(4, 0).unwrap(), rat(70));
    }

    #[test]
    fn horizontal_half_examples() {
        let a = RiordanArray::from_exprs("(1-2*x)/(1-x)^2", "x/(1-x)", 12).unwrap();
        let h = a.horizontal_half().unwrap();
        assert_eq!(h, RiordanArray::a039599(6));
        assert_eq!(rows(&h.matrix())[3], vec![5, 9, 5, 1]);
        assert_eq!(
            RiordanArray::identity(8).horizontal_half().unwrap(),
            RiordanArray::identity(4)
        );
        let v = a.vertical_half().unwrap();
        let vh = v.inverse().unwrap().multiply(&h).unwrap();
        assert_eq!(vh, RiordanArray::from_exprs("1", "x/(1-x)", 6).unwrap());
    }

    #[test]
    fn halves_need_room() {
        let a = RiordanArray::pascal(1);
        assert!(a.vertical_half().is_err());
    }

    #[test]
    fn matrix_text_and_json() {
        let m = RiordanArray::pascal(3).matrix();
        assert_eq!(m.to_text(), "1 0 0 0\n1 1 0 0\n1 2 1 0\n1 3 3 1");
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            "[[1],[1,1],[1,2,1],[1,3,3,1]]"
        );
        let frac = TriangularMatrix::new(vec![vec![crate::series::ratio(1, 2)]]);
        assert!(serde_json::to_string(&frac).is_err());
    }
}
