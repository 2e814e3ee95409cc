//! Python module `central`: exact series expansion, Riordan arrays, the C
//! transform, Hankel tooling and the family verifiers. Integers cross the
//! boundary as Python `int`, rationals as `fractions.Fraction`.

use central_core::families::{verify_family, Family, VerifyOptions};
use central_core::{
    ctransform, hankel, Error, IntSequence, JFraction, PowerSeries, Rational, RiordanArray,
};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    central,
    CentralError,
    PyException,
    "Base class for errors raised by central."
);
create_exception!(
    central,
    ParseError,
    CentralError,
    "Malformed generating-function text."
);
create_exception!(
    central,
    MathError,
    CentralError,
    "An operation undefined for its inputs."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Syntax { .. } | Error::UnknownIdentifier { .. } => {
            ParseError::new_err(e.to_string())
        }
        _ => MathError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let class = py.import("fractions")?.getattr("Fraction")?;
    class.call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    rs.iter().map(|r| fraction(py, r)).collect()
}

fn ints(terms: Vec<BigInt>) -> IntSequence {
    IntSequence::new(terms)
}

fn series(terms: Vec<BigInt>) -> PowerSeries {
    PowerSeries::from_bigints(&terms)
}

/// Coefficients 0..=order of a generating function written in `x`, as Fractions.
#[pyfunction]
#[pyo3(signature = (gf, order = 24))]
fn expand<'py>(py: Python<'py>, gf: &str, order: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let s = central_core::expand_str(gf, order).map_err(to_py)?;
    fractions(py, s.coeffs())
}

/// Integer coefficients 0..=order; raises MathError if any is not an integer.
#[pyfunction]
#[pyo3(signature = (gf, order = 24))]
fn expand_integers(gf: &str, order: usize) -> PyResult<Vec<BigInt>> {
    central_core::expand_str(gf, order)
        .and_then(|s| s.to_integers())
        .map_err(to_py)
}

/// C transform of a sequence given by its first terms.
#[pyfunction]
fn c_transform(terms: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    ctransform::c_transform(&series(terms))
        .and_then(|s| s.to_integers())
        .map_err(to_py)
}

/// C transform of a generating function, to `order`.
#[pyfunction]
#[pyo3(signature = (gf, order = 24))]
fn c_transform_gf(gf: &str, order: usize) -> PyResult<Vec<BigInt>> {
    central_core::expand_str(gf, order)
        .and_then(|g| ctransform::c_transform(&g))
        .and_then(|s| s.to_integers())
        .map_err(to_py)
}

/// Pre-image under the C transform.
#[pyfunction]
fn c_inverse(terms: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    ctransform::c_inverse(&series(terms))
        .and_then(|s| s.to_integers())
        .map_err(to_py)
}

/// The first `count` Hankel determinants.
#[pyfunction]
#[pyo3(signature = (terms, count = 10))]
fn hankel_transform(terms: Vec<BigInt>, count: usize) -> PyResult<Vec<BigInt>> {
    central_core::hankel_transform(&ints(terms), count)
        .map(|h| h.terms().to_vec())
        .map_err(to_py)
}

/// Determinant of a square integer matrix by fraction-free elimination.
#[pyfunction]
fn determinant(matrix: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(MathError::new_err("matrix is not square"));
    }
    Ok(hankel::bareiss_determinant(&matrix))
}

/// A rational generating function with numerator and denominator coefficients.
#[pyclass(name = "RationalGF", module = "central", frozen)]
struct PyRationalGF(central_core::RationalGF);

#[pymethods]
impl PyRationalGF {
    #[getter]
    fn numerator<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.0.numerator().coeffs())
    }

    #[getter]
    fn denominator<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.0.denominator().coeffs())
    }

    fn expand<'py>(&self, py: Python<'py>, order: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.0.expand(order).coeffs())
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("RationalGF('{}')", self.0.to_text())
    }
}

/// Smallest rational generating function within the degree bounds that
/// reproduces the terms, confirmed on a held-out tail.
#[pyfunction]
#[pyo3(signature = (terms, num_deg = 4, den_deg = 4))]
fn fit_gf(terms: Vec<BigInt>, num_deg: usize, den_deg: usize) -> PyResult<PyRationalGF> {
    central_core::fit_rational_gf(&ints(terms), num_deg, den_deg)
        .map(PyRationalGF)
        .map_err(to_py)
}

/// Coefficients 0..=order of the J-fraction with the given linear and coupling
/// coefficients (`len(coupling) == len(linear) - 1`).
#[pyfunction]
#[pyo3(signature = (linear, coupling, order = 24))]
fn jfraction(linear: Vec<BigInt>, coupling: Vec<BigInt>, order: usize) -> PyResult<Vec<BigInt>> {
    let lift = |v: Vec<BigInt>| v.into_iter().map(Rational::from_integer).collect();
    let j = JFraction::new(lift(linear), lift(coupling)).map_err(to_py)?;
    central_core::jfraction_expand(&j, order)
        .to_integers()
        .map_err(to_py)
}

/// A Riordan array `(g, f)` held to a fixed order.
#[pyclass(name = "Riordan", module = "central", frozen)]
struct PyRiordan(RiordanArray);

#[pymethods]
impl PyRiordan {
    #[new]
    #[pyo3(signature = (g, f, order = 12))]
    fn new(g: &str, f: &str, order: usize) -> PyResult<Self> {
        RiordanArray::from_exprs(g, f, order)
            .map(PyRiordan)
            .map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (order = 12))]
    fn pascal(order: usize) -> Self {
        PyRiordan(RiordanArray::pascal(order))
    }

    #[staticmethod]
    #[pyo3(signature = (order = 12))]
    fn catalan(order: usize) -> Self {
        PyRiordan(RiordanArray::catalan_matrix(order))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn g<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.0.g().coeffs())
    }

    #[getter]
    fn f<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, self.0.f().coeffs())
    }

    fn element<'py>(&self, py: Python<'py>, n: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
        let e = self.0.element(n, k).map_err(to_py)?;
        fraction(py, &e)
    }

    /// Rows 0..=order of the lower-triangular matrix.
    fn rows(&self) -> PyResult<Vec<Vec<BigInt>>> {
        self.0.matrix().to_integer_rows().map_err(to_py)
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyRiordan).map_err(to_py)
    }

    fn vertical_half(&self) -> PyResult<Self> {
        self.0.vertical_half().map(PyRiordan).map_err(to_py)
    }

    fn horizontal_half(&self) -> PyResult<Self> {
        self.0.horizontal_half().map(PyRiordan).map_err(to_py)
    }

    /// Image of the sequence with the given first terms.
    fn apply(&self, terms: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
        self.0
            .apply(&series(terms))
            .and_then(|s| s.to_integers())
            .map_err(to_py)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.multiply(&other.0).map(PyRiordan).map_err(to_py)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.matrix().to_text()
    }
}

/// Ids of the verifiable families.
#[pyfunction]
fn families() -> Vec<&'static str> {
    Family::ALL.iter().map(|f| f.id()).collect()
}

/// Runs a family verifier and returns one dict per checked claim. Parameter
/// lists default to the family's own grid; `first` is `a` or `r`, `second`
/// is `b` or `s`.
#[pyfunction]
#[pyo3(signature = (family, first = None, second = None, prefix = 10, examples = true))]
fn verify<'py>(
    py: Python<'py>,
    family: &str,
    first: Option<Vec<i64>>,
    second: Option<Vec<i64>>,
    prefix: usize,
    examples: bool,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let family: Family = family.parse().map_err(to_py)?;
    let options = VerifyOptions {
        first,
        second,
        prefix,
        examples,
    };
    verify_family(family, &options)
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("claim_id", &r.claim_id)?;
            d.set_item("parameters", r.parameters.clone())?;
            d.set_item("computed", fractions(py, &r.computed_prefix)?)?;
            d.set_item("expected", fractions(py, &r.expected_prefix)?)?;
            d.set_item("passed", r.passed())?;
            d.set_item("prefix_length", r.prefix_length)?;
            d.set_item("note", &r.note)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
pub fn central(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("CentralError", py.get_type::<CentralError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("MathError", py.get_type::<MathError>())?;
    m.add_class::<PyRiordan>()?;
    m.add_class::<PyRationalGF>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(expand_integers, m)?)?;
    m.add_function(wrap_pyfunction!(c_transform, m)?)?;
    m.add_function(wrap_pyfunction!(c_transform_gf, m)?)?;
    m.add_function(wrap_pyfunction!(c_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_transform, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(fit_gf, m)?)?;
    m.add_function(wrap_pyfunction!(jfraction, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
