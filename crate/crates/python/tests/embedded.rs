//! Drives the module through an embedded interpreter.

use pyo3::prelude::*;
use pyo3::types::PyModule;

fn run(check: &str) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "central").unwrap();
        central::central(&m).unwrap();
        let globals = pyo3::types::PyDict::new(py);
        globals.set_item("central", m).unwrap();
        let code = std::ffi::CString::new(check).unwrap();
        py.run(&code, Some(&globals), None)
            .unwrap_or_else(|e| panic!("{check}: {e}"));
    });
}

#[test]
fn transforms() {
    run("assert central.c_transform([1] * 6) == [1, 1, 2, 5, 14, 42]");
    run("assert central.c_inverse([1, 1, 2, 5, 14, 42]) == [1] * 6");
    run("assert central.hankel_transform([1, 2, 6, 20, 70], 3) == [1, 2, 4]");
}

#[test]
fn rationals_are_fractions() {
    run("from fractions import Fraction\nassert central.expand('1/(3-x)', 1) == [Fraction(1, 3), Fraction(1, 9)]");
}

#[test]
fn riordan_group_operations() {
    run("p = central.Riordan.pascal(6)\nassert p * p.inverse() == central.Riordan('1', 'x', 6)");
    run("assert central.Riordan.catalan(4).rows()[3] == [0, 2, 2, 1]");
}

#[test]
fn errors_map_to_exception_classes() {
    run("try:\n    central.expand('1/(1-', 3)\nexcept central.ParseError:\n    pass\nelse:\n    raise AssertionError");
    run("try:\n    central.c_transform([0, 1])\nexcept central.MathError:\n    pass\nelse:\n    raise AssertionError");
}
