//! Python bindings: `import padovan`.
//!
//! Integers cross as Python `int`, rationals as `fractions.Fraction`.
//! Rational arguments also accept `int` or a `"p/q"` string.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyString;

use padovan_core::cli::bench::{self as core_bench, BenchMethod};
use padovan_core::cli::suites::{run_suites, select, SuiteOptions};
use padovan_core::cli::{render_bench, render_reports, spectrum_json, Format};
use padovan_core::exact_arith::{int_rational, parse_rational};
use padovan_core::padovan_matrices::{b_power_closed, mp as core_mp, q_power as core_q_power};
use padovan_core::sequences::{self, BiPeriodicParams, PadovanConvention};
use padovan_core::spectra::{self, DEFAULT_TOL};
use padovan_core::{BivariatePoly, Integer, Mat3, QuadraticSurd, Rational};

fn value_error(e: padovan_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(text) = obj.cast::<PyString>() {
        return parse_rational(text.to_str()?).map_err(value_error);
    }
    obj.extract::<Rational>().map_err(|_| {
        PyValueError::new_err("expected int, fractions.Fraction or a 'p/q' string")
    })
}

fn to_convention(conv: &str) -> PyResult<PadovanConvention> {
    conv.parse().map_err(PyValueError::new_err)
}

fn rows<R: Clone>(m: &Mat3<R>) -> Vec<Vec<R>> {
    m.rows().iter().map(|r| r.to_vec()).collect()
}

fn json_loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// An element `rat + coef*sqrt(5)` of Q(sqrt 5).
#[pyclass(name = "Surd", frozen, eq, ord, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PySurd(QuadraticSurd);

#[pymethods]
impl PySurd {
    #[new]
    #[pyo3(signature = (rat, coef = None))]
    fn new(rat: &Bound<'_, PyAny>, coef: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let coef = match coef {
            Some(c) => to_rational(c)?,
            None => int_rational(0),
        };
        Ok(Self(QuadraticSurd::new(to_rational(rat)?, coef)))
    }

    #[staticmethod]
    fn alpha() -> Self {
        Self(QuadraticSurd::alpha())
    }

    #[staticmethod]
    fn beta() -> Self {
        Self(QuadraticSurd::beta())
    }

    #[staticmethod]
    fn sqrt5() -> Self {
        Self(QuadraticSurd::sqrt5())
    }

    #[getter]
    fn rat(&self) -> Rational {
        self.0.rat().clone()
    }

    #[getter]
    fn coef(&self) -> Rational {
        self.0.coef().clone()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn norm(&self) -> Rational {
        self.0.norm()
    }

    fn __pow__(&self, exp: u64, _modulo: Option<&Bound<'_, PyAny>>) -> Self {
        Self(self.0.pow(exp))
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        let inv = other.0.inv().ok_or_else(|| PyZeroDivisionError::new_err("division by zero"))?;
        Ok(Self(&self.0 * &inv))
    }

    fn __neg__(&self) -> Self {
        Self(-self.0.clone())
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Surd('{}')", self.0)
    }
}

/// A polynomial in `a`, `b` with integer coefficients.
#[pyclass(name = "Poly", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPoly(BivariatePoly);

#[pymethods]
impl PyPoly {
    #[staticmethod]
    fn a() -> Self {
        Self(BivariatePoly::a())
    }

    #[staticmethod]
    fn b() -> Self {
        Self(BivariatePoly::b())
    }

    #[staticmethod]
    fn constant(c: Integer) -> Self {
        Self(BivariatePoly::constant(c))
    }

    /// Value at the given `a`, `b`.
    fn eval(&self, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Rational> {
        Ok(self.0.eval(&to_rational(a)?, &to_rational(b)?))
    }

    fn is_b_free(&self) -> bool {
        self.0.is_b_free()
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-self.0.clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

#[pyfunction]
#[pyo3(name = "padovan", signature = (n, conv = "classic"))]
fn padovan_number(n: i64, conv: &str) -> PyResult<Integer> {
    Ok(sequences::padovan(n, to_convention(conv)?))
}

#[pyfunction]
#[pyo3(signature = (n, conv = "classic"))]
fn padovan_terms(n: u64, conv: &str) -> PyResult<Vec<Integer>> {
    Ok(sequences::padovan_terms(n, to_convention(conv)?))
}

#[pyfunction]
fn fibonacci(n: u64) -> Integer {
    sequences::fibonacci(n)
}

#[pyfunction]
fn lucas(n: u64) -> Integer {
    sequences::lucas(n)
}

/// `(F(n), L(n))` computed in Q(sqrt 5).
#[pyfunction]
fn binet(n: u64) -> PyResult<(Integer, Integer)> {
    let f = sequences::binet_fibonacci(n).map_err(value_error)?;
    let l = sequences::binet_lucas(n).map_err(value_error)?;
    Ok((f, l))
}

/// Bi-periodic terms `0..=n`: `Fraction`s for numeric `a`, `b`, `Poly`s
/// when both are omitted.
#[pyfunction]
#[pyo3(signature = (n, a = None, b = None))]
fn biperiodic<'py>(
    py: Python<'py>,
    n: u64,
    a: Option<&Bound<'py, PyAny>>,
    b: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    match (a, b) {
        (None, None) => {
            let terms = sequences::biperiodic_terms(n, &BiPeriodicParams::symbolic());
            terms.into_iter().map(PyPoly).collect::<Vec<_>>().into_pyobject(py).map(Bound::into_any)
        }
        (Some(a), Some(b)) => {
            let params = BiPeriodicParams::numeric(to_rational(a)?, to_rational(b)?).map_err(value_error)?;
            sequences::biperiodic_terms(n, &params).into_pyobject(py)
        }
        _ => Err(PyValueError::new_err("give both a and b, or neither for symbolic terms")),
    }
}

#[pyfunction]
fn q_power(n: u64) -> Vec<Vec<Integer>> {
    rows(&core_q_power(n))
}

/// `M(n)` as rows of `Fraction`s, or of `Poly`s when `a`, `b` are omitted.
#[pyfunction]
#[pyo3(signature = (n, a = None, b = None))]
fn mp<'py>(
    py: Python<'py>,
    n: usize,
    a: Option<&Bound<'py, PyAny>>,
    b: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    match (a, b) {
        (None, None) => {
            let m = core_mp(n, &BiPeriodicParams::symbolic()).map(|p| PyPoly(p.clone()));
            rows(&m).into_pyobject(py).map(Bound::into_any)
        }
        (Some(a), Some(b)) => {
            let params = BiPeriodicParams::numeric(to_rational(a)?, to_rational(b)?).map_err(value_error)?;
            rows(&core_mp(n, &params)).into_pyobject(py)
        }
        _ => Err(PyValueError::new_err("give both a and b, or neither for a symbolic matrix")),
    }
}

/// `B^n` for any integer `n`.
#[pyfunction]
fn b_power(n: i64, a: &Bound<'_, PyAny>) -> PyResult<Vec<Vec<Rational>>> {
    Ok(rows(&b_power_closed(n, &to_rational(a)?)))
}

/// Coefficients `[c3, c2, c1, c0]` of `det(xI - M)` for a 3x3 rational
/// matrix.
#[pyfunction]
fn char_poly(matrix: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<Rational>> {
    if matrix.len() != 3 || matrix.iter().any(|r| r.len() != 3) {
        return Err(PyValueError::new_err("expected a 3x3 matrix"));
    }
    let mut entries = Vec::with_capacity(9);
    for row in &matrix {
        for x in row {
            entries.push(to_rational(x)?);
        }
    }
    let m = Mat3::from_fn(|i, j| entries[3 * i + j].clone());
    let p = m.char_poly();
    Ok(vec![p.c3, p.c2, p.c1, p.c0])
}

/// Verdict, root intervals and eigenvalues of `M(0..=n)` as a dict.
#[pyfunction]
#[pyo3(signature = (a, b, n = 2, tol = DEFAULT_TOL))]
fn spectrum<'py>(
    py: Python<'py>,
    a: &Bound<'py, PyAny>,
    b: &Bound<'py, PyAny>,
    n: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let value = spectrum_json(&to_rational(a)?, &to_rational(b)?, n, tol).map_err(value_error)?;
    json_loads(py, &value.to_string())
}

/// The three real roots of `x^3 - a*x - 1` as `(lo, hi, refined)`.
#[pyfunction]
#[pyo3(signature = (a, tol = DEFAULT_TOL))]
fn isolate_roots(a: &Bound<'_, PyAny>, tol: f64) -> PyResult<Vec<(Rational, Rational, f64)>> {
    let roots = spectra::isolate_roots(&to_rational(a)?, tol).map_err(value_error)?;
    Ok(roots.into_iter().map(|r| (r.lo, r.hi, r.refined)).collect())
}

/// Runs verification suites and returns their reports as dicts.
#[pyfunction]
#[pyo3(signature = (prop = "all", max_n = None, a = None, b = None, tol = DEFAULT_TOL, timing = false))]
fn verify<'py>(
    py: Python<'py>,
    prop: &str,
    max_n: Option<u64>,
    a: Option<&Bound<'py, PyAny>>,
    b: Option<&Bound<'py, PyAny>>,
    tol: f64,
    timing: bool,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let suites = select(prop).map_err(PyValueError::new_err)?;
    let mut opts = SuiteOptions {
        max_n,
        tol,
        ..SuiteOptions::default()
    };
    if let Some(a) = a {
        opts.a = to_rational(a)?;
    }
    if let Some(b) = b {
        opts.b = to_rational(b)?;
    }
    let reports = py.detach(|| run_suites(&suites, &opts)).map_err(value_error)?;
    render_reports(&reports, Format::Json, timing)
        .lines()
        .map(|line| json_loads(py, line))
        .collect()
}

/// `p(n)` by `naive`, `matpow` or `cayley`, with timing and checksum.
#[pyfunction]
#[pyo3(name = "bench", signature = (n, method = "matpow"))]
fn bench_padovan<'py>(py: Python<'py>, n: u64, method: &str) -> PyResult<Bound<'py, PyAny>> {
    let method: BenchMethod = method.parse().map_err(PyValueError::new_err)?;
    let result = py.detach(|| core_bench::run(method, n));
    json_loads(py, &render_bench(&[result], Format::Json, true))
}

#[pymodule]
#[pyo3(name = "padovan")]
fn padovan_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySurd>()?;
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(padovan_number, m)?)?;
    m.add_function(wrap_pyfunction!(padovan_terms, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(lucas, m)?)?;
    m.add_function(wrap_pyfunction!(binet, m)?)?;
    m.add_function(wrap_pyfunction!(biperiodic, m)?)?;
    m.add_function(wrap_pyfunction!(q_power, m)?)?;
    m.add_function(wrap_pyfunction!(mp, m)?)?;
    m.add_function(wrap_pyfunction!(b_power, m)?)?;
    m.add_function(wrap_pyfunction!(char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(isolate_roots, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(bench_padovan, m)?)?;
    Ok(())
}
