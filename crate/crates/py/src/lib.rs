//! Python bindings: `import grassk`.

use grassk::charring::{identity_suite, Caps};
use grassk::chern::{self, ChernError, PontryaginRing};
use grassk::exactmath::{smith_normal_form, IntMatrix};
use grassk::ktheory::{self, Engine, KError, KOptions};
use grassk::poly::{QPoly, ZPoly};
use grassk::zgb::{strong_groebner, Budget, IdealPresentation};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn k_err(e: KError) -> PyErr {
    match e {
        KError::InvalidParams(_) | KError::UnsupportedParity { .. } => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn chern_err(e: ChernError) -> PyErr {
    match e {
        ChernError::K(k) => k_err(k),
        ChernError::Params(_) | ChernError::CapExceeded(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any().unbind(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(a) => {
            let items = a.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any().unbind()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any().unbind()
        }
    })
}

fn ser_to_py<T: serde::Serialize>(py: Python<'_>, x: &T) -> PyResult<Py<PyAny>> {
    to_py(py, &serde_json::to_value(x).map_err(value_err)?)
}

/// `K^0`, `K^1`, the Hopf exponent and the barB checks for `n = 0 mod 4`, `k` odd.
#[pyfunction]
#[pyo3(signature = (n, k, engine = "both"))]
fn kgroups(py: Python<'_>, n: usize, k: usize, engine: &str) -> PyResult<Py<PyAny>> {
    let engine: Engine = engine.parse().map_err(k_err)?;
    let opts = KOptions { engine, ..KOptions::default() };
    let g = py.detach(|| ktheory::compute_kgroups(n, k, &opts)).map_err(k_err)?;
    to_py(py, &g.to_json())
}

#[pyfunction]
fn hopf_class_order(py: Python<'_>, n: usize, k: usize) -> PyResult<u32> {
    py.detach(|| ktheory::hopf_class_order(n, k)).map_err(k_err)
}

#[pyfunction]
fn hopf_order_bounds(n: usize, k: usize) -> PyResult<(usize, usize)> {
    ktheory::hopf_order_bounds(n, k).map_err(k_err)
}

/// Every character identity inside the caps, as a list of dicts.
#[pyfunction]
#[pyo3(signature = (max_m = 6, max_st = 3))]
fn identity_suite_results(py: Python<'_>, max_m: usize, max_st: usize) -> PyResult<Py<PyAny>> {
    let res = py
        .detach(|| identity_suite(&Caps { max_m, max_st }))
        .map_err(value_err)?;
    ser_to_py(py, &res)
}

#[pyfunction]
fn verify_ch_surjectivity(py: Python<'_>, n: usize, k: usize) -> PyResult<Py<PyAny>> {
    let r = py.detach(|| chern::verify_ch_surjectivity(n, k)).map_err(chern_err)?;
    ser_to_py(py, &r)
}

#[pyfunction]
fn verify_eq22_chain(py: Python<'_>, s: usize, t: usize) -> PyResult<Py<PyAny>> {
    let r = py.detach(|| chern::verify_eq22_chain(s, t)).map_err(chern_err)?;
    ser_to_py(py, &r)
}

#[pyfunction]
fn compare_knk_k0(py: Python<'_>, n: usize, k: usize) -> PyResult<Py<PyAny>> {
    let r = py.detach(|| chern::compare_knk_k0(n, k)).map_err(chern_err)?;
    ser_to_py(py, &r)
}

#[pyfunction]
#[pyo3(signature = (n, k, nu = None))]
fn knk_report(py: Python<'_>, n: usize, k: usize, nu: Option<u32>) -> PyResult<Py<PyAny>> {
    let r = py
        .detach(|| chern::build_knk_with(n, k, nu)?.report(Budget::unlimited()))
        .map_err(chern_err)?;
    ser_to_py(py, &r)
}

/// Invariant factors of an integer matrix given as a list of rows.
#[pyfunction]
fn smith_invariants(rows: Vec<Vec<BigInt>>) -> PyResult<Vec<BigInt>> {
    let cols = rows.first().map_or(0, Vec::len);
    let m = IntMatrix::from_rows(cols, rows).map_err(value_err)?;
    Ok(smith_normal_form(&m).map_err(value_err)?.invariant_factors)
}

/// Reduced strong Gröbner basis over the integers, as strings.
#[pyfunction]
fn groebner_z(py: Python<'_>, gens: Vec<String>) -> PyResult<Vec<String>> {
    let polys = gens
        .iter()
        .map(|g| g.parse::<ZPoly>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_err)?;
    let gb = py
        .detach(|| strong_groebner(&IdealPresentation::from_generators(polys), Budget::unlimited()))
        .map_err(value_err)?;
    Ok(gb.basis().iter().map(|p| p.to_string()).collect())
}

/// The even rational cohomology `P(n,k) = Q[p, q] / J`.
#[pyclass(name = "PontryaginRing", frozen)]
struct PyPontryagin {
    inner: PontryaginRing,
}

#[pymethods]
impl PyPontryagin {
    #[new]
    fn new(n: usize, k: usize) -> PyResult<Self> {
        Ok(PyPontryagin { inner: chern::build_p(n, k).map_err(chern_err)? })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.q_dimension()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis.iter().map(|m| m.to_string()).collect()
    }

    fn graded_dimensions(&self) -> Vec<(u32, usize)> {
        self.inner.graded_dimensions().into_iter().collect()
    }

    fn normal_form(&self, f: &str) -> PyResult<String> {
        let f: QPoly = f.parse().map_err(value_err)?;
        Ok(self.inner.normal_form(&f).map_err(chern_err)?.to_string())
    }

    #[pyo3(signature = (cap = None))]
    fn ch_gamma(&self, cap: Option<u32>) -> PyResult<String> {
        let cap = cap.unwrap_or(self.inner.default_cap());
        Ok(chern::ch_gamma(&self.inner, cap).map_err(chern_err)?.value.to_string())
    }

    fn __repr__(&self) -> String {
        format!("PontryaginRing(n={}, k={}, dimension={})", self.inner.n, self.inner.k, self.inner.q_dimension())
    }
}

/// An integer polynomial.
#[pyclass(name = "Poly", frozen, eq)]
#[derive(PartialEq)]
struct PyPoly {
    inner: ZPoly,
}

#[pymethods]
impl PyPoly {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        Ok(PyPoly { inner: s.parse().map_err(value_err)? })
    }

    fn __add__(&self, other: &PyPoly) -> PyPoly {
        PyPoly { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &PyPoly) -> PyPoly {
        PyPoly { inner: &self.inner - &other.inner }
    }

    fn __mul__(&self, other: &PyPoly) -> PyPoly {
        PyPoly { inner: &self.inner * &other.inner }
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> PyPoly {
        PyPoly { inner: self.inner.pow(e) }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }
}

#[pymodule]
#[pyo3(name = "grassk")]
fn grassk_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(kgroups, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_class_order, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_order_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(identity_suite_results, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ch_surjectivity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_eq22_chain, m)?)?;
    m.add_function(wrap_pyfunction!(compare_knk_k0, m)?)?;
    m.add_function(wrap_pyfunction!(knk_report, m)?)?;
    m.add_function(wrap_pyfunction!(smith_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_z, m)?)?;
    m.add_class::<PyPontryagin>()?;
    m.add_class::<PyPoly>()?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
