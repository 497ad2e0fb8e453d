//! Python bindings for prmhull-core. Records come back as plain dicts and
//! lists; domain errors raise ValueError.

use prmhull_core::eaqecc;
use prmhull_core::finite_field::{Elem, Field};
use prmhull_core::hull_euclid;
use prmhull_core::hull_herm;
use prmhull_core::linear_code::{LinearCode, DEFAULT_CAP};
use prmhull_core::prm_codes;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

fn err(e: prmhull_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(q: u32) -> PyResult<Field> {
    Field::with_size(q).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any(),
            None => n.as_i64().unwrap_or_default().into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let items = a.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn record<'py, T: Serialize>(py: Python<'py>, r: prmhull_core::Result<T>) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(r.map_err(err)?).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// A linear code over GF(q) held in reduced row-echelon form.
#[pyclass(name = "LinearCode", module = "prmhull", frozen)]
struct PyLinearCode {
    inner: LinearCode,
}

#[pymethods]
impl PyLinearCode {
    #[staticmethod]
    fn from_rows(q: u32, n: usize, rows: Vec<Vec<Elem>>) -> PyResult<Self> {
        let inner = LinearCode::from_rows(&field(q)?, n, rows).map_err(err)?;
        Ok(PyLinearCode { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (q, d, m = 2))]
    fn prm(q: u32, d: u32, m: u32) -> PyResult<Self> {
        let inner = prm_codes::prm_code(&field(q)?, m, d).map_err(err)?;
        Ok(PyLinearCode { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (q, d, m = 2))]
    fn rm(q: u32, d: u32, m: u32) -> PyResult<Self> {
        let inner = prm_codes::rm_code(&field(q)?, m, d).map_err(err)?;
        Ok(PyLinearCode { inner })
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.field().size()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn rows(&self) -> Vec<Vec<Elem>> {
        self.inner.rows().to_vec()
    }

    fn dual(&self) -> Self {
        PyLinearCode { inner: self.inner.dual() }
    }

    fn hermitian_dual(&self, base_q: u32) -> PyResult<Self> {
        Ok(PyLinearCode { inner: self.inner.hermitian_dual(base_q).map_err(err)? })
    }

    fn intersect(&self, other: &PyLinearCode) -> PyResult<Self> {
        Ok(PyLinearCode { inner: self.inner.intersect(&other.inner).map_err(err)? })
    }

    fn sum(&self, other: &PyLinearCode) -> PyResult<Self> {
        Ok(PyLinearCode { inner: self.inner.sum(&other.inner).map_err(err)? })
    }

    fn contains(&self, v: Vec<Elem>) -> PyResult<bool> {
        self.inner.contains(&v).map_err(err)
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn min_weight(&self, py: Python<'_>, cap: u64) -> PyResult<u32> {
        py.detach(|| self.inner.min_weight(cap)).map_err(err)
    }

    fn __eq__(&self, other: &PyLinearCode) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("LinearCode(q={}, n={}, k={})", self.q(), self.inner.len(), self.inner.dim())
    }
}

#[pyfunction]
#[pyo3(signature = (q, d, m = 2))]
fn prm_params(py: Python<'_>, q: u32, d: u32, m: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, prm_codes::prm_params(q, m, d))
}

#[pyfunction]
#[pyo3(signature = (q, d, m = 2))]
fn rm_params(py: Python<'_>, q: u32, d: u32, m: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, prm_codes::rm_params(q, m, d))
}

#[pyfunction]
fn relative_hull_dim(q: u32, d1: u32, d2: u32) -> PyResult<u64> {
    hull_euclid::relative_hull_dim(q, d1, d2).map_err(err)
}

/// Basis of S_{d1}/I(P^2) ∩ S_{d2}/I(P^2) in polynomial text form.
#[pyfunction]
fn relative_hull_basis(q: u32, d1: u32, d2: u32) -> PyResult<Vec<String>> {
    let f = field(q)?;
    let b = hull_euclid::relative_hull_basis(&f, d1, d2).map_err(err)?;
    Ok(b.elements(&f).iter().map(|p| p.to_string()).collect())
}

#[pyfunction]
fn verify_relative_hull(py: Python<'_>, q: u32, d1: u32, d2: u32) -> PyResult<Bound<'_, PyAny>> {
    let f = field(q)?;
    let r = py.detach(|| hull_euclid::verify_relative_hull(&f, d1, d2));
    record(py, r)
}

#[pyfunction]
fn hermitian_hull_dim(py: Python<'_>, q: u32, d: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, hull_herm::hermitian_hull_dim(q, d))
}

/// The sets U, V, W (and A_2 ∪ A_3 in the congruent case) as text.
#[pyfunction]
fn hermitian_hull_basis(py: Python<'_>, q: u32, d: u32) -> PyResult<Bound<'_, PyAny>> {
    let f = field(q * q)?;
    let b = hull_herm::hermitian_hull_basis(&f, d).map_err(err)?;
    let text = |v: &[prmhull_core::quotient_poly::Monomial]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>();
    let v = serde_json::json!({
        "mode": b.mode,
        "u": text(&b.set_u),
        "v": text(&b.set_v),
        "w": b.set_w.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "rest": text(&b.part_rest),
    });
    to_py(py, &v)
}

#[pyfunction]
fn verify_hermitian_hull(py: Python<'_>, q: u32, d: u32) -> PyResult<Bound<'_, PyAny>> {
    let f = field(q * q)?;
    let r = py.detach(|| hull_herm::verify_hermitian_hull(&f, d));
    record(py, r)
}

#[pyfunction]
fn t_size(q: u32, d: u32) -> PyResult<u64> {
    hull_herm::t_size(q, d).map_err(err)
}

#[pyfunction]
fn u_size(py: Python<'_>, q: u32, d: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, hull_herm::u_size(q, d))
}

#[pyfunction]
fn affine_hermitian_hull_dim(q: u32, d: u32) -> PyResult<u64> {
    hull_herm::affine_hermitian_hull_dim(q, d).map_err(err)
}

#[pyfunction]
fn prm_asym_eaqecc(py: Python<'_>, q: u32, d1: u32, d2: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, eaqecc::prm_asym_eaqecc(q, d1, d2))
}

#[pyfunction]
fn prm_symmetric_best(py: Python<'_>, q: u32, d1: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, eaqecc::prm_symmetric_best(q, d1))
}

#[pyfunction]
fn herm_eaqecc_prm(py: Python<'_>, q: u32, d: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, eaqecc::herm_eaqecc_prm(q, d))
}

#[pyfunction]
fn herm_eaqecc_rm(py: Python<'_>, q: u32, d: u32) -> PyResult<Bound<'_, PyAny>> {
    record(py, eaqecc::herm_eaqecc_rm(q, d))
}

/// The CSS-type construction on two explicit codes.
#[pyfunction]
#[pyo3(signature = (c1, c2, cap = DEFAULT_CAP))]
fn asym_from_codes<'py>(py: Python<'py>, c1: &PyLinearCode, c2: &PyLinearCode, cap: u64) -> PyResult<Bound<'py, PyAny>> {
    let r = py.detach(|| eaqecc::asym_from_codes(&c1.inner, &c2.inner, cap));
    record(py, r)
}

#[pyfunction]
#[pyo3(signature = (q, d1, d2, cap = DEFAULT_CAP))]
fn purity_probe(py: Python<'_>, q: u32, d1: u32, d2: u32, cap: u64) -> PyResult<Bound<'_, PyAny>> {
    let r = py.detach(|| eaqecc::purity_probe(q, d1, d2, cap));
    record(py, r)
}

#[pymodule]
fn prmhull(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLinearCode>()?;
    m.add_function(wrap_pyfunction!(prm_params, m)?)?;
    m.add_function(wrap_pyfunction!(rm_params, m)?)?;
    m.add_function(wrap_pyfunction!(relative_hull_dim, m)?)?;
    m.add_function(wrap_pyfunction!(relative_hull_basis, m)?)?;
    m.add_function(wrap_pyfunction!(verify_relative_hull, m)?)?;
    m.add_function(wrap_pyfunction!(hermitian_hull_dim, m)?)?;
    m.add_function(wrap_pyfunction!(hermitian_hull_basis, m)?)?;
    m.add_function(wrap_pyfunction!(verify_hermitian_hull, m)?)?;
    m.add_function(wrap_pyfunction!(t_size, m)?)?;
    m.add_function(wrap_pyfunction!(u_size, m)?)?;
    m.add_function(wrap_pyfunction!(affine_hermitian_hull_dim, m)?)?;
    m.add_function(wrap_pyfunction!(prm_asym_eaqecc, m)?)?;
    m.add_function(wrap_pyfunction!(prm_symmetric_best, m)?)?;
    m.add_function(wrap_pyfunction!(herm_eaqecc_prm, m)?)?;
    m.add_function(wrap_pyfunction!(herm_eaqecc_rm, m)?)?;
    m.add_function(wrap_pyfunction!(asym_from_codes, m)?)?;
    m.add_function(wrap_pyfunction!(purity_probe, m)?)?;
    Ok(())
}
