use kostka_core as core;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<core::Partition> {
    core::Partition::new(parts).map_err(err)
}

/// Hands a serializable report to Python as plain dicts and lists.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A semistandard Young tableau, given as a list of rows.
#[pyclass(
    name = "Tableau",
    module = "kostka_kit",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTableau(core::Tableau);

#[pymethods]
impl PyTableau {
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        core::Tableau::new(rows).map(PyTableau).map_err(err)
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows().to_vec()
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().parts().to_vec()
    }

    fn content(&self, h: usize) -> PyResult<Vec<usize>> {
        self.0.content(h).map(|c| c.parts().to_vec()).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tableau({:?})", self.0.rows())
    }
}

#[pyfunction]
fn kostka(shape: Vec<usize>, weight: Vec<usize>) -> PyResult<u64> {
    core::kostka(&partition(shape)?, &core::Composition::new(weight)).map_err(err)
}

/// Same count by the horizontal-strip recursion.
#[pyfunction]
fn kostka_oracle(shape: Vec<usize>, weight: Vec<usize>) -> PyResult<u64> {
    core::kostka_oracle(&partition(shape)?, &core::Composition::new(weight)).map_err(err)
}

#[pyfunction]
fn enumerate_ssyt(shape: Vec<usize>, weight: Vec<usize>) -> PyResult<Vec<PyTableau>> {
    let tableaux = core::enumerate_ssyt(&partition(shape)?, &core::Composition::new(weight));
    Ok(tableaux.into_iter().map(PyTableau).collect())
}

/// Returns `(tableau, new_cell, path)`; cells are 1-based `(row, col)`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn row_insert(
    t: &PyTableau,
    x: usize,
) -> PyResult<(PyTableau, (usize, usize), Vec<(usize, usize)>)> {
    let r = core::row_insert(&t.0, x).map_err(err)?;
    Ok((
        PyTableau(r.tableau),
        (r.new_cell.row, r.new_cell.col),
        r.path.iter().map(|c| (c.row, c.col)).collect(),
    ))
}

/// Returns `(tableau, ejected)`.
#[pyfunction]
fn reverse_insert(t: &PyTableau, corner: (usize, usize)) -> PyResult<(PyTableau, usize)> {
    let r = core::reverse_insert(&t.0, core::Cell::new(corner.0, corner.1)).map_err(err)?;
    Ok((PyTableau(r.tableau), r.ejected))
}

/// Returns `[((T, x), T ← x), ...]`.
#[pyfunction]
#[pyo3(name = "vershik_bijection")]
fn bijection(
    rho: Vec<usize>,
    lambda: Vec<usize>,
) -> PyResult<Vec<((PyTableau, usize), PyTableau)>> {
    let table =
        core::vershik_bijection(&partition(rho)?, &core::Composition::new(lambda)).map_err(err)?;
    Ok(table
        .pairs
        .into_iter()
        .map(|p| {
            (
                (PyTableau(p.source.tableau), p.source.x),
                PyTableau(p.image),
            )
        })
        .collect())
}

#[pyfunction]
fn verify_identity<'py>(
    py: Python<'py>,
    rho: Vec<usize>,
    lambda: Vec<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let record = core::verify_identity(&partition(rho)?, &partition(lambda)?).map_err(err)?;
    to_py(py, &record)
}

#[pyfunction]
#[pyo3(signature = (max_n, jobs=None))]
fn sweep_identity(py: Python<'_>, max_n: usize, jobs: Option<usize>) -> PyResult<Bound<'_, PyAny>> {
    let records = py
        .detach(|| core::sweep_identity(max_n, jobs))
        .map_err(err)?;
    to_py(py, &records)
}

#[pyfunction]
fn removal_map_analysis<'py>(
    py: Python<'py>,
    rho: Vec<usize>,
    lambda: Vec<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = core::removal_map_analysis(&partition(rho)?, &core::Composition::new(lambda))
        .map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
fn kostka_kit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(kostka_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(row_insert, m)?)?;
    m.add_function(wrap_pyfunction!(reverse_insert, m)?)?;
    m.add_function(wrap_pyfunction!(bijection, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_identity, m)?)?;
    m.add_function(wrap_pyfunction!(removal_map_analysis, m)?)?;
    Ok(())
}
