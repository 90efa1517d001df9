// pyo3 0.22 macros trip this lint on `PyResult` returns
#![allow(clippy::useless_conversion)]

use hosoya::contfrac::{self, CfSpec, GeneralCF};
use hosoya::families::{self, CaterpillarBondParams, RingParams};
use hosoya::{oracle, FamilySpec, FormalFraction};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: hosoya::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Undirected multigraph with edge multiplicities.
#[pyclass(name = "Multigraph", module = "pyhosoya")]
#[derive(Clone)]
struct PyMultigraph {
    inner: hosoya::Multigraph,
}

#[pymethods]
impl PyMultigraph {
    #[new]
    #[pyo3(signature = (n_vertices, edges = Vec::new()))]
    fn new(n_vertices: usize, edges: Vec<(usize, usize, u64)>) -> PyResult<Self> {
        let inner = hosoya::Multigraph::from_edges(n_vertices, edges).map_err(value_error)?;
        Ok(PyMultigraph { inner })
    }

    #[staticmethod]
    fn from_hgraph(text: &str) -> PyResult<Self> {
        let inner = hosoya::Multigraph::from_hgraph(text).map_err(value_error)?;
        Ok(PyMultigraph { inner })
    }

    fn to_hgraph(&self) -> String {
        self.inner.to_hgraph()
    }

    #[getter]
    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    #[getter]
    fn total_multiplicity(&self) -> u64 {
        self.inner.total_multiplicity()
    }

    fn edges(&self) -> Vec<(usize, usize, u64)> {
        self.inner.edges().collect()
    }

    fn hosoya(&self) -> BigInt {
        oracle::hosoya(&self.inner)
    }

    fn hosoya_by_definition(&self) -> PyResult<BigInt> {
        oracle::hosoya_by_definition(&self.inner).map_err(value_error)
    }

    fn matching_count(&self, k: usize) -> PyResult<BigInt> {
        oracle::matching_count(&self.inner, k).map_err(value_error)
    }

    /// Returns `(Z, outline)`.
    fn trace(&self) -> PyResult<(BigInt, String)> {
        let (z, t) = oracle::hosoya_trace(&self.inner).map_err(value_error)?;
        Ok((z, t.outline()))
    }

    fn delete_edge_copy(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(PyMultigraph { inner: self.inner.delete_edge_copy(u, v).map_err(value_error)? })
    }

    fn delete_vertices(&self, vs: Vec<usize>) -> PyResult<Self> {
        Ok(PyMultigraph { inner: self.inner.delete_vertices(&vs).map_err(value_error)? })
    }

    fn components(&self) -> Vec<Self> {
        self.inner.components().into_iter().map(|inner| PyMultigraph { inner }).collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Multigraph(n_vertices={}, total_multiplicity={})",
            self.inner.n_vertices(),
            self.inner.total_multiplicity()
        )
    }
}

fn wrap(r: hosoya::Result<hosoya::Multigraph>) -> PyResult<PyMultigraph> {
    r.map(|inner| PyMultigraph { inner }).map_err(value_error)
}

/// Graph of a family spec string such as `ring:n=3,m=1,r=2,s=1`.
#[pyfunction]
fn family(spec: &str) -> PyResult<PyMultigraph> {
    wrap(FamilySpec::parse(spec).and_then(|f| f.graph()))
}

/// Hosoya index of a family through its continued fraction, or None.
#[pyfunction]
fn family_cf_hosoya(spec: &str) -> PyResult<Option<BigInt>> {
    FamilySpec::parse(spec).and_then(|f| f.cf_hosoya()).map_err(value_error)
}

#[pyfunction]
fn path_graph(n: usize) -> PyResult<PyMultigraph> {
    wrap(families::path_graph(n))
}

#[pyfunction]
fn cycle_graph(n: usize) -> PyResult<PyMultigraph> {
    wrap(families::cycle_graph(n))
}

#[pyfunction]
fn caterpillar_bond(xs: Vec<u64>, ys: Vec<u64>) -> PyResult<PyMultigraph> {
    let params = CaterpillarBondParams::new(xs, ys).map_err(value_error)?;
    wrap(families::caterpillar_bond(&params))
}

#[pyfunction]
fn comb_cyclic(n: usize, a: u64, b: u64) -> PyResult<PyMultigraph> {
    wrap(families::comb_cyclic(n, a, b))
}

#[pyfunction]
fn ring_graph(n: u64, m: u64, r: u64, s: u64) -> PyResult<PyMultigraph> {
    let params = RingParams::new(n, m, r, s).map_err(value_error)?;
    wrap(families::ring_graph(&params))
}

#[pyfunction]
fn naphthalene() -> PyMultigraph {
    PyMultigraph { inner: families::naphthalene_fixture() }
}

/// Tree graph of a branched continued-fraction JSON spec.
#[pyfunction]
fn tree_graph(spec_json: &str) -> PyResult<PyMultigraph> {
    let spec = CfSpec::from_json(spec_json).map_err(value_error)?;
    let tree =
        spec.as_tree().ok_or_else(|| PyValueError::new_err("negative continued fractions have no tree shape"))?;
    wrap(families::tree_of_spec(&tree))
}

/// All convergents `(p_k, q_k)` of `a0 + b1/(a1 + ...)`, terms given as `(b, a)`.
#[pyfunction]
#[pyo3(signature = (a0, terms = Vec::new()))]
fn convergents(a0: u64, terms: Vec<(u64, u64)>) -> PyResult<Vec<(BigInt, BigInt)>> {
    let cf = GeneralCF::new(a0, terms).map_err(value_error)?;
    Ok(contfrac::convergents(&cf).into_iter().map(|c| (c.p, c.q)).collect())
}

/// Evaluates any continued-fraction JSON document to an unreduced `(num, den)`.
#[pyfunction]
fn eval_cf_json(spec_json: &str) -> PyResult<(BigInt, BigInt)> {
    let spec = CfSpec::from_json(spec_json).map_err(value_error)?;
    Ok(spec.evaluate().map_err(value_error)?.into_parts())
}

#[pyfunction]
#[allow(non_snake_case)]
fn eval_negative_ring_cf(M: u64, rs: u64, n: u64) -> PyResult<(BigInt, BigInt)> {
    if M == 0 || rs == 0 || n == 0 {
        return Err(PyValueError::new_err("M, rs and n must be positive"));
    }
    let c = contfrac::eval_negative_ring_cf(M, rs, n);
    Ok((c.p, c.q))
}

#[pyfunction]
fn ring_hosoya_closed(n: u64, m: u64, r: u64, s: u64) -> PyResult<BigInt> {
    let params = RingParams::new(n.max(1), m, r, s).map_err(value_error)?;
    Ok(families::ring_hosoya_closed(&params, n))
}

#[pyfunction]
fn ring_sequence(m: u64, r: u64, s: u64, count: usize) -> PyResult<Vec<BigInt>> {
    let params = RingParams::new(1, m, r, s).map_err(value_error)?;
    Ok(families::ring_sequence(&params, count))
}

fn fraction(pair: (BigInt, BigInt)) -> PyResult<FormalFraction> {
    FormalFraction::new(pair.0, pair.1).map_err(value_error)
}

/// Unreduced sum `(ad + bc, bd)`.
#[pyfunction]
fn ff_add(x: (BigInt, BigInt), y: (BigInt, BigInt)) -> PyResult<(BigInt, BigInt)> {
    Ok(fraction(x)?.add(&fraction(y)?).into_parts())
}

/// Unreduced difference `(ad - bc, bd)`.
#[pyfunction]
fn ff_sub(x: (BigInt, BigInt), y: (BigInt, BigInt)) -> PyResult<(BigInt, BigInt)> {
    Ok(fraction(x)?.sub(&fraction(y)?).into_parts())
}

#[pyfunction]
fn fibonacci(n: usize) -> BigInt {
    families::fibonacci(n)
}

#[pyfunction]
fn lucas(n: usize) -> BigInt {
    families::lucas(n)
}

#[pymodule]
fn pyhosoya(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultigraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(family_cf_hosoya, m)?)?;
    m.add_function(wrap_pyfunction!(path_graph, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_graph, m)?)?;
    m.add_function(wrap_pyfunction!(caterpillar_bond, m)?)?;
    m.add_function(wrap_pyfunction!(comb_cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(ring_graph, m)?)?;
    m.add_function(wrap_pyfunction!(naphthalene, m)?)?;
    m.add_function(wrap_pyfunction!(tree_graph, m)?)?;
    m.add_function(wrap_pyfunction!(convergents, m)?)?;
    m.add_function(wrap_pyfunction!(eval_cf_json, m)?)?;
    m.add_function(wrap_pyfunction!(eval_negative_ring_cf, m)?)?;
    m.add_function(wrap_pyfunction!(ring_hosoya_closed, m)?)?;
    m.add_function(wrap_pyfunction!(ring_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(ff_add, m)?)?;
    m.add_function(wrap_pyfunction!(ff_sub, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(lucas, m)?)?;
    Ok(())
}
