//! Python bindings: a `Graph` class plus module-level functions mirroring
//! the CLI. Structured results come back as plain dicts and lists with the
//! same field names as the CLI's JSON.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

use qec_core::classify::{
    cactus_check as core_cactus, has_induced, ladder_classify, qec_auto, Pattern,
};
use qec_core::clique::clique_graph;
use qec_core::enumerate::{canonical_graph6, enumerate_connected as core_enumerate};
use qec_core::graph::{make_complete, make_cycle, make_path, make_star_product, make_two_clique};
use qec_core::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use qec_core::qec::{distance_spectrum, qec_numeric, qec_path_closed_form, sandwich};
use qec_core::two_clique::{
    appendix_stationary_solve, qec_star_product_pair as core_star_pair,
    qec_two_clique as core_two_clique, TwoCliqueParams,
};
use qec_core::verify::verify_up_to;
use qec_core::VertexSet;

fn err(e: qec_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_f64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(x)) => x.into_pyobject(py)?.into_any(),
            _ => py.None().into_bound(py),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_dict<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

fn vertex_set(vertices: Vec<usize>, n: usize) -> PyResult<VertexSet> {
    match vertices.iter().find(|&&v| v >= n) {
        Some(&v) => Err(err(qec_core::Error::VertexOutOfRange { vertex: v, n })),
        None => Ok(vertices.into_iter().collect()),
    }
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(frozen, eq, skip_from_py_object, module = "qec")]
#[derive(Clone, PartialEq)]
struct Graph(qec_core::Graph);

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        qec_core::Graph::from_edges(n, edges)
            .map(Graph)
            .map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        from_graph6(s).map(Graph).map_err(err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        from_edge_list(text).map(Graph).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        make_complete(n).map(Graph).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        make_path(n).map(Graph).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        make_cycle(n).map(Graph).map_err(err)
    }

    /// `K_m ∪_l K_n`.
    #[staticmethod]
    fn two_clique(l: usize, m: usize, n: usize) -> PyResult<Self> {
        make_two_clique(l, m, n).map(Graph).map_err(err)
    }

    /// `K_n * (K_{parts[0]}, ..)`.
    #[staticmethod]
    fn star_product(n: usize, parts: Vec<usize>) -> PyResult<Self> {
        make_star_product(n, &parts).map(Graph).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        vertex_set(vec![v], self.0.n())?;
        Ok(self.0.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        vertex_set(vec![v], self.0.n())?;
        Ok(self.0.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn diameter(&self) -> PyResult<usize> {
        self.0.diameter().map_err(err)
    }

    fn distance_matrix(&self) -> PyResult<Vec<Vec<u32>>> {
        self.0.distance_matrix().map(|d| d.to_rows()).map_err(err)
    }

    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<Graph> {
        let s = vertex_set(vertices, self.0.n())?;
        self.0.induced_subgraph(s).map(Graph).map_err(err)
    }

    fn is_isometric_subgraph(&self, vertices: Vec<usize>) -> PyResult<bool> {
        let s = vertex_set(vertices, self.0.n())?;
        self.0.is_isometric_subgraph(s).map_err(err)
    }

    fn to_graph6(&self) -> String {
        to_graph6(&self.0)
    }

    fn to_edge_list(&self) -> String {
        to_edge_list(&self.0)
    }

    fn canonical_graph6(&self) -> PyResult<String> {
        canonical_graph6(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", to_graph6(&self.0))
    }
}

/// Result of a QEC computation.
#[pyclass(frozen, get_all, module = "qec")]
struct QecResult {
    value: f64,
    witness: Vec<f64>,
    method: String,
    residual: f64,
}

#[pymethods]
impl QecResult {
    fn __repr__(&self) -> String {
        format!("QecResult(value={}, method={:?})", self.value, self.method)
    }
}

/// QEC of a connected graph; closed forms are used when recognized unless
/// `numeric` is set.
#[pyfunction(name = "qec")]
#[pyo3(signature = (g, numeric = false))]
fn compute_qec(g: &Graph, numeric: bool) -> PyResult<QecResult> {
    let r = if numeric {
        g.0.distance_matrix().and_then(|d| qec_numeric(&d))
    } else {
        qec_auto(&g.0)
    }
    .map_err(err)?;
    let method = serde_json::to_value(r.method)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default();
    Ok(QecResult {
        value: r.value,
        witness: r.witness,
        method,
        residual: r.residual,
    })
}

/// Distance eigenvalues (descending) with `delta1`, `delta2`, the QEC and
/// whether the sandwich holds.
#[pyfunction]
fn spectrum<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyAny>> {
    let d = g.0.distance_matrix().map_err(err)?;
    let spec = distance_spectrum(&d).map_err(err)?;
    let s = sandwich(&d).map_err(err)?;
    let out = to_dict(py, &s)?;
    out.set_item("eigenvalues", spec.eigenvalues)?;
    out.set_item("sandwich_holds", s.holds())?;
    Ok(out)
}

/// Maximal cliques in canonical order.
#[pyfunction]
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    qec_core::clique::maximal_cliques(&g.0)
        .iter()
        .map(|c| c.to_vec())
        .collect()
}

/// Maximal cliques, clique-graph edges, tree flag and diameter.
#[pyfunction]
fn clique_graph_info<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyAny>> {
    let cg = clique_graph(&g.0).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("cliques", maximal_cliques(g))?;
    out.set_item("gamma_edges", cg.graph().edges())?;
    out.set_item("gamma_is_tree", cg.is_tree())?;
    out.set_item("gamma_diameter", cg.diameter())?;
    Ok(out.into_any())
}

/// `(tree, pairwise_ok, triple_ok)`.
#[pyfunction]
fn cactus_check(g: &Graph) -> PyResult<(bool, bool, bool)> {
    let c = core_cactus(&g.0).map_err(err)?;
    Ok((c.tree, c.pairwise_ok, c.triple_ok))
}

/// Whether `pattern` ("claw" or "diamond") occurs as an induced subgraph.
#[pyfunction]
fn has_induced_pattern(g: &Graph, pattern: &str) -> PyResult<bool> {
    let p = match pattern {
        "claw" => Pattern::Claw,
        "diamond" => Pattern::Diamond,
        other => return Err(PyValueError::new_err(format!("unknown pattern {other:?}"))),
    };
    Ok(has_induced(&g.0, p))
}

/// Classification report as a dict.
#[pyfunction]
#[pyo3(signature = (g, d_max = 5))]
fn classify<'py>(py: Python<'py>, g: &Graph, d_max: usize) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &ladder_classify(&g.0, d_max).map_err(err)?)
}

#[pyfunction]
fn qec_path(d: usize) -> PyResult<f64> {
    qec_path_closed_form(d).map_err(err)
}

#[pyfunction]
fn qec_two_clique(l: usize, m: usize, n: usize) -> PyResult<f64> {
    TwoCliqueParams::new(l, m, n)
        .map(core_two_clique)
        .map_err(err)
}

#[pyfunction]
fn qec_star_product_pair(m: usize, n: usize) -> PyResult<f64> {
    core_star_pair(m, n).map_err(err)
}

/// Stationary points of the two-clique problem, largest `lambda` first.
#[pyfunction]
fn stationary_points<'py>(
    py: Python<'py>,
    l: usize,
    m: usize,
    n: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let p = TwoCliqueParams::new(l, m, n).map_err(err)?;
    to_dict(py, &appendix_stationary_solve(p))
}

/// Canonical representatives of the connected graphs on `n ≤ 8` vertices.
#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<Graph>> {
    Ok(core_enumerate(n)
        .map_err(err)?
        .into_iter()
        .map(Graph)
        .collect())
}

/// Verification summary over all connected graphs up to `max_n` vertices.
#[pyfunction]
fn verify<'py>(py: Python<'py>, max_n: usize) -> PyResult<Bound<'py, PyAny>> {
    let summary = py.detach(|| verify_up_to(max_n)).map_err(err)?;
    let out = to_dict(py, &summary)?;
    out.set_item("all_passed", summary.all_passed())?;
    Ok(out)
}

#[pymodule(name = "qec")]
fn qec_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<QecResult>()?;
    m.add_function(wrap_pyfunction!(compute_qec, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(clique_graph_info, m)?)?;
    m.add_function(wrap_pyfunction!(cactus_check, m)?)?;
    m.add_function(wrap_pyfunction!(has_induced_pattern, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(qec_path, m)?)?;
    m.add_function(wrap_pyfunction!(qec_two_clique, m)?)?;
    m.add_function(wrap_pyfunction!(qec_star_product_pair, m)?)?;
    m.add_function(wrap_pyfunction!(stationary_points, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
