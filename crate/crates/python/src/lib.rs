//! Python bindings: a `Graph` class plus functions that return plain
//! dicts and lists (the same shapes as the CLI's JSON).

use brookskit::alon_tarsi::{at_certify_with, eulerian_counts, ChordRule};
use brookskit::brooks::{color_brooks, Strategy};
use brookskit::choosability::{brooks_list_color, find_independency_tree, gallai_bad_lists};
use brookskit::families::{bounds_report, generate, FamilySpec};
use brookskit::graph_core::format::{parse_auto, to_graph6};
use brookskit::graph_core::structure::classify;
use brookskit::graph_core::Digraph;
use brookskit::oracle::{is_f_choosable, oracle_report};
use brookskit::paintability::{chi_paint_exact, painter_wins};
use brookskit::{Error, ListAssignment};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(brookskit, BrooksError, PyException, "Domain failure: a precondition or internal check failed.");
create_exception!(brookskit, ScaleRefusal, BrooksError, "Input exceeds an exact-search scale limit.");

fn err(e: Error) -> PyErr {
    match e {
        Error::Scale { .. } => ScaleRefusal::new_err(e.to_string()),
        Error::Parse { .. } | Error::Validation(_) => PyValueError::new_err(e.to_string()),
        _ => BrooksError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Graph", module = "brookskit", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    g: brookskit::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            g: brookskit::Graph::from_edges(n, &edges).map_err(err)?,
        })
    }

    /// Parses graph6, DIMACS or an edge list.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            g: parse_auto(text.as_bytes()).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.g.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.g.m()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.g.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.g.degree(v))
    }

    fn max_degree(&self) -> usize {
        self.g.max_degree()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.g.edges()
    }

    fn is_connected(&self) -> bool {
        self.g.is_connected()
    }

    fn to_graph6(&self) -> String {
        to_graph6(&self.g)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.g.n(), self.g.m())
    }
}

/// Δ-colors with one strategy; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (graph, strategy = "kempe"))]
fn color<'py>(py: Python<'py>, graph: &PyGraph, strategy: &str) -> PyResult<Bound<'py, PyAny>> {
    let s: Strategy = strategy.parse().map_err(err)?;
    let r = color_brooks(&graph.g, s).map_err(err)?;
    if !r.verify(&graph.g) {
        return Err(BrooksError::new_err("report failed its own check"));
    }
    to_py(py, &r)
}

#[pyfunction]
fn strategies() -> Vec<&'static str> {
    Strategy::ALL.iter().map(|s| s.name()).collect()
}

#[pyfunction]
#[pyo3(signature = (graph, list = false, paint = false))]
fn oracle<'py>(py: Python<'py>, graph: &PyGraph, list: bool, paint: bool) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &oracle_report(&graph.g, list, paint).map_err(err)?)
}

#[pyfunction(name = "classify")]
fn classify_py<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &classify(&graph.g))
}

#[pyfunction]
fn independency_tree<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &find_independency_tree(&graph.g).map_err(err)?)
}

#[pyfunction]
fn bad_lists(graph: &PyGraph) -> PyResult<Vec<Vec<u32>>> {
    Ok(gallai_bad_lists(&graph.g).map_err(err)?.lists().to_vec())
}

/// Colors from lists of size at least max{3, ω, Δ}; returns one color per vertex.
#[pyfunction]
fn list_color(graph: &PyGraph, lists: Vec<Vec<u32>>) -> PyResult<Vec<u32>> {
    let c = brooks_list_color(&graph.g, &ListAssignment::new(lists)).map_err(err)?;
    Ok((0..graph.g.n()).map(|v| c.get(v).unwrap_or(0)).collect())
}

#[pyfunction]
fn is_choosable(graph: &PyGraph, f: Vec<usize>) -> PyResult<bool> {
    Ok(is_f_choosable(&graph.g, &f).map_err(err)?.is_choosable())
}

#[pyfunction]
#[pyo3(signature = (graph, reversed_chord = false))]
fn at_certificate<'py>(py: Python<'py>, graph: &PyGraph, reversed_chord: bool) -> PyResult<Bound<'py, PyAny>> {
    let rule = if reversed_chord { ChordRule::Reversed } else { ChordRule::AsCycle };
    to_py(py, &at_certify_with(&graph.g, rule).map_err(err)?)
}

/// (EE, EO) for the digraph on `n` vertices with the given arcs.
#[pyfunction]
fn eulerian(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<(u64, u64)> {
    let d = Digraph::from_arcs(n, &arcs).map_err(err)?;
    let c = eulerian_counts(&d).map_err(err)?;
    Ok((c.ee, c.eo))
}

#[pyfunction]
fn paint_number(graph: &PyGraph) -> PyResult<usize> {
    chi_paint_exact(&graph.g).map_err(err)
}

#[pyfunction]
fn painter_wins_with(graph: &PyGraph, tokens: Vec<usize>) -> PyResult<bool> {
    painter_wins(&graph.g, &tokens).map_err(err)
}

#[pyfunction(name = "generate")]
#[pyo3(signature = (family, n = 0, m = 0, t = 0, seed = 0))]
fn generate_py(family: &str, n: usize, m: usize, t: usize, seed: u64) -> PyResult<PyGraph> {
    let family = family.parse().map_err(err)?;
    Ok(PyGraph {
        g: generate(&FamilySpec { family, n, m, t, seed }).map_err(err)?,
    })
}

#[pyfunction]
fn bounds<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &bounds_report(&graph.g).map_err(err)?)
}

#[pymodule(name = "brookskit")]
fn brookskit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("BrooksError", m.py().get_type::<BrooksError>())?;
    m.add("ScaleRefusal", m.py().get_type::<ScaleRefusal>())?;
    m.add_function(wrap_pyfunction!(color, m)?)?;
    m.add_function(wrap_pyfunction!(strategies, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(classify_py, m)?)?;
    m.add_function(wrap_pyfunction!(independency_tree, m)?)?;
    m.add_function(wrap_pyfunction!(bad_lists, m)?)?;
    m.add_function(wrap_pyfunction!(list_color, m)?)?;
    m.add_function(wrap_pyfunction!(is_choosable, m)?)?;
    m.add_function(wrap_pyfunction!(at_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(paint_number, m)?)?;
    m.add_function(wrap_pyfunction!(painter_wins_with, m)?)?;
    m.add_function(wrap_pyfunction!(generate_py, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    Ok(())
}
