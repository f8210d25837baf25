//! Python bindings: graphs, exact curvature values (as `p/q` strings),
//! idleness functions, and the theorem checks.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ricci_core::assignment::lly_equal_degree;
use ricci_core::curvature::{idleness_function, kappa_alpha, kappa_lly, ricci_lower};
use ricci_core::graph::{
    generate_sharpness, generate_standard, parse_edge_list, petersen, random_min_degree_graph,
    write_edge_list, Distance, Graph, StandardKind,
};
use ricci_core::rational::parse_rational;
use ricci_core::theorem::{
    check_degree_threshold, check_diameter_lemma, check_proof_bound, check_sharpness,
    sweep_random, SweepMode,
};

fn err(e: ricci_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Immutable finite simple graph.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Parse the edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: parse_edge_list(text).map_err(err)? })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: Graph::new(n, &edges).map_err(err)? })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: generate_standard(StandardKind::Cycle, n).map_err(err)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: generate_standard(StandardKind::Complete, n).map_err(err)? })
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: generate_standard(StandardKind::Path, n).map_err(err)? })
    }

    #[staticmethod]
    fn hypercube(d: usize) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: generate_standard(StandardKind::Hypercube, d).map_err(err)? })
    }

    #[staticmethod]
    fn petersen() -> PyGraph {
        PyGraph { inner: petersen() }
    }

    /// Sharpness construction; returns (graph, (x, y)) with the designated edge.
    #[staticmethod]
    fn sharpness(l: usize) -> PyResult<(PyGraph, (usize, usize))> {
        let (g, ids) = generate_sharpness(l).map_err(err)?;
        Ok((PyGraph { inner: g }, (ids.x, ids.y)))
    }

    #[staticmethod]
    fn random_min_degree(n: usize, delta_min: usize, seed: u64) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: random_min_degree_graph(n, delta_min, seed).map_err(err)? })
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, x: usize) -> PyResult<usize> {
        self.inner.degree(x).map_err(err)
    }

    fn neighbors(&self, x: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.neighbors(x).map_err(err)?.to_vec())
    }

    /// Hop distance, or None for a disconnected pair.
    fn distance(&self, x: usize, y: usize) -> PyResult<Option<usize>> {
        Ok(self.inner.distance(x, y).map_err(err)?.finite())
    }

    fn sphere(&self, x: usize, r: usize) -> PyResult<Vec<usize>> {
        self.inner.sphere(x, r).map_err(err)
    }

    fn ball(&self, x: usize, r: usize) -> PyResult<Vec<usize>> {
        self.inner.ball(x, r).map_err(err)
    }

    fn common_neighbors(&self, x: usize, y: usize) -> PyResult<Vec<usize>> {
        self.inner.common_neighbors(x, y).map_err(err)
    }

    fn min_degree(&self) -> PyResult<usize> {
        self.inner.min_degree().map_err(err)
    }

    fn diameter(&self) -> PyResult<Option<usize>> {
        Ok(match self.inner.diameter().map_err(err)? {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        })
    }

    fn to_edge_list(&self) -> String {
        write_edge_list(&self.inner)
    }

    /// κ_α(x, y) as an exact rational string; alpha is "p/q" text.
    fn kappa_alpha(&self, x: usize, y: usize, alpha: &str) -> PyResult<String> {
        let a = parse_rational(alpha).map_err(err)?;
        Ok(kappa_alpha(&self.inner, x, y, &a).map_err(err)?.kappa.to_string())
    }

    /// Lin-Lu-Yau curvature of an edge, via the transport route.
    fn kappa_lly(&self, x: usize, y: usize) -> PyResult<String> {
        Ok(kappa_lly(&self.inner, x, y).map_err(err)?.kappa.to_string())
    }

    /// Lin-Lu-Yau curvature via the equal-degree assignment formula.
    fn kappa_lly_assignment(&self, x: usize, y: usize) -> PyResult<String> {
        Ok(lly_equal_degree(&self.inner, x, y).map_err(err)?.kappa.to_string())
    }

    /// Breakpoints [(alpha, value)] of the idleness function α ↦ κ_α(x, y).
    fn idleness_breakpoints(&self, x: usize, y: usize) -> PyResult<Vec<(String, String)>> {
        let f = idleness_function(&self.inner, x, y).map_err(err)?;
        Ok(f.breakpoints()
            .iter()
            .map(|(a, v)| (a.to_string(), v.to_string()))
            .collect())
    }

    /// (min curvature, witnessing edge) over all edges.
    fn ricci_lower(&self) -> PyResult<(String, (usize, usize))> {
        let min = ricci_lower(&self.inner).map_err(err)?;
        Ok((min.kappa.to_string(), (min.x, min.y)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

#[pyfunction]
fn verify_threshold(g: &PyGraph) -> PyResult<String> {
    Ok(check_degree_threshold(&g.inner).map_err(err)?.to_json().to_string())
}

#[pyfunction]
fn verify_diameter(g: &PyGraph) -> PyResult<String> {
    Ok(check_diameter_lemma(&g.inner).map_err(err)?.to_json().to_string())
}

#[pyfunction]
fn verify_sharpness(l: usize) -> PyResult<String> {
    Ok(check_sharpness(l).map_err(err)?.to_json().to_string())
}

#[pyfunction]
fn verify_proof_bound(g: &PyGraph, x: usize, y: usize) -> PyResult<String> {
    Ok(check_proof_bound(&g.inner, x, y).map_err(err)?.to_json().to_string())
}

/// Random falsification sweep; returns one JSON report string per sample.
#[pyfunction]
fn sweep(n_min: usize, n_max: usize, samples: usize, seed: u64, mode: &str) -> PyResult<Vec<String>> {
    let mode = match mode {
        "threshold" => SweepMode::Threshold,
        "diameter" => SweepMode::Diameter,
        "proof_bound" => SweepMode::ProofBound,
        other => return Err(PyValueError::new_err(format!("unknown sweep mode {other:?}"))),
    };
    Ok(sweep_random(n_min, n_max, samples, seed, mode)
        .map_err(err)?
        .iter()
        .map(|r| r.to_json().to_string())
        .collect())
}

#[pymodule]
fn ricci_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(verify_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(verify_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sharpness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_proof_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
