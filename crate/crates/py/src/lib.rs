//! Python bindings: the graph type with its switching/SRG operations, the
//! automorphism machinery and the construction pipeline.
//!
//! ```python
//! import g2srg_py as g2
//! gamma = g2.build_gamma()
//! assert gamma.srg_params() == (36, 15, 6, 6)
//! prime, w, classes = g2.canonical_switch()
//! assert prime.automorphism_group().order() == 12096
//! ```

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use g2srg::aut;
use g2srg::pipeline::{self, GammaConstruction};

fn value_err(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// An undirected graph on at most 64 vertices.
#[pyclass(frozen, name = "Graph")]
struct PyGraph {
    inner: g2srg::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: g2srg::Graph::from_edges(n, &edges).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: g2srg::graph6::decode(text).map_err(value_err)?,
        })
    }

    fn n(&self) -> usize {
        self.inner.n()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn complement(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    /// Seidel switching with respect to the given vertex set.
    fn switch(&self, vertices: Vec<usize>) -> PyResult<PyGraph> {
        let y = g2srg::VertexSet::from_indices(&vertices).map_err(value_err)?;
        Ok(PyGraph {
            inner: self.inner.switch(y),
        })
    }

    /// (n, k, lambda, mu) if the graph is strongly regular, else None.
    fn srg_params(&self) -> Option<(usize, usize, usize, usize)> {
        self.inner.check_srg().params().map(|p| p.as_tuple())
    }

    fn to_graph6(&self) -> String {
        g2srg::graph6::encode(&self.inner)
    }

    /// Seidel matrix rows (0 diagonal, -1 edges, +1 non-edges).
    fn seidel_rows(&self) -> Vec<Vec<i64>> {
        self.inner.seidel_matrix().rows()
    }

    fn automorphism_group(&self) -> PyResult<PyPermGroup> {
        Ok(PyPermGroup {
            inner: aut::automorphism_group(&self.inner).map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// A permutation group given by generators, with exact order.
#[pyclass(frozen, name = "PermGroup")]
struct PyPermGroup {
    inner: g2srg::PermGroup,
}

#[pymethods]
impl PyPermGroup {
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    fn generators(&self) -> Vec<Vec<usize>> {
        self.inner
            .generators()
            .iter()
            .map(|g| g.images().to_vec())
            .collect()
    }

    fn generator_cycles(&self) -> Vec<String> {
        self.inner
            .generators()
            .iter()
            .map(|g| g.cycle_notation())
            .collect()
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        self.inner.orbits()
    }

    fn is_transitive(&self) -> bool {
        self.inner.is_transitive()
    }

    fn __repr__(&self) -> String {
        format!(
            "PermGroup(degree={}, order={})",
            self.inner.degree(),
            self.inner.order()
        )
    }
}

/// The orthogonality graph Γ = srg(36,15,6,6) on the 36 vectors of V₁.
#[pyfunction]
fn build_gamma() -> PyGraph {
    PyGraph {
        inner: pipeline::build_gamma(),
    }
}

/// The 36 vectors of V₁ rendered as coordinate triples, in vertex order.
#[pyfunction]
fn v1_vectors() -> Vec<String> {
    g2srg::enumerate_v1()
        .into_iter()
        .map(|v| v.render())
        .collect()
}

/// The canonical valid switching set: returns (gamma_prime, w_vertices,
/// class_indices).
#[pyfunction]
fn canonical_switch() -> PyResult<(PyGraph, Vec<usize>, Vec<usize>)> {
    let construction = GammaConstruction::new();
    let candidate = pipeline::canonical_switch_candidate(&construction)
        .ok_or_else(|| value_err("no valid switching set"))?;
    let gamma_prime = construction.graph().switch(candidate.vertex_set);
    Ok((
        PyGraph { inner: gamma_prime },
        candidate.vertex_set.indices(),
        candidate.class_indices,
    ))
}

/// Class-index selections of all valid 6-class switching sets (out of 924).
#[pyfunction]
fn valid_switch_class_sets() -> Vec<Vec<usize>> {
    let construction = GammaConstruction::new();
    pipeline::find_switch_sets(&construction)
        .into_iter()
        .map(|c| c.class_indices)
        .collect()
}

/// Edge-type tally of the complement of Γ': (both_in_w, both_outside_w,
/// crossing, violations).
#[pyfunction]
fn classify_edges() -> PyResult<(usize, usize, usize, usize)> {
    let construction = GammaConstruction::new();
    let candidate = pipeline::canonical_switch_candidate(&construction)
        .ok_or_else(|| value_err("no valid switching set"))?;
    let gamma_prime = construction.graph().switch(candidate.vertex_set);
    let tally =
        pipeline::classify_complement_edges(&construction, &gamma_prime, candidate.vertex_set);
    Ok((
        tally.both_in_w,
        tally.both_outside_w,
        tally.crossing,
        tally.violations.len(),
    ))
}

/// Switching set Y with switch(g1, Y) == g2, if the graphs are switching
/// equivalent.
#[pyfunction]
fn switching_witness(g1: &PyGraph, g2: &PyGraph) -> PyResult<Option<Vec<usize>>> {
    Ok(g2srg::switching_witness(&g1.inner, &g2.inner)
        .map_err(value_err)?
        .map(|y| y.indices()))
}

/// (triple_count, regular_lambda) of the two-graph associated with g.
#[pyfunction]
fn two_graph_summary(g: &PyGraph) -> (usize, Option<usize>) {
    let tg = g2srg::associated_two_graph(&g.inner);
    (tg.triples().len(), tg.regularity())
}

/// Rank and subdegrees of the automorphism group acting on the graph.
#[pyfunction]
fn rank_and_subdegrees(group: &PyPermGroup, g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let info = aut::rank_and_subdegrees(&group.inner, &g.inner).map_err(value_err)?;
    Ok((info.rank, info.subdegrees))
}

/// Runs the full verification; returns (passed, report_json).
#[pyfunction]
#[pyo3(signature = (seed=None))]
fn verify(seed: Option<u64>) -> (bool, String) {
    let options = g2srg::VerifyOptions {
        seed: seed.unwrap_or(g2srg::verify::DEFAULT_SEED),
    };
    let report = g2srg::run_full_verification(&options);
    (report.passed, report.to_json_string())
}

#[pymodule]
fn g2srg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPermGroup>()?;
    m.add_function(wrap_pyfunction!(build_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(v1_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_switch, m)?)?;
    m.add_function(wrap_pyfunction!(valid_switch_class_sets, m)?)?;
    m.add_function(wrap_pyfunction!(classify_edges, m)?)?;
    m.add_function(wrap_pyfunction!(switching_witness, m)?)?;
    m.add_function(wrap_pyfunction!(two_graph_summary, m)?)?;
    m.add_function(wrap_pyfunction!(rank_and_subdegrees, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
