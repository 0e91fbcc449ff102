//! Python bindings for the lrembed library.

use lrembed::engine::{height_sequence_of, realize_pole, tableau_of_embedding};
use lrembed::partition::Partition;
use lrembed::pmap::{enumerate_partial_maps, equivalence_classes};
use lrembed::pole::{count_endo_submodules, tableau_of_cyclic, CyclicType, HeightSequence};
use lrembed::poset::{build_boundary_poset, emit_hasse_dot};
use lrembed::tableau::LRTableau;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A tableau, stored as its chain of nested partitions.
#[pyclass(name = "Tableau", skip_from_py_object)]
#[derive(Clone)]
struct PyTableau {
    inner: LRTableau,
}

#[pymethods]
impl PyTableau {
    /// Validates a chain of partitions as a tableau.
    #[staticmethod]
    fn from_chain(chain: Vec<Vec<usize>>) -> PyResult<Self> {
        let chain: Result<Vec<Partition>, _> = chain.into_iter().map(Partition::new).collect();
        let chain = chain.map_err(|e| PyValueError::new_err(e.to_string()))?;
        LRTableau::from_chain(chain)
            .map(|inner| PyTableau { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Reads a tableau off its entry grid (0 = empty box).
    #[staticmethod]
    fn from_grid(grid: Vec<Vec<usize>>) -> PyResult<Self> {
        LRTableau::from_grid(&grid)
            .map(|inner| PyTableau { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn chain(&self) -> Vec<Vec<usize>> {
        self.inner
            .chain()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    fn grid(&self) -> Vec<Vec<usize>> {
        self.inner.grid()
    }

    fn content(&self) -> Vec<usize> {
        self.inner.content().parts().to_vec()
    }

    fn outer(&self) -> Vec<usize> {
        self.inner.outer().parts().to_vec()
    }

    fn inner_shape(&self) -> Vec<usize> {
        self.inner.inner().parts().to_vec()
    }

    fn union(&self, other: &PyTableau) -> PyResult<Self> {
        self.inner
            .union(&other.inner)
            .map(|inner| PyTableau { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Column decomposition (e, f, n) triples when the tableau is a union of
    /// columns, else None.
    fn union_of_columns(&self) -> Option<Vec<(usize, usize, usize)>> {
        self.inner
            .is_union_of_columns()
            .map(|cols| cols.iter().map(|c| (c.e, c.f, c.n)).collect())
    }

    /// Equivalence classes of partial maps, each a dict with the class size,
    /// the empty box property flag, and the pole decomposition when it holds.
    fn partial_map_classes<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let maps = enumerate_partial_maps(&self.inner);
        let mut out = Vec::new();
        for members in equivalence_classes(&maps) {
            let rep = &maps[members[0]];
            let d = PyDict::new(py);
            d.set_item("size", members.len())?;
            d.set_item("ebp", rep.satisfies_ebp())?;
            if rep.satisfies_ebp() {
                let dec = rep.decomposition().expect("checked the property");
                let poles: Vec<Vec<usize>> =
                    dec.poles.iter().map(|h| h.heights().to_vec()).collect();
                d.set_item("poles", poles)?;
                d.set_item("empty", dec.empty_parts.parts().to_vec())?;
            }
            out.push(d);
        }
        Ok(out)
    }

    fn __eq__(&self, other: &PyTableau) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// Transpose of the Young diagram.
#[pyfunction]
fn conjugate(parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

/// Dominance order with equal weights required.
#[pyfunction]
fn dominance_leq(a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
    Ok(partition(a)?.dominance_leq(&partition(b)?))
}

/// All tableaux of shape beta \ gamma and content alpha, in a deterministic
/// order.
#[pyfunction]
fn enumerate_tableaux(
    alpha: Vec<usize>,
    beta: Vec<usize>,
    gamma: Vec<usize>,
) -> PyResult<Vec<PyTableau>> {
    let tabs =
        lrembed::tableau::enumerate_lr(&partition(alpha)?, &partition(beta)?, &partition(gamma)?)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(tabs.into_iter().map(|inner| PyTableau { inner }).collect())
}

/// The tableau of the pole with the given height sequence, plus empty blocks.
#[pyfunction]
#[pyo3(signature = (sequence, padding = vec![]))]
fn pole_tableau(sequence: Vec<usize>, padding: Vec<usize>) -> PyResult<PyTableau> {
    let pole = HeightSequence::new(sequence).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let cyclic = CyclicType {
        pole,
        padding: partition(padding)?,
    };
    Ok(PyTableau {
        inner: tableau_of_cyclic(&cyclic),
    })
}

/// Realizes the pole over F_p and reads the generator's height sequence back
/// from the matrices.
#[pyfunction]
#[pyo3(signature = (sequence, prime = 5))]
fn pole_roundtrip(sequence: Vec<usize>, prime: u32) -> PyResult<Vec<usize>> {
    let pole = HeightSequence::new(sequence).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let inst = realize_pole(&CyclicType::pole_only(pole), prime)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    match inst.generators().first() {
        Some(g) => Ok(height_sequence_of(inst.space(), g).heights().to_vec()),
        None => Ok(Vec::new()),
    }
}

/// The tableau of an explicit embedding, recomputed from ranks.
#[pyfunction]
fn embedding_tableau(
    prime: u32,
    beta: Vec<usize>,
    generators: Vec<Vec<u32>>,
) -> PyResult<PyTableau> {
    let space = lrembed::engine::ModuleSpace::new(prime, partition(beta)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let inst = lrembed::engine::EmbeddingInstance::new(space, generators)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyTableau {
        inner: tableau_of_embedding(&inst),
    })
}

/// Number of endomorphism submodules of the module with the given type.
#[pyfunction]
fn endo_submodule_count(beta: Vec<usize>) -> PyResult<u64> {
    Ok(count_endo_submodules(&partition(beta)?))
}

/// The boundary poset as (nodes, box edges, hasse edges); box edges are
/// certified by parameter sweeps when requested.
#[pyfunction]
#[pyo3(signature = (alpha, beta, gamma, certify = false, prime = 5))]
fn boundary_poset<'py>(
    py: Python<'py>,
    alpha: Vec<usize>,
    beta: Vec<usize>,
    gamma: Vec<usize>,
    certify: bool,
    prime: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let poset = build_boundary_poset(
        &partition(alpha)?,
        &partition(beta)?,
        &partition(gamma)?,
        certify,
        prime,
    )
    .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let d = PyDict::new(py);
    let nodes: Vec<PyTableau> = poset
        .nodes
        .iter()
        .map(|t| PyTableau { inner: t.clone() })
        .collect();
    d.set_item("nodes", nodes.into_pyobject(py)?)?;
    let box_edges: Vec<(usize, usize, bool)> = poset
        .box_edges()
        .map(|e| (e.from, e.to, e.certified))
        .collect();
    d.set_item("box_edges", box_edges)?;
    d.set_item("hasse_edges", poset.hasse_edges())?;
    Ok(d)
}

/// DOT rendering of the Hasse diagram for the shape.
#[pyfunction]
fn hasse_dot(alpha: Vec<usize>, beta: Vec<usize>, gamma: Vec<usize>) -> PyResult<String> {
    let poset = build_boundary_poset(
        &partition(alpha)?,
        &partition(beta)?,
        &partition(gamma)?,
        false,
        5,
    )
    .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(emit_hasse_dot(&poset))
}

#[pymodule(name = "lrembed")]
fn lrembed_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(dominance_leq, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(pole_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(pole_roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(embedding_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(endo_submodule_count, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_poset, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_dot, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
