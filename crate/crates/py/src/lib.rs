//! Python bindings: complexes, cohomology, Bocksteins, Stanley–Reisner data
//! and the exact linear algebra underneath.

use bockstein::cohomology as coh;
use bockstein::generators::{self, GeneratorSpec};
use bockstein::linalg;
use bockstein::stanley_reisner as sr;
use bockstein::{Face, IntegerMatrix, SimplicialComplex};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn faces(list: &[Face]) -> Vec<Vec<u32>> {
    list.iter().map(|f| f.vertices().to_vec()).collect()
}

fn matrix(rows: Vec<Vec<BigInt>>, cols: Option<usize>) -> PyResult<IntegerMatrix> {
    let cols = cols.or_else(|| rows.first().map(Vec::len)).unwrap_or(0);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(value_error(format!("every row must have {cols} entries")));
    }
    let r = rows.len();
    IntegerMatrix::new(r, cols, rows.into_iter().flatten().collect()).map_err(value_error)
}

#[pyclass(frozen, eq, name = "SimplicialComplex", module = "bockstein_py")]
#[derive(PartialEq)]
struct PyComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PyComplex {
    /// Complex on vertices 1..=n generated by `facets`; `[]` is the void complex, `[[]]` the irrelevant one.
    #[new]
    fn new(n: u32, facets: Vec<Vec<u32>>) -> PyResult<Self> {
        let inner = SimplicialComplex::from_facets(n, &facets).map_err(value_error)?;
        Ok(PyComplex { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(value_error)?;
        Ok(PyComplex { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("complexes serialize")
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn dim(&self) -> i32 {
        self.inner.dim()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<u32>> {
        faces(self.inner.facets())
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().name()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.inner.f_vector()
    }

    fn faces(&self, d: i32) -> Vec<Vec<u32>> {
        faces(self.inner.faces(d))
    }

    fn link(&self, tau: Vec<u32>) -> Self {
        PyComplex {
            inner: self.inner.link(&Face::new(tau)),
        }
    }

    fn minimal_nonfaces(&self) -> PyResult<Vec<Vec<u32>>> {
        Ok(faces(&self.inner.minimal_nonfaces().map_err(value_error)?))
    }

    /// Rows indexed by (k+1)-faces, columns by k-faces.
    fn coboundary_matrix(&self, k: i32) -> Vec<Vec<BigInt>> {
        self.inner.coboundary_matrix(k).to_rows()
    }

    fn __contains__(&self, face: Vec<u32>) -> bool {
        self.inner.contains(&Face::new(face))
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(n={}, dim={}, facets={})",
            self.inner.n(),
            self.inner.dim(),
            self.inner.facets().len()
        )
    }
}

#[pyclass(frozen, get_all, name = "IntCohomology", module = "bockstein_py")]
struct PyIntCohomology {
    degree: i32,
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

#[pymethods]
impl PyIntCohomology {
    fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    fn __str__(&self) -> String {
        coh::IntCohomology {
            degree: self.degree,
            free_rank: self.free_rank,
            invariant_factors: self.invariant_factors.clone(),
        }
        .to_string()
    }
}

#[pyclass(frozen, get_all, name = "ModCohomology", module = "bockstein_py")]
struct PyModCohomology {
    degree: i32,
    modulus: u64,
    orders: Vec<u64>,
    /// Cocycle representatives, one per cyclic summand.
    generators: Vec<Vec<BigInt>>,
}

#[pymethods]
impl PyModCohomology {
    fn dimension(&self) -> usize {
        self.orders.len()
    }
}

#[pyclass(frozen, get_all, name = "BocksteinMap", module = "bockstein_py")]
struct PyBocksteinMap {
    modulus: u64,
    degree: i32,
    source_orders: Vec<u64>,
    target_orders: Vec<u64>,
    matrix: Vec<Vec<u64>>,
    is_zero: bool,
    rank: Option<usize>,
    source_generators: Vec<Vec<BigInt>>,
    images: Vec<Vec<BigInt>>,
}

#[pyclass(
    frozen,
    get_all,
    name = "LocalBocksteinReport",
    module = "bockstein_py"
)]
struct PyLocalReport {
    k: i32,
    modulus: u64,
    is_zero: bool,
    /// `(tau, link_degree)` pairs.
    witnesses: Vec<(Vec<u32>, i32)>,
    unproved_analogue: bool,
    json: String,
}

#[pymethods]
impl PyLocalReport {
    fn to_json(&self) -> String {
        self.json.clone()
    }
}

#[pyclass(frozen, get_all, name = "HochsterEntry", module = "bockstein_py")]
struct PyHochsterEntry {
    tau: Vec<u32>,
    link_degree: i32,
    orders: Vec<u64>,
}

impl From<sr::HochsterEntry> for PyHochsterEntry {
    fn from(e: sr::HochsterEntry) -> Self {
        PyHochsterEntry {
            tau: e.tau.vertices().to_vec(),
            link_degree: e.link_degree,
            orders: e.orders,
        }
    }
}

#[pymethods]
impl PyHochsterEntry {
    fn dimension(&self) -> usize {
        self.orders.len()
    }
}

/// `left · A · right = diag(diagonal)` with unimodular `left`, `right`.
#[pyclass(frozen, get_all, name = "SmithNormalForm", module = "bockstein_py")]
struct PySnf {
    diagonal: Vec<BigInt>,
    left: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
    left_inverse: Vec<Vec<BigInt>>,
    right_inverse: Vec<Vec<BigInt>>,
}

#[pyfunction]
fn integral_cohomology(complex: &PyComplex, k: i32) -> PyIntCohomology {
    let h = coh::integral_cohomology(&complex.inner, k);
    PyIntCohomology {
        degree: h.degree,
        free_rank: h.free_rank,
        invariant_factors: h.invariant_factors,
    }
}

#[pyfunction]
fn mod_cohomology(complex: &PyComplex, k: i32, l: u64) -> PyResult<PyModCohomology> {
    let h = coh::mod_cohomology(&complex.inner, k, l).map_err(value_error)?;
    Ok(PyModCohomology {
        degree: h.degree,
        modulus: h.modulus,
        orders: h.orders,
        generators: h.generators,
    })
}

#[pyfunction]
#[pyo3(name = "bockstein")]
fn bockstein_map(complex: &PyComplex, k: i32, l: u64) -> PyResult<PyBocksteinMap> {
    let b = coh::bockstein(&complex.inner, k, l).map_err(value_error)?;
    Ok(PyBocksteinMap {
        modulus: b.modulus,
        degree: b.degree,
        source_orders: b.source_orders,
        target_orders: b.target_orders,
        matrix: b.matrix,
        is_zero: b.is_zero,
        rank: b.rank,
        source_generators: b.source_generators,
        images: b.images,
    })
}

#[pyfunction]
fn local_bockstein_is_zero(complex: &PyComplex, l: u64, k: i32) -> PyResult<PyLocalReport> {
    let r = sr::local_bockstein_is_zero(&complex.inner, l, k).map_err(value_error)?;
    Ok(PyLocalReport {
        json: serde_json::to_string(&r).map_err(value_error)?,
        k: r.k,
        modulus: r.modulus,
        is_zero: r.is_zero,
        witnesses: r
            .witnesses
            .iter()
            .map(|w| (w.tau.vertices().to_vec(), w.link_degree))
            .collect(),
        unproved_analogue: r.unproved_analogue,
    })
}

/// Minimal non-faces, i.e. the generators of the Stanley–Reisner ideal.
#[pyfunction]
fn sr_ideal(complex: &PyComplex) -> PyResult<Vec<Vec<u32>>> {
    Ok(faces(
        &sr::sr_ideal(&complex.inner)
            .map_err(value_error)?
            .generators,
    ))
}

#[pyfunction]
fn hochster_dimension(
    complex: &PyComplex,
    l: u64,
    k: i32,
    tau: Vec<u32>,
) -> PyResult<PyHochsterEntry> {
    sr::hochster_dimension(&complex.inner, l, k, &Face::new(tau))
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn hochster_table(complex: &PyComplex, l: u64, k: i32) -> PyResult<Vec<PyHochsterEntry>> {
    let table = sr::hochster_table(&complex.inner, l, k).map_err(value_error)?;
    Ok(table.rows.into_iter().map(Into::into).collect())
}

#[pyfunction]
#[pyo3(signature = (complex, k, prime_bound = None))]
fn bockstein_prime_sweep(
    complex: &PyComplex,
    k: i32,
    prime_bound: Option<u64>,
) -> PyResult<Vec<u64>> {
    let primes =
        sr::bockstein_prime_sweep_bounded(&complex.inner, k, prime_bound).map_err(value_error)?;
    Ok(primes.into_iter().collect())
}

/// Build a complex from a spec such as `rp2`, `dunce:4` or `random:8,2,0.5,42`.
#[pyfunction]
fn generate(spec: &str) -> PyResult<PyComplex> {
    let spec: GeneratorSpec = spec.parse().map_err(value_error)?;
    Ok(PyComplex {
        inner: spec.build().map_err(value_error)?.complex,
    })
}

#[pyfunction]
fn rp2() -> PyComplex {
    PyComplex {
        inner: generators::rp2_six_vertex(),
    }
}

#[pyfunction]
#[pyo3(signature = (m, q = None))]
fn dunce_cap(m: u32, q: Option<u32>) -> PyResult<PyComplex> {
    Ok(PyComplex {
        inner: generators::dunce_cap(m, q).map_err(value_error)?.complex,
    })
}

#[pyfunction]
fn random_complex(n: u32, d: u32, density: f64, seed: u64) -> PyResult<PyComplex> {
    Ok(PyComplex {
        inner: generators::random_complex(n, d, density, seed).map_err(value_error)?,
    })
}

#[pyfunction]
#[pyo3(signature = (rows, cols = None))]
fn smith_normal_form(rows: Vec<Vec<BigInt>>, cols: Option<usize>) -> PyResult<PySnf> {
    let s = linalg::snf(&matrix(rows, cols)?);
    Ok(PySnf {
        diagonal: s.diagonal.clone(),
        left: s.left.to_rows(),
        right: s.right.to_rows(),
        left_inverse: s.left_inverse.to_rows(),
        right_inverse: s.right_inverse.to_rows(),
    })
}

#[pyfunction]
#[pyo3(signature = (rows, l, cols = None))]
fn kernel_mod(rows: Vec<Vec<BigInt>>, l: u64, cols: Option<usize>) -> PyResult<Vec<Vec<BigInt>>> {
    linalg::kernel_mod(&matrix(rows, cols)?, l).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (rows, b, l, cols = None))]
fn solve_mod(
    rows: Vec<Vec<BigInt>>,
    b: Vec<BigInt>,
    l: u64,
    cols: Option<usize>,
) -> PyResult<Option<Vec<BigInt>>> {
    linalg::solve_mod(&matrix(rows, cols)?, &b, l).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (rows, p, cols = None))]
fn rank_mod_p(rows: Vec<Vec<BigInt>>, p: u64, cols: Option<usize>) -> PyResult<usize> {
    linalg::rank_mod_p(&matrix(rows, cols)?, p).map_err(value_error)
}

#[pymodule]
pub fn bockstein_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyIntCohomology>()?;
    m.add_class::<PyModCohomology>()?;
    m.add_class::<PyBocksteinMap>()?;
    m.add_class::<PyLocalReport>()?;
    m.add_class::<PyHochsterEntry>()?;
    m.add_class::<PySnf>()?;
    m.add_function(wrap_pyfunction!(integral_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(mod_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(bockstein_map, m)?)?;
    m.add_function(wrap_pyfunction!(local_bockstein_is_zero, m)?)?;
    m.add_function(wrap_pyfunction!(sr_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(hochster_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(hochster_table, m)?)?;
    m.add_function(wrap_pyfunction!(bockstein_prime_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(rp2, m)?)?;
    m.add_function(wrap_pyfunction!(dunce_cap, m)?)?;
    m.add_function(wrap_pyfunction!(random_complex, m)?)?;
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_mod, m)?)?;
    m.add_function(wrap_pyfunction!(solve_mod, m)?)?;
    m.add_function(wrap_pyfunction!(rank_mod_p, m)?)?;
    Ok(())
}
