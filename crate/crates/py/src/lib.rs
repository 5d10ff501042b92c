//! Python bindings for `rotkit`.
//!
//! Python lists are rotated through an index permutation: the algorithm runs
//! on the positions `0..n` and the result is gathered from the input, so the
//! counters are those of a real run while the elements stay untouched
//! Python objects.

use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyList};

use rotkit::bench::{self, AmountPolicy, SweepConfig};
use rotkit::modular;
use rotkit::verify::{self, CheckError};
use rotkit::Algorithm;

create_exception!(pyrotkit, InvariantViolation, pyo3::exceptions::PyException);

fn value_error(err: rotkit::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn algorithm(name: &str) -> PyResult<Algorithm> {
    name.parse().map_err(value_error)
}

/// Operation tallies of one rotation.
#[pyclass(name = "Counters", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCounters {
    #[pyo3(get)]
    reads: u64,
    #[pyo3(get)]
    writes: u64,
    #[pyo3(get)]
    swaps: u64,
    #[pyo3(get)]
    aux_peak: u64,
    #[pyo3(get)]
    depth_max: u64,
}

impl From<rotkit::Counters> for PyCounters {
    fn from(c: rotkit::Counters) -> Self {
        PyCounters { reads: c.reads, writes: c.writes, swaps: c.swaps, aux_peak: c.aux_peak, depth_max: c.depth_max }
    }
}

#[pymethods]
impl PyCounters {
    fn __repr__(&self) -> String {
        format!(
            "Counters(reads={}, writes={}, swaps={}, aux_peak={}, depth_max={})",
            self.reads, self.writes, self.swaps, self.aux_peak, self.depth_max
        )
    }
}

/// Cycle structure of the index map followed by the modular visit.
#[pyclass(name = "CycleDecomposition", frozen)]
struct PyCycleDecomposition(modular::CycleDecomposition);

#[pymethods]
impl PyCycleDecomposition {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn step(&self) -> usize {
        self.0.step
    }

    #[getter]
    fn g(&self) -> usize {
        self.0.g
    }

    #[getter]
    fn tau(&self) -> usize {
        self.0.tau
    }

    #[getter]
    fn starts(&self) -> Vec<usize> {
        self.0.starts.clone()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0.cycles().collect()
    }

    fn __repr__(&self) -> String {
        format!("CycleDecomposition(n={}, step={}, g={}, tau={})", self.0.n, self.0.step, self.0.g, self.0.tau)
    }
}

/// Outcome of a brute-force lemma check.
#[pyclass(name = "LemmaReport", frozen)]
struct PyLemmaReport(verify::LemmaReport);

#[pymethods]
impl PyLemmaReport {
    #[getter]
    fn lemma(&self) -> &'static str {
        self.0.lemma.name()
    }

    #[getter]
    fn domain_bound(&self) -> usize {
        self.0.domain_bound
    }

    #[getter]
    fn cases(&self) -> u64 {
        self.0.cases
    }

    #[getter]
    fn skipped(&self) -> u64 {
        self.0.skipped
    }

    /// Falsifying instances as `(input, expected, actual)` strings.
    #[getter]
    fn failures(&self) -> Vec<(String, String, String)> {
        self.0.failures.iter().map(|f| (f.input.clone(), f.expected.clone(), f.actual.clone())).collect()
    }

    fn passed(&self) -> bool {
        self.0.passed()
    }

    fn __str__(&self) -> String {
        format!("{:#}", self.0)
    }

    fn __repr__(&self) -> String {
        format!("<LemmaReport {}>", self.0)
    }
}

/// One `(algorithm, n, r)` benchmark measurement.
#[pyclass(name = "BenchRecord", frozen, get_all)]
struct PyBenchRecord {
    algorithm: &'static str,
    n: usize,
    r: usize,
    elapsed_ns: u64,
    reads: u64,
    writes: u64,
    swaps: u64,
    aux_peak: u64,
    depth_max: u64,
    repetitions: usize,
}

impl From<bench::BenchRecord> for PyBenchRecord {
    fn from(rec: bench::BenchRecord) -> Self {
        PyBenchRecord {
            algorithm: rec.algorithm.name(),
            n: rec.n,
            r: rec.r,
            elapsed_ns: rec.elapsed_ns,
            reads: rec.reads,
            writes: rec.writes,
            swaps: rec.swaps,
            aux_peak: rec.aux_peak,
            depth_max: rec.depth_max,
            repetitions: rec.repetitions,
        }
    }
}

/// Names of all algorithms, in the order `rotate` accepts them.
#[pyfunction]
fn algorithms() -> Vec<&'static str> {
    Algorithm::ALL.iter().map(|a| a.name()).collect()
}

/// Left rotation amount in `[0, n)` equivalent to `amount`.
#[pyfunction]
fn normalize(amount: i64, n: usize) -> usize {
    rotkit::normalize(amount, n).r_left
}

/// Rotates a list or bytes object left by `amount` (any integer) and returns
/// `(rotated, counters)`. The input is not modified.
#[pyfunction]
#[pyo3(signature = (seq, amount, algorithm = "swap"))]
fn rotate<'py>(
    py: Python<'py>,
    seq: &Bound<'py, PyAny>,
    amount: i64,
    algorithm: &str,
) -> PyResult<(Bound<'py, PyAny>, PyCounters)> {
    let alg = self::algorithm(algorithm)?;
    let mut counters = rotkit::Counters::default();
    if let Ok(bytes) = seq.cast::<PyBytes>() {
        let mut buf = bytes.as_bytes().to_vec();
        py.detach(|| rotkit::rotate(&mut buf, amount, alg, &mut counters)).map_err(value_error)?;
        return Ok((PyBytes::new(py, &buf).into_any(), counters.into()));
    }
    if let Ok(list) = seq.cast::<PyList>() {
        let mut positions: Vec<usize> = (0..list.len()).collect();
        py.detach(|| rotkit::rotate(&mut positions, amount, alg, &mut counters)).map_err(value_error)?;
        let items = positions.into_iter().map(|i| list.get_item(i)).collect::<PyResult<Vec<_>>>()?;
        return Ok((PyList::new(py, items)?.into_any(), counters.into()));
    }
    Err(PyTypeError::new_err("rotate expects a list or bytes"))
}

/// Reference rotation of a list by slicing, for cross-checking.
#[pyfunction]
fn oracle_rotate<'py>(py: Python<'py>, seq: &Bound<'py, PyList>, amount: i64) -> PyResult<Bound<'py, PyList>> {
    let positions: Vec<usize> = (0..seq.len()).collect();
    let order = verify::oracle_rotate(&positions, amount);
    PyList::new(py, order.into_iter().map(|i| seq.get_item(i)).collect::<PyResult<Vec<_>>>()?)
}

/// Rotates a list of integers left by `r` with every loop invariant checked.
/// Returns `(rotated, counters)`; raises `InvariantViolation` on failure.
#[pyfunction]
fn run_checked(algorithm: &str, seq: Vec<i64>, r: usize) -> PyResult<(Vec<i64>, PyCounters)> {
    let alg = self::algorithm(algorithm)?;
    let mut buf = seq;
    match verify::run_checked(alg, &mut buf, r) {
        Ok(counters) => Ok((buf, counters.into())),
        Err(CheckError::Violation(v)) => Err(InvariantViolation::new_err(v.to_string())),
        Err(CheckError::Rejected(e)) => Err(value_error(e)),
    }
}

#[pyfunction]
fn wrap(x: usize, y: usize) -> PyResult<usize> {
    modular::wrap(x, y).map_err(value_error)
}

#[pyfunction]
fn gcd(x: usize, y: usize) -> PyResult<usize> {
    modular::gcd_sub(x, y).map_err(value_error)
}

#[pyfunction]
fn tau(n: usize, m: usize) -> PyResult<usize> {
    modular::tau(n, m).map_err(value_error)
}

#[pyfunction]
fn mp(n: usize, m: usize, s: usize, k: usize) -> PyResult<usize> {
    modular::mp(n, m, s, k).map_err(value_error)
}

#[pyfunction]
fn invert_mp(n: usize, m: usize, k: usize) -> PyResult<(usize, usize)> {
    modular::invert_mp(n, m, k).map_err(value_error)
}

#[pyfunction]
fn dest_index(k: usize, n: usize, r: usize) -> PyResult<usize> {
    modular::dest_index(k, n, r).map_err(value_error)
}

#[pyfunction]
fn src_index(k: usize, n: usize, r: usize) -> PyResult<usize> {
    modular::src_index(k, n, r).map_err(value_error)
}

#[pyfunction]
fn decompose(n: usize, r: usize) -> PyResult<PyCycleDecomposition> {
    modular::decompose(n, r).map(PyCycleDecomposition).map_err(value_error)
}

#[pyfunction]
fn check_lemma_rev_cat(max_len: usize) -> PyLemmaReport {
    PyLemmaReport(verify::check_lemma_rev_cat(max_len))
}

#[pyfunction]
fn check_lemma_rot_swap(max_len: usize) -> (PyLemmaReport, PyLemmaReport) {
    let (left, right) = verify::check_lemma_rot_swap(max_len);
    (PyLemmaReport(left), PyLemmaReport(right))
}

#[pyfunction]
fn check_lemma_invert_mp(max_n: usize) -> PyLemmaReport {
    PyLemmaReport(verify::check_lemma_invert_mp(max_n))
}

#[pyfunction]
fn check_rot_pointwise(max_n: usize) -> PyLemmaReport {
    PyLemmaReport(verify::check_rot_pointwise(max_n))
}

#[pyfunction]
fn check_wrap_bounds(max: usize) -> PyLemmaReport {
    PyLemmaReport(verify::check_wrap_bounds(max))
}

/// Runs a benchmark sweep. `rs` is `"all"`, `"sample:K"` or a list of amounts.
/// Raises `ValueError` if any counter identity fails.
#[pyfunction]
#[pyo3(signature = (sizes, algorithms = None, rs = None, seed = 0, repetitions = 1))]
fn sweep(
    py: Python<'_>,
    sizes: Vec<usize>,
    algorithms: Option<Vec<String>>,
    rs: Option<&Bound<'_, PyAny>>,
    seed: u64,
    repetitions: usize,
) -> PyResult<Vec<PyBenchRecord>> {
    let algorithms = match algorithms {
        None => Algorithm::BENCHMARKED.to_vec(),
        Some(names) => names.iter().map(|n| algorithm(n)).collect::<PyResult<_>>()?,
    };
    let amounts = match rs {
        None => AmountPolicy::All,
        Some(spec) => match spec.extract::<String>() {
            Ok(s) if s == "all" => AmountPolicy::All,
            Ok(s) => match s.strip_prefix("sample:").and_then(|k| k.parse().ok()) {
                Some(k) => AmountPolicy::Sample(k),
                None => return Err(PyValueError::new_err(format!("unrecognised amount policy `{s}`"))),
            },
            Err(_) => AmountPolicy::Fixed(spec.extract()?),
        },
    };
    let config = SweepConfig { sizes, amounts, algorithms, seed, repetitions, parallel: false };
    let outcome = py.detach(|| bench::sweep(&config)).map_err(value_error)?;
    if let Err(found) = bench::verify_counters(&outcome.records) {
        return Err(PyValueError::new_err(format!("{} counter identities failed, first: {}", found.len(), found[0])));
    }
    Ok(outcome.records.into_iter().map(PyBenchRecord::from).collect())
}

#[pymodule]
fn pyrotkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCounters>()?;
    m.add_class::<PyCycleDecomposition>()?;
    m.add_class::<PyLemmaReport>()?;
    m.add_class::<PyBenchRecord>()?;
    m.add("InvariantViolation", m.py().get_type::<InvariantViolation>())?;
    m.add_function(wrap_pyfunction!(algorithms, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(rotate, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_rotate, m)?)?;
    m.add_function(wrap_pyfunction!(run_checked, m)?)?;
    m.add_function(wrap_pyfunction!(wrap, m)?)?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(mp, m)?)?;
    m.add_function(wrap_pyfunction!(invert_mp, m)?)?;
    m.add_function(wrap_pyfunction!(dest_index, m)?)?;
    m.add_function(wrap_pyfunction!(src_index, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma_rev_cat, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma_rot_swap, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma_invert_mp, m)?)?;
    m.add_function(wrap_pyfunction!(check_rot_pointwise, m)?)?;
    m.add_function(wrap_pyfunction!(check_wrap_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
