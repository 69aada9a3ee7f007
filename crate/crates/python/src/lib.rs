//! Python bindings. Words may be passed as `Word` objects or as `L`/`R`
//! strings (`"e"` for the empty word); sets come back as shortlex-sorted lists
//! of strings and rationals as `"p/q"` strings.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::basic::CompareOp;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use efforce::rational::{parse_rational, to_display_string, to_fraction_string};
use efforce::{Letter, Method, PatternSet, Word};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word_arg(obj: &Bound<'_, PyAny>) -> PyResult<Word> {
    if let Ok(w) = obj.extract::<PyRef<'_, PyWord>>() {
        return Ok(w.0.clone());
    }
    let text: String = obj.extract()?;
    Word::parse(&text).map_err(value_err)
}

fn letter_arg(text: &str) -> PyResult<Letter> {
    let mut chars = text.chars();
    match (chars.next().and_then(Letter::from_char), chars.next()) {
        (Some(l), None) => Ok(l),
        _ => Err(PyValueError::new_err(format!("expected 'L' or 'R', got {text:?}"))),
    }
}

fn method_arg(text: &str) -> PyResult<Method> {
    text.parse().map_err(value_err)
}

fn strings(s: &PatternSet) -> Vec<String> {
    s.to_strings()
}

fn set_arg(words: Vec<String>) -> PyResult<PatternSet> {
    words
        .iter()
        .map(|t| Word::parse(t).map_err(value_err))
        .collect()
}

#[pyclass(name = "Word", module = "efforce", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyWord(Word);

#[pymethods]
impl PyWord {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Word::parse(text).map(PyWord).map_err(value_err)
    }

    fn tails(&self) -> Vec<PyWord> {
        self.0.tails().into_iter().map(PyWord).collect()
    }

    fn dual(&self) -> PyWord {
        PyWord(self.0.dual())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}')", self.0)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    /// Shortlex comparison.
    fn __richcmp__(&self, other: &Bound<'_, PyAny>, op: CompareOp) -> PyResult<bool> {
        let other = word_arg(other)?;
        Ok(op.matches(self.0.cmp(&other)))
    }
}

#[pyclass(name = "PlMap", module = "efforce", frozen)]
struct PyPlMap(efforce::PlMap);

#[pymethods]
impl PyPlMap {
    /// Builds a map from `(x, y)` pairs of rational strings.
    #[new]
    fn new(breakpoints: Vec<(String, String)>) -> PyResult<Self> {
        let pairs = breakpoints
            .iter()
            .map(|(x, y)| Ok((parse_rational(x).map_err(value_err)?, parse_rational(y).map_err(value_err)?)))
            .collect::<PyResult<Vec<_>>>()?;
        efforce::PlMap::new(pairs).map(PyPlMap).map_err(value_err)
    }

    /// The canonical interpolant realizing `word`.
    #[staticmethod]
    fn canonical(word: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyPlMap(efforce::canonical_map(&word_arg(word)?)))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        efforce::PlMap::from_json(text).map(PyPlMap).map_err(value_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn domain(&self) -> (String, String) {
        let (lo, hi) = self.0.domain();
        (to_fraction_string(lo), to_fraction_string(hi))
    }

    fn breakpoints(&self) -> Vec<(String, String)> {
        self.0
            .breakpoints()
            .map(|(x, y)| (to_fraction_string(x), to_fraction_string(y)))
            .collect()
    }

    fn eval(&self, x: &str) -> PyResult<String> {
        let x = parse_rational(x).map_err(value_err)?;
        self.0.eval(&x).map(|y| to_fraction_string(&y)).map_err(value_err)
    }

    fn tag_of_point(&self, x: &str, max_steps: usize) -> PyResult<String> {
        let x = parse_rational(x).map_err(value_err)?;
        efforce::tag_of_point(&self.0, &x, max_steps)
            .map(|w| w.to_string())
            .map_err(value_err)
    }

    /// Returns a dict with `tags`, `partition_points`, `depth_bound` and
    /// `bands` (each band as `(lo, hi, lo_closed, hi_closed, tag)`).
    fn enumerate_tags<'py>(&self, py: Python<'py>, depth: usize) -> PyResult<Bound<'py, PyDict>> {
        let e = efforce::enumerate_tags(&self.0, depth).map_err(value_err)?;
        let out = PyDict::new(py);
        out.set_item("tags", strings(&e.tags))?;
        out.set_item(
            "partition_points",
            e.partition_points.iter().map(to_fraction_string).collect::<Vec<_>>(),
        )?;
        out.set_item("depth_bound", e.depth_bound)?;
        let bands: Vec<(String, String, bool, bool, String)> = e
            .bands
            .iter()
            .map(|b| {
                (
                    to_fraction_string(&b.lo),
                    to_fraction_string(&b.hi),
                    b.lo_closed,
                    b.hi_closed,
                    b.tag.to_string(),
                )
            })
            .collect();
        out.set_item("bands", bands)?;
        Ok(out)
    }

    fn verify_collapse(&self, n: usize) -> bool {
        efforce::verify_collapse(&self.0, n)
    }

    fn __repr__(&self) -> String {
        let (lo, hi) = self.0.domain();
        format!(
            "PlMap(domain=[{}, {}], {} breakpoints)",
            to_display_string(lo),
            to_display_string(hi),
            self.0.len()
        )
    }
}

#[pyclass(name = "ForcingGraph", module = "efforce", frozen)]
struct PyForcingGraph(efforce::ForcingGraph);

#[pymethods]
impl PyForcingGraph {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        efforce::ForcingGraph::from_json(text)
            .map(PyForcingGraph)
            .map_err(value_err)
    }

    #[getter]
    fn max_len(&self) -> usize {
        self.0.max_len
    }

    #[getter]
    fn method(&self) -> &'static str {
        self.0.method.name()
    }

    #[getter]
    fn nodes(&self) -> Vec<String> {
        self.0.nodes.iter().map(Word::to_string).collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        self.0
            .edges
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn successors(&self, w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
        let w = word_arg(w)?;
        Ok(self.0.successors(&w).map(Word::to_string).collect())
    }

    fn hasse(&self) -> PyResult<PyForcingGraph> {
        efforce::hasse(&self.0).map(PyForcingGraph).map_err(value_err)
    }

    fn to_dot(&self) -> String {
        self.0.to_dot()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "ForcingGraph(max_len={}, method='{}', {} nodes, {} edges)",
            self.0.max_len,
            self.0.method,
            self.0.nodes.len(),
            self.0.edges.len()
        )
    }
}

#[pyfunction]
fn one_step_reductions(w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    Ok(strings(&efforce::one_step_reductions(&word_arg(w)?)))
}

#[pyfunction]
fn reduction_closure(w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    Ok(strings(&efforce::reduction_closure(&word_arg(w)?)))
}

#[pyfunction]
fn derivable_set(w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    Ok(strings(&efforce::derivable_set(&word_arg(w)?)))
}

#[pyfunction]
fn is_derivable(w: &Bound<'_, PyAny>, u: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(efforce::is_derivable(&word_arg(w)?, &word_arg(u)?))
}

/// A witness derivation as `(step, produced word)` pairs, or `None`.
#[pyfunction]
fn derivation_witness(
    w: &Bound<'_, PyAny>,
    u: &Bound<'_, PyAny>,
) -> PyResult<Option<Vec<(String, String)>>> {
    Ok(
        efforce::derivation_witness(&word_arg(w)?, &word_arg(u)?).map(|d| {
            d.steps
                .iter()
                .map(|(step, produced)| (step.to_string(), produced.to_string()))
                .collect()
        }),
    )
}

#[pyfunction]
fn construct_language(w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    Ok(strings(&efforce::construct_language(&word_arg(w)?)))
}

#[pyfunction]
fn extend_language(letter: &str, w: &Bound<'_, PyAny>, lang: Vec<String>) -> PyResult<Vec<String>> {
    let extended = efforce::extend_language(letter_arg(letter)?, &word_arg(w)?, &set_arg(lang)?)
        .map_err(value_err)?;
    Ok(strings(&extended))
}

#[pyfunction]
fn canonical_orbit(w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    Ok(efforce::canonical_orbit(&word_arg(w)?)
        .points()
        .iter()
        .map(to_fraction_string)
        .collect())
}

#[pyfunction]
fn forced_set_via_realization(w: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    efforce::forced_set_via_realization(&word_arg(w)?)
        .map(|s| strings(&s))
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (w, method = "derive"))]
fn forced_set(w: &Bound<'_, PyAny>, method: &str) -> PyResult<Vec<String>> {
    efforce::forced_set(&word_arg(w)?, method_arg(method)?)
        .map(|s| strings(&s))
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (max_len, method = "derive"))]
fn forcing_graph(max_len: usize, method: &str) -> PyResult<PyForcingGraph> {
    efforce::forcing_graph(max_len, method_arg(method)?)
        .map(PyForcingGraph)
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (max_len, method = "derive"))]
fn hasse(max_len: usize, method: &str) -> PyResult<PyForcingGraph> {
    let g = efforce::forcing_graph(max_len, method_arg(method)?).map_err(value_err)?;
    efforce::hasse(&g).map(PyForcingGraph).map_err(value_err)
}

#[pymodule]
#[pyo3(name = "efforce")]
fn efforce_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyPlMap>()?;
    m.add_class::<PyForcingGraph>()?;
    m.add_function(wrap_pyfunction!(one_step_reductions, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_closure, m)?)?;
    m.add_function(wrap_pyfunction!(derivable_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_derivable, m)?)?;
    m.add_function(wrap_pyfunction!(derivation_witness, m)?)?;
    m.add_function(wrap_pyfunction!(construct_language, m)?)?;
    m.add_function(wrap_pyfunction!(extend_language, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(forced_set_via_realization, m)?)?;
    m.add_function(wrap_pyfunction!(forced_set, m)?)?;
    m.add_function(wrap_pyfunction!(forcing_graph, m)?)?;
    m.add_function(wrap_pyfunction!(hasse, m)?)?;
    Ok(())
}
