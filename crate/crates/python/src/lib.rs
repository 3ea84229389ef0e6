//! Python bindings. Words are accepted either as `Word` objects or as strings
//! in the letter or caret notation; every library error is raised as
//! `HandlebodyError` with the error name as prefix.

use handlebody::heegaard_graph::HGraph;
use handlebody::primitivity::{self, CmzForm};
use handlebody::rr_diagram::{self, RRDiagram};
use handlebody::{classifier, oracle, CanonicalParams};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(pyhandlebody, HandlebodyError, PyValueError);

fn py_err(e: handlebody::Error) -> PyErr {
    HandlebodyError::new_err(format!("{}: {e}", e.name()))
}

#[pyclass(name = "Word", module = "pyhandlebody", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyWord(handlebody::Word);

#[derive(FromPyObject)]
enum WordArg {
    Word(PyWord),
    Text(String),
}

impl WordArg {
    fn into_word(self) -> PyResult<handlebody::Word> {
        match self {
            WordArg::Word(w) => Ok(w.0),
            WordArg::Text(s) => s.parse().map_err(py_err),
        }
    }
}

#[pymethods]
impl PyWord {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyWord).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}')", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __mul__(&self, other: WordArg) -> PyResult<PyWord> {
        Ok(PyWord(self.0.multiply(&other.into_word()?)))
    }

    fn __pow__(&self, k: i64, _modulo: Option<i64>) -> PyWord {
        PyWord(self.0.pow(k))
    }

    fn inverse(&self) -> PyWord {
        PyWord(self.0.inverse())
    }

    fn abelianize(&self) -> (i64, i64) {
        self.0.abelianize()
    }

    /// Canonical cyclic word of the conjugacy class.
    fn cyclic(&self) -> String {
        self.0.cyclic_reduce().0.to_string()
    }

    fn is_primitive(&self) -> bool {
        primitivity::is_primitive(&self.0)
    }
}

#[pyclass(name = "Automorphism", module = "pyhandlebody", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyAutomorphism(handlebody::Automorphism);

#[pymethods]
impl PyAutomorphism {
    /// The automorphism sending A and B to the given images.
    #[new]
    fn new(image_a: WordArg, image_b: WordArg) -> PyResult<Self> {
        handlebody::Automorphism::new(image_a.into_word()?, image_b.into_word()?)
            .map(PyAutomorphism)
            .map_err(py_err)
    }

    #[staticmethod]
    fn nielsen_generators() -> Vec<PyAutomorphism> {
        handlebody::nielsen_generators().into_iter().map(PyAutomorphism).collect()
    }

    #[getter]
    fn image_a(&self) -> PyWord {
        PyWord(self.0.image_a().clone())
    }

    #[getter]
    fn image_b(&self) -> PyWord {
        PyWord(self.0.image_b().clone())
    }

    fn __call__(&self, w: WordArg) -> PyResult<PyWord> {
        Ok(PyWord(self.0.apply(&w.into_word()?)))
    }

    /// `self ∘ other`.
    fn compose(&self, other: &PyAutomorphism) -> PyAutomorphism {
        PyAutomorphism(self.0.compose(&other.0))
    }

    fn inverse(&self) -> PyResult<PyAutomorphism> {
        self.0.inverse().map(PyAutomorphism).map_err(py_err)
    }

    fn matrix(&self) -> [[i64; 2]; 2] {
        self.0.matrix()
    }

    fn __repr__(&self) -> String {
        format!("Automorphism(A -> {}, B -> {})", self.0.image_a(), self.0.image_b())
    }
}

#[pyclass(name = "PairClass", module = "pyhandlebody", frozen, get_all)]
pub struct PyPairClass {
    type_i: bool,
    type_ii: bool,
    separated: bool,
    structure: String,
    separating_word: String,
    twist: i64,
    json: String,
}

#[pymethods]
impl PyPairClass {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        format!("PairClass({})", self.json)
    }
}

impl From<classifier::PairClass> for PyPairClass {
    fn from(c: classifier::PairClass) -> Self {
        PyPairClass {
            type_i: c.type_i,
            type_ii: c.type_ii,
            separated: c.separated,
            structure: c.product_structure.to_string(),
            separating_word: c.separating_word.to_string(),
            twist: c.twist_parameter,
            json: c.to_json(),
        }
    }
}

fn canonical_params(variant: &str, p: Option<i64>, q: Option<i64>, a: Option<i64>, b: Option<i64>, eps: Option<i64>) -> PyResult<CanonicalParams> {
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| PyValueError::new_err(format!("variant {variant} requires {name}")))
    };
    match variant {
        "fig1a" => Ok(CanonicalParams::Fig1a),
        "fig2a" => Ok(CanonicalParams::Fig2a { p: need(p, "p")?, q: need(q, "q")? }),
        "fig3a" => Ok(CanonicalParams::Fig3a {
            a: need(a, "a")?,
            b: need(b, "b")?,
            p: need(p, "p")?,
            eps: need(eps, "eps")?,
        }),
        other => Err(PyValueError::new_err(format!("unknown variant {other:?}"))),
    }
}

#[pyfunction]
fn is_primitive(w: WordArg) -> PyResult<bool> {
    Ok(primitivity::is_primitive(&w.into_word()?))
}

#[pyfunction]
fn is_basis_pair(u: WordArg, v: WordArg) -> PyResult<bool> {
    Ok(primitivity::is_basis_pair(&u.into_word()?, &v.into_word()?))
}

/// `(root, k)` when the word is conjugate to `root^k` with `k >= 2`, else `None`.
#[pyfunction]
fn is_proper_power(w: WordArg) -> PyResult<Option<(String, usize)>> {
    Ok(primitivity::is_proper_power(&w.into_word()?).map(|(root, k)| (root.to_string(), k)))
}

#[pyfunction]
fn cmz_form<'py>(py: Python<'py>, w: WordArg) -> PyResult<Option<Bound<'py, PyDict>>> {
    let c = handlebody::CyclicWord::new(&w.into_word()?);
    let Some(CmzForm { base_generator, e, a, b, sign_normalization: n }) = primitivity::cmz_form(&c).map_err(py_err)? else {
        return Ok(None);
    };
    let d = PyDict::new(py);
    d.set_item("base_generator", base_generator.as_char().to_string())?;
    d.set_item("e", e)?;
    d.set_item("a", a)?;
    d.set_item("b", b)?;
    d.set_item("invert_a", n.invert_a)?;
    d.set_item("invert_b", n.invert_b)?;
    d.set_item("swap", n.swap)?;
    Ok(Some(d))
}

#[pyfunction]
fn reduction_chain(w: WordArg) -> PyResult<Vec<String>> {
    Ok(primitivity::reduction_chain(&w.into_word()?).iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn cyclic_reduce(w: WordArg) -> PyResult<String> {
    Ok(w.into_word()?.cyclic_reduce().0.to_string())
}

#[pyfunction]
fn abelianize(w: WordArg) -> PyResult<(i64, i64)> {
    Ok(w.into_word()?.abelianize())
}

#[pyfunction]
fn alpha_word_fig3a(a: i64, b: i64, p: i64, eps: i64) -> PyResult<String> {
    rr_diagram::alpha_word_fig3a(a, b, p, eps).map(|w| w.to_string()).map_err(py_err)
}

/// JSON of a canonical diagram.
#[pyfunction]
#[pyo3(signature = (variant, p=None, q=None, a=None, b=None, eps=None))]
fn build_canonical(variant: &str, p: Option<i64>, q: Option<i64>, a: Option<i64>, b: Option<i64>, eps: Option<i64>) -> PyResult<String> {
    let params = canonical_params(variant, p, q, a, b, eps)?;
    rr_diagram::build_canonical(&params).map(|d| d.to_json()).map_err(py_err)
}

#[pyfunction]
fn trace_word(diagram_json: &str, curve: &str) -> PyResult<String> {
    let d = RRDiagram::from_json(diagram_json).map_err(py_err)?;
    d.trace_word(curve).map(|w| w.to_string()).map_err(py_err)
}

/// Names of the structural violations of a diagram; empty when valid.
#[pyfunction]
fn validate(diagram_json: &str) -> PyResult<Vec<String>> {
    let d = RRDiagram::from_json(diagram_json).map_err(py_err)?;
    Ok(d.validate().iter().map(|v| v.name().to_string()).collect())
}

#[pyfunction]
#[pyo3(signature = (variant, p=None, q=None, a=None, b=None, eps=None))]
fn classify(variant: &str, p: Option<i64>, q: Option<i64>, a: Option<i64>, b: Option<i64>, eps: Option<i64>) -> PyResult<PyPairClass> {
    let params = canonical_params(variant, p, q, a, b, eps)?;
    classifier::classify(&params).map(PyPairClass::from).map_err(py_err)
}

/// `"separated"` or `"annulus"`.
#[pyfunction]
fn classify_power_pair(alpha: WordArg, beta: WordArg) -> PyResult<String> {
    classifier::classify_power_pair(&alpha.into_word()?, &beta.into_word()?)
        .map(|c| c.to_string())
        .map_err(py_err)
}

#[pyfunction]
fn longitude_pair(p: i64, q: i64) -> PyResult<(i64, i64)> {
    classifier::longitude_pair(p, q).map_err(py_err)
}

#[pyfunction]
fn separating_word(n: i64) -> String {
    classifier::separating_word(n).to_string()
}

#[pyfunction]
fn enumerate_primitives(max_len: usize) -> PyResult<Vec<String>> {
    let set = oracle::enumerate_primitives(max_len).map_err(py_err)?;
    Ok(set.iter().map(ToString::to_string).collect())
}

#[pyfunction]
#[pyo3(signature = (u, v, budget=16))]
fn brute_is_basis(u: WordArg, v: WordArg, budget: usize) -> PyResult<bool> {
    oracle::brute_is_basis(&u.into_word()?, &v.into_word()?, budget).map_err(py_err)
}

/// JSON report on a Heegaard graph given as JSON.
#[pyfunction]
fn check_graph(graph_json: &str) -> PyResult<String> {
    let g = HGraph::from_json(graph_json).map_err(py_err)?;
    Ok(serde_json::to_string(&g.report()).expect("report serializes"))
}

#[pyfunction]
fn graph_dot(graph_json: &str) -> PyResult<String> {
    HGraph::from_json(graph_json).map(|g| g.to_dot()).map_err(py_err)
}

#[pymodule]
fn pyhandlebody(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HandlebodyError", m.py().get_type::<HandlebodyError>())?;
    m.add_class::<PyWord>()?;
    m.add_class::<PyAutomorphism>()?;
    m.add_class::<PyPairClass>()?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(is_basis_pair, m)?)?;
    m.add_function(wrap_pyfunction!(is_proper_power, m)?)?;
    m.add_function(wrap_pyfunction!(cmz_form, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_chain, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(abelianize, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_word_fig3a, m)?)?;
    m.add_function(wrap_pyfunction!(build_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(trace_word, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_power_pair, m)?)?;
    m.add_function(wrap_pyfunction!(longitude_pair, m)?)?;
    m.add_function(wrap_pyfunction!(separating_word, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_primitives, m)?)?;
    m.add_function(wrap_pyfunction!(brute_is_basis, m)?)?;
    m.add_function(wrap_pyfunction!(check_graph, m)?)?;
    m.add_function(wrap_pyfunction!(graph_dot, m)?)?;
    Ok(())
}
