//! Python bindings: finite spaces and their profiles, the enumeration
//! harness, products of fields and the monoid algebra `K[M]`.
//!
//! Structured results (profiles, reports, certificates) are returned as
//! plain Python dicts decoded from the library's JSON.

use irrlab::enumerate::{self, Invariant, VerifyOptions, DEFAULT_BOUND, HARD_LIMIT};
use irrlab::hochster::{self, cut_evaluation, monoid_property_witnesses, parse_value, Cut, OrderedIndex};
use irrlab::prodfields::{self, IdempotentReport};
use irrlab::{Field, SubsetMask};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

fn err(e: irrlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn masks(list: &[SubsetMask]) -> Vec<Vec<usize>> {
    list.iter().map(|m| m.to_vec()).collect()
}

fn bound(allow_large: bool) -> usize {
    if allow_large {
        HARD_LIMIT
    } else {
        DEFAULT_BOUND
    }
}

fn parse_field(name: &str) -> PyResult<Field> {
    name.parse().map_err(err)
}

#[pyclass(name = "FiniteSpace", module = "pyirrlab", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyFiniteSpace(irrlab::FiniteSpace);

#[pymethods]
impl PyFiniteSpace {
    /// Space on `n` points whose specialization order is generated by
    /// `pairs` of `(x, y)` meaning `x` lies in the closure of `y`.
    #[new]
    #[pyo3(signature = (n, pairs = Vec::new()))]
    fn new(n: usize, pairs: Vec<(usize, usize)>) -> PyResult<Self> {
        irrlab::FiniteSpace::from_pairs(n, &pairs).map(Self).map_err(err)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("spaces serialize")
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }

    fn leq(&self, x: usize, y: usize) -> PyResult<bool> {
        self.0.check_point(x).map_err(err)?;
        self.0.check_point(y).map_err(err)?;
        Ok(self.0.leq(x, y))
    }

    fn closure(&self, points: Vec<usize>) -> PyResult<Vec<usize>> {
        let s = SubsetMask::from_points(points);
        self.0.closure(s).map(|c| c.to_vec()).map_err(err)
    }

    fn is_irreducible_subset(&self, points: Vec<usize>) -> PyResult<bool> {
        let s = SubsetMask::from_points(points);
        self.0.check_subset(s).map_err(err)?;
        Ok(self.0.is_irreducible_subset(s))
    }

    fn irreducible_components(&self) -> Vec<Vec<usize>> {
        masks(&self.0.irreducible_components())
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        masks(&self.0.connected_components())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_locally_irreducible(&self) -> bool {
        self.0.is_locally_irreducible()
    }

    fn pointwise_irreducible_at(&self, x: usize) -> PyResult<bool> {
        self.0.pointwise_irreducible_at(x).map_err(err)
    }

    /// `None` for the empty space.
    fn dimension(&self) -> Option<usize> {
        self.0.dimension()
    }

    fn is_t0(&self) -> bool {
        self.0.is_t0()
    }

    fn kolmogorov_quotient(&self) -> Self {
        Self(self.0.kolmogorov_quotient())
    }

    fn canonical_form(&self) -> Self {
        Self(enumerate::canonical_form(&self.0))
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        enumerate::are_isomorphic(&self.0, &other.0)
    }

    fn to_dot(&self) -> String {
        self.0.to_dot()
    }

    fn profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.profile())
    }
}

/// Number of labeled spaces on exactly `n` points.
#[pyfunction]
#[pyo3(signature = (n, allow_large = false))]
fn count_spaces(n: usize, allow_large: bool) -> PyResult<usize> {
    enumerate::check_bound(n, bound(allow_large)).map_err(err)?;
    Ok(enumerate::spaces_of_size(n).len())
}

/// One canonical representative per isomorphism class on `n` points.
#[pyfunction]
#[pyo3(signature = (n, allow_large = false))]
fn isomorphism_classes(n: usize, allow_large: bool) -> PyResult<Vec<PyFiniteSpace>> {
    enumerate::isomorphism_classes(n, bound(allow_large))
        .map(|v| v.into_iter().map(PyFiniteSpace).collect())
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, checks = None, iso = false, workers = 0, allow_large = false))]
fn verify_theorems<'py>(
    py: Python<'py>,
    n: usize,
    checks: Option<Vec<String>>,
    iso: bool,
    workers: usize,
    allow_large: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let checks = match checks {
        Some(ids) => ids
            .iter()
            .map(|s| s.parse::<Invariant>())
            .collect::<irrlab::Result<Vec<_>>>()
            .map_err(err)?,
        None => Invariant::ALL.to_vec(),
    };
    let opts = VerifyOptions {
        bound: bound(allow_large),
        workers,
        checks,
        predicates: Vec::new(),
        iso,
    };
    let report = py
        .detach(|| enumerate::verify_theorems_with(n, &opts))
        .map_err(err)?;
    to_py(py, &report)
}

/// First space (fewest points, then enumeration order) satisfying the predicate.
#[pyfunction]
#[pyo3(signature = (predicate, max_n, allow_large = false))]
fn find_counterexample(predicate: &str, max_n: usize, allow_large: bool) -> PyResult<Option<PyFiniteSpace>> {
    let pred = enumerate::Predicate::parse(predicate).map_err(err)?;
    enumerate::find_counterexample_bounded(&pred, max_n, bound(allow_large))
        .map(|s| s.map(PyFiniteSpace))
        .map_err(err)
}

#[pyfunction]
fn gallery_names() -> Vec<&'static str> {
    irrlab::gallery::CATALOG.to_vec()
}

/// `(space, expected_profile, provenance, valid)`.
#[pyfunction]
fn gallery<'py>(py: Python<'py>, name: &str) -> PyResult<(PyFiniteSpace, Bound<'py, PyAny>, String, bool)> {
    let e = irrlab::gallery::gallery(name).map_err(err)?;
    let valid = e.validate();
    Ok((PyFiniteSpace(e.space), to_py(py, &e.expected)?, e.provenance, valid))
}

#[pyfunction]
fn trace<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &irrlab::trace::trace())
}

#[pyclass(name = "ProductRing", module = "pyirrlab", frozen)]
pub struct PyProductRing(prodfields::ProductRing);

#[pyclass(name = "ProductElement", module = "pyirrlab", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyProductElement(prodfields::ProductElement);

#[pymethods]
impl PyProductRing {
    /// `field` is `"q"` or `"fP"` for a prime `P`.
    #[new]
    fn new(field: &str, size: usize) -> PyResult<Self> {
        prodfields::ProductRing::uniform(parse_field(field)?, size)
            .map(Self)
            .map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// Element from coordinate strings such as `"3/4"` or `"-2"`.
    fn element(&self, values: Vec<String>) -> PyResult<PyProductElement> {
        let refs: Vec<&str> = values.iter().map(String::as_str).collect();
        self.0.parse(&refs).map(PyProductElement).map_err(err)
    }

    fn random(&self, seed: u64) -> PyProductElement {
        PyProductElement(self.0.random(&mut StdRng::seed_from_u64(seed)))
    }

    /// The spectrum as a finite space: one isolated point per factor.
    fn spectrum_space(&self) -> PyFiniteSpace {
        PyFiniteSpace(self.0.spectrum_space())
    }
}

#[pymethods]
impl PyProductElement {
    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    fn pseudo_inverse(&self) -> Self {
        Self(self.0.pseudo_inverse())
    }

    fn idempotent(&self) -> Self {
        Self(self.0.idempotent())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    /// Indices `j` with `x ∉ ker π_j`.
    fn principal_open(&self) -> Vec<usize> {
        self.0.principal_open().into_iter().map(|p| p.j).collect()
    }

    fn vanishing_set(&self) -> Vec<usize> {
        self.0.vanishing_set().into_iter().map(|p| p.j).collect()
    }

    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let r = IdempotentReport::of(&self.0);
        let all = r.all_hold();
        let d = to_py(py, &r)?;
        d.set_item("allHold", all)?;
        Ok(d)
    }
}

#[pyclass(name = "HochsterRing", module = "pyirrlab", frozen)]
pub struct PyHochsterRing(hochster::HochsterRing);

#[pyclass(name = "RingElement", module = "pyirrlab", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyRingElement(hochster::RingElement);

#[pymethods]
impl PyHochsterRing {
    /// `index` is `"chain:N"` or `"rationals"`; `field` is `"q"` or `"fP"`.
    #[new]
    fn new(index: &str, field: &str) -> PyResult<Self> {
        let index: OrderedIndex = index.parse().map_err(err)?;
        Ok(Self(hochster::HochsterRing::new(index, parse_field(field)?)))
    }

    fn zero(&self) -> PyRingElement {
        PyRingElement(self.0.zero())
    }

    fn one(&self) -> PyRingElement {
        PyRingElement(self.0.one())
    }

    /// The basis element `e_(x,m)`; `x` is written like `"3"` or `"-1/2"`.
    fn basis(&self, x: &str, m: u32) -> PyResult<PyRingElement> {
        let x = parse_value(x).map_err(err)?;
        self.0.basis(x, m).map(PyRingElement).map_err(err)
    }

    #[pyo3(signature = (seed, max_terms = 6, max_level = 4))]
    fn random(&self, seed: u64, max_terms: usize, max_level: u32) -> PyRingElement {
        PyRingElement(self.0.random_element(&mut StdRng::seed_from_u64(seed), max_terms, max_level))
    }

    fn element_from_json(&self, text: &str) -> PyResult<PyRingElement> {
        let r: hochster::RingElement =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        self.0.check(&r).map_err(err)?;
        Ok(PyRingElement(r))
    }

    /// Stalk class and codomain of the evaluation attached to a cut such as
    /// `"sqrt2"`, `"at:1/2:lower"` or `"between:0:1"`.
    fn classify_cut<'py>(&self, py: Python<'py>, cut: &str) -> PyResult<Bound<'py, PyAny>> {
        let cut: Cut = cut.parse().map_err(err)?;
        let eval = cut_evaluation(self.0.index(), self.0.field(), &cut).map_err(err)?;
        let d = to_py(py, eval.class())?;
        d.set_item("integral", eval.codomain().is_integral())?;
        d.set_item("note", eval.class().note())?;
        Ok(d)
    }

    /// Whether the cut's evaluation map preserves `r + s`, `r·s` and `1`.
    fn cut_respects(&self, cut: &str, r: &PyRingElement, s: &PyRingElement) -> PyResult<bool> {
        let cut: Cut = cut.parse().map_err(err)?;
        let eval = cut_evaluation(self.0.index(), self.0.field(), &cut).map_err(err)?;
        Ok(eval.respects(&r.0, &s.0) && eval.apply(&self.0.one()) == eval.one())
    }

    fn zero_divisor_product(&self, x: &str, y: &str) -> PyResult<PyRingElement> {
        let (x, y) = (parse_value(x).map_err(err)?, parse_value(y).map_err(err)?);
        hochster::zero_divisor_product(&self.0, &x, &y)
            .map(PyRingElement)
            .map_err(err)
    }

    fn monoid_properties<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &monoid_property_witnesses(self.0.index()).map_err(err)?)
    }
}

#[pymethods]
impl PyRingElement {
    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn square(&self) -> Self {
        Self(self.0.square())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_scalar(&self) -> bool {
        self.0.is_scalar()
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn reducedness_certificate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let cert = self.0.reducedness_witness().map_err(err)?;
        let valid = cert.is_valid();
        let d = to_py(py, &cert)?;
        d.set_item("valid", valid)?;
        Ok(d)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("ring elements serialize")
    }
}

#[pymodule]
pub fn pyirrlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFiniteSpace>()?;
    m.add_class::<PyProductRing>()?;
    m.add_class::<PyProductElement>()?;
    m.add_class::<PyHochsterRing>()?;
    m.add_class::<PyRingElement>()?;
    m.add_function(wrap_pyfunction!(count_spaces, m)?)?;
    m.add_function(wrap_pyfunction!(isomorphism_classes, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorems, m)?)?;
    m.add_function(wrap_pyfunction!(find_counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(gallery_names, m)?)?;
    m.add_function(wrap_pyfunction!(gallery, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    Ok(())
}
