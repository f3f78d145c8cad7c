use pyo3::prelude::*;
use pyo3::py_run;

fn with_module(script: &str) {
    Python::initialize();
    Python::attach(|py| {
        let m = pyo3::wrap_pymodule!(pyirrlab::pyirrlab)(py);
        let m = m.bind(py);
        py_run!(py, m, script);
    });
}

#[test]
fn spaces_and_enumeration() {
    with_module(
        r#"
t = m.FiniteSpace(3, [(2, 0), (2, 1)])
assert not t.is_locally_irreducible()
assert t.profile()["connected"]
assert list(map(m.count_spaces, range(5))) == [1, 1, 4, 29, 355]
assert m.verify_theorems(3, checks=["prop1.20"])["passes"] == {"prop1.20": 35}
assert m.find_counterexample("!p1", 4).is_isomorphic(t)
try:
    m.count_spaces(6)
    raise AssertionError("bound not enforced")
except ValueError:
    pass
"#,
    );
}

#[test]
fn rings() {
    with_module(
        r#"
ring = m.ProductRing("f3", 3)
x = ring.element(["2", "0", "1"])
assert x * x * x.pseudo_inverse() == x
assert x.idempotent().principal_open() == [0, 2]

h = m.HochsterRing("chain:4", "q")
r = h.basis("1", 2) - h.basis("3", 1)
assert r.reducedness_certificate()["valid"]
assert (h.basis("0", 1) * (h.one() - h.basis("2", 1))).is_zero()
assert h.classify_cut("between:1:2")["tag"] == "doublePivot"
"#,
    );
}
