"""Smoke test for the pyirrlab extension.

Build and install it first:

    cd crates/py && maturin develop --release
"""

import json

import pyirrlab as irr


def finite_spaces():
    # two open points over one closed point
    t = irr.FiniteSpace(3, [(2, 0), (2, 1)])
    assert len(t) == 3 and t.leq(2, 0) and not t.leq(0, 2)
    assert t.irreducible_components() == [[0, 2], [1, 2]]
    assert t.is_connected() and not t.is_locally_irreducible()
    assert [t.pointwise_irreducible_at(x) for x in range(3)] == [True, True, False]
    p = t.profile()
    assert not any(p[f"p{i}"] for i in range(1, 7))
    assert p["witnesses"]["p1"] == {"kind": "no_irreducible_neighbourhood", "point": 2}
    assert irr.FiniteSpace.from_json(t.to_json()) == t
    assert "digraph specialization" in t.to_dot()

    empty = irr.FiniteSpace(0)
    assert empty.dimension() is None and empty.is_connected()

    try:
        irr.FiniteSpace(2, [(0, 5)])
    except ValueError as e:
        assert "out of range" in str(e)
    else:
        raise AssertionError("bad point accepted")


def enumeration():
    assert [irr.count_spaces(n) for n in range(6)] == [1, 1, 4, 29, 355, 6942]
    assert len(irr.isomorphism_classes(4)) == 33
    report = irr.verify_theorems(4)
    assert report["perSize"][4] == 355 and report["violations"] == []
    hit = irr.find_counterexample("!p1", 5)
    assert hit is not None and len(hit) == 3
    space, _, _, _ = irr.gallery("threePoint140C")
    assert hit.is_isomorphic(space)
    assert irr.find_counterexample("p4 & !p3", 5) is None
    for name in irr.gallery_names():
        assert irr.gallery(name)[3], name
    assert any(e["status"] == "outOfScope" for e in irr.trace())


def product_of_fields():
    ring = irr.ProductRing("q", 4)
    x = ring.element(["3/4", "0", "-2", "0"])
    assert repr(x.pseudo_inverse()) == "(4/3, 0, -1/2, 0)"
    e = x.idempotent()
    assert e.is_idempotent() and x * x * x.pseudo_inverse() == x
    assert x.principal_open() == e.principal_open() == [0, 2]
    assert e.vanishing_set() == [1, 3]
    assert ring.random(11).report()["allHold"]
    spec = ring.spectrum_space()
    assert spec.dimension() == 0 and spec.profile()["discrete"]


def monoid_algebra():
    ring = irr.HochsterRing("rationals", "q")
    r = ring.basis("0", 1) + ring.basis("1", 1)
    cert = r.reducedness_certificate()
    assert cert["valid"] and cert["squareTerm"] == "(1,2)"
    assert not r.is_idempotent() and ring.one().is_idempotent()
    assert ring.zero_divisor_product("0", "1/2").is_zero()
    assert ring.classify_cut("sqrt2")["tag"] == "trivialField"
    assert ring.cut_respects("at:1/2:lower", ring.random(1), ring.random(2))
    back = ring.element_from_json(r.to_json())
    assert back == r and json.loads(r.to_json())["field"] == "q"

    chain = irr.HochsterRing("chain:3", "f2")
    c = chain.classify_cut("between:0:1")
    assert c["tag"] == "doublePivot" and not c["integral"]
    props = chain.monoid_properties()
    assert props["torsionfree"] and props["aperiodic"] and not props["cancellable"]


if __name__ == "__main__":
    for check in (finite_spaces, enumeration, product_of_fields, monoid_algebra):
        check()
        print(f"ok  {check.__name__}")
    print("python smoke test passed")
